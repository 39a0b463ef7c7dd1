"""Pure numpy cell march, vectorised along anti-diagonals.

Cells on one anti-diagonal only read the previous diagonal, so the
wavefront gives exactly the sequential result.
"""

from __future__ import annotations

import numpy as np

from .models import MODELS, rhs

_BY_ID = {v[0]: k for k, v in MODELS.items()}


def march(u: np.ndarray, model: int, h: float, sign: float, guard: float):
    """Fill u[:, 1:, 1:] from its first row and column; returns (status, i, j).

    status 0 is success; 1 means a value left [-guard, guard] or stopped
    being finite at node (i, j), where the march stopped.
    """
    name = _BY_ID[model]
    _, nz, nzb = u.shape
    h2 = h * h
    for d in range(nz + nzb - 3):
        i = np.arange(max(0, d - (nzb - 2)), min(d, nz - 2) + 1)
        j = d - i
        a, b, c = u[:, i, j], u[:, i + 1, j], u[:, i, j + 1]
        side = b + c
        base = side - a
        pred = base + h2 * rhs(name, (a + side) / 3.0, sign)
        corr = base + h2 * rhs(name, ((a + pred) + side) * 0.25, sign)
        bad = ~(np.abs(corr) <= guard).all(axis=0)
        if bad.any():
            k = int(np.argmax(bad))
            return 1, int(i[k]) + 1, int(j[k]) + 1
        u[:, i + 1, j + 1] = corr
    return 0, -1, -1
