"""Right-hand sides F of d_z d_zbar phi = F(phi) for every solvable model.

The eight-field systems are read as ordinary real functions, factors in the
printed order, with f^+ and f^- halves carrying the overall sign +1 / -1.
"""

from __future__ import annotations

import numpy as np

MODELS = {
    # name: (kernel id, field names)
    "free": (0, ("phi",)),
    "scalar-liouville": (1, ("phi",)),
    "scalar-sinh": (2, ("phi",)),
    "liouville2": (3, ("phi", "phit")),
    "sinh2": (4, ("phi", "phit")),
    "liouville8": (5, ("f00p", "f10p", "f01p", "f11p", "f00m", "f10m", "f01m", "f11m")),
    "sinh8": (6, ("f00p", "f10p", "f01p", "f11p", "f00m", "f10m", "f01m", "f11m")),
}


def model_id(name: str) -> int:
    try:
        return MODELS[name][0]
    except KeyError:
        raise ValueError(f"unknown model {name!r}; choose from {', '.join(MODELS)}") from None


def field_names(name: str) -> tuple:
    return MODELS[name][1]


def _half(liouville: bool, f00, f10, f01, f11, s):
    C10, S10 = np.cosh(2 * f10), np.sinh(2 * f10)
    C11, S11 = np.cosh(2 * f11), np.sinh(2 * f11)
    c01, s01 = np.cos(2 * f01), np.sin(2 * f01)
    if liouville:
        e = s * np.exp(2 * f00)
        return [e * (C10 * C11 * c01 - S10 * S11 * s01),
                e * (S10 * C11 * c01 - C10 * S11 * s01),
                e * (S10 * S11 * c01 + C10 * C11 * s01),
                e * (C10 * S11 * c01 + S10 * C11 * s01)]
    C00, S00 = 2 * s * np.cosh(2 * f00), 2 * s * np.sinh(2 * f00)
    return [S00 * C10 * C11 * c01 - C00 * S10 * S11 * s01,
            C00 * S10 * C11 * c01 - S00 * C10 * S11 * s01,
            S00 * S10 * S11 * c01 + C00 * C10 * C11 * s01,
            C00 * C10 * S11 * c01 + S00 * S10 * C11 * s01]


def rhs(name: str, u, sign: float = 1.0):
    """F(u) for u of shape (fields, ...); returns an array of the same shape."""
    k = model_id(name)
    u = np.asarray(u, dtype=float)
    if k == 0:
        return np.zeros_like(u)
    if k == 1:
        return sign * np.exp(2 * u)
    if k == 2:
        return sign * 2 * np.sinh(2 * u)
    if k in (3, 4):
        p, t = u[0], u[1]
        if k == 3:
            e = np.exp(2 * p)
            out = [e * np.cosh(2 * t), e * np.sinh(2 * t)]
        else:
            out = [2 * np.sinh(2 * p) * np.cosh(2 * t), 2 * np.cosh(2 * p) * np.sinh(2 * t)]
        return sign * np.array(out)
    lv = k == 5
    out = _half(lv, *u[0:4], 1.0) + _half(lv, *u[4:8], -1.0)
    return sign * np.array(out)
