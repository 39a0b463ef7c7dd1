"""Commuting fields of one variable, with their derivatives as plain sympy symbols.

A field f and its derivatives f', f'', ... are independent symbols, and
``dz`` applies the total derivative by the chain rule.  This is all the
calculus the current algebra needs; nothing is ever integrated.
"""

from __future__ import annotations

import sympy as sp

_REG: dict = {}


def jet(name: str, k: int = 0, coord: str = "z") -> sp.Symbol:
    label = name if k == 0 else (f"d_{coord}" if k == 1 else f"d_{coord}^{k}") + f"({name})"
    s = sp.Symbol(label)
    _REG[s] = (name, k, coord)
    return s


def parse(s: sp.Symbol):
    """(name, order, coordinate) for a jet symbol, None for anything else."""
    return _REG.get(s)


def dz(e, times: int = 1):
    e = sp.sympify(e)
    for _ in range(times):
        out = 0
        for s in e.free_symbols:
            info = _REG.get(s)
            if info is not None:
                out += sp.diff(e, s) * jet(info[0], info[1] + 1, info[2])
        e = sp.expand(out)
    return e


def jets_in(e) -> list:
    return sorted((s for s in sp.sympify(e).free_symbols if s in _REG), key=lambda s: (_REG[s], s.name))


def coefficients(e, gens) -> dict:
    """Monomial -> coefficient for a polynomial in the given jet symbols."""
    e = sp.expand(e)
    if e == 0:
        return {}
    return {m: c for m, c in sp.Poly(e, *gens).terms() if c != 0}


def text(e) -> str:
    return str(sp.expand(e))
