"""Currents, their transformation laws and Poisson brackets in one place."""

from __future__ import annotations

from .brackets import (AnsatzError, AnsatzSolution, ModeAlgebra, Term, current_sector, mode_algebra,
                       poisson_suite, restore_grading, solve_ansatz, solve_bracket_ansatz, virasoro_sector)
from .currents import (CurrentError, GroupElement, closed_form_currents, currents_from_group, laws_suite,
                       soldering_reduce, soldering_suite, transformation_laws, virasoro_reduction)
from .report import group

__all__ = [
    "AnsatzError", "AnsatzSolution", "CurrentError", "GroupElement", "ModeAlgebra", "Term",
    "closed_form_currents", "current_sector", "currents_from_group", "laws_suite", "mode_algebra",
    "poisson_suite", "restore_grading", "solve_ansatz", "solve_bracket_ansatz", "soldering_reduce",
    "soldering_suite", "suite", "transformation_laws", "virasoro_reduction", "virasoro_sector",
]


def suite(seed: int = 0):
    return group("current_poisson", [soldering_suite(seed), laws_suite(), poisson_suite()])
