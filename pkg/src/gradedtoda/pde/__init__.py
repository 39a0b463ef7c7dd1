"""Characteristic-grid solvers for the Liouville and sinh-Gordon type systems."""

from .backend import BACKEND
from .models import MODELS, field_names, rhs
from .solver import (DivergenceError, GoursatProblem, Grid, convergence_order, decoupling_check,
                     eight_field_consistency, eta_quadrature, eta_residual, exact_error, liouville_convergence,
                     liouville_exact, liouville_general, liouville_problem, pde_suite, random_edges, residual, sinh_convergence,
                     solve_goursat)

__all__ = [
    "BACKEND", "DivergenceError", "GoursatProblem", "Grid", "MODELS", "convergence_order", "decoupling_check",
    "eight_field_consistency", "eta_quadrature", "eta_residual", "exact_error", "field_names", "liouville_convergence",
    "liouville_exact", "liouville_general", "liouville_problem", "pde_suite", "random_edges", "residual", "rhs", "sinh_convergence",
    "solve_goursat",
]
