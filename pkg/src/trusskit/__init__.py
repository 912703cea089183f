"""Exact solutions of linear (in)equality systems, applied to 2-D trusses."""

from .exact import (
    RMat,
    Subspace,
    format_rat,
    null_space,
    orthogonal_complement,
    parse_rat,
    rank,
    rref,
)
from .linsys import (
    AffineSpace,
    IncompatibleSystem,
    check_compatibility,
    compatibility_conditions,
    solve_complete,
)
from .polyhedral import (
    Cone,
    InfeasibleSystem,
    Polyhedron,
    compat_nonneg,
    dual_cone,
    solve_homogeneous_ineq,
    solve_ineq,
    solve_mixed,
)
from .render import render_solution_set

__version__ = "0.1.0"

__all__ = [
    "AffineSpace",
    "Cone",
    "IncompatibleSystem",
    "InfeasibleSystem",
    "Polyhedron",
    "RMat",
    "Subspace",
    "check_compatibility",
    "compat_nonneg",
    "compatibility_conditions",
    "dual_cone",
    "format_rat",
    "null_space",
    "orthogonal_complement",
    "parse_rat",
    "rank",
    "render_solution_set",
    "rref",
    "solve_complete",
    "solve_homogeneous_ineq",
    "solve_ineq",
    "solve_mixed",
]
