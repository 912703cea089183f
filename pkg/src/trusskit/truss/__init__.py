from .analysis import (
    BoundaryResult,
    Classification,
    InconsistentBoundaryConditions,
    StaticallyIndeterminate,
    TrussSolution,
    analyze,
    apply_boundary_conditions,
    axial_force,
    axial_force_row,
    classify,
    complete_loads,
    equilibrium_conditions,
    general_solution,
    reactions,
    solve_constrained,
)
from .model import (
    Bar,
    ElementMatrices,
    IrrationalLength,
    Load,
    Node,
    Support,
    TrussModel,
    TrussModelError,
    assemble,
    element_matrices,
)

__all__ = [
    "Bar",
    "BoundaryResult",
    "Classification",
    "ElementMatrices",
    "InconsistentBoundaryConditions",
    "IrrationalLength",
    "Load",
    "Node",
    "StaticallyIndeterminate",
    "Support",
    "TrussModel",
    "TrussModelError",
    "TrussSolution",
    "analyze",
    "apply_boundary_conditions",
    "assemble",
    "axial_force",
    "axial_force_row",
    "classify",
    "complete_loads",
    "element_matrices",
    "equilibrium_conditions",
    "general_solution",
    "reactions",
    "solve_constrained",
]
