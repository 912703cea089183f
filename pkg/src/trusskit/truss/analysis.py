"""Equilibrium, general solutions, boundary conditions and classification."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..exact import RMat, RVec, Subspace, dot, lin_comb, rank, unit_vec, vec
from ..linsys import (
    AffineSpace,
    CompatReport,
    IncompatibleSystem,
    check_compatibility,
    compatibility_conditions,
    solve_complete,
)
from .model import TrussModel, assemble, element_matrices


class InconsistentBoundaryConditions(IncompatibleSystem):
    """The supports cannot hold the structure under these loads.

    Typical of a critical support layout; re-solve with :func:`solve_constrained`.
    """


class StaticallyIndeterminate(ValueError):
    """Reactions cannot be found from equilibrium alone."""


def equilibrium_conditions(model: TrussModel) -> list[RVec]:
    """Vectors ``w`` with ``w . F = 0`` for every load ``F`` the truss can carry."""
    return compatibility_conditions(assemble(model))


def general_solution(model: TrussModel, F: Sequence | None = None) -> AffineSpace:
    """All displacements with ``K u = F``; ``F`` defaults to the model loads."""
    K = assemble(model)
    F = model.load_vector() if F is None else vec(F)
    if len(F) != model.ndof:
        raise ValueError(f"load vector has length {len(F)}, expected {model.ndof}")
    return solve_complete(K, F)


@dataclass(frozen=True)
class BoundaryResult:
    coefficients: AffineSpace  # over the direction coefficients (the rho's)
    displacements: AffineSpace

    @property
    def is_unique(self) -> bool:
        return self.displacements.is_unique

    @property
    def free_coefficients(self) -> int:
        return self.coefficients.dim


def apply_boundary_conditions(gs: AffineSpace, bcs: Sequence[tuple[int, Fraction]]) -> BoundaryResult:
    """Fix the direction coefficients of ``gs`` so that ``u[dof] = value``.

    Raises :class:`InconsistentBoundaryConditions` when the coefficient system
    has no solution.
    """
    V = gs.directions.basis
    n, r = gs.ambient, gs.dim
    rows, rhs = [], []
    for d, value in bcs:
        if not 0 <= d < n:
            raise ValueError(f"dof index {d} out of range for dimension {n}")
        rows.append(tuple(v[d] for v in V))
        rhs.append(Fraction(value) - gs.particular[d])
    A = RMat(tuple(rows), r)
    try:
        coeffs = solve_complete(A, rhs)
    except IncompatibleSystem as exc:
        raise InconsistentBoundaryConditions(exc.report, "boundary conditions are incompatible with the general solution") from None
    u0 = gs.point(coeffs.particular)
    dirs = Subspace([lin_comb(c, V, n) for c in coeffs.directions.basis], n)
    return BoundaryResult(coeffs, AffineSpace(u0, dirs))


def solve_constrained(model: TrussModel, F: Sequence, B: RMat, bvals: Sequence) -> AffineSpace:
    """Solve the stacked system ``[K; B] u = [F; bvals]``."""
    if B.ncols != model.ndof:
        raise ValueError(f"constraint matrix has {B.ncols} columns, expected {model.ndof}")
    K = assemble(model)
    return solve_complete(K.vstack(B), vec(F) + vec(bvals))


@dataclass(frozen=True)
class Classification:
    kind: str  # isostatic | hyperstatic | mechanism | critical
    rank_stacked: int
    two_m: int
    b_plus_c: int

    @property
    def degree(self) -> int:
        """Degree of hyperstaticity (0 unless hyperstatic)."""
        return self.b_plus_c - self.two_m if self.kind == "hyperstatic" else 0

    @property
    def free_modes(self) -> int:
        return self.two_m - self.rank_stacked

    def __str__(self):
        r, tm, bc = self.rank_stacked, self.two_m, self.b_plus_c
        if self.kind == "isostatic":
            return f"Isostatic (rank {r} = 2m, b+c = {bc})"
        if self.kind == "hyperstatic":
            return f"Hyperstatic({self.degree}) (rank {r} = 2m, b+c = {bc} > {tm})"
        rel = ">=" if self.kind == "critical" else "<"
        return f"{self.kind.capitalize()}({self.free_modes}) (rank {r} < 2m = {tm}, b+c = {bc} {rel} {tm})"


def classify(model: TrussModel) -> Classification:
    """Classify by rank of ``[K; B]`` against ``2m`` and ``b + c`` against ``2m``.

    A rank-deficient truss with ``b + c == 2m`` counts as critical.
    """
    B, _ = model.support_matrix()
    r = rank(assemble(model).vstack(B))
    two_m, bc = model.ndof, model.b + model.c
    if r == two_m:
        kind = "isostatic" if bc == two_m else "hyperstatic"
    else:
        kind = "critical" if bc >= two_m else "mechanism"
    return Classification(kind, r, two_m, bc)


def reactions(model: TrussModel, loads=None) -> RVec:
    """Support reactions (one per support, in model order) from equilibrium alone.

    Raises :class:`StaticallyIndeterminate` if equilibrium does not pin them
    down and :class:`IncompatibleSystem` if no reactions balance the loads.
    """
    F = model.load_vector(loads)
    dofs = model.support_dofs()
    W = equilibrium_conditions(model)
    A = RMat(tuple(tuple(w[d] for d in dofs) for w in W), len(dofs))
    rhs = [-dot(w, F) for w in W]
    sol = solve_complete(A, rhs)
    if not sol.is_unique:
        raise StaticallyIndeterminate(
            f"{len(dofs)} reaction unknowns but equilibrium fixes only {len(dofs) - sol.dim}"
        )
    return sol.particular


def complete_loads(model: TrussModel, loads=None) -> RVec:
    """Applied loads plus the equilibrating support reactions."""
    F = list(model.load_vector(loads))
    if model.supports:
        for d, r in zip(model.support_dofs(), reactions(model, loads)):
            F[d] += r
    else:
        report = check_compatibility(assemble(model), F)
        if not report.satisfied:
            raise IncompatibleSystem(report, "unsupported truss with unbalanced loads")
    return tuple(F)


def axial_force_row(model: TrussModel, bar_id: int) -> RVec:
    """Row ``a`` with ``N = a . u``; positive N is tension."""
    em = element_matrices(model, bar_id)
    k, c, s = em.k, em.cos_a, em.sin_a
    row = [Fraction(0)] * model.ndof
    for d, coef in zip(model.bar_dofs(bar_id), (-c, -s, c, s)):
        row[d] = k * coef
    return tuple(row)


def axial_force(model: TrussModel, bar_id: int, u: Sequence) -> Fraction:
    return dot(axial_force_row(model, bar_id), vec(u))


@dataclass(frozen=True)
class TrussSolution:
    displacements: AffineSpace
    reactions: RVec | None  # None when not determined
    axial_forces: dict | None  # bar id -> N, None when not determined
    forces: RVec | None  # total nodal forces K u, loads plus reactions

    @property
    def is_unique(self) -> bool:
        return self.displacements.is_unique


def analyze(model: TrussModel) -> TrussSolution:
    """Solve for displacements and reactions together.

    Unknowns are ``u`` and one reaction per support:
    ``K u - E r = F_applied`` and ``B u = b``. Works for hyperstatic supports,
    where equilibrium alone does not fix the reactions.
    """
    K = assemble(model)
    n, c = model.ndof, model.c
    dofs = model.support_dofs()
    B, bvals = model.support_matrix()
    E = RMat(tuple(tuple(Fraction(-1) if dofs[j] == i else Fraction(0) for j in range(c)) for i in range(n)), c)
    top = K.hstack(E)
    bottom = B.hstack(RMat.zeros(c, c))
    try:
        full = solve_complete(top.vstack(bottom), model.load_vector() + tuple(bvals))
    except IncompatibleSystem as exc:
        raise InconsistentBoundaryConditions(exc.report, "supports cannot balance the applied loads") from None
    u0, r0 = full.particular[:n], full.particular[n:]
    u_dirs = [d[:n] for d in full.directions.basis]
    r_fixed = all(all(x == 0 for x in d[n:]) for d in full.directions.basis)
    disp = AffineSpace(u0, Subspace.span(u_dirs, n))
    rows = {b.id: axial_force_row(model, b.id) for b in model.bars}
    n_fixed = all(dot(a, d) == 0 for a in rows.values() for d in u_dirs)
    N = {bid: dot(a, u0) for bid, a in rows.items()} if n_fixed else None
    forces = K @ u0 if r_fixed else None
    return TrussSolution(disp, r0 if r_fixed else None, N, forces)


def unit_rows(n: int, dofs: Sequence[int]) -> RMat:
    return RMat(tuple(unit_vec(n, d) for d in dofs), n)


__all__ = [
    "BoundaryResult",
    "Classification",
    "CompatReport",
    "InconsistentBoundaryConditions",
    "StaticallyIndeterminate",
    "TrussSolution",
    "analyze",
    "apply_boundary_conditions",
    "axial_force",
    "axial_force_row",
    "classify",
    "complete_loads",
    "equilibrium_conditions",
    "general_solution",
    "reactions",
    "solve_constrained",
    "unit_rows",
]
