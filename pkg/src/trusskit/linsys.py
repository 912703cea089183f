"""Compatibility and general solutions of linear equality systems."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .exact import (
    RMat,
    RVec,
    Subspace,
    add,
    dot,
    lin_comb,
    null_space,
    orthogonal_complement,
    solve_particular,
    sub,
    vec,
)


@dataclass(frozen=True)
class AffineSpace:
    """``particular + span(directions)``."""

    particular: RVec
    directions: Subspace

    def __post_init__(self):
        if len(self.particular) != self.directions.ambient:
            raise ValueError("particular point and directions live in different spaces")

    @property
    def dim(self) -> int:
        return self.directions.dim

    @property
    def ambient(self) -> int:
        return self.directions.ambient

    @property
    def is_unique(self) -> bool:
        return self.directions.dim == 0

    def __contains__(self, x) -> bool:
        return sub(vec(x), self.particular) in self.directions

    def point(self, coeffs: Sequence) -> RVec:
        """``particular + sum(coeffs[i] * basis[i])``."""
        if len(coeffs) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(coeffs)}")
        return add(self.particular, lin_comb(vec(coeffs), self.directions.basis, self.ambient))

    def same_set(self, other: AffineSpace) -> bool:
        return self.directions == other.directions and other.particular in self


@dataclass(frozen=True)
class CompatReport:
    conditions: tuple  # left-null-space basis vectors w_i
    satisfied: bool
    violations: tuple = field(default=())  # (condition index, residual w_i . b)


class IncompatibleSystem(ValueError):
    """Raised when ``A x = b`` has no solution; ``report`` is the certificate."""

    def __init__(self, report: CompatReport, message: str = "incompatible system"):
        super().__init__(message)
        self.report = report


def compatibility_conditions(A: RMat) -> list[RVec]:
    """Basis of the vectors orthogonal to every column of ``A``.

    ``A x = b`` is solvable iff ``w . b = 0`` for each returned ``w``.
    """
    return list(orthogonal_complement(A.columns(), A.nrows).basis)


def check_compatibility(A: RMat, b: Sequence) -> CompatReport:
    b = vec(b)
    if len(b) != A.nrows:
        raise ValueError(f"rhs has length {len(b)} but the matrix has {A.nrows} rows")
    conds = compatibility_conditions(A)
    violations = []
    for i, w in enumerate(conds):
        r = dot(w, b)
        if r != 0:
            violations.append((i, r))
    return CompatReport(tuple(conds), not violations, tuple(violations))


def solve_homogeneous(A: RMat) -> Subspace:
    return null_space(A)


def solve_complete(A: RMat, b: Sequence) -> AffineSpace:
    """General solution of ``A x = b``.

    The particular point has every free variable of the RREF set to zero.
    Raises :class:`IncompatibleSystem` with the violated conditions otherwise.
    """
    b = vec(b)
    if len(b) != A.nrows:
        raise ValueError(f"rhs has length {len(b)} but the matrix has {A.nrows} rows")
    x0 = solve_particular(A, b)
    if x0 is None:
        raise IncompatibleSystem(check_compatibility(A, b))
    return AffineSpace(x0, null_space(A))

