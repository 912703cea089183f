"""Truss analyses under linear (in)equality constraints.

Displacements are written as an affine function of named unknowns,

    u = offset + sum_j t_j * columns[j],

where the unknowns are load multipliers (one per load case) followed by the
coefficients ``rho1, rho2, ...`` of the zero-energy directions of ``K``.
Constraints on displacements, axial forces and the unknowns themselves are
compiled to rows over ``t`` and handed to :func:`solve_mixed`.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..exact import RMat, RVec, add, dot, lin_comb, parse_rat, vec
from ..linsys import solve_complete
from ..polyhedral import Polyhedron, polyhedron_from_generators, solve_mixed
from .analysis import axial_force_row, complete_loads
from .model import Load, TrussModel, TrussModelError, assemble

RELATIONS = ("<=", ">=", "=")


@dataclass(frozen=True)
class Parametrization:
    names: tuple
    offset: RVec
    columns: tuple

    def __post_init__(self):
        if len(self.names) != len(self.columns):
            raise ValueError("one column per unknown is required")
        if len(set(self.names)) != len(self.names):
            raise ValueError("unknown names must be distinct")

    @property
    def ndof(self) -> int:
        return len(self.offset)

    def displacement(self, t: Sequence) -> RVec:
        return add(self.offset, lin_comb(vec(t), self.columns, self.ndof))

    def linear_part(self, v: Sequence) -> RVec:
        return lin_comb(vec(v), self.columns, self.ndof)

    def term(self, row: Sequence) -> tuple[Fraction, RVec]:
        """``row . u`` as ``(constant, coefficients over the unknowns)``."""
        return dot(row, self.offset), tuple(dot(row, c) for c in self.columns)


@dataclass(frozen=True)
class Constraint:
    terms: tuple  # (name, coefficient) pairs
    rel: str
    rhs: Fraction

    def __post_init__(self):
        if self.rel not in RELATIONS:
            raise ValueError(f"relation must be one of {RELATIONS}, got {self.rel!r}")

    @classmethod
    def from_dict(cls, data: Mapping) -> Constraint:
        try:
            terms = tuple((str(k), parse_rat(v)) for k, v in data["terms"].items())
            return cls(terms, data["rel"], parse_rat(data.get("rhs", "0")))
        except KeyError as exc:
            raise TrussModelError(f"constraint is missing field {exc.args[0]!r}") from None


def parse_loads(items) -> tuple:
    return tuple(
        Load(int(ld["node"]), parse_rat(ld.get("fx", "0")), parse_rat(ld.get("fy", "0"))) for ld in items
    )


def build_parametrization(model: TrussModel, load_cases: Mapping[str, Sequence[Load]] | None = None, basis=None) -> Parametrization:
    """General solution of ``K u = F0 + sum P_j F_j`` in terms of named unknowns.

    ``F0`` is the model's own loads and each ``F_j`` a load case; support
    reactions are added to every load vector so that each is in equilibrium.
    ``basis`` overrides the direction vectors (default: null space of K).
    """
    K = assemble(model)
    load_cases = dict(load_cases or {})
    offset = solve_complete(K, complete_loads(model)).particular
    names, cols = [], []
    for name, loads in load_cases.items():
        names.append(name)
        cols.append(solve_complete(K, complete_loads(model, loads)).particular)
    if basis is None:
        basis = solve_complete(K, (Fraction(0),) * model.ndof).directions.basis
    for i, v in enumerate(basis, 1):
        v = vec(v)
        if any(x != 0 for x in K @ v):
            raise ValueError(f"basis vector {i} is not a zero-energy direction")
        names.append(f"rho{i}")
        cols.append(v)
    return Parametrization(tuple(names), offset, tuple(cols))


def _term_row(model: TrussModel, name: str) -> RVec:
    kind, _, rest = name.partition(":")
    n = model.ndof
    if kind == "disp":
        node, _, dof = rest.partition(":")
        d = model.dof(int(node), dof)
        return tuple(Fraction(int(j == d)) for j in range(n))
    if kind == "N":
        return axial_force_row(model, int(rest))
    raise TrussModelError(f"unknown constraint term {name!r}")


def compile_constraints(model: TrussModel, param: Parametrization, constraints: Sequence[Constraint], include_supports: bool = True):
    """Rows ``(Aeq, beq, Aineq, bineq)`` over the unknowns of ``param``."""
    cons = list(constraints)
    if include_supports:
        cons = [Constraint(((f"disp:{s.node}:{s.dof}", Fraction(1)),), "=", s.value) for s in model.supports] + cons
    p = len(param.names)
    index = {name: j for j, name in enumerate(param.names)}
    eq_rows, eq_rhs, in_rows, in_rhs = [], [], [], []
    for con in cons:
        const, coeffs = Fraction(0), [Fraction(0)] * p
        for name, c in con.terms:
            if name in index:
                coeffs[index[name]] += c
                continue
            k0, kc = param.term(_term_row(model, name))
            const += c * k0
            for j in range(p):
                coeffs[j] += c * kc[j]
        rhs = con.rhs - const
        if con.rel == "=":
            eq_rows.append(tuple(coeffs))
            eq_rhs.append(rhs)
        elif con.rel == "<=":
            in_rows.append(tuple(coeffs))
            in_rhs.append(rhs)
        else:
            in_rows.append(tuple(-c for c in coeffs))
            in_rhs.append(-rhs)
    return RMat(tuple(eq_rows), p), tuple(eq_rhs), RMat(tuple(in_rows), p), tuple(in_rhs)


@dataclass(frozen=True)
class ConstrainedResult:
    parametrization: Parametrization
    parameter_set: Polyhedron
    displacement_set: Polyhedron


def image(param: Parametrization, P: Polyhedron) -> Polyhedron:
    """Image of a parameter polyhedron in displacement space."""
    verts = [param.displacement(v) for v in P.vertices]
    rays = [param.linear_part(r) for r in P.rays]
    lin = [param.linear_part(v) for v in P.lin.basis]
    return polyhedron_from_generators(verts, rays, lin, param.ndof)


def solve_with_inequalities(
    model: TrussModel,
    constraints: Sequence[Constraint],
    load_cases: Mapping[str, Sequence[Load]] | None = None,
    parametrization: Parametrization | None = None,
    include_supports: bool = True,
) -> ConstrainedResult:
    """Every admissible (loads, rigid-mode) combination and its displacements.

    Support conditions of the model enter as equalities unless
    ``include_supports`` is false. Raises :class:`InfeasibleSystem` when the
    constraints contradict each other.
    """
    param = parametrization or build_parametrization(model, load_cases)
    Aeq, beq, Ain, bin_ = compile_constraints(model, param, constraints, include_supports)
    P = solve_mixed(Aeq, beq, Ain, bin_, len(param.names))
    return ConstrainedResult(param, P, image(param, P))
