"""Cones, dual cones and polyhedral solution sets of linear inequality systems.

The dual cone is computed by incremental halfspace insertion (double
description). A cone is stored as ``lin + cone(rays)``: a lineality subspace
plus a minimal set of rays, each ray reduced to a primitive integer direction
orthogonal to ``lin``. Everything is exact.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .exact import (
    RMat,
    RVec,
    Subspace,
    dot,
    is_zero,
    primitive_integer,
    rank_of,
    scale,
    sub,
    unit_vec,
    vec,
)


def canonicalize_ray(v: Sequence) -> RVec:
    """Unique primitive integer representative of the direction of ``v``."""
    return tuple(Fraction(a) for a in primitive_integer(v))


@dataclass(frozen=True)
class Cone:
    """``lin + {sum pi_j * rays[j], pi_j >= 0}``."""

    lin: Subspace
    rays: tuple

    @property
    def ambient(self) -> int:
        return self.lin.ambient

    @cached_property
    def dual(self) -> Cone:
        return dual_cone(self.rays, self.lin.basis, self.ambient)

    def __contains__(self, x) -> bool:
        return member_cone(x, self)

    def is_pointed(self) -> bool:
        return self.lin.dim == 0

    def is_zero(self) -> bool:
        return self.lin.dim == 0 and not self.rays


@dataclass(frozen=True)
class Polyhedron:
    """``lin + cone(rays) + conv(vertices)``; empty iff there are no vertices."""

    lin: Subspace
    rays: tuple
    vertices: tuple

    @property
    def ambient(self) -> int:
        return self.lin.ambient

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_polytope(self) -> bool:
        return self.lin.dim == 0 and not self.rays

    @cached_property
    def homogenized(self) -> Cone:
        """The cone over ``P x {1}`` in one more dimension."""
        n = self.ambient
        lin = [tuple(v) + (Fraction(0),) for v in self.lin.basis]
        gens = [tuple(r) + (Fraction(0),) for r in self.rays]
        gens += [tuple(u) + (Fraction(1),) for u in self.vertices]
        return cone_from_generators(gens, lin, n + 1)

    def __contains__(self, x) -> bool:
        return member_polyhedron(x, self)

    def same_set(self, other: Polyhedron) -> bool:
        return cone_equal(self.homogenized, other.homogenized)


class InfeasibleSystem(ValueError):
    """Raised when a system of (in)equalities has no solution.

    ``step`` names the constraint, as ``("eq" | "ineq", row)``, whose insertion
    emptied the solution set. ``certificate`` is a Farkas vector ``y`` with
    ``y . [Aeq; Aineq] = 0``, ``y_ineq >= 0`` and ``y . [beq; bineq] < 0``.
    """

    def __init__(self, step, certificate: RVec | None = None):
        kind, row = step
        super().__init__(f"infeasible system: solution set became empty at {kind} row {row}")
        self.step = step
        self.certificate = certificate


# --- double description -----------------------------------------------------


def _primitive(v: RVec) -> RVec:
    return canonicalize_ray(v)


def _dd_steps(n: int, constraints: Sequence[tuple[RVec, bool]]) -> Iterator[tuple[int, list, list]]:
    """Insert constraints ``a . x <= 0`` (or ``= 0`` when flagged) one at a time.

    Starts from all of Q^n and yields ``(index, lin, rays)`` after each
    insertion. Rays are kept extreme: a positive/negative pair is combined
    only if the pair is adjacent, decided by the rank of their common tight
    constraints.
    """
    lin: list[RVec] = [unit_vec(n, i) for i in range(n)]
    rays: list[RVec] = []
    done: list[RVec] = []
    for idx, (a, is_eq) in enumerate(constraints):
        if is_zero(a):
            yield idx, lin, rays
            continue
        k = next((i for i, l in enumerate(lin) if dot(a, l) != 0), None)
        if k is not None:
            l = lin.pop(k)
            al = dot(a, l)
            lin = [_primitive(sub(x, scale(dot(a, x) / al, l))) for x in lin]
            rays = [_primitive(sub(r, scale(dot(a, r) / al, l))) for r in rays]
            if not is_eq:
                rays.append(_primitive(l if al < 0 else scale(-1, l)))
        else:
            vals = [dot(a, r) for r in rays]
            pos = [i for i, v in enumerate(vals) if v > 0]
            neg = [i for i, v in enumerate(vals) if v < 0]
            new = [rays[i] for i, v in enumerate(vals) if v == 0 or (v < 0 and not is_eq)]
            if pos and neg:
                need = n - len(lin) - 2
                tight = [frozenset(j for j, c in enumerate(done) if dot(c, r) == 0) for r in rays]
                for p in pos:
                    for q in neg:
                        common = tight[p] & tight[q]
                        if len(common) < need:
                            continue
                        if need > 0 and rank_of([done[j] for j in common], n) != need:
                            continue
                        comb = sub(scale(vals[p], rays[q]), scale(vals[q], rays[p]))
                        new.append(_primitive(comb))
            rays = new
        done.append(a)
        yield idx, lin, rays


def _finish(n: int, lin: list, rays: list) -> Cone:
    L = Subspace(lin, n)
    out = set()
    for r in rays:
        r = L.project_out(r)
        if not is_zero(r):
            out.add(canonicalize_ray(r))
    return Cone(L, tuple(sorted(out)))


def dual_cone(generators: Sequence[Sequence], lin_generators: Sequence[Sequence] = (), ambient: int | None = None) -> Cone:
    """``{u : g . u <= 0 for g in generators, v . u = 0 for v in lin_generators}``."""
    generators = [vec(g) for g in generators]
    lin_generators = [vec(v) for v in lin_generators]
    if ambient is None:
        first = generators[:1] or lin_generators[:1]
        if not first:
            raise ValueError("ambient dimension is required when no generators are given")
        ambient = len(first[0])
    for g in generators + lin_generators:
        if len(g) != ambient:
            raise ValueError(f"generator of length {len(g)} in Q^{ambient}")
    constraints = [(v, True) for v in lin_generators] + [(g, False) for g in generators]
    lin, rays = [unit_vec(ambient, i) for i in range(ambient)], []
    for _, lin, rays in _dd_steps(ambient, constraints):
        pass
    return _finish(ambient, lin, rays)


def cone_from_generators(rays: Sequence[Sequence], lin: Sequence[Sequence] = (), ambient: int | None = None) -> Cone:
    """Minimal ``lin + cone(rays)`` form of the cone spanned by the inputs."""
    rays = [vec(r) for r in rays]
    lin = [vec(v) for v in lin]
    if ambient is None:
        first = rays[:1] or lin[:1]
        if not first:
            raise ValueError("ambient dimension is required when no generators are given")
        ambient = len(first[0])
    d = dual_cone(rays, lin, ambient)
    return dual_cone(d.rays, d.lin.basis, ambient)


# --- membership and comparison ---------------------------------------------


def member_cone(x: Sequence, C: Cone) -> bool:
    x = vec(x)
    if len(x) != C.ambient:
        raise ValueError(f"point of length {len(x)} tested against a cone in Q^{C.ambient}")
    D = C.dual
    return all(dot(v, x) == 0 for v in D.lin.basis) and all(dot(w, x) <= 0 for w in D.rays)


def member_polyhedron(x: Sequence, P: Polyhedron) -> bool:
    x = vec(x)
    if len(x) != P.ambient:
        raise ValueError(f"point of length {len(x)} tested against a polyhedron in Q^{P.ambient}")
    if P.is_empty:
        return False
    return member_cone(x + (Fraction(1),), P.homogenized)


def cone_equal(C1: Cone, C2: Cone) -> bool:
    if C1.ambient != C2.ambient or C1.lin != C2.lin:
        return False
    return all(r in C2 for r in C1.rays) and all(r in C1 for r in C2.rays)


def is_minimal(C: Cone) -> bool:
    """No ray lies in ``lin`` or in the cone of the remaining rays plus ``lin``."""
    for i, r in enumerate(C.rays):
        if r in C.lin:
            return False
        others = C.rays[:i] + C.rays[i + 1:]
        if member_cone(r, cone_from_generators(others, C.lin.basis, C.ambient)):
            return False
    return True


# --- systems ----------------------------------------------------------------


@dataclass(frozen=True)
class NonnegCompat:
    conditions: Cone
    satisfied: bool
    violations: tuple  # ("lin" | "ray", index, b . generator)


def compat_nonneg(A: RMat, b: Sequence) -> NonnegCompat:
    """Compatibility of ``A x = b, x >= 0``: b must lie in the cone of A's columns.

    Equivalently ``b . v = 0`` for the lineality vectors and ``b . w <= 0`` for
    the rays of the dual of that cone.
    """
    b = vec(b)
    if len(b) != A.nrows:
        raise ValueError(f"rhs has length {len(b)} but the matrix has {A.nrows} rows")
    C = dual_cone(A.columns(), (), A.nrows)
    violations = []
    for i, v in enumerate(C.lin.basis):
        r = dot(b, v)
        if r != 0:
            violations.append(("lin", i, r))
    for i, w in enumerate(C.rays):
        r = dot(b, w)
        if r > 0:
            violations.append(("ray", i, r))
    return NonnegCompat(C, not violations, tuple(violations))


def solve_homogeneous_ineq(A: RMat) -> Cone:
    """``{x : A x <= 0}``."""
    return dual_cone(A.rows, (), A.ncols)


def _check(A: RMat | None, b, n: int | None, what: str):
    if A is None:
        return RMat((), n), ()
    b = vec(b)
    if len(b) != A.nrows:
        raise ValueError(f"{what}: rhs has length {len(b)} but the matrix has {A.nrows} rows")
    if n is not None and A.ncols != n:
        raise ValueError(f"{what}: matrix has {A.ncols} columns, expected {n}")
    return A, b


def solve_mixed(Aeq: RMat | None, beq, Aineq: RMat | None, bineq, n: int | None = None) -> Polyhedron:
    """Solution set of ``Aeq x = beq, Aineq x <= bineq`` in generator form.

    Homogenizes with an extra coordinate ``t >= 0``, computes the cone, and
    slices it at ``t = 1``. Equalities stay equalities throughout. Raises
    :class:`InfeasibleSystem` when the set is empty.
    """
    if n is None:
        if Aeq is not None:
            n = Aeq.ncols
        elif Aineq is not None:
            n = Aineq.ncols
        else:
            raise ValueError("n is required when both systems are absent")
    Aeq, beq = _check(Aeq, beq, n, "equalities")
    Aineq, bineq = _check(Aineq, bineq, n, "inequalities")
    cons: list[tuple[RVec, bool]] = [((Fraction(0),) * n + (Fraction(-1),), False)]
    labels = [None]
    for i, (row, bi) in enumerate(zip(Aeq.rows, beq)):
        cons.append((row + (-bi,), True))
        labels.append(("eq", i))
    for i, (row, bi) in enumerate(zip(Aineq.rows, bineq)):
        cons.append((row + (-bi,), False))
        labels.append(("ineq", i))

    lin, rays = [], []
    for idx, lin, rays in _dd_steps(n + 1, cons):
        if idx and not any(r[n] > 0 for r in rays):
            cert = farkas_certificate(Aeq, beq, Aineq, bineq)
            raise InfeasibleSystem(labels[idx], cert)
    C = _finish(n + 1, lin, rays)
    return _slice(C, n)


def solve_ineq(A: RMat, b: Sequence) -> Polyhedron:
    """``{x : A x <= b}``."""
    return solve_mixed(None, (), A, b, A.ncols)


def _slice(C: Cone, n: int) -> Polyhedron:
    lin = Subspace([v[:n] for v in C.lin.basis], n)
    rays, verts = [], []
    for r in C.rays:
        if r[n] > 0:
            verts.append(tuple(x / r[n] for x in r[:n]))
        else:
            rays.append(r[:n])
    return Polyhedron(lin, tuple(sorted(rays)), tuple(sorted(verts)))


def farkas_certificate(Aeq: RMat, beq, Aineq: RMat, bineq) -> RVec | None:
    """A vector proving infeasibility of ``Aeq x = beq, Aineq x <= bineq``.

    Returns ``y = (y_eq, y_ineq)`` with ``y_ineq >= 0``, ``y^T [Aeq; Aineq] = 0``
    and ``y . (beq, bineq) < 0``, or None when the system is feasible.
    """
    M = Aeq.vstack(Aineq)
    c = tuple(beq) + tuple(bineq)
    m, me = M.nrows, Aeq.nrows
    if m == 0:
        return None
    Y = dual_cone([scale(-1, unit_vec(m, me + i)) for i in range(Aineq.nrows)], M.columns(), m)
    for v in Y.lin.basis:
        s = dot(c, v)
        if s != 0:
            return v if s < 0 else scale(-1, v)
    for w in Y.rays:
        if dot(c, w) < 0:
            return w
    return None


def polyhedron_from_generators(vertices, rays=(), lin=(), ambient: int | None = None) -> Polyhedron:
    """Minimal generator form of ``lin + cone(rays) + conv(vertices)``."""
    vertices = [vec(u) for u in vertices]
    if ambient is None:
        ambient = len((vertices or [vec(r) for r in rays] or [vec(v) for v in lin])[0])
    if not vertices:
        return Polyhedron(Subspace.zero(ambient), (), ())
    gens = [tuple(vec(r)) + (Fraction(0),) for r in rays] + [u + (Fraction(1),) for u in vertices]
    C = cone_from_generators(gens, [tuple(vec(v)) + (Fraction(0),) for v in lin], ambient + 1)
    return _slice(C, ambient)
