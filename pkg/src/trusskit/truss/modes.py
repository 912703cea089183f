"""Labelling of zero-energy and solution-set generators as rigid motions."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from ..exact import RVec, Subspace, is_zero, rank_of, vec
from ..linsys import AffineSpace
from ..polyhedral import Cone, Polyhedron
from .model import TrussModel


def translation(model: TrussModel, axis: str) -> RVec:
    one, zero = Fraction(1), Fraction(0)
    pair = (one, zero) if axis == "x" else (zero, one)
    return pair * model.m


def rotation(model: TrussModel, node_id: int) -> RVec:
    """Infinitesimal rotation about a node: ``(-(y - yp), x - xp)`` per node."""
    p = model.node(node_id)
    out = []
    for nd in model.nodes:
        out += [-(nd.y - p.y), nd.x - p.x]
    return tuple(out)


def _parallel(u: RVec, v: RVec) -> bool:
    return not is_zero(u) and not is_zero(v) and rank_of([u, v], len(u)) == 1


def label(model: TrussModel, v: Sequence) -> str:
    v = vec(v)
    if _parallel(v, translation(model, "x")):
        return "translation-x"
    if _parallel(v, translation(model, "y")):
        return "translation-y"
    for nd in model.nodes:
        if _parallel(v, rotation(model, nd.id)):
            return f"rotation-about-node-{nd.id}"
    for nd in model.nodes:
        if _partial_rotation(v, rotation(model, nd.id)):
            return f"substructure-rotation-about-node-{nd.id}"
    return "other"


def _partial_rotation(v: RVec, rot: RVec) -> bool:
    """Some nodes rotate rigidly about a common node while the rest stay put."""
    factor = None
    for k in range(0, len(v), 2):
        pv, pr = v[k : k + 2], rot[k : k + 2]
        if is_zero(pv):
            continue
        if is_zero(pr):
            return False
        j = 0 if pr[0] != 0 else 1
        c = pv[j] / pr[j]
        if pv != (c * pr[0], c * pr[1]) or (factor is not None and c != factor):
            return False
        factor = c
    return factor is not None


def generators_of(solution) -> list[RVec]:
    if isinstance(solution, AffineSpace):
        return list(solution.directions.basis)
    if isinstance(solution, Subspace):
        return list(solution.basis)
    if isinstance(solution, (Cone, Polyhedron)):
        return list(solution.lin.basis) + list(solution.rays)
    return [vec(g) for g in solution]


def mode_shapes(model: TrussModel, solution) -> list[tuple[str, RVec]]:
    """``(label, generator)`` for each direction, lineality vector or ray."""
    return [(label(model, g), g) for g in generators_of(solution)]


def preferred_basis(model: TrussModel, space: Subspace) -> list[RVec]:
    """A basis of ``space`` that uses whole-body rigid motions where possible.

    Translations come first, then rotations about nodes in model order; the
    rest is filled from the original basis.
    """
    n = space.ambient
    candidates = [translation(model, "x"), translation(model, "y")]
    candidates += [rotation(model, nd.id) for nd in model.nodes]
    chosen: list[RVec] = []
    for c in candidates + list(space.basis):
        if len(chosen) == space.dim:
            break
        if c in space and rank_of(chosen + [c], n) > len(chosen):
            chosen.append(c)
    return chosen
