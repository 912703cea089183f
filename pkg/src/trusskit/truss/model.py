"""Plane truss models, element matrices and global stiffness assembly."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from ..exact import RMat, RVec, parse_rat, unit_vec

DOFS = ("ux", "uy")


class TrussModelError(ValueError):
    pass


class IrrationalLength(TrussModelError):
    pass


@dataclass(frozen=True)
class Node:
    id: int
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class Bar:
    id: int
    i: int
    j: int
    ea: Fraction  # axial rigidity A*E


@dataclass(frozen=True)
class Support:
    node: int
    dof: str
    value: Fraction = Fraction(0)


@dataclass(frozen=True)
class Load:
    node: int
    fx: Fraction = Fraction(0)
    fy: Fraction = Fraction(0)


def rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


@dataclass(frozen=True)
class TrussModel:
    nodes: tuple
    bars: tuple
    supports: tuple = ()
    loads: tuple = ()
    _node_pos: dict = field(init=False, repr=False, compare=False)
    _bar_pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "bars", tuple(self.bars))
        object.__setattr__(self, "supports", tuple(self.supports))
        object.__setattr__(self, "loads", tuple(self.loads))
        node_pos = {}
        for k, nd in enumerate(self.nodes):
            if nd.id in node_pos:
                raise TrussModelError(f"duplicate node id {nd.id}")
            node_pos[nd.id] = k
        bar_pos, pairs = {}, set()
        for k, b in enumerate(self.bars):
            if b.id in bar_pos:
                raise TrussModelError(f"duplicate bar id {b.id}")
            for end in (b.i, b.j):
                if end not in node_pos:
                    raise TrussModelError(f"bar {b.id} references unknown node {end}")
            if b.i == b.j:
                raise TrussModelError(f"bar {b.id} joins node {b.i} to itself")
            pair = frozenset((b.i, b.j))
            if pair in pairs:
                raise TrussModelError(f"bar {b.id} duplicates another bar between nodes {b.i} and {b.j}")
            if b.ea <= 0:
                raise TrussModelError(f"bar {b.id} has non-positive axial rigidity")
            pairs.add(pair)
            bar_pos[b.id] = k
        seen = set()
        for s in self.supports:
            if s.node not in node_pos:
                raise TrussModelError(f"support on unknown node {s.node}")
            if s.dof not in DOFS:
                raise TrussModelError(f"support dof must be one of {DOFS}, got {s.dof!r}")
            if (s.node, s.dof) in seen:
                raise TrussModelError(f"duplicate support {s.dof} on node {s.node}")
            seen.add((s.node, s.dof))
        for ld in self.loads:
            if ld.node not in node_pos:
                raise TrussModelError(f"load on unknown node {ld.node}")
        object.__setattr__(self, "_node_pos", node_pos)
        object.__setattr__(self, "_bar_pos", bar_pos)
        for b in self.bars:
            self.length(b.id)

    # counts as used in the classification table
    @property
    def m(self) -> int:
        return len(self.nodes)

    @property
    def b(self) -> int:
        return len(self.bars)

    @property
    def c(self) -> int:
        return len(self.supports)

    @property
    def ndof(self) -> int:
        return 2 * len(self.nodes)

    def node(self, node_id: int) -> Node:
        return self.nodes[self._node_pos[node_id]]

    def bar(self, bar_id: int) -> Bar:
        try:
            return self.bars[self._bar_pos[bar_id]]
        except KeyError:
            raise TrussModelError(f"unknown bar {bar_id}") from None

    def dof(self, node_id: int, which: str) -> int:
        if node_id not in self._node_pos:
            raise TrussModelError(f"unknown node {node_id}")
        if which not in DOFS:
            raise TrussModelError(f"dof must be one of {DOFS}, got {which!r}")
        return 2 * self._node_pos[node_id] + DOFS.index(which)

    def dof_label(self, d: int) -> str:
        nd = self.nodes[d // 2]
        return f"{'uv'[d % 2]}{nd.id}"

    def length(self, bar_id: int) -> Fraction:
        b = self.bar(bar_id)
        ni, nj = self.node(b.i), self.node(b.j)
        L = rational_sqrt((nj.x - ni.x) ** 2 + (nj.y - ni.y) ** 2)
        if L is None:
            raise IrrationalLength(f"bar {bar_id} has an irrational length; coordinates must give a rational length")
        return L

    def bar_dofs(self, bar_id: int) -> tuple[int, int, int, int]:
        b = self.bar(bar_id)
        return (self.dof(b.i, "ux"), self.dof(b.i, "uy"), self.dof(b.j, "ux"), self.dof(b.j, "uy"))

    def support_dofs(self) -> list[int]:
        return [self.dof(s.node, s.dof) for s in self.supports]

    def support_matrix(self) -> tuple[RMat, RVec]:
        """Unit rows ``B`` and values ``b`` with ``B u = b`` for the supports."""
        n = self.ndof
        B = RMat(tuple(unit_vec(n, d) for d in self.support_dofs()), n)
        return B, tuple(s.value for s in self.supports)

    def load_vector(self, loads=None) -> RVec:
        F = [Fraction(0)] * self.ndof
        for ld in self.loads if loads is None else loads:
            F[self.dof(ld.node, "ux")] += ld.fx
            F[self.dof(ld.node, "uy")] += ld.fy
        return tuple(F)

    def with_supports(self, supports) -> TrussModel:
        return TrussModel(self.nodes, self.bars, tuple(supports), self.loads)

    def with_loads(self, loads) -> TrussModel:
        return TrussModel(self.nodes, self.bars, self.supports, tuple(loads))

    def without_bar(self, bar_id: int) -> TrussModel:
        return TrussModel(self.nodes, tuple(b for b in self.bars if b.id != bar_id), self.supports, self.loads)

    # --- JSON ---

    @classmethod
    def from_dict(cls, data: dict) -> TrussModel:
        try:
            nodes = [Node(int(n["id"]), parse_rat(n["x"]), parse_rat(n["y"])) for n in data["nodes"]]
            bars = [Bar(int(b["id"]), int(b["i"]), int(b["j"]), parse_rat(b["ea"])) for b in data["bars"]]
            supports = [
                Support(int(s["node"]), s["dof"], parse_rat(s.get("value", "0")))
                for s in data.get("supports", [])
            ]
            loads = [
                Load(int(ld["node"]), parse_rat(ld.get("fx", "0")), parse_rat(ld.get("fy", "0")))
                for ld in data.get("loads", [])
            ]
        except KeyError as exc:
            raise TrussModelError(f"missing field {exc.args[0]!r} in truss model") from None
        except (TypeError, ValueError) as exc:
            if isinstance(exc, TrussModelError):
                raise
            raise TrussModelError(f"bad truss model: {exc}") from None
        return cls(tuple(nodes), tuple(bars), tuple(supports), tuple(loads))

    def to_dict(self) -> dict:
        from ..exact import format_rat as f

        return {
            "nodes": [{"id": n.id, "x": f(n.x), "y": f(n.y)} for n in self.nodes],
            "bars": [{"id": b.id, "i": b.i, "j": b.j, "ea": f(b.ea)} for b in self.bars],
            "supports": [{"node": s.node, "dof": s.dof, "value": f(s.value)} for s in self.supports],
            "loads": [{"node": ld.node, "fx": f(ld.fx), "fy": f(ld.fy)} for ld in self.loads],
        }


@dataclass(frozen=True)
class ElementMatrices:
    k: Fraction
    cos_a: Fraction
    sin_a: Fraction
    local: RMat
    transform: RMat
    global_: RMat


def element_matrices(model: TrussModel, bar_id: int) -> ElementMatrices:
    """Stiffness k = EA/L, local and global 4x4 matrices, and the rotation.

    The local axis runs from node ``i`` to node ``j``.
    """
    b = model.bar(bar_id)
    ni, nj = model.node(b.i), model.node(b.j)
    L = model.length(bar_id)
    k = b.ea / L
    c, s = (nj.x - ni.x) / L, (nj.y - ni.y) / L
    z = Fraction(0)
    local = RMat.from_rows([[k, z, -k, z], [z, z, z, z], [-k, z, k, z], [z, z, z, z]])
    T = RMat.from_rows([[c, s, z, z], [-s, c, z, z], [z, z, c, s], [z, z, -s, c]])
    glob = T.T @ local @ T
    return ElementMatrices(k, c, s, local, T, glob)


def assemble(model: TrussModel) -> RMat:
    """Global stiffness matrix: element matrices scattered by node dofs."""
    n = model.ndof
    K = [[Fraction(0)] * n for _ in range(n)]
    for b in model.bars:
        ke = element_matrices(model, b.id).global_
        idx = model.bar_dofs(b.id)
        for a, da in enumerate(idx):
            row = K[da]
            for c, dc in enumerate(idx):
                row[dc] += ke.rows[a][c]
    return RMat(tuple(tuple(r) for r in K), n)
