"""Classify random trusses with rational bar lengths and check the zero-energy identities.

Nodes sit on an integer grid and bars are kept only when their length is an
integer, so every stiffness entry stays rational. For each truss the script
checks K = K^T, that every null-space vector of K carries zero axial force,
and tallies the classification under random supports.

Usage: python scripts/random_trusses.py [--count N] [--seed S] [--nodes M]
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from trusskit.exact import null_space
from trusskit.truss import (
    Bar,
    Node,
    Support,
    TrussModel,
    assemble,
    axial_force,
    classify,
)


@dataclass(frozen=True)
class Config:
    count: int = 200
    seed: int = 0
    nodes: int = 4
    grid: int = 8
    supports: tuple[int, int] = (2, 5)


def random_truss(rng: random.Random, cfg: Config) -> TrussModel | None:
    pts = rng.sample([(x, y) for x in range(cfg.grid + 1) for y in range(cfg.grid + 1)], cfg.nodes)
    pairs = []
    for a in range(cfg.nodes):
        for b in range(a + 1, cfg.nodes):
            d2 = (pts[a][0] - pts[b][0]) ** 2 + (pts[a][1] - pts[b][1]) ** 2
            if isqrt(d2) ** 2 == d2:
                pairs.append((a, b))
    if not pairs:
        return None
    nodes = tuple(Node(i + 1, Fraction(x), Fraction(y)) for i, (x, y) in enumerate(pts))
    bars = tuple(Bar(j + 1, a + 1, b + 1, Fraction(rng.randint(1, 9))) for j, (a, b) in enumerate(pairs))
    dofs = [(n.id, d) for n in nodes for d in ("ux", "uy")]
    picked = rng.sample(dofs, rng.randint(*cfg.supports))
    return TrussModel(nodes, bars, tuple(Support(n, d) for n, d in sorted(picked)))


def check(model: TrussModel) -> None:
    K = assemble(model)
    assert K.is_symmetric()
    for v in null_space(K).basis:
        assert all(axial_force(model, b.id, v) == 0 for b in model.bars)


def parse_args(argv=None) -> Config:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    d = Config()
    p.add_argument("--count", type=int, default=d.count)
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--nodes", type=int, default=d.nodes)
    p.add_argument("--grid", type=int, default=d.grid)
    a = p.parse_args(argv)
    return Config(a.count, a.seed, a.nodes, a.grid)


def main(argv=None) -> None:
    cfg = parse_args(argv)
    rng = random.Random(cfg.seed)
    kinds, skipped = Counter(), 0
    for _ in range(cfg.count):
        model = random_truss(rng, cfg)
        if model is None:
            skipped += 1
            continue
        check(model)
        kinds[classify(model).kind] += 1
    print(f"{sum(kinds.values())} trusses checked, {skipped} skipped (no integer-length bar)")
    for kind, n in sorted(kinds.items()):
        print(f"  {kind:12s} {n}")


if __name__ == "__main__":
    main()
