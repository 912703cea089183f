"""Run every worked example through the command-line front end and print the results.

Usage: python scripts/reproduce_examples.py [--fixtures DIR] [--json] [--svg DIR]
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from trusskit.cli import run

HERE = Path(__file__).resolve().parent


@dataclass(frozen=True)
class Config:
    fixtures: Path = HERE.parent / "tests" / "fixtures"
    json: bool = False
    svg: Path | None = None


def commands(cfg: Config) -> list[tuple[str, list[str]]]:
    f = lambda name: str(cfg.fixtures / name)
    js = ["--json"] if cfg.json else []
    cmds = [
        ("compatibility of a 5x5 system", ["solve-eq", f("ex_compat.json"), *js]),
        ("homogeneous equalities", ["solve-eq", f("ex_homogeneous.json"), *js]),
        ("complete equalities", ["solve-eq", f("ex_complete.json"), *js]),
        ("incompatible equalities", ["solve-eq", f("ex_incompatible.json"), *js]),
        ("homogeneous inequalities", ["solve-ineq", f("ex_ineq_homogeneous.json"), *js]),
        ("complete inequalities", ["solve-ineq", f("ex_ineq_complete.json"), *js]),
        ("infeasible inequalities", ["solve-ineq", f("ex_infeasible.json"), *js]),
        ("isostatic truss", ["truss", "analyze", f("r1_iso.json"), *js]),
        ("hyperstatic truss", ["truss", "analyze", f("r1_hyper.json"), *js]),
        ("critical truss", ["truss", "analyze", f("r1_critical.json"), *js]),
        ("mechanism", ["truss", "analyze", f("r2_mech.json"), *js]),
        ("lifting jack", ["truss", "constrained", f("r1_iso.json"), f("jack_constraints.json"), *js]),
        ("tension bars", ["truss", "constrained", f("r1_supported.json"), f("tension_constraints.json"), *js]),
        (
            "tension, compression and deflection",
            ["truss", "constrained", f("r1_supported.json"), f("tcd_constraints.json"), *js],
        ),
    ]
    for name in ("r1.json", "r2_mech.json"):
        extra = ["--svg", str(cfg.svg / Path(name).stem)] if cfg.svg else []
        cmds.append((f"zero-energy modes of {name}", ["truss", "modes", f(name), *extra]))
    return cmds


def parse_args(argv=None) -> Config:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--fixtures", type=Path, default=Config.fixtures)
    p.add_argument("--json", action="store_true")
    p.add_argument("--svg", type=Path, default=None, help="write mode-shape sketches here")
    a = p.parse_args(argv)
    return Config(a.fixtures, a.json, a.svg)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    for title, argv_ in commands(cfg):
        print(f"== {title}: trusskit {' '.join(argv_)}")
        code = run(argv_, out=sys.stdout, err=sys.stdout)
        print(f"-- exit {code}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
