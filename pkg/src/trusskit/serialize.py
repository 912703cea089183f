"""JSON formats for systems, solution sets and constraint specs.

Every rational travels as a string, ``"p/q"`` or ``"n"``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .exact import RMat, Subspace, format_rat, parse_rat, vec
from .linsys import AffineSpace, IncompatibleSystem
from .polyhedral import InfeasibleSystem, Polyhedron, canonicalize_ray


class InputError(ValueError):
    """Malformed input file; the message names the offending field."""


def read_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise InputError(f"file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be an object")
    return data


def dumps(payload) -> str:
    return json.dumps(payload, indent=2)


def rats(v) -> list[str]:
    return [format_rat(x) for x in v]


def _rat(value, where: str):
    try:
        return parse_rat(value)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def _matrix(data: dict, key: str = "rows", ncols: int | None = None) -> RMat:
    rows = data.get(key)
    if not isinstance(rows, list):
        raise InputError(f"field '{key}' must be a list of rows")
    parsed = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise InputError(f"field '{key}[{i}]' must be a list")
        parsed.append(tuple(_rat(x, f"{key}[{i}][{j}]") for j, x in enumerate(row)))
    if ncols is None:
        ncols = len(parsed[0]) if parsed else data.get("n")
        if ncols is None:
            raise InputError(f"field '{key}' is empty and no 'n' is given")
    for i, row in enumerate(parsed):
        if len(row) != ncols:
            raise InputError(f"field '{key}[{i}]' has {len(row)} entries, expected {ncols}")
    return RMat(tuple(parsed), ncols)


def _vector(data: dict, key: str, length: int):
    v = data.get(key)
    if not isinstance(v, list):
        raise InputError(f"field '{key}' must be a list")
    if len(v) != length:
        raise InputError(f"field '{key}' has {len(v)} entries but 'rows' has {length}")
    return tuple(_rat(x, f"{key}[{i}]") for i, x in enumerate(v))


def parse_equality_system(data: dict) -> tuple[RMat, tuple]:
    A = _matrix(data)
    return A, _vector(data, "rhs", A.nrows)


def parse_inequality_system(data: dict):
    """``(Aeq, beq, Aineq, bineq)`` from ``{"rows", "rel", "rhs"}``; ``>=`` rows are negated."""
    A = _matrix(data)
    b = _vector(data, "rhs", A.nrows)
    rel = data.get("rel", ["<="] * A.nrows)
    if not isinstance(rel, list) or len(rel) != A.nrows:
        raise InputError(f"field 'rel' must list one relation per row ({A.nrows})")
    eq, beq, ineq, bineq = [], [], [], []
    for i, (row, bi, r) in enumerate(zip(A.rows, b, rel)):
        if r == "=":
            eq.append(row)
            beq.append(bi)
        elif r == "<=":
            ineq.append(row)
            bineq.append(bi)
        elif r == ">=":
            ineq.append(tuple(-x for x in row))
            bineq.append(-bi)
        else:
            raise InputError(f"field 'rel[{i}]' must be '<=', '>=' or '=', got {r!r}")
    n = A.ncols
    return RMat(tuple(eq), n), tuple(beq), RMat(tuple(ineq), n), tuple(bineq)


# --- results ---


def affine_to_json(sol: AffineSpace, conditions=()) -> dict:
    return {
        "status": "unique" if sol.is_unique else "affine",
        "particular": rats(sol.particular),
        "basis": [rats(v) for v in sol.directions.basis],
        "conditions": [rats(w) for w in conditions],
    }


def incompatible_to_json(exc: IncompatibleSystem) -> dict:
    rep = exc.report
    return {
        "status": "incompatible",
        "particular": None,
        "basis": [],
        "conditions": [rats(w) for w in rep.conditions],
        "violations": [[i, format_rat(r)] for i, r in rep.violations],
    }


def affine_from_json(data: dict) -> AffineSpace:
    p = vec(parse_rat(x) for x in data["particular"])
    return AffineSpace(p, Subspace([[parse_rat(x) for x in v] for v in data["basis"]], len(p)))


def polyhedron_to_json(P: Polyhedron) -> dict:
    return {
        "status": "polyhedron",
        "lin": [rats(v) for v in P.lin.basis],
        "rays": [rats(canonicalize_ray(r)) for r in P.rays],
        "vertices": [rats(u) for u in P.vertices],
    }


def infeasible_to_json(exc: InfeasibleSystem) -> dict:
    return {
        "status": "infeasible",
        "lin": [],
        "rays": [],
        "vertices": [],
        "step": list(exc.step),
        "certificate": rats(exc.certificate) if exc.certificate is not None else None,
    }


def polyhedron_from_json(data: dict, n: int) -> Polyhedron:
    def parse(vs):
        return tuple(tuple(parse_rat(x) for x in v) for v in vs)

    return Polyhedron(Subspace(parse(data["lin"]), n), parse(data["rays"]), parse(data["vertices"]))


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
