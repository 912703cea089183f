"""Command-line front end.

    trusskit solve-eq FILE [--json]
    trusskit solve-ineq FILE [--json]
    trusskit truss analyze FILE [--json] [--svg DIR --scale RAT]
    trusskit truss classify FILE [--json]
    trusskit truss modes FILE [--svg DIR]
    trusskit truss constrained MODEL CONSTRAINTS [--json]

Exit status: 0 on success, 2 when the system or supports are contradictory
(a certificate is printed), 1 on malformed input.
"""

from __future__ import annotations

import argparse
import os
import sys

from .exact import format_rat, parse_rat, zero_vec
from .linsys import IncompatibleSystem, check_compatibility, solve_complete
from .polyhedral import InfeasibleSystem, solve_mixed
from .render import fmt_vec, render_solution_set
from .serialize import (
    InputError,
    affine_to_json,
    dumps,
    incompatible_to_json,
    infeasible_to_json,
    parse_equality_system,
    parse_inequality_system,
    polyhedron_to_json,
    rats,
    read_json,
)
from .svg import emit_svg
from .truss import TrussModel, analyze, assemble, classify
from .truss.inequalities import Constraint, parse_loads, solve_with_inequalities
from .truss.modes import label, preferred_basis

EXIT_OK, EXIT_INPUT, EXIT_CONTRADICTION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def max_dim() -> int:
    raw = os.environ.get("TRUSSKIT_MAX_DIM", "64")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"TRUSSKIT_MAX_DIM must be an integer, got {raw!r}") from None


def _check_dim(n: int, what: str) -> None:
    cap = max_dim()
    if n > cap:
        raise InputError(f"{what} has dimension {n}, above TRUSSKIT_MAX_DIM={cap}")


def _load_model(path) -> TrussModel:
    model = TrussModel.from_dict(read_json(path))
    _check_dim(model.ndof, "truss model")
    return model


def _conditions_text(conds) -> list[str]:
    if not conds:
        return ["compatibility conditions: none"]
    return ["compatibility conditions (w . b = 0):"] + [f"  w{i} = {fmt_vec(w)}" for i, w in enumerate(conds, 1)]


def _incompatible_text(exc: IncompatibleSystem) -> str:
    rep = exc.report
    lines = [f"incompatible: {exc}"] + _conditions_text(rep.conditions)
    lines += [f"  violated: w{i + 1} . b = {format_rat(r)}" for i, r in rep.violations]
    return "\n".join(lines)


def _infeasible_text(exc: InfeasibleSystem) -> str:
    lines = [f"infeasible: {exc}"]
    if exc.certificate is not None:
        lines.append(f"certificate y = {fmt_vec(exc.certificate)}")
        lines.append("  (y . A = 0, y >= 0 on inequality rows, y . b < 0)")
    return "\n".join(lines)


# --- commands ---


def cmd_solve_eq(args, out) -> int:
    A, b = parse_equality_system(read_json(args.file))
    _check_dim(max(A.nrows, A.ncols), "system")
    try:
        sol = solve_complete(A, b)
    except IncompatibleSystem as exc:
        out.write((dumps(incompatible_to_json(exc)) if args.json else _incompatible_text(exc)) + "\n")
        return EXIT_CONTRADICTION
    conds = check_compatibility(A, b).conditions
    if args.json:
        out.write(dumps(affine_to_json(sol, conds)) + "\n")
    else:
        status = "unique" if sol.is_unique else f"affine (dimension {sol.dim})"
        text = [f"status: {status}", *_conditions_text(conds), render_solution_set(sol)]
        out.write("\n".join(text) + "\n")
    return EXIT_OK


def cmd_solve_ineq(args, out) -> int:
    Aeq, beq, Ain, bin_ = parse_inequality_system(read_json(args.file))
    _check_dim(max(Aeq.ncols, Aeq.nrows + Ain.nrows), "system")
    try:
        P = solve_mixed(Aeq, beq, Ain, bin_, Aeq.ncols)
    except InfeasibleSystem as exc:
        out.write((dumps(infeasible_to_json(exc)) if args.json else _infeasible_text(exc)) + "\n")
        return EXIT_CONTRADICTION
    if args.json:
        out.write(dumps(polyhedron_to_json(P)) + "\n")
    else:
        out.write(render_solution_set(P) + "\n")
    return EXIT_OK


def cmd_classify(args, out) -> int:
    model = _load_model(args.file)
    c = classify(model)
    if args.json:
        payload = {
            "kind": c.kind,
            "rank": c.rank_stacked,
            "two_m": c.two_m,
            "b_plus_c": c.b_plus_c,
            "degree": c.degree,
            "free_modes": c.free_modes,
            "text": str(c),
        }
        out.write(dumps(payload) + "\n")
    else:
        out.write(str(c) + "\n")
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    if args.scale is not None and args.svg is None:
        raise UsageError("--scale requires --svg")
    scale = parse_rat(args.scale) if args.scale is not None else None
    model = _load_model(args.file)
    c = classify(model)
    try:
        sol = analyze(model)
    except IncompatibleSystem as exc:
        out.write((dumps(incompatible_to_json(exc)) if args.json else _incompatible_text(exc)) + "\n")
        return EXIT_CONTRADICTION
    dofs = [model.dof_label(d) for d in model.support_dofs()]
    if args.json:
        payload = {
            "classification": str(c),
            "displacements": affine_to_json(sol.displacements),
            "reactions": None if sol.reactions is None else dict(zip(dofs, rats(sol.reactions))),
            "axial_forces": None
            if sol.axial_forces is None
            else {str(k): format_rat(v) for k, v in sol.axial_forces.items()},
        }
        out.write(dumps(payload) + "\n")
    else:
        lines = [f"classification: {c}", "displacements:", render_solution_set(sol.displacements, "u")]
        if sol.reactions is None:
            lines.append("reactions: not determined (free modes change them)")
        else:
            lines.append("reactions:")
            lines += [f"  {d} = {format_rat(r)}" for d, r in zip(dofs, sol.reactions)]
        if sol.axial_forces is None:
            lines.append("axial forces: not determined")
        else:
            lines.append("axial forces (tension > 0):")
            lines += [f"  bar {k}: {format_rat(v)}" for k, v in sol.axial_forces.items()]
        out.write("\n".join(lines) + "\n")
    if args.svg is not None:
        shapes = [("deformed", sol.displacements.particular)]
        shapes += [(label(model, d), d) for d in sol.displacements.directions.basis]
        if all(x == 0 for x in shapes[0][1]):
            shapes = shapes[1:]
        emit_svg(model, shapes, args.svg, scale)
    return EXIT_OK


def cmd_modes(args, out) -> int:
    model = _load_model(args.file)
    K = assemble(model)
    space = solve_complete(K, zero_vec(model.ndof)).directions
    basis = preferred_basis(model, space)
    shapes = [(label(model, v), v) for v in basis]
    lines = [f"zero-energy modes: {len(shapes)}"]
    lines += [f"  {lab}: {fmt_vec(v)}" for lab, v in shapes]
    out.write("\n".join(lines) + "\n")
    if args.svg is not None:
        emit_svg(model, shapes, args.svg)
    return EXIT_OK


def cmd_constrained(args, out) -> int:
    model = _load_model(args.model)
    doc = read_json(args.constraints)
    try:
        cases = {str(k): parse_loads(v) for k, v in doc.get("load_cases", {}).items()}
        cons = [Constraint.from_dict(c) for c in doc.get("constraints", [])]
    except (KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"bad constraint file: {exc}") from None
    try:
        res = solve_with_inequalities(model, cons, cases, include_supports=bool(doc.get("include_supports", True)))
    except InfeasibleSystem as exc:
        out.write((dumps(infeasible_to_json(exc)) if args.json else _infeasible_text(exc)) + "\n")
        return EXIT_CONTRADICTION
    names = list(res.parametrization.names)
    if args.json:
        payload = {
            "status": "polyhedron",
            "unknowns": names,
            "parameters": polyhedron_to_json(res.parameter_set),
            "displacements": polyhedron_to_json(res.displacement_set),
        }
        out.write(dumps(payload) + "\n")
    else:
        lines = [
            "unknowns: " + ", ".join(names),
            render_solution_set(res.parameter_set, "t"),
            "displacements:",
            render_solution_set(res.displacement_set, "u"),
        ]
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="trusskit", description="Exact solutions of linear systems and truss analysis.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve-eq", help="solve a system of linear equations")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve_eq)

    s = sub.add_parser("solve-ineq", help="solve a system of linear (in)equalities")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve_ineq)

    t = sub.add_parser("truss", help="truss analyses").add_subparsers(dest="truss_command", required=True)
    s = t.add_parser("analyze", help="displacements, reactions and axial forces")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.add_argument("--svg", metavar="DIR")
    s.add_argument("--scale", metavar="RAT")
    s.set_defaults(func=cmd_analyze)

    s = t.add_parser("classify", help="isostatic, hyperstatic, mechanism or critical")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = t.add_parser("modes", help="zero-energy modes of the unsupported truss")
    s.add_argument("file")
    s.add_argument("--svg", metavar="DIR")
    s.set_defaults(func=cmd_modes)

    s = t.add_parser("constrained", help="analysis under (in)equality constraints")
    s.add_argument("model")
    s.add_argument("constraints")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_constrained)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
    except IncompatibleSystem as exc:
        out.write(_incompatible_text(exc) + "\n")
        return EXIT_CONTRADICTION
    except InfeasibleSystem as exc:
        out.write(_infeasible_text(exc) + "\n")
        return EXIT_CONTRADICTION
    except (ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
    return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
