"""Plain-text rendering of solution sets in additive generator form."""

from __future__ import annotations

from .exact import Subspace, format_rat
from .linsys import AffineSpace
from .polyhedral import Cone, Polyhedron


def fmt_vec(v) -> str:
    return "(" + ", ".join(format_rat(x) for x in v) + ")"


def render_solution_set(s, var: str = "x") -> str:
    """Render an AffineSpace, Subspace, Cone or Polyhedron.

    Layout: the particular point (or single vertex), then ``+ rho_i * v``
    lines, then ``+ pi_j * w (pi_j >= 0)`` lines, then the vertex block when
    the polytope part has more than one vertex.
    """
    if isinstance(s, AffineSpace):
        head, lin, rays, verts = [s.particular], s.directions.basis, (), ()
    elif isinstance(s, Subspace):
        head, lin, rays, verts = [], s.basis, (), ()
    elif isinstance(s, Cone):
        head, lin, rays, verts = [], s.lin.basis, s.rays, ()
    elif isinstance(s, Polyhedron):
        if s.is_empty:
            return f"{var} in {{}} (empty)"
        lin, rays = s.lin.basis, s.rays
        head, verts = (list(s.vertices), ()) if len(s.vertices) == 1 else ([], s.vertices)
    else:
        raise TypeError(f"cannot render {type(s).__name__}")

    lines = []
    if head:
        lines.append(f"{var} = {fmt_vec(head[0])}")
    for i, v in enumerate(lin, 1):
        lines.append(f"  + rho{i} * {fmt_vec(v)}")
    for j, w in enumerate(rays, 1):
        lines.append(f"  + pi{j} * {fmt_vec(w)}   (pi{j} >= 0)")
    if verts:
        lines.append("  + sum lambda_k * u_k, lambda convex over:")
        for k, u in enumerate(verts, 1):
            lines.append(f"      u{k} = {fmt_vec(u)}")
    if not lines:
        return f"{var} = 0 (only the origin)"
    if not head:
        lines[0] = f"{var} = " + lines[0].lstrip()[2:]
    return "\n".join(lines)
