"""SVG drawings of rounded bodies and their Cheeger sets.

Flat edges become ``L`` commands and corner arcs true ``A`` commands.  The
y axis is flipped so the picture has the usual mathematical orientation.
"""

from __future__ import annotations

import math

from .cheeger import cheeger
from .geom import ConvexPolygon, GeometryError, RoundedBody, Segment, _boundary_pieces

__all__ = ["body_path", "render_svg"]

_PAD = 0.10


def _fmt(x: float) -> str:
    s = f"{x:.10g}"
    return "0" if s == "-0" else s


def _pt(x, y) -> str:
    return f"{_fmt(x)} {_fmt(-y)}"


def _arc(cx, cy, s, a0, a1) -> list[str]:
    """Arc commands from angle ``a0`` to ``a1 > a0`` (counterclockwise)."""
    sweep = a1 - a0
    # one SVG arc is ambiguous at a half turn, so long arcs are split
    pieces = 2 if sweep >= math.pi - 1e-12 else 1
    out = []
    for k in range(1, pieces + 1):
        a = a0 + sweep * k / pieces
        # the flipped y axis turns counterclockwise arcs into sweep-flag 0
        out.append(f"A {_fmt(s)} {_fmt(s)} 0 0 0 {_pt(cx + s * math.cos(a), cy + s * math.sin(a))}")
    return out


def body_path(b: RoundedBody) -> str:
    """Path data for the boundary of ``b``."""
    if not b.has_interior:
        raise GeometryError("cannot draw a body with empty interior")
    s = b.radius
    if s == 0.0:
        v = b.kernel.vertices
        return " ".join([f"M {_pt(*v[0])}"] + [f"L {_pt(*p)}" for p in v[1:]] + ["Z"])
    cmds = []
    for i, ((cx, cy), a0, a1) in enumerate(_boundary_pieces(b)):
        start = _pt(cx + s * math.cos(a0), cy + s * math.sin(a0))
        cmds.append(f"{'M' if i == 0 else 'L'} {start}")
        cmds.extend(_arc(cx, cy, s, a0, a1))
    cmds.append("Z")
    return " ".join(cmds)


def _contact_path(C: RoundedBody, whole: bool) -> str:
    """Path data for the part of the Cheeger set's boundary touching the body."""
    if whole:
        return body_path(C)
    k, t = C.kernel, C.radius
    if not isinstance(k, ConvexPolygon):
        # a segment kernel has two flat sides; a point kernel has none
        if not isinstance(k, Segment):
            return ""
        pieces = _boundary_pieces(C)
        cmds = []
        for i, ((cx, cy), _, a1) in enumerate(pieces):
            (nx, ny), a0n, _ = pieces[(i + 1) % len(pieces)]
            cmds.append(f"M {_pt(cx + t * math.cos(a1), cy + t * math.sin(a1))} "
                        f"L {_pt(nx + t * math.cos(a0n), ny + t * math.sin(a0n))}")
        return " ".join(cmds)
    cmds = []
    v = k.vertices
    for i, (ux, uy) in enumerate(k.outward_normals()):
        p, q = v[i], v[(i + 1) % len(v)]
        cmds.append(f"M {_pt(p[0] + t * ux, p[1] + t * uy)} L {_pt(q[0] + t * ux, q[1] + t * uy)}")
    return " ".join(cmds)


def _bbox(b: RoundedBody):
    s = b.radius
    xs = [p[0] for p in b.kernel.vertices]
    ys = [p[1] for p in b.kernel.vertices]
    return min(xs) - s, min(ys) - s, max(xs) + s, max(ys) + s


def render_svg(b: RoundedBody, with_cheeger: bool = False, size: int = 480) -> str:
    """Standalone SVG document of ``b``, optionally with its Cheeger set."""
    x0, y0, x1, y1 = _bbox(b)
    w, h = x1 - x0, y1 - y0
    pad = _PAD * max(w, h)
    vb = (x0 - pad, -(y1 + pad), w + 2 * pad, h + 2 * pad)
    stroke = max(w, h) / 200.0
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{" ".join(_fmt(c) for c in vb)}">',
    ]
    if with_cheeger:
        res = cheeger(b)
        C = res.cheeger_set
        whole = res.t_star <= b.radius
        lines.append(f'  <path id="cheeger-set" d="{body_path(C)}" fill="#cfe3f7" stroke="#2f6fb0" '
                     f'stroke-width="{_fmt(stroke)}"/>')
    lines.append(f'  <path id="body" d="{body_path(b)}" fill="none" stroke="#000000" '
                 f'stroke-width="{_fmt(stroke)}"/>')
    if with_cheeger:
        contact = _contact_path(C, whole)
        if contact:
            lines.append(f'  <path id="contact" d="{contact}" fill="none" stroke="#d62728" '
                         f'stroke-width="{_fmt(3 * stroke)}" stroke-linecap="round"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
