"""Command-line front end.

Subcommands: ``body``, ``cheeger``, ``scan``, ``verify``, ``repro`` and
``render``.  Bodies come from shape flags, an inline JSON spec (``--json``)
or a JSON file (``--spec``).  Exit codes: 0 success, 1 computational failure
or failed check, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import verify
from .cheeger import cheeger
from .geom import (
    ConvexPolygon,
    GeometryError,
    RoundedBody,
    chebyshev_center,
    disk,
    form_body,
    is_tangential_body,
    polygon,
    rectangle,
    regular_polygon,
    square,
    stadium,
    tau,
    triangle,
)
from .svg import render_svg

__all__ = ["SpecError", "parse_body_spec", "dumps_json", "main"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SHAPES = ("square", "rect", "regpoly", "triangle", "disk", "polygon", "stadium")
_N_PARAMS = {"square": 1, "rect": 2, "regpoly": 2, "triangle": 6, "disk": 1, "stadium": 2}
_SPEC_KEYS = {"shape", "params", "vertices", "radius"}


class SpecError(ValueError):
    """Malformed body specification; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


# --------------------------------------------------------------------------
# Body specs
# --------------------------------------------------------------------------


def _number(x, field):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise SpecError(field, f"expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise SpecError(field, "must be finite")
    return x


def parse_body_spec(spec) -> RoundedBody:
    """Build a body from ``{"shape", "params", "vertices", "radius"}``.

    ``params`` is ``[a]`` (square), ``[a, b]`` (rect), ``[n, a]`` (regpoly),
    ``[x1, y1, x2, y2, x3, y3]`` (triangle), ``[r]`` (disk) or
    ``[length, r]`` (stadium).  ``polygon`` takes ``vertices``.
    """
    if not isinstance(spec, dict):
        raise SpecError("spec", "expected a JSON object")
    extra = sorted(set(spec) - _SPEC_KEYS)
    if extra:
        raise SpecError(extra[0], "unknown field")
    shape = spec.get("shape")
    if shape not in SHAPES:
        raise SpecError("shape", f"expected one of {list(SHAPES)}, got {shape!r}")
    radius = _number(spec.get("radius", 0.0), "radius")
    if radius < 0.0:
        raise SpecError("radius", "must be >= 0")
    try:
        if shape == "polygon":
            verts = spec.get("vertices")
            if not isinstance(verts, list) or len(verts) < 3:
                raise SpecError("vertices", "expected a list of at least 3 [x, y] pairs")
            pts = []
            for i, v in enumerate(verts):
                if not isinstance(v, (list, tuple)) or len(v) != 2:
                    raise SpecError(f"vertices[{i}]", "expected an [x, y] pair")
                pts.append((_number(v[0], f"vertices[{i}][0]"), _number(v[1], f"vertices[{i}][1]")))
            try:
                return polygon(pts, radius)
            except GeometryError as e:
                raise SpecError("vertices", str(e)) from None
        params = spec.get("params")
        if not isinstance(params, list):
            raise SpecError("params", f"expected a list of {_N_PARAMS[shape]} numbers")
        if len(params) != _N_PARAMS[shape]:
            raise SpecError("params", f"{shape} takes {_N_PARAMS[shape]} numbers, got {len(params)}")
        p = [_number(x, f"params[{i}]") for i, x in enumerate(params)]
        if shape == "triangle":
            try:
                return triangle(p[0:2], p[2:4], p[4:6], radius)
            except GeometryError as e:
                raise SpecError("params", str(e)) from None
        if shape == "regpoly":
            if p[0] != int(p[0]) or p[0] < 3:
                raise SpecError("params[0]", "n must be an integer >= 3")
            if p[1] <= 0.0:
                raise SpecError("params[1]", "side must be positive")
            return regular_polygon(int(p[0]), p[1], radius)
        for i, x in enumerate(p):
            if x <= 0.0:
                raise SpecError(f"params[{i}]", "must be positive")
        if shape == "square":
            return square(p[0], radius)
        if shape == "rect":
            return rectangle(p[0], p[1], radius)
        if shape == "stadium":
            return stadium(p[0], p[1] + radius)
        return disk(p[0] + radius)
    except GeometryError as e:
        raise SpecError("spec", str(e)) from None


def _parse_vertices(text):
    """``"x,y;x,y;..."`` or a JSON list of pairs."""
    text = text.strip()
    if text.startswith("["):
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise SpecError("vertices", f"invalid JSON: {e.msg}") from None
    out = []
    for i, chunk in enumerate(filter(None, text.split(";"))):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise SpecError(f"vertices[{i}]", f"expected 'x,y', got {chunk!r}")
        try:
            out.append([float(parts[0]), float(parts[1])])
        except ValueError:
            raise SpecError(f"vertices[{i}]", f"not a number pair: {chunk!r}") from None
    return out


def _spec_from_args(args) -> dict:
    if args.json is not None:
        try:
            return json.loads(args.json)
        except json.JSONDecodeError as e:
            raise SpecError("json", f"invalid JSON at position {e.pos}: {e.msg}") from None
    if args.spec is not None:
        try:
            with open(args.spec, encoding="utf-8") as fh:
                return json.load(fh)
        except OSError as e:
            raise SpecError("spec", f"cannot read {args.spec}: {e.strerror}") from None
        except json.JSONDecodeError as e:
            raise SpecError("spec", f"invalid JSON at line {e.lineno}: {e.msg}") from None
    shape = args.shape
    if shape is None:
        raise SpecError("shape", "give --shape, --json or --spec")

    def need(name):
        v = getattr(args, name)
        if v is None:
            raise SpecError(name, f"--{name} is required for shape {shape}")
        return v

    spec = {"shape": shape, "radius": args.radius}
    if shape == "square":
        spec["params"] = [need("a")]
    elif shape == "rect":
        spec["params"] = [need("a"), need("b")]
    elif shape == "regpoly":
        spec["params"] = [need("n"), need("a")]
    elif shape == "disk":
        spec["params"] = [need("r")]
    elif shape == "stadium":
        spec["params"] = [need("a"), need("r")]
    elif shape == "triangle":
        v = _parse_vertices(need("vertices"))
        if len(v) != 3:
            raise SpecError("vertices", "a triangle takes exactly 3 vertices")
        spec["params"] = [c for p in v for c in p]
    else:
        spec["vertices"] = _parse_vertices(need("vertices"))
    return spec


# --------------------------------------------------------------------------
# Output
# --------------------------------------------------------------------------


def _encode(obj, table):
    if isinstance(obj, dict):
        return {str(k): _encode(v, table) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_encode(v, table) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return None
        key = f"\x00{len(table)}\x00"
        table[key] = _fmt17(x)
        return key
    return obj


def _fmt17(x: float) -> str:
    s = "%.17g" % x
    # keep floats recognizable as floats
    if all(c in "-0123456789" for c in s):
        s += ".0"
    return s


def dumps_json(obj) -> str:
    """Pretty JSON with sorted keys and floats at 17 significant digits."""
    table = {}
    text = json.dumps(_encode(obj, table), indent=2, sort_keys=True)
    for key, val in table.items():
        text = text.replace(json.dumps(key), val, 1)
    return text + "\n"


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _error(kind: str, message: str, field: str | None = None) -> None:
    obj = {"error": kind, "message": message}
    if field is not None:
        obj["field"] = field
    sys.stderr.write(dumps_json(obj))


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------


def _need_json(args, cmd):
    if args.format == "csv":
        raise SpecError("format", f"{cmd} only supports --format json")


def cmd_body(args, b: RoundedBody) -> int:
    _need_json(args, "body")
    k = b.kernel
    info = {
        "kernel": type(k).__name__,
        "kernel_vertices": [list(v) for v in k.vertices],
        "radius": b.radius,
        "area": b.area,
        "perimeter": b.perimeter,
        "inradius": b.inradius,
        "tangential": is_tangential_body(b),
        "tau": None if b.is_disk else tau(b),
        "form_body_vertices": None,
        "chebyshev_center": None,
    }
    if isinstance(k, ConvexPolygon):
        info["chebyshev_center"] = list(chebyshev_center(k)[0])
        if b.radius == 0.0:
            info["form_body_vertices"] = [list(v) for v in form_body(k).vertices]
    _emit(dumps_json(info), args.out)
    return EXIT_OK


def cmd_cheeger(args, b: RoundedBody) -> int:
    _need_json(args, "cheeger")
    _emit(dumps_json(cheeger(b).to_dict()), args.out)
    return EXIT_OK


CSV_HEADER = "t,area,perimeter,inradius,h,sqrtA_h"


def cmd_scan(args, b: RoundedBody) -> int:
    lo, hi = verify._default_range(b)
    t_min = lo if args.tmin is None else args.tmin
    t_max = hi if args.tmax is None else args.tmax
    n = 64 if args.grid is None else args.grid
    tol = verify.TOL_SCAN if args.tol is None else args.tol
    scan = verify.scan_scaled_cheeger(b, t_min, t_max, n, tol)
    if args.format == "json":
        obj = {"t": scan.t_values, "sqrtA_h": scan.values, "verdict": scan.verdict,
               "max_violation": scan.max_violation, **{k: v for k, v in scan.columns.items()}}
        _emit(dumps_json(obj), args.out)
    else:
        lines = [CSV_HEADER] + [",".join("%.17g" % x for x in row) for row in scan.rows()]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args, b: RoundedBody) -> int:
    _need_json(args, "verify")
    n = 64 if args.grid is None else args.grid
    tol = verify.TOL_SCAN if args.tol is None else args.tol
    reports = verify.run_suite(b, n_pts=n, tol=tol)
    _emit(dumps_json([r.to_dict() for r in reports]), args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_repro(args) -> int:
    _need_json(args, "repro")
    kw = {}
    name = args.name
    if args.eps is not None:
        if name not in ("tailed", "thin-rect"):
            raise SpecError("eps", f"--eps does not apply to {name}")
        kw["eps"] = args.eps
    if args.grid is not None:
        g = args.grid
        if name == "tailed":
            eps = kw.get("eps", 0.1)
            kw["grid"] = np.linspace(0.0, eps / 4.0, g + 1)[1:]
        elif name == "rect-ratio":
            kw["grid"] = np.linspace(0.0, 0.5, g + 2)[1:-1]
        elif name == "quad-scaling":
            kw["grid"] = np.linspace(0.0, 0.6 * verify.quadrilateral_q().inradius, g + 1)[1:]
        elif name == "bessel":
            kw["n_max"] = g
        else:
            raise SpecError("grid", f"--grid does not apply to {name}")
    if args.tol is not None and name in ("rect-ratio", "quad-scaling"):
        kw["tol"] = args.tol
    rep = verify.run_repro(name, **kw)
    _emit(dumps_json(rep.to_dict()), args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_render(args, b: RoundedBody) -> int:
    if args.format is not None:
        raise SpecError("format", "render writes SVG; --format does not apply")
    _emit(render_svg(b, with_cheeger=args.with_cheeger), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _error("usage", message)
        raise SystemExit(EXIT_USAGE)


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 2:
        raise argparse.ArgumentTypeError("must be >= 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("common options")
    g.add_argument("--tol", type=float, help="tolerance for verdicts (default 1e-9)")
    g.add_argument("--grid", type=_positive_int, help="number of grid points")
    g.add_argument("--tmin", type=float, help="scan start (default -r(1 - 1e-6))")
    g.add_argument("--tmax", type=float, help="scan end (default r)")
    g.add_argument("--out", help="write output to this path instead of stdout")
    g.add_argument("--format", choices=("csv", "json"), help="output format")

    shape = argparse.ArgumentParser(add_help=False)
    s = shape.add_argument_group("body")
    s.add_argument("--shape", choices=SHAPES)
    s.add_argument("--a", type=float, help="side length (square, rect, regpoly) or segment length (stadium)")
    s.add_argument("--b", type=float, help="second side (rect)")
    s.add_argument("--n", type=int, help="number of sides (regpoly)")
    s.add_argument("--r", type=float, help="radius (disk, stadium)")
    s.add_argument("--vertices", help="'x,y;x,y;...' or a JSON list (triangle, polygon)")
    s.add_argument("--radius", type=float, default=0.0, help="rounding radius s >= 0")
    s.add_argument("--json", help="inline JSON body spec")
    s.add_argument("--spec", help="path of a JSON body spec")

    p = _Parser(prog="cheeger-lab", description="Cheeger constants of planar rounded convex bodies.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("body", parents=[common, shape], help="geometric summary of a body")
    sub.add_parser("cheeger", parents=[common, shape], help="Cheeger constant and set (JSON)")
    sub.add_parser("scan", parents=[common, shape], help="scan sqrt|b_t| h(b_t) over parallel bodies")
    sub.add_parser("verify", parents=[common, shape], help="run the default check suite (JSON)")
    rp = sub.add_parser("repro", parents=[common], help="run a named reproduction (JSON)")
    rp.add_argument("name", choices=verify.REPRO_NAMES)
    rp.add_argument("--eps", type=float, help="tail height (tailed) or rectangle width (thin-rect)")
    rn = sub.add_parser("render", parents=[common, shape], help="SVG drawing of a body")
    rn.add_argument("--with-cheeger", action="store_true", help="also draw the Cheeger set and contact")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "repro":
            return cmd_repro(args)
        body = parse_body_spec(_spec_from_args(args))
        if args.command == "scan" and args.format is None:
            args.format = "csv"
        handler = {"body": cmd_body, "cheeger": cmd_cheeger, "scan": cmd_scan,
                   "verify": cmd_verify, "render": cmd_render}[args.command]
        return handler(args, body)
    except SpecError as e:
        _error("spec", str(e), e.field)
        return EXIT_USAGE
    except (GeometryError, ValueError, ArithmeticError) as e:
        _error(type(e).__name__, str(e))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
