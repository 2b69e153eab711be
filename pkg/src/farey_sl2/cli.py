"""Command-line front end.

Exit status: 0 for success or a true predicate, 1 for a false predicate,
2 for bad input.
"""

from __future__ import annotations

import argparse
import contextlib
import itertools
import json
import os
import random
import re
import sys
from pathlib import Path

from .core import FareyError, parse_vertex
from .friezes import (
    TriangulatedPolygon,
    closed_path_from_cycle,
    dual_path,
    frieze_from_closed_path,
    is_Cn0,
    is_positive_frieze,
    path_limits,
    polygon_from_path,
    quiddity,
    quiddity_realizable,
    render_standard_form,
    triangle_counts,
)
from .paths import (
    FareyPath,
    ItinerarySpec,
    is_clockwise,
    is_clockwise_simple_closed,
    is_cycle_sequence,
    itinerary_of,
    lift_path,
    path_from_itinerary,
)
from .render import render_svg
from .samples import random_pair
from .tilings import (
    PathPair,
    TilingWindow,
    common_map,
    is_sl2,
    is_tame,
    phi,
    psi,
    render_matrix,
    to_tsv,
)


class InputError(FareyError):
    pass


_RANGE = re.compile(r"^\s*(-?\d+)\s*:\s*(-?\d+)\s*$")


def parse_range(text: str) -> tuple[int, int]:
    m = _RANGE.match(text)
    if not m:
        raise InputError(f"bad index range {text!r}, expected i0:i1")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise InputError(f"index range {text!r} is not well ordered")
    return lo, hi


def parse_window(text: str) -> tuple[tuple[int, int], tuple[int, int]]:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"bad window {text!r}, expected i0:i1,j0:j1")
    return parse_range(parts[0]), parse_range(parts[1])


def parse_word(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").strip("[]").split(",") if x]
    except ValueError:
        raise InputError(f"bad integer word {text!r}") from None


def load_json(text: str):
    """Inline JSON, or the path of a file containing JSON."""
    s = text.strip()
    if not s.startswith(("{", "[")):
        p = Path(s)
        if not p.is_file():
            raise InputError(f"{text!r} is neither JSON nor a readable file")
        s = p.read_text()
    try:
        return json.loads(s)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def path_from_json(data, window: tuple[int, int] | None) -> FareyPath:
    """A path from {"vertices": [...]} or an itinerary object with an optional seed."""
    if not isinstance(data, dict):
        raise InputError("path JSON must be an object")
    if "vertices" in data:
        verts = [parse_vertex(str(v)) for v in data["vertices"]]
        start = int(data.get("start", 0))
        path = lift_path(verts, start=start)
        if data.get("closed") and path.kind != "closed":
            raise InputError("path flagged closed does not end where it starts")
        if window is None or path.kind != "closed":
            return path
        cyc = verts[:-1]
        lo, hi = window
        return lift_path([cyc[(i - start) % len(cyc)] for i in range(lo, hi + 1)], start=lo, kind="window")
    spec = ItinerarySpec.from_json(data)
    if window is None:
        raise InputError("an itinerary needs a window")
    seed = None
    if "seed" in data:
        seed = tuple(parse_vertex(str(v)) for v in data["seed"])
        if len(seed) != 2:
            raise InputError("seed must list the vertices at indices 0 and 1")
    return path_from_itinerary(spec, window, seed=seed)


def _color_enabled(stream) -> bool:
    return os.environ.get("FAREY_SL2_COLOR", "1") != "0" and hasattr(stream, "isatty") and stream.isatty()


def _dim_zeros(text: str) -> str:
    return re.sub(r"(?<![\d/-])0(?![\d/])", "\x1b[2m0\x1b[0m", text)


def _emit(text: str, out):
    out.write(_dim_zeros(text) if _color_enabled(out) else text)


def _window_out(w: TilingWindow, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(w.to_json()) + "\n")
    elif fmt == "tsv":
        _emit(to_tsv(w), out)
    elif fmt == "matrix":
        _emit(render_matrix(w), out)
    else:
        raise InputError(f"format {fmt!r} is not available here")


def cmd_tile(args, out) -> int:
    if not args.window:
        raise InputError("tile needs --window i0:i1,j0:j1")
    i_range, j_range = parse_window(args.window)
    gamma = path_from_json(load_json(args.gamma), i_range)
    delta = path_from_json(load_json(args.delta), j_range)
    w = phi(PathPair(gamma, delta), i_range, j_range, canonical=not args.raw_sign)
    _window_out(w, args.format, out)
    return 0


def _frieze_path(args) -> FareyPath:
    given = [x for x in (args.quiddity, args.path, args.polygon) if x]
    if len(given) != 1:
        raise InputError("give exactly one of --quiddity, --path, --polygon")
    if args.quiddity:
        return closed_path_from_cycle(parse_word(args.quiddity))
    if args.path:
        path = path_from_json(load_json(args.path), None)
        if path.kind != "closed":
            raise InputError("frieze needs a closed path")
        return path
    poly = polygon_from_json(load_json(args.polygon))
    return closed_path_from_cycle(triangle_counts(poly))


def polygon_from_json(data) -> TriangulatedPolygon:
    try:
        return TriangulatedPolygon.from_diagonals(int(data["n"]), data.get("diagonals", []))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed polygon JSON: {exc}") from None


def cmd_frieze(args, out) -> int:
    path = _frieze_path(args)
    n = args.order or path.length
    if args.window:
        i_range, j_range = parse_window(args.window)
    else:
        i_range = j_range = (-n, 2 * n)
    fr = frieze_from_closed_path(path, n, i_range, j_range)
    fmt = args.format or "standard-form"
    if fmt == "standard-form":
        _emit(render_standard_form(fr.window, n, 0), out)
    elif fmt == "json":
        data = fr.window.to_json()
        data.update(order=n, sign_period=fr.sign_period, positive=is_positive_frieze(fr))
        out.write(json.dumps(data) + "\n")
    else:
        _window_out(fr.window, fmt, out)
    return 0


def _vertices_path(text: str) -> FareyPath:
    if text.strip().startswith("{"):
        return path_from_json(load_json(text), None)
    return lift_path([parse_vertex(v) for v in text.split(",")])


def cmd_itinerary(args, out) -> int:
    path = _vertices_path(args.vertices)
    word = itinerary_of(path)
    if args.format == "json":
        out.write(json.dumps({"closed": path.kind == "closed", "itinerary": word}) + "\n")
    else:
        out.write(",".join(str(e) for e in word) + "\n")
    return 0


def cmd_quiddity(args, out) -> int:
    w = TilingWindow.from_json(load_json(args.window_json))
    word = quiddity(w)
    if args.format == "json":
        out.write(json.dumps(word) + "\n")
    else:
        out.write(",".join(str(e) for e in word) + "\n")
    return 0


def cmd_check(args, out) -> int:
    kind, arg = args.predicate, args.arg
    if kind in ("tame", "sl2"):
        w = TilingWindow.from_json(load_json(arg))
        ok = is_tame(w) if kind == "tame" else is_sl2(w)
    elif kind == "positive":
        if arg.strip().startswith("{") or Path(arg).is_file():
            w = TilingWindow.from_json(load_json(arg))
            ok = all(x > 0 for r in w.rows for x in r)
        else:
            path = closed_path_from_cycle(parse_word(arg))
            ok = is_positive_frieze(frieze_from_closed_path(path))
    elif kind == "cycle-seq":
        ok = is_cycle_sequence(parse_word(arg))
    elif kind == "acyclic":
        ok = quiddity_realizable(parse_word(arg))
    elif kind == "clockwise":
        path = _vertices_path(arg)
        ok = is_clockwise_simple_closed(path) if path.kind == "closed" else is_clockwise(path)
    else:
        path = _vertices_path(arg)
        if path.kind != "closed":
            raise InputError("cn0 needs a closed path")
        ok = is_Cn0(path)
    out.write(("true" if ok else "false") + "\n")
    return 0 if ok else 1


def cmd_limits(args, out) -> int:
    data = load_json(args.itinerary)
    spec = ItinerarySpec.from_json(data)
    back, fwd = path_limits(spec)
    if "seed" in data:
        lo = spec.origin - 2
        path = path_from_json(data, (min(lo, 0), max(spec.origin + len(spec.core) + 2, 1)))
        back, fwd = path_limits(spec, path)
    out.write(json.dumps({"backward": back.to_json(), "forward": fwd.to_json()}) + "\n")
    return 0


def cmd_dual(args, out) -> int:
    gamma = path_from_json(load_json(args.itinerary), parse_range(args.window))
    d = dual_path(gamma)
    if args.format == "json":
        out.write(json.dumps({"vertices": [str(v) for v in d.vertices]}) + "\n")
    else:
        out.write(",".join(str(v) for v in d.vertices) + "\n")
    return 0


def cmd_render(args, out) -> int:
    if args.polygon:
        poly = polygon_from_json(load_json(args.polygon))
        path = closed_path_from_cycle(triangle_counts(poly))
        poly = polygon_from_path(path)
        vs = poly.vertices
        edges = sorted({(vs[a], vs[b]) for t in poly.triangles for a, b in itertools.combinations(t, 2)}, key=str)
        svg = render_svg(path.vertices, edges, title="triangulated polygon")
    elif args.vertices:
        svg = render_svg(_vertices_path(args.vertices).vertices, title="path")
    elif args.itinerary:
        if not args.window:
            raise InputError("render from an itinerary needs --window i0:i1")
        path = path_from_json(load_json(args.itinerary), parse_range(args.window))
        svg = render_svg(path.vertices, title="path")
    else:
        raise InputError("render needs --vertices, --polygon or --itinerary")
    if args.output:
        Path(args.output).write_text(svg)
    else:
        out.write(svg)
    return 0


def roundtrip_once(pair: PathPair, i_range, j_range) -> str | None:
    """Run phi, psi and phi again; describe the first mismatch, if any."""
    w = phi(pair, i_range, j_range)
    if not is_sl2(w) or not is_tame(w):
        return "phi output is not a tame SL2 window"
    back = psi(w)
    if common_map(pair, back) is None:
        return "psi(phi(pair)) is not the pair moved by one SL2 map"
    w2 = phi(back, i_range, j_range)
    if w2 != w and w2 != -w:
        return "phi(psi(window)) differs from the window"
    return None


def cmd_roundtrip(args, out) -> int:
    i_range = j_range = (-4, 4)
    if args.window:
        i_range, j_range = parse_window(args.window)
    if args.gamma or args.delta:
        if not (args.gamma and args.delta):
            raise InputError("give both --gamma and --delta")
        pairs = [PathPair(path_from_json(load_json(args.gamma), i_range), path_from_json(load_json(args.delta), j_range))]
    else:
        rng = random.Random(args.seed)
        pairs = [random_pair(rng, i_range, j_range) for _ in range(args.random)]
    failures = 0
    for k, pair in enumerate(pairs):
        problem = roundtrip_once(pair, i_range, j_range)
        if problem:
            failures += 1
            out.write(f"case {k}: {problem}\n")
    out.write(f"{len(pairs) - failures}/{len(pairs)} round trips passed\n")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="farey-sl2", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("tile", help="tiling window from a pair of paths")
    p.add_argument("--gamma", required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--window")
    p.add_argument("--format", default="tsv", choices=["tsv", "json", "matrix"])
    p.add_argument("--raw-sign", action="store_true", help="skip sign normalization")
    p.set_defaults(func=cmd_tile)

    p = sub.add_parser("frieze", help="frieze of a closed path")
    p.add_argument("--quiddity")
    p.add_argument("--path")
    p.add_argument("--polygon")
    p.add_argument("--order", type=int)
    p.add_argument("--window")
    p.add_argument("--format", choices=["standard-form", "tsv", "json", "matrix"])
    p.set_defaults(func=cmd_frieze)

    p = sub.add_parser("itinerary", help="itinerary of a path")
    p.add_argument("vertices", help='comma-separated vertices, or path JSON')
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=cmd_itinerary)

    p = sub.add_parser("quiddity", help="quiddity word of a frieze window")
    p.add_argument("window_json")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=cmd_quiddity)

    p = sub.add_parser("check", help="evaluate a predicate")
    p.add_argument("predicate", choices=["tame", "sl2", "positive", "cycle-seq", "acyclic", "clockwise", "cn0"])
    p.add_argument("arg")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("limits", help="limits of a path with periodic tails")
    p.add_argument("itinerary")
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("dual", help="dual path of a clockwise path window")
    p.add_argument("itinerary")
    p.add_argument("--window", required=True)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("render", help="SVG disc picture")
    p.add_argument("--vertices")
    p.add_argument("--polygon")
    p.add_argument("--itinerary")
    p.add_argument("--window")
    p.add_argument("--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("roundtrip", help="self-test of the tiling round trip")
    p.add_argument("--random", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gamma")
    p.add_argument("--delta")
    p.add_argument("--window")
    p.set_defaults(func=cmd_roundtrip)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except (FareyError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
