"""Command line interface.

JSON on stdout, deterministic byte for byte for identical inputs: sorted
keys, fixed orders, no timestamps.  Exit codes: 0 success, 2 validation
error, 3 internal invariant breach.

Vector options take comma-separated integers.  A value starting with a
minus sign must use the equals form, e.g. --x=-1,0,2.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback

from . import catalog as _catalog
from . import cusps as _cusps
from . import enumeration as _enum
from . import geometry as _geom
from . import isotropic as _iso
from . import render as _render
from .errors import ConelabError
from .lattice import read_lattice_file


def _vec(text: str):
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma-separated integers, got %r" % text
        )


def _labelled(text: str):
    label, eq, coords = text.partition("=")
    if not eq or not label:
        raise argparse.ArgumentTypeError("expected label=v1,v2,..., got %r" % text)
    return label, _vec(coords)


def _resolve_lattice(ident: str):
    if ident in _catalog.catalog_names():
        return _catalog.get_lattice(ident)
    return read_lattice_file(ident)


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _cmd_catalog(args) -> int:
    _emit({"lattices": _catalog.catalog_names()})
    return 0


def _cmd_signature(args) -> int:
    L = _resolve_lattice(args.lattice)
    pos, neg, zero = L.signature()
    _emit({"pos": pos, "neg": neg, "zero": zero})
    return 0


def _cmd_pair(args) -> int:
    L = _resolve_lattice(args.lattice)
    _emit(
        {
            "lattice": L.name,
            "x": list(args.x),
            "y": list(args.y),
            "value": L.pair(args.x, args.y),
        }
    )
    return 0


def _cmd_quad(args) -> int:
    L = _resolve_lattice(args.lattice)
    _emit({"lattice": L.name, "x": list(args.x), "value": L.quad(args.x)})
    return 0


def _cmd_walls(args) -> int:
    L = _resolve_lattice(args.lattice)
    vs = _enum.vectors_of_square(L, args.square, args.bound)
    _emit(
        {
            "lattice": L.name,
            "square": args.square,
            "bound": args.bound,
            "count": len(vs),
            "vectors": [list(v) for v in vs],
        }
    )
    return 0


def _cmd_separating(args) -> int:
    L = _resolve_lattice(args.lattice)
    walls = _enum.separating_walls(
        L, args.x, args.h, strict_on_x=not args.include_boundary
    )
    _emit(
        {
            "lattice": L.name,
            "x": list(args.x),
            "h": list(args.h),
            "count": len(walls),
            "walls": [list(w) for w in walls],
            "nef": not walls,
        }
    )
    return 0


def _cmd_isotropic(args) -> int:
    L = _resolve_lattice(args.lattice)
    if args.lines:
        lines = _iso.enumerate_isotropic_lines(L, args.bound)
        _emit(
            {
                "lattice": L.name,
                "bound": args.bound,
                "count": len(lines),
                "lines": [list(v) for v in lines],
            }
        )
    else:
        v = _iso.find_isotropic(L, args.bound)
        _emit(
            {
                "lattice": L.name,
                "bound": args.bound,
                "vector": None if v is None else list(v),
            }
        )
    return 0


def _cmd_cusps(args) -> int:
    L = _resolve_lattice(args.lattice)
    orbits = _cusps.cusp_orbits(L, args.iso_bound, args.wall_bound, args.depth)
    _emit(_cusps.orbits_json_dict(L, orbits, args.iso_bound, args.wall_bound, args.depth))
    return 0


def _cmd_nef_walk(args) -> int:
    L = _resolve_lattice(args.lattice)
    trace = _geom.nef_walk(L, args.x, args.h, greedy=not args.first_found)
    _emit(trace.to_json_dict())
    return 0


def _cmd_chambers(args) -> int:
    L = _resolve_lattice(args.lattice)
    graph = _geom.chamber_graph(L, args.h0, args.radius)
    _emit(graph.to_json_dict())
    return 0


def _cmd_render(args) -> int:
    L = _resolve_lattice(args.lattice)
    trace = None
    if args.walk_x is not None or args.walk_h is not None:
        if args.walk_x is None or args.walk_h is None:
            raise ConelabError("--walk-x and --walk-h must be given together")
        trace = _geom.nef_walk(L, args.walk_x, args.walk_h)
    scene = _render.Scene(
        lattice=L,
        walls=tuple(args.wall or ()),
        points=tuple(args.point or ()),
        cusps=tuple(args.cusp or ()),
        trace=trace,
        view=args.view,
    )
    _render.render_disk(scene, out=args.out)
    _emit(
        {
            "out": args.out,
            "walls": len(scene.walls),
            "points": len(scene.points),
            "cusps": len(scene.cusps),
            "trace_steps": None if trace is None else len(trace.steps),
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conelab",
        description="Exact wall-and-chamber geometry for signature (1,n) lattices.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed",
        type=int,
        default=0,
        help="random seed; accepted everywhere for reproducible scripts, "
        "though the shipped subcommands are fully deterministic",
    )
    withlat = argparse.ArgumentParser(add_help=False, parents=[common])
    withlat.add_argument(
        "--lattice",
        required=True,
        help="catalog name or path to a lattice JSON file",
    )

    p = sub.add_parser("catalog", parents=[common], help="list built-in lattices")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("signature", parents=[withlat], help="inertia (pos, neg, zero)")
    p.set_defaults(func=_cmd_signature)

    p = sub.add_parser("pair", parents=[withlat], help="evaluate the bilinear form")
    p.add_argument("--x", type=_vec, required=True)
    p.add_argument("--y", type=_vec, required=True)
    p.set_defaults(func=_cmd_pair)

    p = sub.add_parser("quad", parents=[withlat], help="evaluate the quadratic form")
    p.add_argument("--x", type=_vec, required=True)
    p.set_defaults(func=_cmd_quad)

    p = sub.add_parser("walls", parents=[withlat], help="wall vectors in a box")
    p.add_argument("--square", type=int, default=-2, help="negative square (default -2)")
    p.add_argument("--bound", type=int, required=True, help="sup-norm bound")
    p.set_defaults(func=_cmd_walls)

    p = sub.add_parser(
        "separating", parents=[withlat], help="walls separating x from the base h"
    )
    p.add_argument("--x", type=_vec, required=True)
    p.add_argument("--h", type=_vec, required=True)
    p.add_argument(
        "--include-boundary",
        action="store_true",
        help="also list walls through x itself",
    )
    p.set_defaults(func=_cmd_separating)

    p = sub.add_parser("isotropic", parents=[withlat], help="isotropic vectors")
    p.add_argument("--bound", type=int, required=True, help="sup-norm bound")
    p.add_argument(
        "--lines", action="store_true", help="enumerate all lines instead of the first"
    )
    p.set_defaults(func=_cmd_isotropic)

    p = sub.add_parser("cusps", parents=[withlat], help="orbits of isotropic lines")
    p.add_argument("--iso-bound", type=int, required=True)
    p.add_argument("--wall-bound", type=int, required=True)
    p.add_argument("--depth", type=int, required=True, help="reflection closure depth")
    p.set_defaults(func=_cmd_cusps)

    p = sub.add_parser(
        "nef-walk", parents=[withlat], help="reflect an isotropic class to nef"
    )
    p.add_argument("--x", type=_vec, required=True)
    p.add_argument("--h", type=_vec, required=True)
    p.add_argument(
        "--first-found",
        action="store_true",
        help="take the first separating wall instead of the greedy one",
    )
    p.set_defaults(func=_cmd_nef_walk)

    p = sub.add_parser("chambers", parents=[withlat], help="chamber graph in a ball")
    p.add_argument("--h0", type=_vec, required=True, help="interior base point")
    p.add_argument("--radius", type=float, required=True, help="hyperbolic radius")
    p.set_defaults(func=_cmd_chambers)

    p = sub.add_parser("render", parents=[withlat], help="Poincare disk SVG (rank 3)")
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--wall", type=_vec, action="append", help="wall vector; repeatable")
    p.add_argument(
        "--point", type=_labelled, action="append", help="label=v1,v2,v3; repeatable"
    )
    p.add_argument(
        "--cusp", type=_labelled, action="append", help="label=v1,v2,v3; repeatable"
    )
    p.add_argument("--walk-x", type=_vec, help="isotropic start for a drawn walk")
    p.add_argument("--walk-h", type=_vec, help="walk base")
    p.add_argument("--view", type=int, default=300, help="disk radius in pixels")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except ConelabError as exc:
        print("conelab: error: %s" % exc, file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc(file=sys.stderr)
        print("conelab: internal error", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
