"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 input or usage error.
JSON output uses sorted keys and compact separators so that reserialising
a parsed document reproduces it byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import explorer, render, verify
from .fraser import fraser_map, recover_tableau
from .hpgraph import HourglassGraph, apply_square_move, faces, validate
from .matchings import WeightedPolygonGraph
from .sieving import csp_check
from .tableaux import RectTableau, evacuation, prom_all, promotion
from .trips import fully_reduced, trip_all


class InputError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_tableau(path: str) -> RectTableau:
    return RectTableau.from_json(_load_json(path))


def _load_graph(path: str) -> HourglassGraph:
    return HourglassGraph.from_json(_load_json(path))


def _emit(args, payload: dict, graph: HourglassGraph | None = None):
    if getattr(args, "svg", None):
        if graph is None:
            raise SystemExit("--svg needs a graph result")
        with open(args.svg, "w") as fh:
            fh.write(render.to_svg(graph))
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(dumps(payload) + "\n")
    else:
        print(dumps(payload))


def cmd_tableau(args) -> int:
    T = _load_tableau(args.infile)
    if args.action == "prom":
        _emit(args, {"prom": [list(p.images) for p in prom_all(T)]})
    elif args.action == "promote":
        _emit(args, promotion(T).result.to_json())
    else:
        _emit(args, evacuation(T).to_json())
    return 0


def cmd_fraser(args) -> int:
    T = _load_tableau(args.infile)
    tri = args.triangulation
    if tri != "fan":
        tri = WeightedPolygonGraph.from_json(_load_json(tri))
    G = fraser_map(T, tri)
    _emit(args, G.to_json(), G)
    return 0


def cmd_graph(args) -> int:
    G = _load_graph(args.infile)
    if args.action == "validate":
        rep = validate(G)
        _emit(args, {"ok": rep.ok, "violations": rep.violations,
                     "properties": {k: list(v) if isinstance(v, tuple) else v
                                    for k, v in rep.properties.items()}})
        return 0 if rep.ok else 1
    if args.action == "trips":
        _emit(args, {"trip": [list(p.images) for p in trip_all(G)]})
    elif args.action == "fully-reduced":
        ok = fully_reduced(G)
        _emit(args, {"fully_reduced": ok})
        return 0 if ok else 1
    elif args.action == "faces":
        _emit(args, {"faces": [
            {"id": t, "vertices": list(f.vertex_ids), "edges": list(f.edge_ids),
             "m": f.m_value, "square": f.is_square}
            for t, f in enumerate(faces(G))]})
    else:  # render
        _emit(args, {"rendered": args.svg or "(stdout)"}, G)
        if not args.svg:
            print(render.to_svg(G))
    return 0


def cmd_move(args) -> int:
    G = _load_graph(args.infile)
    try:
        face = faces(G)[args.face]
    except IndexError:
        raise InputError(f"no face with id {args.face}") from None
    H = apply_square_move(G, face)
    _emit(args, H.to_json(), H)
    return 0


def cmd_explore(args) -> int:
    if args.action == "tamari":
        rep = explorer.tamari_check(args.r)
        _emit(args, rep)
        return 0 if rep["ok"] else 1
    G = _load_graph(args.infile)
    mc = explorer.move_class(G, args.max_class)
    keys = sorted(mc.members)
    index = {k: i for i, k in enumerate(keys)}
    _emit(args, {
        "size": len(keys),
        "members": [mc.members[k].to_json() for k in keys],
        "flip_edges": sorted(sorted(index[k] for k in e) for e in mc.edges),
    })
    return 0


def cmd_csp(args) -> int:
    rep = csp_check(args.rows, args.cols)
    _emit(args, rep)
    return 0 if rep["ok"] else 1


def cmd_verify(args) -> int:
    results = verify.run_all(max_r=args.max_r)
    for res in results:
        print(res.line())
    ok = all(res.ok for res in results)
    print(f"{'PASS' if ok else 'FAIL'}: {sum(r.ok for r in results)}/{len(results)} criteria")
    return 0 if ok else 1


def cmd_recover(args) -> int:
    G = _load_graph(args.infile)
    _emit(args, recover_tableau(G).to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hourglass",
                                 description="hourglass plabic graph toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tableau", help="promotion permutations, promotion, evacuation")
    p.add_argument("action", choices=["prom", "promote", "evac"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_tableau)

    p = sub.add_parser("fraser", help="build the web of a two-column tableau")
    p.add_argument("action", choices=["map"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--triangulation", default="fan",
                   help="'fan' or a polygon JSON file")
    p.add_argument("--out")
    p.add_argument("--svg")
    p.set_defaults(fn=cmd_fraser)

    p = sub.add_parser("graph", help="inspect a graph")
    p.add_argument("action", choices=["validate", "trips", "fully-reduced",
                                      "faces", "render"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.add_argument("--svg")
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("move", help="apply a square move")
    p.add_argument("action", choices=["square"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--face", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--svg")
    p.set_defaults(fn=cmd_move)

    p = sub.add_parser("explore", help="move classes and the Tamari instance")
    p.add_argument("action", choices=["class", "tamari"])
    p.add_argument("--in", dest="infile")
    p.add_argument("--r", type=int)
    p.add_argument("--max-class", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_explore)

    p = sub.add_parser("recover", help="tableau of a fully reduced graph")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_recover)

    p = sub.add_parser("csp", help="cyclic sieving table for a rectangle")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_csp)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("action", choices=["all"])
    p.add_argument("--max-r", type=int, default=6)
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except explorer.BoundedExplorationError as exc:
        print(f"bounded exploration: {exc} "
              f"({len(exc.partial.members)} members found)", file=sys.stderr)
        return 1
    except (InputError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
