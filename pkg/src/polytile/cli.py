"""Command-line interface.

Exit codes: 0 success (or "yes" for decision commands), 1 "no" or mismatch,
2 usage errors, 3 internal failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import List, Optional

from . import contraction, geometry, instances, oracle, packing, render
from .errors import BadParams, BudgetExceeded, GeometryError, PolytileError
from .geometry import Polyomino
from .squares import tile_squares

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class _Logger:
    def __init__(self, path: Optional[str]):
        self.fh = open(path, "a", encoding="utf-8") if path else None

    def log(self, **record):
        if self.fh:
            record.setdefault("ts", time.time())
            self.fh.write(json.dumps(record, sort_keys=True) + "\n")
            self.fh.flush()


def _poly_json(p: Polyomino) -> dict:
    return instances.to_json_dict(p)


def _trace_json(result: packing.PackingResult) -> dict:
    comps = []
    for tr in result.traces or []:
        graph: dict = {"vertices": tr.n2, "edges": tr.graph.edge_count}
        if tr.n2 <= 100000:
            from .oracle import rasterize
            cells = sorted(rasterize(tr.graph.region))
            gb = tr.graph.build()
            graph["vertex_list"] = [list(c) for c in cells]
            graph["edge_list"] = sorted(
                [list(u), list(v)] for u, nbrs in gb.adj.items() for v in nbrs)
        comps.append({
            "n0": tr.n0,
            "n2": tr.n2,
            "p1": _poly_json(tr.p1),
            "p2": _poly_json(tr.p2),
            "q": _poly_json(tr.q),
            "p3": _poly_json(tr.p3),
            "channels": [{"rects": [list(r) for r in ch.rects],
                          "squares": ch.squares, "shape": ch.shape}
                         for ch in tr.channels],
            "pipes": [{"rect": list(p.rect), "orientation": p.orientation,
                       "length": p.length, "width": p.width}
                      for p in tr.pipes],
            "graph": graph,
            "pipe_overlap_diagnostic": tr.pipe_overlap_diagnostic,
        })
    return {"max_dominoes": result.max_dominoes,
            "uncovered": result.uncovered, "components": comps}


def _certificate_json(p: Polyomino, result: packing.PackingResult,
                      max_explicit_area: int) -> dict:
    cert = result.certificate
    out = {
        "max_dominoes": result.max_dominoes,
        "uncovered": result.uncovered,
        "gstar_matching": [[list(a), list(b)] for a, b in cert.gstar_matching],
        "contraction_edges": [[list(a), list(b), matched]
                              for a, b, matched in cert.contraction_edges],
        "pipe_middles": [{"rect": list(r), "orientation": o}
                         for r, o in cert.middles],
        "q_region": _poly_json(cert.q_region),
        "canonical_fill": "horizontal dominoes in Q, lengthwise in middles",
    }
    if p.area <= max_explicit_area:
        dominoes = packing.explicit_dominoes(p, budget=max(p.area, 1))
        covered = {c for d in dominoes for c in d}
        uncovered = sorted(set(oracle.rasterize(p)) - covered)
        out["dominoes"] = [[list(a), list(b)] for a, b in dominoes]
        out["uncovered_cells"] = [list(c) for c in uncovered]
    return out


# ---------------------------------------------------------------------------
# subcommands


def cmd_tile_squares(args, log: _Logger) -> int:
    p = instances.load_file(args.instance)
    events: List[dict] = []
    cb = None
    if args.trace:
        def cb(ev, state):
            events.append({
                "x": ev.x, "y0": ev.y0, "y1": ev.y1, "side": ev.side,
                "state": [[iv.lo, iv.hi, iv.parity] for iv in state.items],
            })
    ok = tile_squares(p, args.k, trace=cb)
    if args.trace:
        for ev in events:
            sys.stdout.write(json.dumps(ev) + "\n")
    print("tileable" if ok else "no-tiling")
    log.log(cmd="tile-squares", k=args.k, result=ok)
    return EXIT_OK if ok else EXIT_NO


def cmd_pack(args, log: _Logger) -> int:
    p = instances.load_file(args.instance)
    result = packing.pack_dominoes(
        p, want_certificate=bool(args.certificate),
        want_trace=bool(args.trace or args.dump_graph))
    print(f"dominoes: {result.max_dominoes}")
    print(f"uncovered: {result.uncovered}")
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            json.dump(_trace_json(result), fh, indent=1)
    if args.certificate:
        with open(args.certificate, "w", encoding="utf-8") as fh:
            json.dump(_certificate_json(p, result, args.max_explicit_area),
                      fh, indent=1)
    if args.dump_graph:
        graphs = []
        for tr in result.traces:
            gb = tr.graph.build()
            graphs.append({
                "vertices": [list(c) for c in sorted(gb.left + gb.right)],
                "edges": sorted([list(u), list(v)]
                                for u, nbrs in gb.adj.items() for v in nbrs),
            })
        with open(args.dump_graph, "w", encoding="utf-8") as fh:
            json.dump(graphs, fh)
    log.log(cmd="pack", dominoes=result.max_dominoes,
            uncovered=result.uncovered)
    return EXIT_OK


def cmd_pack_simple(args, log: _Logger) -> int:
    p = instances.load_file(args.instance)
    result = contraction.pack_dominoes_simple(p, budget=args.budget)
    print(f"dominoes: {result.max_dominoes}")
    print(f"uncovered: {result.uncovered}")
    if args.trace:
        steps = []
        for comp in geometry.components(p):
            reduced, comp_steps = contraction.contract(comp)
            steps.append({
                "component": _poly_json(comp),
                "contracted": _poly_json(reduced),
                "steps": [{"axis": s.axis, "threshold": s.threshold,
                           "shift": s.shift} for s in comp_steps],
            })
        with open(args.trace, "w", encoding="utf-8") as fh:
            json.dump({"max_dominoes": result.max_dominoes,
                       "components": steps}, fh, indent=1)
    log.log(cmd="pack-simple", dominoes=result.max_dominoes)
    return EXIT_OK


def cmd_oracle(args, log: _Logger) -> int:
    p = instances.load_file(args.instance)
    if args.what == "pack":
        n = oracle.naive_domino_packing(p, budget=args.budget)
        print(f"dominoes: {n}")
        print(f"uncovered: {p.area - 2 * n}")
        log.log(cmd="oracle-pack", dominoes=n)
        return EXIT_OK
    ok = oracle.naive_square_tiling(p, args.k, budget=args.budget)
    print("tileable" if ok else "no-tiling")
    log.log(cmd="oracle-tile", k=args.k, result=ok)
    return EXIT_OK if ok else EXIT_NO


def _verify_one(task) -> dict:
    seed, bbox, hole_prob, k_max = task
    p = instances.gen_random(seed, bbox, hole_prob)
    fast = packing.pack_dominoes(p).max_dominoes
    simple = contraction.pack_dominoes_simple(p).max_dominoes
    naive = oracle.naive_domino_packing(p)
    record = {
        "seed": seed, "area": p.area, "corners": p.corner_count,
        "holes": p.hole_count, "pack": fast, "pack_simple": simple,
        "oracle": naive, "tiling_mismatch_k": None,
    }
    record["ok"] = fast == simple == naive
    for k in range(1, k_max + 1):
        if tile_squares(p, k) != oracle.naive_square_tiling(p, k):
            record["ok"] = False
            record["tiling_mismatch_k"] = k
            break
    if not record["ok"]:
        record["instance"] = instances.to_json_dict(p)
    return record


def cmd_verify(args, log: _Logger) -> int:
    tasks = [(args.seed + i, args.bbox, args.hole_prob, args.k_max)
             for i in range(args.count)]
    if args.jobs > 1:
        import multiprocessing
        with multiprocessing.Pool(args.jobs) as pool:
            records = pool.map(_verify_one, tasks)
    else:
        records = [_verify_one(t) for t in tasks]
    mismatches = [r for r in records if not r["ok"]]
    report = {
        "count": len(records),
        "mismatches": len(mismatches),
        "bad": mismatches,
        "params": {"seed": args.seed, "bbox": args.bbox,
                   "hole_prob": args.hole_prob, "k_max": args.k_max},
    }
    text = json.dumps(report, indent=1)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    for i, r in enumerate(mismatches):
        path = f"mismatch-{r['seed']}.json"
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(r["instance"], fh)
        print(f"reproducer written to {path}", file=sys.stderr)
    log.log(cmd="verify", count=len(records), mismatches=len(mismatches))
    return EXIT_OK if not mismatches else EXIT_NO


def cmd_gen(args, log: _Logger) -> int:
    fam = args.family
    if fam == "rect":
        p = instances.gen_rect(args.params[0], args.params[1])
    elif fam == "staircase":
        p = instances.gen_staircase(args.params[0])
    elif fam == "mutilated-board":
        p = instances.gen_mutilated_board(args.params[0])
    elif fam == "pipe":
        p = instances.gen_pipe(args.length, args.width,
                               _parse_rows(args.left_rows),
                               _parse_rows(args.right_rows))
    elif fam == "random":
        p = instances.gen_random(args.seed, args.bbox, args.hole_prob)
    else:  # pragma: no cover - argparse restricts choices
        raise BadParams(fam)
    text = instances.dumps(p)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    log.log(cmd="gen", family=fam)
    return EXIT_OK


def _parse_rows(text: str):
    return tuple(int(t) for t in text.split(",") if t != "")


def cmd_render(args, log: _Logger) -> int:
    p = instances.load_file(args.instance)
    dominoes = squares = uncovered = None
    if args.certificate:
        with open(args.certificate, "r", encoding="utf-8") as fh:
            cert = json.load(fh)
        if "dominoes" in cert:
            dominoes = [tuple(map(tuple, d)) for d in cert["dominoes"]]
            uncovered = [tuple(c) for c in cert.get("uncovered_cells", [])]
        elif "squares" in cert:
            squares = [tuple(s) for s in cert["squares"]]
    elif p.area <= args.max_explicit_area:
        dominoes = packing.explicit_dominoes(p, budget=max(p.area, 1))
        covered = {c for d in dominoes for c in d}
        uncovered = sorted(set(oracle.rasterize(p)) - covered)
    svg = render.render_svg(p, dominoes=dominoes, squares=squares,
                            uncovered=uncovered)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.out}")
    log.log(cmd="render", out=args.out)
    return EXIT_OK


def cmd_bench(args, log: _Logger) -> int:
    rows = []
    for size in (int(s) for s in args.sizes.split(",")):
        if args.family == "staircase":
            p = instances.gen_staircase(size)
        elif args.family == "rect":
            p = instances.gen_rect(size, max(1, size // 2))
        elif args.family == "pipe":
            p = instances.gen_pipe(size, args.width, (0,), (args.width - 1,))
        elif args.family == "random":
            p = instances.gen_random(size, args.bbox, args.hole_prob)
        else:  # pragma: no cover
            raise BadParams(args.family)
        box = p.bbox()
        span = max(box.x1 - box.x0, box.y1 - box.y0)
        t0 = time.perf_counter()
        vertices, _edges = packing.gstar_size(p)
        ms = (time.perf_counter() - t0) * 1000.0
        rows.append({"family": args.family, "n": p.corner_count,
                     "span": span, "time_ms": f"{ms:.3f}",
                     "gstar_vertices": vertices})
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf, fieldnames=["family", "n", "span", "time_ms", "gstar_vertices"])
    writer.writeheader()
    writer.writerows(rows)
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    log.log(cmd="bench", family=args.family, rows=len(rows))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polytile",
        description="Square tilings and maximum domino packings of "
                    "polyominoes in corner representation.")
    ap.add_argument("--log", metavar="FILE",
                    help="append JSON-lines command logs to FILE")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("tile-squares", help="decide k x k square tileability")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("instance")
    sp.add_argument("--trace", action="store_true",
                    help="dump the event/state sequence as JSON lines")
    sp.set_defaults(func=cmd_tile_squares)

    sp = sub.add_parser("pack", help="maximum domino packing")
    sp.add_argument("instance")
    sp.add_argument("--trace", metavar="OUT.json")
    sp.add_argument("--certificate", metavar="OUT.json")
    sp.add_argument("--dump-graph", metavar="OUT.json")
    sp.add_argument("--max-explicit-area", type=int, default=10000)
    sp.set_defaults(func=cmd_pack)

    sp = sub.add_parser("pack-simple",
                        help="maximum domino packing via contraction")
    sp.add_argument("instance")
    sp.add_argument("--trace", metavar="OUT.json")
    sp.add_argument("--budget", type=int,
                    default=contraction.DEFAULT_CELL_BUDGET)
    sp.set_defaults(func=cmd_pack_simple)

    sp = sub.add_parser("oracle", help="area-representation brute force")
    sp.add_argument("what", choices=["pack", "tile-squares"])
    sp.add_argument("instance")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--budget", type=int, default=oracle.DEFAULT_CELL_BUDGET)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify",
                        help="cross-check all solvers on a random corpus")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--bbox", type=int, default=14)
    sp.add_argument("--hole-prob", type=float, default=0.3)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--k-max", type=int, default=5)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--report", metavar="OUT.json")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="generate an instance")
    gsub = sp.add_subparsers(dest="family", required=True)
    g = gsub.add_parser("rect")
    g.add_argument("params", type=int, nargs=2, metavar=("WIDTH", "HEIGHT"))
    g.set_defaults(func=cmd_gen)
    g = gsub.add_parser("staircase")
    g.add_argument("params", type=int, nargs=1, metavar="N")
    g.set_defaults(func=cmd_gen)
    g = gsub.add_parser("mutilated-board")
    g.add_argument("params", type=int, nargs=1, metavar="SIZE")
    g.set_defaults(func=cmd_gen)
    g = gsub.add_parser("pipe")
    g.add_argument("--length", type=int, required=True)
    g.add_argument("--width", type=int, required=True)
    g.add_argument("--left-rows", default="0")
    g.add_argument("--right-rows", default="0")
    g.set_defaults(func=cmd_gen)
    g = gsub.add_parser("random")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--bbox", type=int, default=14)
    g.add_argument("--hole-prob", type=float, default=0.3)
    g.set_defaults(func=cmd_gen)
    for g in gsub.choices.values():
        g.add_argument("--out", metavar="FILE")

    sp = sub.add_parser("render", help="render an instance (and packing) to SVG")
    sp.add_argument("instance")
    sp.add_argument("--certificate", metavar="CERT.json")
    sp.add_argument("--out", default="out.svg")
    sp.add_argument("--max-explicit-area", type=int, default=10000)
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("bench",
                        help="size/time sweep; CSV with G* vertex counts")
    sp.add_argument("--family", required=True,
                    choices=["staircase", "rect", "pipe", "random"])
    sp.add_argument("--sizes", required=True,
                    help="comma-separated size list")
    sp.add_argument("--width", type=int, default=3, help="pipe width")
    sp.add_argument("--bbox", type=int, default=14)
    sp.add_argument("--hole-prob", type=float, default=0.3)
    sp.add_argument("--out", metavar="OUT.csv")
    sp.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    log = _Logger(getattr(args, "log", None))
    try:
        return args.func(args, log)
    except (BadParams, BudgetExceeded, GeometryError, FileNotFoundError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PolytileError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
