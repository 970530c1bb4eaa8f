"""Command-line front end.

Exit codes: 0 success, 1 verification failure or counterexample, 2 usage,
parse or per-line input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from collections.abc import Iterator

from . import __version__
from .alpha import independence_number
from .classify import classify_graph
from .families import parse_family
from .graph import Graph, components, degree_histogram, girth, graph6_decode, graph6_encode, is_triangle_free
from .lemmas import verify_lemmas
from .search import GenConstraints, TriangleFreeGenerator, default_workers, e_number, verify_t_nonnegative, verify_theorem3
from .stability import minimal_destabilizers

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "infinity"
    return x


def _read_lines(args) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for every non-blank graph6 input line."""
    if args.graphs:
        for i, text in enumerate(args.graphs, 1):
            yield i, text
        return
    source = args.input or "-"
    fh = sys.stdin if source == "-" else open(source, encoding="ascii")
    try:
        for i, line in enumerate(fh, 1):
            line = line.strip()
            if line:
                yield i, line
    finally:
        if fh is not sys.stdin:
            fh.close()


class _Out:
    """Writes records as JSON lines, graph6 lines or an aligned table."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self.rows = []

    def record(self, rec: dict, graph: Graph | None = None) -> None:
        if self.fmt == "graph6":
            if graph is not None:
                print(graph6_encode(graph), file=self.stream)
            elif "error" in rec:
                print(json.dumps(rec), file=sys.stderr)
        elif self.fmt == "table":
            self.rows.append(rec)
        else:
            print(json.dumps(rec), file=self.stream)

    def close(self) -> None:
        if self.fmt != "table" or not self.rows:
            return
        keys = []
        for r in self.rows:
            for k in r:
                if k not in keys:
                    keys.append(k)
        cells = [[_cell(r.get(k, "")) for k in keys] for r in self.rows]
        widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
        print("  ".join(k.ljust(w) for k, w in zip(keys, widths)), file=self.stream)
        for c in cells:
            print("  ".join(v.ljust(w) for v, w in zip(c, widths)), file=self.stream)


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def analyze_record(g: Graph) -> dict:
    res = independence_number(g)
    a = res.alpha
    return {
        "n": g.n,
        "e": g.e,
        "alpha": a,
        "t": g.e - 6 * g.n + 13 * a,
        "q": g.e - 5 * g.n + 10 * a,
        "girth": _jsonable(girth(g)),
        "delta": min(g.degrees()) if g.n else None,
        "degree_histogram": {str(k): v for k, v in degree_histogram(g).items()},
        "triangle_free": is_triangle_free(g),
        "components": len(components(g)),
    }


def cmd_construct(args) -> int:
    out = _Out(args.format)
    status = EXIT_OK
    for spec in args.specs:
        try:
            g = parse_family(spec)
        except ValueError as exc:
            print(f"error: {spec}: {exc}", file=sys.stderr)
            status = EXIT_USAGE
            continue
        if args.format == "graph6":
            out.record({}, g)
        else:
            out.record({"family": spec, "graph6": graph6_encode(g), "n": g.n, "e": g.e})
    out.close()
    return status


def _per_graph(args, fn) -> int:
    out = _Out(args.format)
    status = EXIT_OK
    for lineno, text in _read_lines(args):
        try:
            g = graph6_decode(text)
            rec, graph, ok = fn(g)
        except ValueError as exc:
            out.record({"line": lineno, "input": text, "error": str(exc)})
            status = EXIT_USAGE
            continue
        rec = {"line": lineno, "graph6": text, **rec}
        out.record(rec, graph)
        if not ok and status == EXIT_OK:
            status = EXIT_FAIL
    out.close()
    return status


def cmd_analyze(args) -> int:
    return _per_graph(args, lambda g: (analyze_record(g), g, True))


def cmd_classify(args) -> int:
    def one(g):
        rep = classify_graph(g)
        return rep.to_json(), g, rep.theorem_consistent

    return _per_graph(args, one)


def cmd_destabilizers(args) -> int:
    if not 1 <= args.max_size <= 5:
        print("error: --max-size must be between 1 and 5", file=sys.stderr)
        return EXIT_USAGE

    def one(g):
        cat = minimal_destabilizers(g, args.max_size)
        d = cat.to_json()
        d["count"] = len(cat.sets)
        return d, g, True

    return _per_graph(args, one)


def cmd_enumber(args) -> int:
    try:
        res = e_number(args.j, args.n, workers=args.workers)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "graph6":
        for code in res.realisers:
            print(code)
    else:
        out = _Out(args.format)
        out.record(res.to_json())
        out.close()
    return EXIT_OK


def cmd_generate(args) -> int:
    c = GenConstraints(
        args.n,
        alpha_less_than=args.alpha_less_than,
        max_edges=args.max_edges,
        min_degree=args.min_degree,
        connected_only=args.connected,
    )
    try:
        TriangleFreeGenerator(c, lambda g, a: print(graph6_encode(g))).run()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        if args.check == "t-nonneg":
            rep = verify_t_nonnegative(args.n_max, workers=args.workers)
        elif args.check == "theorem3":
            rep = verify_theorem3(args.n_max, workers=args.workers)
        else:
            rep = verify_lemmas(args.k_max)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    d = {"check": args.check, **rep.to_json()}
    print(json.dumps(d, indent=None if args.format == "json" else 2))
    return EXIT_OK if rep.passed else EXIT_FAIL


def _add_input(p):
    p.add_argument("graphs", nargs="*", help="graph6 strings (default: read --input)")
    p.add_argument("-i", "--input", help="file of graph6 lines, or - for standard input")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "graph6", "table"), help="default: graph6 for construct, json otherwise")
    common.add_argument("--workers", type=int, default=default_workers(), help="worker processes (env STITCHLAB_WORKERS)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="stitchlab", description="Edge-critical triangle-free graph laboratory.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build family members")
    p.add_argument("specs", nargs="+", help="chain:k | bicycle:k | w13 | loopchain:l:m:{star|path|cycle} | cycle:i | path:i")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", parents=[common], help="invariants of graph6 inputs")
    _add_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", parents=[common], help="classification reports")
    _add_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("destabilizers", parents=[common], help="minimal destabilizer catalogs")
    _add_input(p)
    p.add_argument("--max-size", type=int, default=4)
    p.set_defaults(func=cmd_destabilizers)

    p = sub.add_parser("enumber", parents=[common], help="e-number e(3, j; n) with realisers")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumber)

    p = sub.add_parser("generate", parents=[common], help="stream triangle-free graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha-less-than", type=int)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--min-degree", type=int)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", parents=[common], help="exhaustive verification suites")
    p.add_argument("check", choices=("t-nonneg", "theorem3", "lemmas"))
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--k-max", type=int, default=6)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.workers < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if args.format is None:
        args.format = "graph6" if args.command == "construct" else "json"
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
