"""Command-line front end: classify, verify, gen, check.

Exit codes are a stable contract: 0 = free (or valid certificate, or
zero harness disagreements), 1 = not free (or invalid certificate, or
disagreements found), 2 = usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from multiprocessing import Pool

from .graph import (
    FormatError,
    Graph,
    parse_edgelist,
    parse_graph6,
    serialize_edgelist,
    serialize_graph6,
)
from .recognizer import NOT_FREE, classify, classification_error
from .documents import from_document, to_document
from . import generators, harness


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("WHEELFREE_JOBS", "1")))
    except ValueError:
        return 1


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _parse_graphs(text: str, fmt: str) -> list[Graph]:
    if fmt == "edgelist":
        return [parse_edgelist(text)]
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        graphs = _parse_graphs(_read_text(args.input), args.format)
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.jobs > 1 and len(graphs) > 1:
        with Pool(args.jobs) as pool:
            results = pool.map(classify, graphs)
    else:
        results = [classify(g) for g in graphs]
    any_not_free = False
    for g, cls in zip(graphs, results):
        if cls.verdict == NOT_FREE:
            any_not_free = True
        if args.quiet:
            continue
        if args.json:
            print(json.dumps(to_document(g, cls), sort_keys=True))
        elif cls.verdict == NOT_FREE:
            w = cls.certificate
            kind = "antiwheel" if w.in_complement else "wheel"
            print(f"not-free: {kind} (hole length {len(w.hole.cycle)}, "
                  f"hub {w.hub})")
        else:
            where = " (complemented)" if cls.complemented else ""
            print(f"free: {cls.verdict}{where}")
    return 1 if any_not_free else 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        graphs = _parse_graphs(_read_text(args.graph), args.format)
        if len(graphs) != 1:
            raise FormatError("verify expects exactly one graph")
        doc = json.loads(_read_text(args.certificate))
        n, cls = from_document(doc)
    except (FormatError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    g = graphs[0]
    if n != g.n:
        print(f"invalid: certificate is for n={n}, graph has n={g.n}")
        return 1
    reason = classification_error(g, cls)
    if reason is not None:
        print(f"invalid: {reason}")
        return 1
    print("valid")
    return 0


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from exc


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.klass == "class-a":
            g = generators.gen_class_a(args.x_size, args.e_mode)
        elif args.klass == "class-b":
            h = len(args.x_sizes)
            g = generators.gen_class_b(h, args.x_sizes, args.y_sizes,
                                       args.z, args.w)
        elif args.klass == "class-c":
            g = generators.gen_class_c(args.x, args.y)
        elif args.klass == "chain":
            g = generators.gen_chain(len(args.x_sizes), args.x_sizes, args.y_sizes)
        elif args.klass == "split":
            g = generators.gen_split(args.n, args.p, args.seed)
        else:
            g = generators.gen_random(args.n, args.p, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "edgelist":
        sys.stdout.write(serialize_edgelist(g))
    else:
        print(serialize_graph6(g))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    modes = sum(x is not None for x in (args.max_n, args.sample, args.file))
    if modes != 1:
        print("error: check needs exactly one of --max-n, --sample, --file",
              file=sys.stderr)
        return 2
    try:
        if args.max_n is not None:
            report = harness.run_exhaustive(args.max_n, jobs=args.jobs)
        elif args.sample is not None:
            n, count = int(args.sample[0]), int(args.sample[1])
            p = float(args.sample[2])
            report = harness.run_sampled(n, count, p, args.seed, jobs=args.jobs)
        else:
            with open(args.file, "r", encoding="ascii") as fh:
                report = harness.run_graph6_lines(fh)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wheelfree",
        description="Decide whether a graph contains an induced wheel or "
                    "antiwheel, with verifiable certificates both ways.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cls = sub.add_parser("classify", help="classify graphs from a file or stdin")
    p_cls.add_argument("input", nargs="?", default="-",
                       help="input path, or '-' for stdin (default)")
    p_cls.add_argument("--format", choices=("graph6", "edgelist"),
                       default="graph6")
    p_cls.add_argument("--json", action="store_true",
                       help="emit one certificate document per graph")
    p_cls.add_argument("--quiet", action="store_true",
                       help="no output, exit code only")
    p_cls.add_argument("--jobs", type=int, default=_default_jobs())
    p_cls.set_defaults(func=cmd_classify)

    p_ver = sub.add_parser("verify", help="verify a certificate against a graph")
    p_ver.add_argument("graph", help="graph path ('-' for stdin)")
    p_ver.add_argument("certificate", help="certificate JSON path")
    p_ver.add_argument("--format", choices=("graph6", "edgelist"),
                       default="graph6")
    p_ver.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="generate a structural-class member")
    gen_sub = p_gen.add_subparsers(dest="klass", required=True)
    p_a = gen_sub.add_parser("class-a")
    p_a.add_argument("--x-size", type=int, required=True)
    p_a.add_argument("--e-mode", choices=("none", "c", "d"), default="none")
    p_b = gen_sub.add_parser("class-b")
    p_b.add_argument("--x-sizes", type=_csv_ints, required=True,
                     help="comma-separated staircase block sizes")
    p_b.add_argument("--y-sizes", type=_csv_ints, required=True)
    p_b.add_argument("--z", type=int, default=0)
    p_b.add_argument("--w", type=int, default=0)
    p_c = gen_sub.add_parser("class-c")
    p_c.add_argument("--x", type=int, required=True)
    p_c.add_argument("--y", type=int, required=True)
    p_ch = gen_sub.add_parser("chain")
    p_ch.add_argument("--x-sizes", type=_csv_ints, required=True)
    p_ch.add_argument("--y-sizes", type=_csv_ints, required=True)
    for name in ("split", "random"):
        p_r = gen_sub.add_parser(name)
        p_r.add_argument("--n", type=int, required=True)
        p_r.add_argument("--p", type=float, required=True)
        p_r.add_argument("--seed", type=int, default=0)
    for sp in (p_a, p_b, p_c, p_ch):
        sp.add_argument("--seed", type=int, default=0)  # accepted for uniformity
    for sp in gen_sub.choices.values():
        sp.add_argument("--format", choices=("graph6", "edgelist"),
                        default="graph6")
    p_gen.set_defaults(func=cmd_gen)

    p_chk = sub.add_parser("check", help="run the three-way agreement harness")
    p_chk.add_argument("--max-n", type=int, default=None,
                       help="exhaustive over all labeled graphs up to this size")
    p_chk.add_argument("--sample", nargs=3, metavar=("N", "COUNT", "P"),
                       default=None, help="sampled check of G(n,p)")
    p_chk.add_argument("--file", default=None,
                       help="check a file of graph6 lines")
    p_chk.add_argument("--seed", type=int, default=0)
    p_chk.add_argument("--jobs", type=int, default=_default_jobs())
    p_chk.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
