"""
Command-line front end.

Exit codes: 0 success, 1 usage error, 2 cap exceeded, 3 a verified
identity failed.  All output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .kschur import CapExceeded, KEnv, TheoremViolation, ConventionViolation
from .nilhecke import CapExceeded as NilCapExceeded
from .nilhecke import equivariant_structure_constants
from .weyl import (
    NotGrassmannian,
    from_word,
    grassmannian_to_partition,
    parse_partition,
    parse_word,
    partition_text,
    partition_to_grassmannian,
)

EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_VIOLATION = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="affine-schubert")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, max_length_default=6):
        p.add_argument("--n", type=int, required=True, help="rank (2..8)")
        p.add_argument("--max-length", type=int, default=max_length_default)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=20260826)

    k = sub.add_parser("kschur", help="dual-basis expansions of one element")
    common(k)
    k.add_argument("--word", help='reduced word, e.g. "s1 s0"')
    k.add_argument("--partition", help='partition label, e.g. "(2,1)"')

    p = sub.add_parser("product", help="structure constants of a product")
    common(p)
    p.add_argument("--kind", choices=("homology", "cohomology", "equivariant"),
                   default="homology")
    p.add_argument("--u", help="first factor (word or partition)")
    p.add_argument("--v", help="second factor (word or partition)")
    p.add_argument("--w", help="target element for equivariant constants")

    v = sub.add_parser("verify", help="run identity suites")
    common(v)
    v.add_argument("--suite", choices=verify_mod.SUITES, default="all")

    t = sub.add_parser("table", help="write a structure-constant table and heatmap")
    common(t, max_length_default=4)
    t.add_argument("--kind", choices=("homology", "cohomology"), default="homology")
    t.add_argument("--out-prefix", default="structure_constants")
    return parser


def _check_config(args, parser):
    if not 2 <= args.n <= 8:
        parser.error("--n must be in 2..8")
    if not 0 <= args.max_length <= 12:
        parser.error("--max-length must be in 0..12")


def _element_from_flags(n, word, partition, parser, what="element"):
    if (word is None) == (partition is None):
        parser.error(f"give exactly one of --word/--partition for the {what}")
    if word is not None:
        w = from_word(n, parse_word(word))
    else:
        w = partition_to_grassmannian(n, parse_partition(partition))
    return w


def _emit(args, inputs, result_pairs, checks=None):
    if args.format == "json":
        doc = {
            "command": args.command,
            "n": args.n,
            "inputs": inputs,
            "result": [{"key": k, "coeff": c} for k, c in result_pairs],
        }
        if checks is not None:
            doc["checks"] = [c.as_json() for c in checks]
        print(json.dumps(doc, indent=2, sort_keys=True))


def _sorted_sym(f):
    return [
        (f"{f.basis}{partition_text(lam)}", c)
        for lam, c in sorted(f.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    ]


def cmd_kschur(args, parser) -> int:
    w = _element_from_flags(args.n, args.word, args.partition, parser)
    if not w.is_grassmannian():
        parser.error(f"{w.text()} is not Grassmannian")
    env = KEnv(args.n, max_degree=max(args.max_length, 8))
    f = env.kschur_function(w)
    a = env.noncommutative_kschur(w)
    m = env.affine_stanley(w)
    pairs = (
        _sorted_sym(f)
        + [
            (f"A{v.text()}", c)
            for v, c in sorted(a.terms.items(), key=lambda kv: kv[0].window)
        ]
        + _sorted_sym(m)
    )
    if args.format == "json":
        _emit(args, {"w": w.text(), "partition": partition_text(
            grassmannian_to_partition(w))}, pairs)
    else:
        print(f"w = {w.text()}  partition {partition_text(grassmannian_to_partition(w))}")
        print(f"h-basis: {f.text()}")
        print(f"A-basis: {a.text()}")
        print(f"dual affine Schur (m-basis): {m.text()}")
    return 0


def cmd_product(args, parser) -> int:
    n = args.n
    if args.kind == "equivariant":
        if args.w is None:
            parser.error("equivariant products need --w")
        w = from_word(n, parse_word(args.w))
        consts = equivariant_structure_constants(w, cap=args.max_length)
        pairs = [
            (f"A{u.text()}(x)A{v.text()}", c.text())
            for (u, v), c in sorted(
                consts.items(),
                key=lambda kv: (kv[0][0].length() + kv[0][1].length(),
                                kv[0][0].window, kv[0][1].window),
            )
        ]
        if args.format == "json":
            _emit(args, {"w": w.text(), "kind": args.kind}, pairs)
        else:
            print(f"coproduct structure constants of A{w.text()}:")
            for key, c in pairs:
                print(f"  {key}: {c}")
        return 0
    # u and v each accept a word ("s1 s0") or a partition ("(2,1)")
    def read(label, text):
        if text is None:
            parser.error(f"--{label} is required for {args.kind} products")
        text = text.strip()
        if text.startswith("("):
            return partition_to_grassmannian(n, parse_partition(text))
        return from_word(n, parse_word(text))

    u = read("u", args.u)
    v = read("v", args.v)
    for name, x in (("u", u), ("v", v)):
        if not x.is_grassmannian():
            parser.error(f"--{name} = {x.text()} is not Grassmannian")
    env = KEnv(n, max_degree=max(args.max_length, 8))
    if args.kind == "homology":
        table = env.kschur_product(u, v)
    else:
        table = env.affine_schur_product(u, v)
    pairs = [
        (f"{partition_text(grassmannian_to_partition(w))}", c)
        for w, c in sorted(table.items(), key=lambda kv: kv[0].window)
    ]
    negative = [p for p in pairs if p[1] < 0]
    if args.format == "json":
        _emit(args, {"u": u.text(), "v": v.text(), "kind": args.kind}, pairs)
    else:
        print(f"{args.kind} product, u={u.text()} v={v.text()}:")
        for key, c in pairs:
            print(f"  {key}: {c}")
        if negative:
            print("WARNING: negative coefficient (positivity violated)")
    return EXIT_VIOLATION if negative else 0


def cmd_verify(args, parser) -> int:
    results = verify_mod.run_suite(args.suite, args.n, args.max_length, args.seed)
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        doc = {
            "command": "verify",
            "n": args.n,
            "inputs": {"suite": args.suite, "max_length": args.max_length,
                       "seed": args.seed},
            "result": [],
            "checks": [r.as_json() for r in results],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
            if not r.passed:
                print(f"  counterexample: {json.dumps(r.counterexample, sort_keys=True)}")
    return EXIT_VIOLATION if failed else 0


def cmd_table(args, parser) -> int:
    from . import report

    rows = report.product_table(args.n, args.max_length, args.kind)
    csv_path = f"{args.out_prefix}.csv"
    png_path = f"{args.out_prefix}.png"
    report.write_csv(rows, csv_path)
    report.write_heatmap(
        rows, png_path, f"{args.kind} structure constants, n={args.n}"
    )
    if args.format == "json":
        _emit(args, {"kind": args.kind, "max_length": args.max_length,
                     "csv": csv_path, "png": png_path},
              [(f"{u}*{v}->{w}", c) for u, v, w, c in rows])
    else:
        print(f"wrote {len(rows)} rows to {csv_path}")
        print(f"wrote heatmap to {png_path}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _check_config(args, parser)
    handlers = {
        "kschur": cmd_kschur,
        "product": cmd_product,
        "verify": cmd_verify,
        "table": cmd_table,
    }
    try:
        return handlers[args.command](args, parser)
    except (CapExceeded, NilCapExceeded) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (TheoremViolation, ConventionViolation) as exc:
        print(f"identity violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (NotGrassmannian, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
