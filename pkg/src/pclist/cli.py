"""Command line entry point: ``pclist gen|run|bench``.

Exit codes: 0 success, 1 verification mismatch, 2 usage, parse or output errors.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .bench import SIZES, SUITES, run_suite, write_rows
from .edgelist import ParseError, read_edgelist, read_vertex_set, serialize_edgelist
from .graph_core import MODELS, GenSpec, ParameterError, generate
from .pclist_core import ModeError
from .runner import ALGOS, run, verify


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pclist", description="Algorithms on pc-list graph representations.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="write a generated graph as an edge list")
    g.add_argument("--model", required=True, choices=MODELS)
    g.add_argument("--n", type=int, default=0)
    g.add_argument("--p", type=float)
    g.add_argument("--avg-degree", type=float)
    g.add_argument("--fraction", type=float, help="dense fraction for the unbalanced model")
    g.add_argument("--k", type=int)
    g.add_argument("--a", type=int)
    g.add_argument("--b", type=int)
    g.add_argument("--directed", action="store_true")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("-o", "--out", help="output file (default stdout)")

    r = sub.add_parser("run", help="run one algorithm on an edge-list file")
    r.add_argument("--algo", required=True, choices=ALGOS)
    r.add_argument("--input", required=True)
    r.add_argument("--source", type=int, default=0)
    r.add_argument("--repr", dest="repr_", choices=("out", "seidel"), default="out")
    r.add_argument("--switch-set", help="Seidel switch set, one vertex id per line")
    r.add_argument("--baseline", action="store_true", help="also run the plain adjacency list")
    r.add_argument("--verify", action="store_true", help="compare against an oracle")
    r.add_argument("--backend", choices=("numba", "python"))

    b = sub.add_parser("bench", help="run a benchmark sweep and write CSV")
    b.add_argument("--suite", required=True, choices=SUITES)
    b.add_argument("--algos", required=True, help="comma-separated list from " + ",".join(ALGOS))
    b.add_argument("--out", required=True)
    b.add_argument("--n", type=int, default=256, help="instance size for density-sweep")
    b.add_argument("--sizes", default=",".join(map(str, SIZES)), help="sizes for size-sweep")
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--jobs", type=int, default=1)
    return ap


def _gen(args, ap) -> int:
    a, b = args.a, args.b
    if args.model == "bipartite_gnp" and a is None and b is None:
        a = args.n // 2
        b = args.n - a
    k = args.k
    if args.model == "bipartite_complement_matching" and k is None:
        k = args.n // 2
    spec = GenSpec(args.model, n=args.n, seed=args.seed, p=args.p, avg_degree=args.avg_degree,
                   dense_fraction=args.fraction, a=a, b=b, k=k, directed=args.directed)
    try:
        g = generate(spec)
    except ParameterError as exc:
        ap.error(str(exc))
    text = serialize_edgelist(g)
    if args.out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"pclist: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return 2
    return 0


def _ledger_line(prefix: str, out, g) -> str:
    parts = " ".join(f"{k}={v}" for k, v in out.ledger.counts.items())
    return f"{prefix}ledger total={out.ledger.total()} {parts}; n={g.n} m={g.m} m_tilde={out.m_tilde}"


def _run(args) -> int:
    try:
        g = read_edgelist(args.input)
        switch_set = read_vertex_set(args.switch_set, g.n) if args.switch_set else None
        out = run(g, args.algo, args.repr_, switch_set, args.source, backend=args.backend)
        base = run(g, args.algo, source=args.source, plain=True, backend=args.backend) if args.baseline else None
    except (ParseError, ModeError, ValueError) as exc:
        print(f"pclist: {exc}", file=sys.stderr)
        return 2
    problems = []
    if base is not None and args.algo not in ("hk", "matching", "dfs") and not _same(out.value, base.value):
        problems.append("pc-list and baseline results differ")
    if args.verify:
        problems += verify(g, out, args.source)
        if base is not None:
            problems += [f"baseline: {p}" for p in verify(g, base, args.source)]
    line = out.text + ("; verified" if args.verify and not problems else "")
    print(line)
    print(_ledger_line("", out, g))
    if base is not None:
        print("baseline " + base.text)
        print(_ledger_line("baseline ", base, g))
    if problems:
        print("mismatch:", file=sys.stderr)
        for p in problems:
            print("  " + p, file=sys.stderr)
        return 1
    return 0


def _same(a, b) -> bool:
    return bool(np.array_equal(np.asarray(a), np.asarray(b)))


def _bench(args, ap) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    if not algos:
        ap.error("--algos needs at least one algorithm")
    unknown = [a for a in algos if a not in ALGOS]
    if unknown:
        ap.error(f"unknown algorithms: {', '.join(unknown)}")
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        ap.error("--sizes must be comma-separated integers")
    try:
        fh = open(args.out, "w", newline="")
    except OSError as exc:
        print(f"pclist: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return 2
    with fh:
        rows = run_suite(args.suite, algos, n=args.n, sizes=sizes, seed=args.seed, jobs=args.jobs)
        write_rows(rows, fh)
    for row in rows:
        print(f"{row.instance_id} {row.algorithm}: total={row.ledger_total} "
              f"baseline={row.baseline_ledger_total} result={row.result}")
    return 0


def main(argv=None) -> int:
    ap = _parser()
    args = ap.parse_args(argv)
    if args.cmd == "gen":
        return _gen(args, ap)
    if args.cmd == "run":
        return _run(args)
    return _bench(args, ap)


if __name__ == "__main__":
    sys.exit(main())
