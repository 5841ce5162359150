"""Wall-clock comparison of the numba and pure-Python traversal kernels.

    python3 benchmarks/bench_backends.py [--sizes 256,512,1024] [--repeat 3]

Both backends run the same kernel source, so their ledgers must agree;
the script checks that before printing timings.
"""

import argparse
import time

from pclist.graph_core import GenSpec, generate
from pclist.ledger import WorkLedger
from pclist.pclist_core import build_out_representative
from pclist.reachability import diameter
from pclist.traversal import connected_components, pclist_bfs, pclist_dfs

TASKS = {
    "bfs": lambda p, led, be: pclist_bfs(p, 0, led, be),
    "dfs": lambda p, led, be: pclist_dfs(p, 0, led, be),
    "components": lambda p, led, be: connected_components(p, led, be),
    "diameter": lambda p, led, be: diameter(p, led, be),
}


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="256,512,1024")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    # compile outside the timed region
    warm = build_out_representative(generate(GenSpec("gnp", n=4, p=0.5, seed=0)))
    for task in TASKS.values():
        task(warm, WorkLedger(), "numba")

    print(f"{'task':<11}{'n':>6}{'m~':>8}{'python s':>12}{'numba s':>12}{'speedup':>10}")
    for n in sizes:
        g = generate(GenSpec("complement_of_sparse", n=n, avg_degree=4.0, seed=n))
        p = build_out_representative(g)
        for name, task in TASKS.items():
            if name == "diameter" and n > 512:
                continue
            ledgers = {}
            times = {}
            for be in ("python", "numba"):
                ledgers[be] = WorkLedger()
                task(p, ledgers[be], be)
                times[be] = best_time(lambda: task(p, WorkLedger(), be), args.repeat)
            assert ledgers["python"].counts == ledgers["numba"].counts, name
            print(f"{name:<11}{n:>6}{p.m_tilde:>8}{times['python']:>12.4f}"
                  f"{times['numba']:>12.4f}{times['python'] / times['numba']:>10.1f}")


if __name__ == "__main__":
    main()
