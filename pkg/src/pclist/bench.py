"""Benchmark sweeps and their CSV rows."""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from functools import lru_cache

from .graph_core import GenSpec, generate, path_graph
from .ledger import CATEGORIES
from .runner import run

SUITES = ("density-sweep", "size-sweep")
DENSITIES = (0.5, 0.7, 0.9, 0.99)
SIZES = (128, 256, 512, 1024)


@dataclass
class BenchRow:
    instance_id: str
    model: str
    n: int
    m: int
    m_tilde: int
    algorithm: str
    vertex_charge: int
    pclist_element_charge: int
    queue_op: int
    ledger_misc: int
    ledger_total: int
    phases: int
    wall_time_ns: int
    result: str
    seed: int
    baseline_ledger_total: int
    baseline_wall_time_ns: int
    baseline_result: str


HEADER = [f.name for f in fields(BenchRow)]


def instances(suite: str, n: int = 256, sizes=SIZES, seed: int = 1) -> list[tuple[str, GenSpec]]:
    """(instance id, spec) pairs for a suite; bipartite twins are derived per algorithm."""
    if suite == "density-sweep":
        return [(f"gnp-n{n}-p{p}", GenSpec("gnp", n=n, p=p, seed=seed + i))
                for i, p in enumerate(DENSITIES)]
    if suite == "size-sweep":
        return [(f"cos-n{k}", GenSpec("complement_of_sparse", n=k, avg_degree=4.0, seed=seed + i))
                for i, k in enumerate(sizes)]
    raise ValueError(f"unknown suite {suite!r}")


def _bipartite_twin(spec: GenSpec) -> GenSpec:
    """Bipartite analogue of a sweep instance, used for Hopcroft-Karp."""
    half = spec.n // 2
    if spec.model == "gnp":
        return GenSpec("bipartite_gnp", a=half, b=spec.n - half, p=spec.p, seed=spec.seed)
    return GenSpec("bipartite_complement_matching", k=max(half, 1), seed=spec.seed)


@lru_cache(maxsize=None)
def _warm() -> None:
    # compile or load the jitted kernels so wall times exclude compilation
    g = path_graph(3)
    for algo in ("bfs", "dfs", "components"):
        run(g, algo)
        run(g, algo, plain=True)


def run_one(job: tuple[str, GenSpec, str]) -> BenchRow:
    iid, spec, algo = job
    if algo == "hk":
        spec = _bipartite_twin(spec)
        iid += "-bip"
    g = generate(spec)
    _warm()
    out = run(g, algo)
    base = run(g, algo, plain=True)
    counts = out.ledger.counts
    return BenchRow(
        instance_id=iid, model=spec.model, n=g.n, m=g.m, m_tilde=out.m_tilde,
        algorithm=algo, **{c: counts[c] for c in CATEGORIES},
        ledger_total=out.ledger.total(), phases=out.phases,
        wall_time_ns=out.wall_time_ns, result=out.summary, seed=spec.seed,
        baseline_ledger_total=base.ledger.total(),
        baseline_wall_time_ns=base.wall_time_ns, baseline_result=base.summary,
    )


def run_suite(suite: str, algos, n: int = 256, sizes=SIZES, seed: int = 1,
              jobs: int = 1) -> list[BenchRow]:
    work = [(iid, spec, algo) for iid, spec in instances(suite, n, sizes, seed) for algo in algos]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map keeps submission order, so rows stay deterministic
            return list(pool.map(run_one, work))
    return [run_one(w) for w in work]


def write_rows(rows: list[BenchRow], fh) -> None:
    w = csv.DictWriter(fh, fieldnames=HEADER, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow(asdict(row))


def read_rows(path) -> list[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))
