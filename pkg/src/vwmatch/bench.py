"""Benchmark runs reported in the layout of the weight, cardinality and
relative-performance tables, with the exact solver as the baseline."""

from __future__ import annotations

import csv
import math
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, TextIO

from .approx import greedy_half_mvm, two_thirds_mvm
from .exact import match_d
from .graph import BipartiteGraph, VertexWeights
from .matching import Matching, matching_weight
from .oracle import MAX_ORACLE_EDGES, brute_force_mvm

ALGORITHMS: dict[str, Callable[[BipartiteGraph, VertexWeights], Matching]] = {
    "exact": match_d,
    "two-thirds": two_thirds_mvm,
    "half": greedy_half_mvm,
}

CSV_COLUMNS = ["graph", "algorithm", "n_s", "n_t", "m", "weight", "cardinality", "time_s",
               "weight_ratio", "card_ratio", "rel_perf"]
TIMING_COLUMNS = ("time_s", "rel_perf")
FOOTER_LABEL = "Geom. Mean"


def geometric_mean(values: Sequence[float]) -> float:
    if not values:
        raise ValueError("geometric mean of an empty list")
    if any(v <= 0 for v in values):
        raise ValueError("geometric mean needs positive values")
    return math.exp(math.fsum(math.log(v) for v in values) / len(values))


@dataclass
class BenchRow:
    graph: str
    algorithm: str
    n_s: int
    n_t: int
    m: int
    weight: int
    cardinality: int
    time_s: float
    weight_ratio: float
    card_ratio: float
    rel_perf: float
    oracle_weight: Optional[int] = None


def timed_solve(fn, g: BipartiteGraph, w: VertexWeights, reps: int = 3):
    """Run ``fn`` ``reps`` times; return the last matching and the median time."""
    times, result = [], None
    for _ in range(max(1, reps)):
        t0 = time.perf_counter()
        result = fn(g, w)
        times.append(time.perf_counter() - t0)
    return result, statistics.median(times)


def _ratio(x: float, base: float) -> float:
    if base == 0:
        return 1.0
    return x / base


def bench_graph(name: str, g: BipartiteGraph, w: VertexWeights, algos: Sequence[str],
                reps: int = 3, oracle: bool = False) -> list[BenchRow]:
    """Rows for one graph. The exact solver always runs since it is the baseline."""
    for a in algos:
        if a not in ALGORITHMS:
            raise KeyError(a)
    results = {}
    for a in ["exact"] + [a for a in algos if a != "exact"]:
        results[a] = timed_solve(ALGORITHMS[a], g, w, reps)
    base_m, base_t = results["exact"]
    base_w, base_c = matching_weight(base_m, w), base_m.cardinality
    oracle_w = None
    if oracle and g.m <= MAX_ORACLE_EDGES:
        oracle_w = brute_force_mvm(g, w).best_weight
    rows = []
    for a in algos:
        mt, t = results[a]
        wt = matching_weight(mt, w)
        rows.append(BenchRow(name, a, g.n_s, g.n_t, g.m, wt, mt.cardinality, t,
                             _ratio(wt, base_w), _ratio(mt.cardinality, base_c),
                             base_t / max(t, 1e-12), oracle_w))
    return rows


def footer_rows(rows: Sequence[BenchRow], algos: Sequence[str]) -> list[dict]:
    out = []
    for a in algos:
        sel = [r for r in rows if r.algorithm == a]
        if not sel:
            continue
        out.append({
            "graph": FOOTER_LABEL,
            "algorithm": a,
            "weight_ratio": f"{geometric_mean([r.weight_ratio for r in sel]):.3f}",
            "card_ratio": f"{geometric_mean([r.card_ratio for r in sel]):.3f}",
            "rel_perf": f"{geometric_mean([r.rel_perf for r in sel]):.3f}",
        })
    return out


def write_report(rows: Sequence[BenchRow], algos: Sequence[str], stream: TextIO,
                 oracle: bool = False) -> None:
    cols = CSV_COLUMNS + (["oracle_weight"] if oracle else [])
    wr = csv.DictWriter(stream, fieldnames=cols, restval="", lineterminator="\n")
    wr.writeheader()
    for r in rows:
        rec = {
            "graph": r.graph, "algorithm": r.algorithm, "n_s": r.n_s, "n_t": r.n_t, "m": r.m,
            "weight": r.weight, "cardinality": r.cardinality, "time_s": f"{r.time_s:.6g}",
            "weight_ratio": f"{r.weight_ratio:.6f}", "card_ratio": f"{r.card_ratio:.6f}",
            "rel_perf": f"{r.rel_perf:.6g}",
        }
        if oracle:
            rec["oracle_weight"] = "" if r.oracle_weight is None else r.oracle_weight
        wr.writerow(rec)
    for rec in footer_rows(rows, algos):
        wr.writerow(rec)
