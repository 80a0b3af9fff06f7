"""Seeded weights, random bipartite graphs, and per-side degree statistics.

Randomness comes from numpy's PCG64 bit generator seeded directly with the
user seed. Weights are drawn in one call, S vertices by index followed by
T vertices by index, so a given (sizes, spec) always yields the same vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import BipartiteGraph, Side, VertexWeights, build_graph

SEED_MASK = 2**64 - 1


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed) & SEED_MASK))


@dataclass(frozen=True)
class WeightSpec:
    mode: str  # "unit", "random" or "file"
    lo: int = 1
    hi: int = 1000
    seed: int = 0
    path: Optional[str] = None

    def __post_init__(self):
        if self.mode not in ("unit", "random", "file"):
            raise ValueError(f"unknown weight mode '{self.mode}'")
        if self.mode == "random":
            if self.lo < 0 or self.lo > self.hi:
                raise ValueError(f"bad weight range [{self.lo}, {self.hi}]")
            if self.hi > 2**62:
                raise ValueError("upper weight bound too large")
        if self.mode == "file" and not self.path:
            raise ValueError("file weights need a path")

    @classmethod
    def parse(cls, text: str, default_seed: int = 0) -> "WeightSpec":
        """``unit``, ``random:<lo>:<hi>[:<seed>]`` or ``file:<path>``."""
        if text == "unit":
            return cls("unit")
        if text.startswith("file:"):
            return cls("file", path=text[5:])
        if text.startswith("random:"):
            parts = text.split(":")[1:]
            if len(parts) not in (2, 3):
                raise ValueError(f"bad weight spec '{text}'")
            try:
                nums = [int(p) for p in parts]
            except ValueError:
                raise ValueError(f"bad weight spec '{text}'") from None
            seed = nums[2] if len(nums) == 3 else default_seed
            return cls("random", nums[0], nums[1], seed)
        raise ValueError(f"bad weight spec '{text}'")


def generate_weights(g: BipartiteGraph, spec: WeightSpec) -> VertexWeights:
    if spec.mode == "unit":
        return VertexWeights([1] * g.n_s, [1] * g.n_t)
    if spec.mode == "file":
        from .mmio import read_weights
        with open(spec.path) as fh:
            return read_weights(fh, g.n_s, g.n_t)
    vals = _rng(spec.seed).integers(spec.lo, spec.hi, size=g.n_s + g.n_t,
                                    endpoint=True, dtype=np.int64).tolist()
    return VertexWeights(vals[:g.n_s], vals[g.n_s:])


def generate_random_bipartite(n_s: int, n_t: int, target_m: int, seed: int) -> BipartiteGraph:
    """Exactly ``target_m`` distinct edges sampled uniformly without replacement."""
    cells = n_s * n_t
    if target_m < 0 or target_m > cells:
        raise ValueError(f"cannot place {target_m} edges in a {n_s} x {n_t} bipartite graph")
    if target_m == 0:
        return build_graph(n_s, n_t, [])
    keys = _rng(seed).choice(cells, size=target_m, replace=False)
    return build_graph(n_s, n_t, np.stack([keys // n_t, keys % n_t], axis=1))


@dataclass(frozen=True)
class GraphStats:
    n_s: int
    n_t: int
    m: int
    s_max_degree: int
    s_mean_degree: float
    t_max_degree: int
    t_mean_degree: float

    def row(self, name: str, rows_first: bool = True) -> str:
        a = (self.n_s, self.s_max_degree, self.s_mean_degree)
        b = (self.n_t, self.t_max_degree, self.t_mean_degree)
        if not rows_first:
            a, b = b, a
        return (f"{name}\t{a[0]:,}\t{a[1]:,}\t{a[2]:.2f}\t"
                f"{b[0]:,}\t{b[1]:,}\t{b[2]:.2f}\t{self.m:,}")


def graph_stats(g: BipartiteGraph) -> GraphStats:
    def side(sd):
        n = g.size(sd)
        if n == 0:
            return 0, 0.0
        ptr, _ = g.csr(sd)
        deg = np.diff(np.asarray(ptr))
        return int(deg.max()), g.m / n

    smax, smean = side(Side.S)
    tmax, tmean = side(Side.T)
    return GraphStats(g.n_s, g.n_t, g.m, smax, smean, tmax, tmean)
