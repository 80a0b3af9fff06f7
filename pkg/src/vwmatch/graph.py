"""Immutable bipartite graphs and vertex weights."""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, Sequence

import numpy as np

INT64_MAX = 2**63 - 1


class Side(IntEnum):
    S = 0
    T = 1

    @property
    def other(self) -> "Side":
        return Side(1 - self)


Vertex = tuple[Side, int]


class GraphError(ValueError):
    pass


class BipartiteGraph:
    """Sparse bipartite graph G = (S, T, E) with CSR adjacency in both directions.

    S and T are indexed independently from 0. Neighbor lists are sorted
    ascending and free of duplicates. Instances are never mutated after
    construction, so one graph can be shared between concurrent solves.
    """

    __slots__ = ("_n", "_ptr", "_idx", "_m")

    def __init__(self, n_s: int, n_t: int, s_ptr, s_idx, t_ptr, t_idx):
        self._n = (int(n_s), int(n_t))
        self._ptr = (tuple(s_ptr), tuple(t_ptr))
        self._idx = (tuple(s_idx), tuple(t_idx))
        self._m = len(self._idx[0])

    @property
    def n_s(self) -> int:
        return self._n[0]

    @property
    def n_t(self) -> int:
        return self._n[1]

    @property
    def m(self) -> int:
        return self._m

    def size(self, side: Side) -> int:
        return self._n[side]

    def csr(self, side: Side) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(offsets, indices) for the adjacency of ``side`` toward the opposite side."""
        return self._ptr[side], self._idx[side]

    def neighbors(self, side: Side, v: int) -> tuple[int, ...]:
        ptr, idx = self._ptr[side], self._idx[side]
        return idx[ptr[v]:ptr[v + 1]]

    def degree(self, side: Side, v: int) -> int:
        ptr = self._ptr[side]
        return ptr[v + 1] - ptr[v]

    def has_edge(self, s: int, t: int) -> bool:
        if not (0 <= s < self.n_s and 0 <= t < self.n_t):
            return False
        nbrs = self.neighbors(Side.S, s)
        i = _bisect(nbrs, t)
        return i < len(nbrs) and nbrs[i] == t

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (s, t) pairs, sorted."""
        ptr, idx = self._ptr[0], self._idx[0]
        return [(s, idx[k]) for s in range(self.n_s) for k in range(ptr[s], ptr[s + 1])]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return self._n == other._n and self._ptr == other._ptr and self._idx == other._idx

    def __hash__(self):
        return hash((self._n, self._ptr[0], self._idx[0]))

    def __repr__(self) -> str:
        return f"BipartiteGraph(n_s={self.n_s}, n_t={self.n_t}, m={self.m})"


def _bisect(seq: Sequence[int], x: int) -> int:
    lo, hi = 0, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if seq[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _csr(n_rows: int, rows: np.ndarray, cols: np.ndarray):
    order = np.lexsort((cols, rows))
    counts = np.bincount(rows, minlength=n_rows)
    ptr = np.zeros(n_rows + 1, dtype=np.int64)
    np.cumsum(counts, out=ptr[1:])
    return ptr.tolist(), cols[order].tolist()


def build_graph(n_s: int, n_t: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    """Build a graph from (s, t) pairs; duplicate edges are dropped.

    >>> build_graph(2, 1, [(0, 0), (0, 0), (1, 0)]).m
    2
    """
    if n_s < 0 or n_t < 0:
        raise GraphError(f"negative side size ({n_s}, {n_t})")
    pairs = edges if isinstance(edges, np.ndarray) else list(edges)
    arr = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if len(arr):
        bad = (arr[:, 0] < 0) | (arr[:, 0] >= n_s) | (arr[:, 1] < 0) | (arr[:, 1] >= n_t)
        if bad.any():
            s, t = arr[int(np.argmax(bad))]
            raise GraphError(f"edge ({s}, {t}) out of range for n_s={n_s}, n_t={n_t}")
        # n_t >= 1 here, so the key is injective
        keys = np.unique(arr[:, 0] * n_t + arr[:, 1])
        s_arr, t_arr = keys // n_t, keys % n_t
    else:
        s_arr = t_arr = np.zeros(0, dtype=np.int64)
    s_ptr, s_idx = _csr(n_s, s_arr, t_arr)
    t_ptr, t_idx = _csr(n_t, t_arr, s_arr)
    return BipartiteGraph(n_s, n_t, s_ptr, s_idx, t_ptr, t_idx)


def check_graph(g: BipartiteGraph) -> None:
    """Full-scan check of the adjacency invariants; raises GraphError on violation."""
    for side in Side:
        ptr, idx = g.csr(side)
        other = g.size(side.other)
        if len(ptr) != g.size(side) + 1 or ptr[0] != 0 or ptr[-1] != len(idx):
            raise GraphError(f"malformed offsets on side {side.name}")
        for v in range(g.size(side)):
            nbrs = idx[ptr[v]:ptr[v + 1]]
            for a, b in zip(nbrs, nbrs[1:]):
                if a >= b:
                    raise GraphError(f"neighbors of {side.name}{v} not strictly ascending")
            for u in nbrs:
                if not 0 <= u < other:
                    raise GraphError(f"neighbor {u} of {side.name}{v} out of range")
    fwd = {(s, t) for s, t in g.edges()}
    ptr, idx = g.csr(Side.T)
    back = {(idx[k], t) for t in range(g.n_t) for k in range(ptr[t], ptr[t + 1])}
    if fwd != back:
        raise GraphError("S->T and T->S adjacency disagree")


class VertexWeights:
    """Non-negative integer weight for every vertex of both sides."""

    __slots__ = ("_w",)

    def __init__(self, s_weights: Iterable[int], t_weights: Iterable[int]):
        s = tuple(int(x) for x in s_weights)
        t = tuple(int(x) for x in t_weights)
        for side, ws in ((Side.S, s), (Side.T, t)):
            for i, x in enumerate(ws):
                if x < 0:
                    raise ValueError(f"negative weight {x} at {side.name}{i}; "
                                     "use transform_negative_weights first")
                if x > INT64_MAX:
                    raise OverflowError(f"weight {x} at {side.name}{i} exceeds 64 bits")
        self._w = (s, t)

    @classmethod
    def unit(cls, g: BipartiteGraph) -> "VertexWeights":
        return cls([1] * g.n_s, [1] * g.n_t)

    @property
    def s(self) -> tuple[int, ...]:
        return self._w[0]

    @property
    def t(self) -> tuple[int, ...]:
        return self._w[1]

    def side(self, side: Side) -> tuple[int, ...]:
        return self._w[side]

    def __getitem__(self, v: Vertex) -> int:
        return self._w[v[0]][v[1]]

    def only(self, side: Side) -> "VertexWeights":
        """Copy with the other side's weights zeroed."""
        if side is Side.S:
            return VertexWeights(self.s, [0] * len(self.t))
        return VertexWeights([0] * len(self.s), self.t)

    def fits(self, g: BipartiteGraph) -> bool:
        return len(self.s) == g.n_s and len(self.t) == g.n_t

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexWeights):
            return NotImplemented
        return self._w == other._w

    def __repr__(self) -> str:
        return f"VertexWeights(s={list(self.s)}, t={list(self.t)})"


def transform_negative_weights(g: BipartiteGraph, s_weights: Sequence[int],
                               t_weights: Sequence[int]):
    """Remove negative vertex weights by attaching a pendant vertex.

    Each vertex v with weight w < 0 gets weight 0 and a new neighbour v'
    on the opposite side with weight |w|. Returns ``(graph, weights, mapping)``
    where ``mapping`` sends each added vertex to the original it hangs off.

    A maximum-weight matching of the result, restricted to the original
    vertices, is a maximum-weight matching for the signed weights. The
    transform carries no guarantee for approximate solutions.
    """
    if len(s_weights) != g.n_s or len(t_weights) != g.n_t:
        raise ValueError("weight vector lengths do not match the graph")
    new_s = [int(x) for x in s_weights]
    new_t = [int(x) for x in t_weights]
    mapping: dict[Vertex, Vertex] = {}
    extra: list[tuple[int, int]] = []
    n_s, n_t = g.n_s, g.n_t
    for s in range(g.n_s):
        if s_weights[s] < 0:
            mapping[(Side.T, n_t)] = (Side.S, s)
            extra.append((s, n_t))
            new_t.append(-int(s_weights[s]))
            new_s[s] = 0
            n_t += 1
    for t in range(g.n_t):
        if t_weights[t] < 0:
            mapping[(Side.S, n_s)] = (Side.T, t)
            extra.append((n_s, t))
            new_s.append(-int(t_weights[t]))
            new_t[t] = 0
            n_s += 1
    if not extra:
        return g, VertexWeights(new_s, new_t), mapping
    g2 = build_graph(n_s, n_t, g.edges() + extra)
    return g2, VertexWeights(new_s, new_t), mapping
