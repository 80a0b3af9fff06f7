"""Matchings, their weights, and symmetric differences of two matchings."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .graph import INT64_MAX, BipartiteGraph, Side, Vertex, VertexWeights


class Matching:
    """Mate arrays for both sides; ``None`` marks an unmatched vertex.

    The two arrays are stored as given, so an inconsistent matching can be
    represented and then rejected by :func:`validate_matching`.
    """

    __slots__ = ("mate_s", "mate_t")

    def __init__(self, mate_s: list[Optional[int]], mate_t: list[Optional[int]]):
        self.mate_s = mate_s
        self.mate_t = mate_t

    @classmethod
    def empty(cls, n_s: int, n_t: int) -> "Matching":
        return cls([None] * n_s, [None] * n_t)

    @classmethod
    def from_edges(cls, n_s: int, n_t: int, edges: Iterable[tuple[int, int]]) -> "Matching":
        """Write each (s, t) into both mate arrays; later pairs overwrite earlier ones."""
        m = cls.empty(n_s, n_t)
        for s, t in edges:
            m.mate_s[s] = t
            m.mate_t[t] = s
        return m

    def mates(self, side: Side) -> list[Optional[int]]:
        return self.mate_t if side else self.mate_s

    def mate(self, v: Vertex) -> Optional[int]:
        return self.mates(v[0])[v[1]]

    def is_matched(self, v: Vertex) -> bool:
        return self.mates(v[0])[v[1]] is not None

    @property
    def cardinality(self) -> int:
        return sum(1 for t in self.mate_s if t is not None)

    def edges(self) -> list[tuple[int, int]]:
        return [(s, t) for s, t in enumerate(self.mate_s) if t is not None]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def copy(self) -> "Matching":
        return Matching(list(self.mate_s), list(self.mate_t))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.mate_s == other.mate_s and self.mate_t == other.mate_t

    def __repr__(self) -> str:
        return f"Matching({self.edges()})"


def validate_matching(g: BipartiteGraph, m: Matching) -> bool:
    if len(m.mate_s) != g.n_s or len(m.mate_t) != g.n_t:
        return False
    for s, t in enumerate(m.mate_s):
        if t is None:
            continue
        if not 0 <= t < g.n_t or m.mate_t[t] != s or not g.has_edge(s, t):
            return False
    for t, s in enumerate(m.mate_t):
        if s is None:
            continue
        if not 0 <= s < g.n_s or m.mate_s[s] != t:
            return False
    return True


def _checked_sum(values: Iterable[int]) -> int:
    total = 0
    for x in values:
        total += x
        if total > INT64_MAX:
            raise OverflowError("matching weight exceeds the 64-bit accumulator")
    return total


def matched_weights(m: Matching, w: VertexWeights) -> list[int]:
    ws, wt = w.s, w.t
    out = [ws[s] for s, t in enumerate(m.mate_s) if t is not None]
    out.extend(wt[t] for t, s in enumerate(m.mate_t) if s is not None)
    return out


def matching_weight(m: Matching, w: VertexWeights) -> int:
    """Sum of the weights of all matched vertices on both sides."""
    return _checked_sum(matched_weights(m, w))


def side_weight(m: Matching, w: VertexWeights, side: Side) -> int:
    ws, mates = w.side(side), m.mates(side)
    return _checked_sum(ws[v] for v, x in enumerate(mates) if x is not None)


def weight_vector(m: Matching, w: VertexWeights) -> tuple[int, ...]:
    """Matched-vertex weights in non-increasing order (duplicates kept)."""
    return tuple(sorted(matched_weights(m, w), reverse=True))


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Compare two weight vectors lexicographically after zero padding.

    Returns -1, 0 or 1.
    """
    n = max(len(a), len(b))
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        if x != y:
            return 1 if x > y else -1
    return 0


class Label(Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class SymDiffComponent:
    kind: str  # "path" or "cycle"
    vertices: tuple[Vertex, ...]
    labels: tuple[Label, ...]

    def edges(self) -> list[tuple[tuple[int, int], Label]]:
        """Component edges as ((s, t), label)."""
        out = []
        vs = self.vertices
        closing = [(vs[-1], vs[0])] if self.kind == "cycle" else []
        for (a, b), lab in zip(list(zip(vs, vs[1:])) + closing, self.labels):
            s, t = (a[1], b[1]) if a[0] is Side.S else (b[1], a[1])
            out.append(((s, t), lab))
        return out


def symmetric_difference(m1: Matching, m2: Matching):
    """Decompose M1 ⊕ M2 into alternating paths and even cycles.

    Returns ``(components, common)`` where ``common`` lists the edges in both
    matchings. Paths start at their endpoint found first when scanning
    S then T by ascending index; cycles start at their lowest S vertex and
    leave it along its M1 edge.
    """
    n_s, n_t = len(m1.mate_s), len(m1.mate_t)
    mates1 = (m1.mate_s, m1.mate_t)
    mates2 = (m2.mate_s, m2.mate_t)
    common = [(s, t) for s, t in enumerate(m1.mate_s) if t is not None and m2.mate_s[s] == t]

    def in_diff(side, v):
        a, b = mates1[side][v], mates2[side][v]
        return a != b

    def step(side, v, label):
        mates = mates1 if label is Label.FIRST else mates2
        x = mates[side][v]
        if x is None or mates1[side][v] == mates2[side][v]:
            return None
        return x

    seen = (bytearray(n_s), bytearray(n_t))
    comps: list[SymDiffComponent] = []

    def walk(side, v, label):
        verts, labels = [(Side(side), v)], []
        seen[side][v] = 1
        while True:
            x = step(side, v, label)
            if x is None:
                return verts, labels, False
            side, v = 1 - side, x
            labels.append(label)
            if seen[side][v]:
                return verts, labels, True
            seen[side][v] = 1
            verts.append((Side(side), v))
            label = Label.SECOND if label is Label.FIRST else Label.FIRST

    sizes = (n_s, n_t)
    for side in (0, 1):
        for v in range(sizes[side]):
            if seen[side][v] or not in_diff(side, v):
                continue
            a, b = mates1[side][v], mates2[side][v]
            if a is not None and b is not None:
                continue  # interior vertex, reached later from an endpoint or as a cycle
            label = Label.FIRST if a is not None else Label.SECOND
            verts, labels, _ = walk(side, v, label)
            comps.append(SymDiffComponent("path", tuple(verts), tuple(labels)))
    for v in range(n_s):
        if seen[0][v] or not in_diff(0, v):
            continue
        verts, labels, closed = walk(0, v, Label.FIRST)
        assert closed
        comps.append(SymDiffComponent("cycle", tuple(verts), tuple(labels)))
    return comps, common
