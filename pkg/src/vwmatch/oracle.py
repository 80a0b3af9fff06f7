"""Brute-force oracles and path-based optimality verifiers.

The enumerators are exponential and only meant for tiny graphs; they share
no code with the solvers they check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import BipartiteGraph, Side, Vertex, VertexWeights
from .matching import Matching
from .search import AlternatingSearch

MAX_ORACLE_EDGES = 24


class OracleGuardError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    best_weight: int
    best_matchings: tuple[frozenset, ...]
    # largest cardinality over all matchings, not only the optimal ones
    best_cardinality: int
    lex_max_vector: tuple[int, ...]
    n_matchings: int


def _guard(g: BipartiteGraph) -> None:
    if g.m > MAX_ORACLE_EDGES:
        raise OracleGuardError(f"graph has {g.m} edges; enumeration is limited to "
                               f"{MAX_ORACLE_EDGES}")


def enumerate_matchings(g: BipartiteGraph) -> Iterable[list[tuple[int, int]]]:
    """Every matching of ``g`` (including the empty one), by include/exclude recursion."""
    _guard(g)
    edges = g.edges()
    used_s = [False] * g.n_s
    used_t = [False] * g.n_t
    chosen: list[tuple[int, int]] = []

    def rec(i):
        if i == len(edges):
            yield list(chosen)
            return
        yield from rec(i + 1)
        s, t = edges[i]
        if not used_s[s] and not used_t[t]:
            used_s[s] = used_t[t] = True
            chosen.append((s, t))
            yield from rec(i + 1)
            chosen.pop()
            used_s[s] = used_t[t] = False

    return rec(0)


def brute_force_mvm(g: BipartiteGraph, w: VertexWeights) -> OracleResult:
    best_w, best, best_card, lex, count = -1, [], 0, (), 0
    for edges in enumerate_matchings(g):
        count += 1
        vals = [w.s[s] for s, _ in edges] + [w.t[t] for _, t in edges]
        total = sum(vals)
        if total > best_w:
            best_w, best = total, [frozenset(edges)]
        elif total == best_w:
            best.append(frozenset(edges))
        best_card = max(best_card, len(edges))
        vec = tuple(sorted(vals, reverse=True))
        a, b = _padded(vec, len(lex)), _padded(lex, len(vec))
        if a > b or (a == b and len(vec) > len(lex)):
            lex = vec
    return OracleResult(best_w, tuple(best), best_card, lex, count)


def _padded(v, n):
    return tuple(v) + (0,) * max(0, n - len(v))


def brute_force_lex_max_vector(g: BipartiteGraph, w: VertexWeights) -> tuple[int, ...]:
    return brute_force_mvm(g, w).lex_max_vector


def _unmatched(m: Matching, from_set: Optional[Iterable[Vertex]]):
    if from_set is None:
        cands = [(Side.S, v) for v in range(len(m.mate_s))] + \
                [(Side.T, v) for v in range(len(m.mate_t))]
    else:
        cands = [(Side(s), v) for s, v in from_set]
    return [(s, v) for s, v in cands if m.mates(s)[v] is None]


def verify_no_augmenting(g: BipartiteGraph, m: Matching, max_len: Optional[int] = None,
                         from_set: Optional[Iterable[Vertex]] = None) -> bool:
    """True iff no augmenting path (of length <= max_len, from a vertex in
    from_set) exists. Alternating BFS depths in a bipartite graph are
    shortest alternating path lengths, so the depth cap is exact."""
    search = AlternatingSearch(g)
    mates = (m.mate_s, m.mate_t)
    for side, u in _unmatched(m, from_set):
        for _y, _depth, matched in search.explore(side, u, mates, max_len):
            if not matched:
                return False
    return True


def verify_no_increasing(g: BipartiteGraph, m: Matching, w: VertexWeights,
                         max_len: Optional[int] = None) -> bool:
    """True iff no even alternating path joins an unmatched u to a matched u'
    on the same side with w(u) > w(u')."""
    search = AlternatingSearch(g)
    mates = (m.mate_s, m.mate_t)
    depth_cap = None if max_len is None else max_len - 1
    for side, u in _unmatched(m, None):
        wu = w.side(side)[u]
        near_w = w.side(side)
        far_mates = mates[1 - side]
        for y, _depth, matched in search.explore(side, u, mates, depth_cap):
            if matched and near_w[far_mates[y]] < wu:
                return False
    return True


def find_increasing_path(g: BipartiteGraph, m: Matching, w: VertexWeights) -> Optional[list]:
    """Some increasing path as a vertex list, or None. Used for diagnostics."""
    search = AlternatingSearch(g)
    mates = (m.mate_s, m.mate_t)
    for side, u in _unmatched(m, None):
        wu = w.side(side)[u]
        for y, _depth, matched in search.explore(side, u, mates):
            if matched and w.side(side)[mates[1 - side][y]] < wu:
                idx = search.path_to(side, u, y, mates) + [mates[1 - side][y]]
                sides = (Side(side), Side(side).other)
                return [(sides[i % 2], v) for i, v in enumerate(idx)]
    return None
