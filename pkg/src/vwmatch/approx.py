"""2/3- and 1/2-approximate vertex-weighted matching on bipartite graphs.

Both algorithms split the instance into two one-side-weighted problems,
solve each by short augmenting paths from vertices taken heaviest first,
and combine the two matchings with the Mendelsohn-Dulmage construction.
"""

from __future__ import annotations

from typing import Optional

from .graph import BipartiteGraph, Side, VertexWeights
from .matching import Label, Matching, symmetric_difference


class MergeError(RuntimeError):
    """Raised when two matchings cannot be merged; signals an invalid input."""


def restricted_match(g: BipartiteGraph, side: Side, w: VertexWeights, max_path_len: int = 3,
                     stats: Optional[dict] = None) -> Matching:
    """Match the weighted ``side`` by augmenting paths of length 1 or 3.

    Only the weights of ``side`` are read. Vertices of ``side`` are processed
    by weight descending, ties by index; each is tried once. A direct
    unmatched neighbour is preferred over a length-3 path, and among
    candidates the lowest index wins.

    For length-3 paths every weighted-side vertex keeps a cursor into its
    adjacency list. Entries before the cursor are matched, and since
    augmentation never unmatches a vertex they never need another look, so
    all cursor scans together cost O(m).

    If ``stats`` is a dict it receives ``cursor`` (final cursor offsets)
    and ``cursor_advance`` (total advancement).
    """
    if max_path_len not in (1, 3):
        raise ValueError("max_path_len must be 1 or 3")
    side = Side(side)
    near = int(side)
    m = Matching.empty(g.n_s, g.n_t)
    mate_near, mate_far = (m.mate_s, m.mate_t) if near == 0 else (m.mate_t, m.mate_s)
    ptr, idx = g.csr(side)
    ws = w.side(side)
    order = sorted(range(g.size(side)), key=lambda v: (-ws[v], v))
    cursor = list(ptr[:-1]) if g.size(side) else []
    advance = 0
    long_paths = max_path_len == 3

    for u in order:
        lo, hi = ptr[u], ptr[u + 1]
        hit = -1
        for k in range(lo, hi):
            if mate_far[idx[k]] is None:
                hit = idx[k]
                break
        if hit >= 0:
            mate_near[u] = hit
            mate_far[hit] = u
            continue
        if not long_paths:
            continue
        for k in range(lo, hi):
            y = idx[k]
            x = mate_far[y]  # every neighbour is matched here
            c, end = cursor[x], ptr[x + 1]
            start = c
            while c < end and mate_far[idx[c]] is not None:
                c += 1
            if c < end:
                y2 = idx[c]
                mate_near[u] = y
                mate_far[y] = u
                mate_near[x] = y2
                mate_far[y2] = x
                c += 1
                advance += c - start
                cursor[x] = c
                break
            advance += c - start
            cursor[x] = c

    if stats is not None:
        stats["cursor"] = [c - ptr[v] for v, c in enumerate(cursor)]
        stats["cursor_advance"] = advance
    return m


def mendelsohn_dulmage_merge(g: BipartiteGraph, m_s: Matching, m_t: Matching) -> Matching:
    """Matching inside M_S ∪ M_T that keeps every M_S-matched S vertex and
    every M_T-matched T vertex matched.

    Common edges are kept. Each path of M_S ⊕ M_T contributes whichever of
    its two edge classes covers its required endpoints; cycles contribute
    their M_S edges.
    """
    comps, common = symmetric_difference(m_s, m_t)
    out = Matching.from_edges(g.n_s, g.n_t, common)
    for comp in comps:
        edges = comp.edges()
        choice = Label.FIRST
        if comp.kind == "path":
            choice = None
            for label in (Label.FIRST, Label.SECOND):
                if _covers(comp, edges, label, m_s, m_t):
                    choice = label
                    break
            if choice is None:
                raise MergeError(f"no edge class of path {comp.vertices} covers its required vertices")
        for (s, t), label in edges:
            if label is choice:
                out.mate_s[s] = t
                out.mate_t[t] = s
    for s, t in enumerate(m_s.mate_s):
        if t is not None and out.mate_s[s] is None:
            raise MergeError(f"S{s} lost its match in the merge")
    for t, s in enumerate(m_t.mate_t):
        if s is not None and out.mate_t[t] is None:
            raise MergeError(f"T{t} lost its match in the merge")
    return out


def _covers(comp, edges, label, m_s: Matching, m_t: Matching) -> bool:
    covered = set()
    for (s, t), lab in edges:
        if lab is label:
            covered.add((Side.S, s))
            covered.add((Side.T, t))
    for v in comp.vertices:
        side, i = v
        required = (m_s.mate_s[i] is not None) if side is Side.S else (m_t.mate_t[i] is not None)
        if required and v not in covered:
            return False
    return True


def two_thirds_mvm(g: BipartiteGraph, w: VertexWeights) -> Matching:
    """2/3-approximate MVM in O(n log n + m) time."""
    if not w.fits(g):
        raise ValueError("weights do not match the graph")
    m_s = restricted_match(g, Side.S, w, 3)
    m_t = restricted_match(g, Side.T, w, 3)
    return mendelsohn_dulmage_merge(g, m_s, m_t)


def greedy_half_mvm(g: BipartiteGraph, w: VertexWeights) -> Matching:
    """Greedy 1/2-approximate MVM: length-1 augmentations only."""
    if not w.fits(g):
        raise ValueError("weights do not match the graph")
    m_s = restricted_match(g, Side.S, w, 1)
    m_t = restricted_match(g, Side.T, w, 1)
    return mendelsohn_dulmage_merge(g, m_s, m_t)
