"""Exact maximum vertex-weighted matching on bipartite graphs.

Vertices of both sides are taken in non-increasing weight order. From each
still-unmatched vertex we search the whole alternating tree and augment
towards the heaviest unmatched vertex it reaches. A vertex that fails once
is never searched again. O(nm + n log n) time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .graph import BipartiteGraph, Side, Vertex, VertexWeights
from .matching import Matching
from .search import AlternatingSearch


@dataclass(frozen=True)
class AugmentingPath:
    """Alternating path from ``source`` to ``target``; both ends unmatched.

    ``vertices`` alternate sides and start on ``source``'s side.
    """

    vertices: tuple[Vertex, ...]

    @property
    def source(self) -> Vertex:
        return self.vertices[0]

    @property
    def target(self) -> Vertex:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices) - 1


def processing_order(g: BipartiteGraph, w: VertexWeights) -> list[Vertex]:
    """All vertices by weight descending, then S before T, then index."""
    order = [(Side.S, v) for v in range(g.n_s)] + [(Side.T, v) for v in range(g.n_t)]
    order.sort(key=lambda sv: (-w[sv], sv[0], sv[1]))
    return order


def _heaviest_reachable(search: AlternatingSearch, side: Side, u: int, mates, far_w):
    best = None
    best_w = -1
    for y, _depth, matched in search.explore(side, u, mates):
        if matched:
            continue
        wy = far_w[y]
        if wy > best_w or (wy == best_w and y < best):
            best, best_w = y, wy
    return best


def _augment(mates, side: int, path: list[int]) -> None:
    near, far = mates[side], mates[1 - side]
    for i in range(0, len(path), 2):
        x, y = path[i], path[i + 1]
        near[x] = y
        far[y] = x


def find_augmenting_to_heaviest(g: BipartiteGraph, m: Matching, w: VertexWeights, u: Vertex,
                                search: Optional[AlternatingSearch] = None
                                ) -> Optional[AugmentingPath]:
    """Augmenting path from unmatched ``u`` to a heaviest reachable unmatched vertex.

    Ties among equally heavy targets go to the lowest index. Returns None
    when no unmatched vertex is reachable.
    """
    side, x = Side(u[0]), u[1]
    mates = (m.mate_s, m.mate_t)
    if mates[side][x] is not None:
        raise ValueError(f"{side.name}{x} is already matched")
    search = search or AlternatingSearch(g)
    target = _heaviest_reachable(search, side, x, mates, w.side(side.other))
    if target is None:
        return None
    idx = search.path_to(side, x, target, mates)
    sides = (side, side.other)
    return AugmentingPath(tuple((sides[i % 2], v) for i, v in enumerate(idx)))


def match_d(g: BipartiteGraph, w: VertexWeights,
            on_search: Optional[Callable[[Vertex, Optional[AugmentingPath], Matching], None]] = None
            ) -> Matching:
    """Maximum vertex-weighted matching of ``g``; also of maximum cardinality.

    ``on_search(u, path, matching)``, if given, is called after each search
    with the path used (or None on failure) and the matching after the
    augmentation. The matching object passed is live; copy it to keep it.
    """
    if not w.fits(g):
        raise ValueError("weights do not match the graph")
    m = Matching.empty(g.n_s, g.n_t)
    mates = (m.mate_s, m.mate_t)
    search = AlternatingSearch(g)
    for side, x in processing_order(g, w):
        # matched vertices stay matched; each vertex is searched at most once
        if mates[side][x] is not None:
            continue
        far_w = w.side(side.other)
        target = _heaviest_reachable(search, side, x, mates, far_w)
        path = None
        if target is not None:
            idx = search.path_to(side, x, target, mates)
            _augment(mates, side, idx)
            if on_search is not None:
                sides = (side, side.other)
                path = AugmentingPath(tuple((sides[i % 2], v) for i, v in enumerate(idx)))
        if on_search is not None:
            on_search((side, x), path, m)
    return m
