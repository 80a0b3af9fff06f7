"""Alternating breadth-first search shared by the exact solver and the verifiers."""

from __future__ import annotations

from typing import Optional

from .graph import BipartiteGraph, Side


class AlternatingSearch:
    """Reusable alternating BFS over one graph.

    Visited marks are generation stamps, so starting a new search is O(1)
    rather than a reset of per-vertex arrays.
    """

    def __init__(self, g: BipartiteGraph):
        self.g = g
        self._stamp = [[0] * g.n_s, [0] * g.n_t]
        self._parent = [[-1] * g.n_s, [-1] * g.n_t]
        self._gen = 0

    def explore(self, side: Side, root: int, mates, max_depth: Optional[int] = None):
        """Alternating search from ``root`` on ``side``.

        ``mates`` is the pair (mate_s, mate_t). The search leaves ``root``'s
        side along unmatched edges and returns along matched edges. Yields
        ``(v, depth, matched)`` for each opposite-side vertex ``v`` first
        reached at odd ``depth``. When ``matched`` is true the search continues
        through ``v``'s mate at ``depth + 1``; unmatched ``v`` are leaves.
        Parent pointers of reached vertices are available via :meth:`path_to`
        until the next search starts.
        """
        self._gen += 1
        gen = self._gen
        side = int(side)
        other = 1 - side
        ptr, idx = self.g.csr(Side(side))
        mate_near, mate_far = mates[side], mates[other]
        stamp_far = self._stamp[other]
        parent_far = self._parent[other]
        frontier = [root]
        depth = 1
        while frontier and (max_depth is None or depth <= max_depth):
            nxt = []
            for x in frontier:
                own = mate_near[x]
                for k in range(ptr[x], ptr[x + 1]):
                    y = idx[k]
                    if y == own or stamp_far[y] == gen:
                        continue
                    stamp_far[y] = gen
                    parent_far[y] = x
                    z = mate_far[y]
                    yield y, depth, z is not None
                    if z is not None:
                        nxt.append(z)
            frontier = nxt
            depth += 2

    def path_to(self, side: Side, root: int, target: int, mates) -> list[int]:
        """Vertex indices from ``root`` to opposite-side ``target``, alternating sides."""
        side = int(side)
        other = 1 - side
        parent_far = self._parent[other]
        mate_near = mates[side]
        rev = [target]
        x = parent_far[target]
        while True:
            rev.append(x)
            if x == root:
                break
            y = mate_near[x]
            rev.append(y)
            x = parent_far[y]
        rev.reverse()
        return rev
