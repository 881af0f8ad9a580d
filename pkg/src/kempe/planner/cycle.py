"""An oriented cycle of a graph with left/right/off neighbour bookkeeping."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..graph import Multigraph

__all__ = ["OrientedCycle", "shortest_cycle"]


@dataclass(frozen=True)
class OrientedCycle:
    """Cycle ``verts[0] -> verts[1] -> ... -> verts[0]``.

    ``edges[i]`` joins ``verts[i]`` to ``verts[i + 1]``, so for a vertex ``v``
    at position ``i`` the right edge is ``edges[i]`` and the left edge is
    ``edges[i - 1]``.
    """

    verts: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.verts)

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def pos(self, v: int) -> int:
        return self.verts.index(v)

    def right(self, v: int) -> int:
        return self.verts[(self.pos(v) + 1) % len(self)]

    def left(self, v: int) -> int:
        return self.verts[self.pos(v) - 1]

    def e_plus(self, v: int) -> int:
        return self.edges[self.pos(v)]

    def e_minus(self, v: int) -> int:
        return self.edges[self.pos(v) - 1]

    def off_edge(self, G: Multigraph, v: int) -> int:
        """The unique edge at ``v`` off the cycle (cubic graphs)."""
        own = self.edge_set
        off = [e for e in G.incidence[v] if e not in own]
        if len(off) != 1:
            raise ValueError(f"vertex {v} has {len(off)} edges off the cycle")
        return off[0]

    def reversed(self) -> "OrientedCycle":
        verts = (self.verts[0],) + tuple(reversed(self.verts[1:]))
        edges = tuple(reversed(self.edges))
        return OrientedCycle(verts, edges)

    def arc_edges(self, start: int, stop: int) -> list[int]:
        """Edges met walking right from ``start`` to ``stop`` (full cycle if equal)."""
        L = len(self)
        i, j = self.pos(start), self.pos(stop)
        steps = (j - i) % L or L
        return [self.edges[(i + t) % L] for t in range(steps)]


def _canonical_orientation(G: Multigraph, cyc: list[int]) -> OrientedCycle:
    i = cyc.index(min(cyc))
    cyc = cyc[i:] + cyc[:i]
    if len(cyc) > 2 and cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    L = len(cyc)
    edges = []
    for t in range(L):
        between = G.edges_between(cyc[t], cyc[(t + 1) % L])
        edges.append(min(between))
    return OrientedCycle(tuple(cyc), tuple(edges))


def shortest_cycle(G: Multigraph) -> OrientedCycle:
    """A shortest cycle of a simple graph.

    Every edge ``uw`` is removed in turn and a BFS (neighbours in id order)
    finds a shortest ``u``-``w`` path.  Among shortest cycles the least
    vertex sequence wins; the orientation starts at the least vertex and
    heads to its lesser neighbour on the cycle.
    """
    best = None
    for e, (u, w) in enumerate(G.edges):
        prev = {u: None}
        queue = deque([u])
        while queue and w not in prev:
            x = queue.popleft()
            for f in sorted(G.incidence[x], key=lambda f: (G.other_end(f, x), f)):
                if f == e:
                    continue
                y = G.other_end(f, x)
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        if w not in prev:
            continue
        path = [w]
        while prev[path[-1]] is not None:
            path.append(prev[path[-1]])
        cand = _canonical_orientation(G, path)
        key = (len(cand), cand.verts)
        if best is None or key < best[0]:
            best = (key, cand)
    if best is None:
        raise ValueError("graph is acyclic")
    return best[1]
