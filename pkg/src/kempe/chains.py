"""Kempe chains: missing colours, alternating components and switches."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Optional, Sequence

from .graph import ColouringError, EdgeColouring, Multigraph

__all__ = [
    "ChainComponent",
    "KempeChange",
    "StaleComponentError",
    "missing_colours",
    "chain_component",
    "apply_switch",
    "enumerate_switches",
    "component_edges",
]


class StaleComponentError(ValueError):
    """A component certificate no longer matches the colouring it is applied to."""


@dataclass(frozen=True)
class ChainComponent:
    """One connected component of ``G(a, b)``.

    ``edges`` runs from ``endpoints[0]`` for paths, and from the least edge
    id towards that edge's lower-numbered endpoint for cycles.  ``vertices``
    lists the vertices met in the same order (a cycle does not repeat its
    first vertex).
    """

    colour_pair: tuple[int, int]
    edges: tuple[int, ...]
    shape: str  # "path" | "cycle" | "empty"
    endpoints: Optional[tuple[int, int]]
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class KempeChange:
    """Swap ``a`` and ``b`` on the component through ``seed``.

    ``edges`` is the certificate: the component's edge set when the change
    was recorded.  ``None`` means "recompute on replay" (plans read from JSON).
    """

    a: int
    b: int
    seed: int
    edges: Optional[frozenset[int]] = None

    def __post_init__(self) -> None:
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)
        if self.edges is not None and not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "seed_edge": self.seed}


def _colours_of(c) -> Sequence[int]:
    return c.colours if isinstance(c, EdgeColouring) else c


def missing_colours(G: Multigraph, c, v: int, k: Optional[int] = None) -> frozenset[int]:
    """Palette colours on no edge at ``v``."""
    col = _colours_of(c)
    if k is None:
        if not isinstance(c, EdgeColouring):
            raise TypeError("palette size k is required for raw colour sequences")
        k = c.k
    present = {col[e] for e in G.incidence[v]}
    return frozenset(x for x in range(1, k + 1) if x not in present)


def _next_edge(G: Multigraph, col: Sequence[int], x: int, prev: int, want: int,
               within: Optional[Collection[int]]) -> Optional[int]:
    for f in G.incidence[x]:
        if f != prev and col[f] == want and (within is None or f in within):
            return f
    return None


def _walk(G: Multigraph, col: Sequence[int], a: int, b: int, seed: int,
          within: Optional[Collection[int]] = None) -> tuple[list[int], list[int], bool]:
    """Maximal (a, b)-alternating walk through ``seed``.

    Returns ``(edges, vertices, is_cycle)`` with edges ordered along the
    component, starting from an arbitrary end (the caller re-orders).
    """
    u, v = G.edges[seed]
    other = {a: b, b: a}
    edges = [seed]
    verts = [u, v]
    x, e = v, seed
    while True:
        f = _next_edge(G, col, x, e, other[col[e]], within)
        if f is None:
            break
        if f == seed:
            return edges, verts[:-1], True
        edges.append(f)
        if len(edges) > G.m:
            raise ColouringError("colouring is not proper: alternating walk does not close")
        x = G.other_end(f, x)
        verts.append(x)
        e = f
    # extend backwards from u
    back_edges: list[int] = []
    back_verts: list[int] = []
    x, e = u, seed
    while True:
        f = _next_edge(G, col, x, e, other[col[e]], within)
        if f is None:
            break
        back_edges.append(f)
        if len(back_edges) + len(edges) > G.m:
            raise ColouringError("colouring is not proper: alternating walk does not close")
        x = G.other_end(f, x)
        back_verts.append(x)
        e = f
    back_edges.reverse()
    back_verts.reverse()
    return back_edges + edges, back_verts + verts, False


def _ordered(G: Multigraph, a: int, b: int, edges: list[int], verts: list[int],
             is_cycle: bool) -> ChainComponent:
    pair = (min(a, b), max(a, b))
    if not is_cycle:
        if verts[-1] < verts[0]:
            edges = edges[::-1]
            verts = verts[::-1]
        return ChainComponent(pair, tuple(edges), "path", (verts[0], verts[-1]), tuple(verts))
    # cycle: edges[j] joins verts[j] -> verts[j + 1] in walk order
    L = len(edges)
    i = edges.index(min(edges))
    lo = min(G.edges[edges[i]])
    if verts[(i + 1) % L] == lo:
        order = [edges[(i + j) % L] for j in range(L)]
        vorder = [verts[(i + j) % L] for j in range(L)]
    else:
        order = [edges[(i - j) % L] for j in range(L)]
        vorder = [verts[(i + 1 - j) % L] for j in range(L)]
    return ChainComponent(pair, tuple(order), "cycle", None, tuple(vorder))


def chain_component(G: Multigraph, c, a: int, b: int, *, edge: Optional[int] = None,
                    vertex: Optional[int] = None,
                    within: Optional[Collection[int]] = None) -> ChainComponent:
    """The maximal component of ``G(a, b)`` through a seed edge or vertex.

    Parameters
    ----------
    G, c :
        Graph and a proper colouring (an :class:`EdgeColouring` or a raw
        colour sequence aligned to edge ids).
    a, b :
        Distinct colours.
    edge, vertex :
        Exactly one seed.  An edge seed must carry colour ``a`` or ``b``; a
        vertex meeting neither colour yields an empty component.
    within :
        Optional edge-id set restricting the walk to a subgraph.
    """
    col = _colours_of(c)
    if a == b:
        raise ColouringError("a Kempe chain needs two distinct colours")
    if (edge is None) == (vertex is None):
        raise TypeError("give exactly one of edge= or vertex=")
    if vertex is not None:
        seed = None
        for f in G.incidence[vertex]:
            if col[f] in (a, b) and (within is None or f in within):
                seed = f
                break
        if seed is None:
            return ChainComponent((min(a, b), max(a, b)), (), "empty", None, (vertex,))
    else:
        seed = edge
        if col[seed] not in (a, b):
            raise ColouringError(f"seed edge {seed} has colour {col[seed]}, not {a} or {b}")
    edges, verts, is_cycle = _walk(G, col, a, b, seed, within)
    comp = _ordered(G, a, b, edges, verts, is_cycle)
    # properness forces degree <= 2 inside G(a, b)
    if len(set(comp.edges)) != len(comp.edges):
        raise ColouringError("colouring is not proper: alternating walk revisits an edge")
    return comp


def component_edges(G: Multigraph, col: Sequence[int], a: int, b: int, seed: int,
                    within: Optional[Collection[int]] = None) -> list[int]:
    """Unordered edge list of the (a, b)-component through ``seed`` (fast path)."""
    return _walk(G, col, a, b, seed, within)[0]


def apply_switch(G: Multigraph, c: EdgeColouring, comp: ChainComponent) -> EdgeColouring:
    """Exchange the component's two colours on its edges.

    The component is re-derived from its first edge first; a mismatch means
    the certificate is stale and raises :class:`StaleComponentError`.
    """
    if not comp.edges:
        return c
    a, b = comp.colour_pair
    col = c.colours
    if col[comp.edges[0]] not in (a, b):
        raise StaleComponentError(f"edge {comp.edges[0]} is no longer coloured {a} or {b}")
    current = set(component_edges(G, col, a, b, comp.edges[0]))
    if current != set(comp.edges):
        raise StaleComponentError("component certificate does not match the colouring")
    new = list(col)
    for e in comp.edges:
        new[e] = b if col[e] == a else a
    return EdgeColouring(c.k, tuple(new))


def enumerate_switches(G: Multigraph, c: EdgeColouring) -> list[KempeChange]:
    """Every Kempe change available at ``c``: one per component per colour pair.

    Ordered by colour pair, then by the component's least edge id.  Pairs
    with an unused colour contribute single-edge components.
    """
    col = c.colours
    out = []
    for a in range(1, c.k + 1):
        for b in range(a + 1, c.k + 1):
            seen: set[int] = set()
            for e in range(G.m):
                if col[e] != a and col[e] != b or e in seen:
                    continue
                comp = component_edges(G, col, a, b, e)
                seen.update(comp)
                out.append(KempeChange(a, b, e, frozenset(comp)))
    return out
