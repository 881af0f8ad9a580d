"""Multigraphs, edge-colourings and the colour-permutation quotient.

Vertices are ``0..n-1`` and edges are identified by their position in the
edge list, so parallel edges stay distinguishable everywhere.  Everything here
is immutable; "modifying" a colouring produces a new one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Multigraph",
    "EdgeColouring",
    "CanonicalForm",
    "DifferenceSet",
    "ValidationReport",
    "Violation",
    "build_graph",
    "validate_colouring",
    "canonical_form",
    "canonical_word",
    "diff",
    "apply_permutation",
    "GraphError",
    "ColouringError",
]


class GraphError(ValueError):
    """Malformed graph input (loops, endpoints out of range)."""


class ColouringError(ValueError):
    """A colouring does not fit its graph or palette."""


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph with stable integer edge ids.

    Use :func:`build_graph` rather than the constructor; it builds the
    incidence lists and checks the input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    incidence: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(inc) for inc in self.incidence]

    def max_degree(self) -> int:
        return max((len(inc) for inc in self.incidence), default=0)

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def neighbours(self, v: int) -> list[int]:
        """Neighbours of ``v`` with multiplicity, in incidence order."""
        return [self.other_end(e, v) for e in self.incidence[v]]

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self.incidence[u] if self.other_end(e, u) == v]

    def edge_subgraph(self, keep: Iterable[int]) -> tuple["Multigraph", tuple[int, ...]]:
        """Subgraph on the same vertex set keeping the edges in ``keep``.

        Returns the subgraph and ``emap`` with ``emap[sub_edge] = edge``.
        Edge order is preserved, so relative edge ids keep their order.
        """
        emap = tuple(sorted(set(keep)))
        return build_graph(self.n, [self.edges[e] for e in emap]), emap

    def delete_edges(self, removed: Iterable[int]) -> tuple["Multigraph", tuple[int, ...]]:
        gone = set(removed)
        return self.edge_subgraph(e for e in range(self.m) if e not in gone)

    def delete_vertex(self, v: int) -> tuple["Multigraph", tuple[int, ...]]:
        """``G \\ v``; the vertex stays as an isolated vertex so ids are stable."""
        return self.delete_edges(self.incidence[v])

    def edge_components(self) -> list[list[int]]:
        """Connected components as sorted edge-id lists (isolated vertices dropped)."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        groups: dict[int, list[int]] = {}
        for e, (u, _) in enumerate(self.edges):
            groups.setdefault(find(u), []).append(e)
        return [groups[r] for r in sorted(groups)]

    def is_connected(self) -> bool:
        """True when all non-isolated vertices lie in one component."""
        return len(self.edge_components()) <= 1


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Multigraph:
    """Build a :class:`Multigraph`; edge ids follow input order."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    edges = []
    incidence: list[list[int]] = [[] for _ in range(n)]
    for e, pair in enumerate(edge_list):
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {e} = ({u}, {v}) has an endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge {e} is a loop at vertex {u}")
        edges.append((u, v))
        incidence[u].append(e)
        incidence[v].append(e)
    return Multigraph(n, tuple(edges), tuple(tuple(inc) for inc in incidence))


@dataclass(frozen=True)
class EdgeColouring:
    """Assignment of colours ``1..k`` to edge ids ``0..m-1``."""

    k: int
    colours: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colours", tuple(int(c) for c in self.colours))

    def __getitem__(self, e: int) -> int:
        return self.colours[e]

    def __len__(self) -> int:
        return len(self.colours)

    def restrict(self, emap: Sequence[int]) -> "EdgeColouring":
        """Restriction to a subgraph given by its edge map."""
        return EdgeColouring(self.k, tuple(self.colours[e] for e in emap))

    def permuted(self, perm: Sequence[int]) -> "EdgeColouring":
        return apply_permutation(self, perm)

    def with_colours(self, colours: Sequence[int]) -> "EdgeColouring":
        return EdgeColouring(self.k, tuple(colours))

    def used_colours(self) -> set[int]:
        return set(self.colours)


def apply_permutation(c: EdgeColouring, perm: Sequence[int]) -> EdgeColouring:
    """``perm o c`` where ``perm = (sigma(1), ..., sigma(k))``."""
    if sorted(perm) != list(range(1, c.k + 1)):
        raise ColouringError(f"{list(perm)} is not a permutation of 1..{c.k}")
    return EdgeColouring(c.k, tuple(perm[x - 1] for x in c.colours))


@dataclass(frozen=True)
class Violation:
    """Two edges of the same colour meeting at ``vertex``."""

    vertex: int
    edges: tuple[int, int]
    colour: int


@dataclass(frozen=True)
class ValidationReport:
    total: bool
    proper: bool
    violations: tuple[Violation, ...] = ()
    bad_edges: tuple[int, ...] = ()
    message: str = ""

    @property
    def valid(self) -> bool:
        return self.total and self.proper

    def __bool__(self) -> bool:
        return self.valid

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "total": self.total,
            "proper": self.proper,
            "violations": [
                {"vertex": v.vertex, "edges": list(v.edges), "colour": v.colour}
                for v in self.violations
            ],
            "bad_edges": list(self.bad_edges),
            "message": self.message,
        }


def validate_colouring(G: Multigraph, c: EdgeColouring) -> ValidationReport:
    """Check totality and properness, listing every failure."""
    bad = []
    message = ""
    if len(c.colours) != G.m:
        message = f"colouring has {len(c.colours)} entries for {G.m} edges"
    for e, x in enumerate(c.colours[: G.m]):
        if not 1 <= x <= c.k:
            bad.append(e)
    total = len(c.colours) == G.m and not bad
    violations = []
    for v in range(G.n):
        first: dict[int, int] = {}
        for e in G.incidence[v]:
            if e >= len(c.colours):
                continue
            x = c.colours[e]
            if x in first:
                violations.append(Violation(v, (first[x], e), x))
            else:
                first[x] = e
    return ValidationReport(
        total=total,
        proper=not violations,
        violations=tuple(violations),
        bad_edges=tuple(bad),
        message=message,
    )


def canonical_word(colours: Sequence[int]) -> bytes:
    """Relabel colours in order of first appearance along the edge ids.

    This is the lexicographically least word in the orbit of ``colours``
    under colour permutations: the first edge must get 1, the next unseen
    colour must get 2, and so on; every other position is forced.
    """
    relabel: dict[int, int] = {}
    out = bytearray(len(colours))
    for i, x in enumerate(colours):
        y = relabel.get(x)
        if y is None:
            y = relabel[x] = len(relabel) + 1
        out[i] = y
    return bytes(out)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """A colouring modulo colour permutation, as a fixed-width byte word."""

    word: bytes

    def colours(self) -> tuple[int, ...]:
        return tuple(self.word)

    def colouring(self, k: int) -> EdgeColouring:
        return EdgeColouring(k, tuple(self.word))

    def __len__(self) -> int:
        return len(self.word)


def canonical_form(G: Multigraph, c: EdgeColouring) -> CanonicalForm:
    if len(c.colours) != G.m:
        raise ColouringError("colouring does not match the graph's edge count")
    if c.k > 255:
        raise ColouringError("palettes above 255 colours do not fit the byte encoding")
    return CanonicalForm(canonical_word(c.colours))


def canonical_form_bruteforce(c: EdgeColouring) -> CanonicalForm:
    """Least colour word over all ``k!`` permutations (reference; k <= 8)."""
    if c.k > 8:
        raise ColouringError("k! enumeration is capped at k = 8")
    best = min(bytes(p[x - 1] for x in c.colours) for p in itertools.permutations(range(1, c.k + 1)))
    return CanonicalForm(best)


@dataclass(frozen=True)
class DifferenceSet:
    edges: frozenset[int]
    structure: str  # "disjoint-paths" | "other"

    @property
    def is_disjoint_paths(self) -> bool:
        return self.structure == "disjoint-paths"

    def __len__(self) -> int:
        return len(self.edges)


def _edges_form_disjoint_paths(G: Multigraph, F: Iterable[int]) -> bool:
    F = list(F)
    deg: dict[int, int] = {}
    for e in F:
        for v in G.edges[e]:
            deg[v] = deg.get(v, 0) + 1
            if deg[v] > 2:
                return False
    # max degree <= 2, so acyclic iff every component has |E| = |V| - 1
    parent = {v: v for v in deg}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in F:
        u, v = G.edges[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def diff(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring) -> DifferenceSet:
    """Edges where ``phi`` and ``psi`` disagree, and whether they form disjoint paths."""
    if len(phi.colours) != G.m or len(psi.colours) != G.m:
        raise ColouringError("colourings do not match the graph")
    if phi.k != psi.k:
        raise ColouringError(f"palettes differ: {phi.k} vs {psi.k}")
    F = frozenset(e for e in range(G.m) if phi.colours[e] != psi.colours[e])
    structure = "disjoint-paths" if _edges_form_disjoint_paths(G, F) else "other"
    return DifferenceSet(F, structure)
