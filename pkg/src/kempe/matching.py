"""Maximum matchings and the repair step used for subquartic planning.

After recolouring a maximum matching ``M`` with a fresh colour, the rest of
the graph is planned componentwise with five colours.  That needs a vertex
in every component of ``G - M`` of degree at most two, or of degree three
with at most two degree-four neighbours.  :func:`repair_matching` trades
matching edges until this holds.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Multigraph

__all__ = [
    "Matching",
    "LemmaCheck",
    "maximum_matching",
    "matching_number",
    "check_matching_lemma",
    "repair_matching",
    "qualifying_vertices",
]


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edge ids.

    ``maximum`` is set only by :func:`maximum_matching`, which also stores a
    Tutte-Berge barrier: ``barrier`` is the set ``A`` with
    ``|M| = (n + |A| - odd(G - A)) / 2``, certifying maximality.
    """

    edges: frozenset[int]
    maximum: bool = False
    barrier: Optional[frozenset[int]] = None

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: int) -> bool:
        return e in self.edges

    def covered(self, G: Multigraph) -> set[int]:
        return {v for e in self.edges for v in G.edges[e]}

    def mate(self, G: Multigraph, v: int) -> Optional[int]:
        for e in G.incidence[v]:
            if e in self.edges:
                return e
        return None


def _adjacency(G: Multigraph, removed_vertices: Iterable[int] = ()) -> list[list[int]]:
    gone = set(removed_vertices)
    adj: list[set[int]] = [set() for _ in range(G.n)]
    for u, v in G.edges:
        if u not in gone and v not in gone:
            adj[u].add(v)
            adj[v].add(u)
    return [sorted(s) for s in adj]


def _edmonds(n: int, adj: list[list[int]]) -> list[int]:
    """Blossom-contracting augmenting-path search; returns the mate array."""
    match = [-1] * n

    def lca(a, b, base, parent):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark(v, b, child, blossom, base, parent):
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root):
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to, base, parent)
                    blossom = [False] * n
                    mark(v, cur, to, blossom, base, parent)
                    mark(to, cur, v, blossom, base, parent)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] == -1:
            v, parent = find_path(root)
            while v != -1:
                pv = parent[v]
                nxt = match[pv]
                match[v], match[pv] = pv, v
                v = nxt
    return match


def matching_number(G: Multigraph, removed_vertices: Iterable[int] = ()) -> int:
    match = _edmonds(G.n, _adjacency(G, removed_vertices))
    return sum(1 for v, u in enumerate(match) if u > v)


def _odd_components(G: Multigraph, removed: set[int]) -> int:
    adj = _adjacency(G, removed)
    seen = set(removed)
    odd = 0
    for s in range(G.n):
        if s in seen:
            continue
        size = 0
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            size += 1
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        odd += size % 2
    return odd


def maximum_matching(G: Multigraph) -> Matching:
    """A maximum matching with a Tutte-Berge certificate.

    The barrier is the Gallai-Edmonds set ``A``: neighbours of the vertices
    missed by some maximum matching, excluding those vertices themselves.
    """
    match = _edmonds(G.n, _adjacency(G))
    edges = set()
    for v, u in enumerate(match):
        if u > v:
            edges.add(min(G.edges_between(v, u)))
    nu = len(edges)
    D = {v for v in range(G.n) if matching_number(G, [v]) == nu}
    A = {u for v in D for u in G.neighbours(v)} - D
    bound = (G.n + len(A) - _odd_components(G, A)) // 2
    if bound != nu:
        raise AssertionError(f"Tutte-Berge bound {bound} does not certify matching size {nu}")
    return Matching(frozenset(edges), True, frozenset(A))


@dataclass(frozen=True)
class LemmaCheck:
    holds: bool
    augmenting_path: Optional[tuple[int, int, int, int]] = None

    def __bool__(self) -> bool:
        return self.holds


def check_matching_lemma(G: Multigraph, M: Matching, x: int, y: int, y1: int) -> LemmaCheck:
    """Every neighbour of ``x`` other than ``y1`` is covered by ``M``.

    Parameters
    ----------
    x, y :
        Ends of a matching edge.
    y1 :
        A neighbour of ``y`` not covered by ``M``.

    Returns
    -------
    LemmaCheck
        False together with the augmenting path ``(x1, x, y, y1)`` when an
        uncovered neighbour ``x1 != y1`` of ``x`` exists.
    """
    if not any(e in M.edges for e in G.edges_between(x, y)):
        raise ValueError(f"{x}{y} is not a matching edge")
    covered = M.covered(G)
    if y1 not in G.neighbours(y) or y1 in covered:
        raise ValueError(f"{y1} is not an uncovered neighbour of {y}")
    for x1 in sorted(set(G.neighbours(x))):
        if x1 != y1 and x1 not in covered:
            return LemmaCheck(False, (x1, x, y, y1))
    return LemmaCheck(True, None)


def _components_without(G: Multigraph, M: frozenset[int]) -> list[list[int]]:
    """Vertex sets of the components of ``G - M``, isolated vertices included."""
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, (u, v) in enumerate(G.edges):
        if e not in M:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(find(v), []).append(v)
    return [groups[r] for r in sorted(groups)]


def _qualifies(G: Multigraph, M: frozenset[int], v: int) -> bool:
    deg = [sum(1 for e in G.incidence[u] if e not in M) for u in range(G.n)]
    if deg[v] <= 2:
        return True
    if deg[v] == 3:
        nbrs = [G.other_end(e, v) for e in G.incidence[v] if e not in M]
        return sum(1 for u in nbrs if deg[u] == 4) <= 2
    return False


def qualifying_vertices(G: Multigraph, M: Matching) -> list[tuple[list[int], Optional[int]]]:
    """For each component of ``G - M``, its least qualifying vertex (or None)."""
    Ms = frozenset(M.edges)
    return [(comp, next((v for v in comp if _qualifies(G, Ms, v)), None))
            for comp in _components_without(G, Ms)]


def _is_bridge_within(G: Multigraph, M: frozenset[int], comp: set[int], e: int) -> bool:
    u, w = G.edges[e]
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for f in G.incidence[x]:
            if f == e or f in M:
                continue
            y = G.other_end(f, x)
            if y in comp and y not in seen:
                seen.add(y)
                stack.append(y)
    return w not in seen


def repair_matching(G: Multigraph, M: Matching) -> Matching:
    """Swap matching edges until every component of ``G - M`` qualifies.

    A failing component has minimum degree three, hence a cycle; on it pick
    the least non-bridge edge ``xy`` with ``x`` uncovered and ``y`` matched
    by ``yz`` to another component, and replace ``yz`` by ``xy``.  The two
    components merge, so the loop ends.
    """
    if G.max_degree() > 4:
        raise ValueError("repair needs maximum degree at most four")
    Ms = set(M.edges)
    for _ in range(G.n + 1):
        frozen = frozenset(Ms)
        failing = next((set(comp) for comp, v in qualifying_vertices(G, Matching(frozen))
                        if v is None), None)
        if failing is None:
            return Matching(frozen, M.maximum, M.barrier if M.maximum else None)
        covered = {v for e in Ms for v in G.edges[e]}
        choice = None
        for e in range(G.m):
            if e in Ms:
                continue
            u, w = G.edges[e]
            if u not in failing or w not in failing:
                continue
            for x, y in ((u, w), (w, u)):
                if x in covered or y not in covered:
                    continue
                yz = next(f for f in G.incidence[y] if f in Ms)
                z = G.other_end(yz, y)
                if z in failing or _is_bridge_within(G, frozen, failing, e):
                    continue
                key = (x, y, e)
                if choice is None or key < choice[0]:
                    choice = (key, e, yz)
        if choice is None:
            raise AssertionError("failing component without an exchangeable edge")
        _, e, yz = choice
        Ms.remove(yz)
        Ms.add(e)
    raise AssertionError("matching repair did not terminate")
