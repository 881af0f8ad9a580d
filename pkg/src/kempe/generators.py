"""Graph and colouring generators for experiments and tests."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .graph import ColouringError, EdgeColouring, Multigraph, build_graph

__all__ = [
    "Factorization",
    "complete_graph",
    "complete_bipartite",
    "cycle_graph",
    "path_graph",
    "star_graph",
    "petersen_graph",
    "prism_graph",
    "cube_graph",
    "circulant_graph",
    "perfect_one_factorization",
    "is_perfect",
    "rigid_colouring",
    "random_bounded_degree",
    "any_colouring",
    "random_colouring",
]


def complete_graph(n: int) -> Multigraph:
    if n < 1:
        raise ValueError("n must be at least 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(p: int, q: int) -> Multigraph:
    """``K_{p,q}`` with parts ``0..p-1`` and ``p..p+q-1``."""
    if p < 1 or q < 1:
        raise ValueError("part sizes must be at least 1")
    return build_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Multigraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Multigraph:
    """``K_{1,leaves}`` with centre 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def prism_graph(n: int = 3) -> Multigraph:
    """``C_n x K_2``; ``n = 3`` is the triangular prism."""
    top = [(i, (i + 1) % n) for i in range(n)]
    bottom = [(n + i, n + (i + 1) % n) for i in range(n)]
    rungs = [(i, n + i) for i in range(n)]
    return build_graph(2 * n, top + bottom + rungs)


def cube_graph() -> Multigraph:
    """The 3-cube ``Q3`` on bit strings ``0..7``."""
    return build_graph(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


def circulant_graph(n: int, jumps: tuple[int, ...]) -> Multigraph:
    edges = set()
    for i in range(n):
        for j in jumps:
            u, v = i, (i + j) % n
            edges.add((min(u, v), max(u, v)))
    return build_graph(n, sorted(edges))


# -- one-factorizations -------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """Perfect matchings partitioning ``E(K_{2n})``, as vertex pairs."""

    order: int
    factors: tuple[tuple[tuple[int, int], ...], ...]
    perfect: bool

    def colouring(self) -> tuple[Multigraph, EdgeColouring]:
        """``K_{2n}`` with each edge coloured by its factor index (from 1)."""
        G = complete_graph(self.order)
        index = {}
        for i, factor in enumerate(self.factors):
            for u, v in factor:
                index[(min(u, v), max(u, v))] = i + 1
        return G, EdgeColouring(len(self.factors), tuple(index[e] for e in G.edges))


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _union_is_hamiltonian(order: int, f1, f2) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in range(order)}
    for u, v in list(f1) + list(f2):
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == order


def is_perfect(order: int, factors) -> bool:
    """Check a factorization of ``K_order`` and that every pair union is a Hamilton cycle."""
    seen = set()
    for f in factors:
        verts = [v for e in f for v in e]
        if sorted(verts) != list(range(order)):
            return False
        for u, v in f:
            seen.add((min(u, v), max(u, v)))
    if len(seen) != order * (order - 1) // 2 or len(factors) != order - 1:
        return False
    return all(_union_is_hamiltonian(order, factors[i], factors[j])
               for i in range(len(factors)) for j in range(i + 1, len(factors)))


def _rotational(order: int):
    q = order - 1
    inf = order - 1
    factors = []
    for i in range(q):
        f = [(min(inf, i), max(inf, i))]
        for j in range(1, order // 2):
            u, v = (i + j) % q, (i - j) % q
            f.append((min(u, v), max(u, v)))
        factors.append(tuple(sorted(f)))
    return factors


def _backtrack_p1f(order: int, max_nodes: int):
    """First perfect 1-factorization found; factor ``i`` contains ``(0, i + 1)``."""
    nodes = 0
    used: set[tuple[int, int]] = set()
    factors: list[list[tuple[int, int]]] = []

    def closes_short_cycle(f):
        # every earlier factor united with f must be a single Hamilton cycle
        return not all(_union_is_hamiltonian(order, g, f) for g in factors)

    def extend(i, f, covered):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise RuntimeError("one-factorization search budget exhausted")
        free = next((v for v in range(order) if v not in covered), None)
        if free is None:
            if closes_short_cycle(f):
                return False
            factors.append(list(f))
            if fill(i + 1):
                return True
            factors.pop()
            return False
        for w in range(free + 1, order):
            e = (free, w)
            if w in covered or e in used:
                continue
            used.add(e)
            covered |= {free, w}
            f.append(e)
            if extend(i, f, covered):
                return True
            f.pop()
            covered -= {free, w}
            used.discard(e)
        return False

    def fill(i):
        if i == order - 1:
            return True
        e = (0, i + 1)
        used.add(e)
        ok = extend(i, [e], {0, i + 1})
        if not ok:
            used.discard(e)
        return ok

    if not fill(0):
        return None
    return [tuple(sorted(f)) for f in factors]


def perfect_one_factorization(order: int, max_nodes: int = 10**6) -> Factorization:
    """A perfect 1-factorization of ``K_order``.

    Uses the rotational construction when ``order - 1`` is prime and a
    backtracking search otherwise.  Perfectness is verified either way.

    Raises
    ------
    RuntimeError
        The search budget ran out or no perfect factorization was found.
    """
    if order < 4 or order % 2:
        raise ValueError("order must be even and at least 4")
    factors = _rotational(order) if _is_prime(order - 1) else None
    if factors is None or not is_perfect(order, factors):
        factors = _backtrack_p1f(order, max_nodes)
    if factors is None or not is_perfect(order, factors):
        raise RuntimeError(f"no perfect 1-factorization of K_{order} found")
    return Factorization(order, tuple(tuple(f) for f in factors), True)


def rigid_colouring(order: int) -> tuple[Multigraph, EdgeColouring]:
    """``K_order`` (odd) coloured from a perfect 1-factorization of ``K_{order+1}``.

    The last vertex is deleted and every edge keeps its factor index, so any
    two colour classes form a Hamilton path and no Kempe change is possible
    beyond renaming colours.
    """
    if order < 3 or order % 2 == 0:
        raise ValueError("order must be odd and at least 3")
    fact = perfect_one_factorization(order + 1)
    G = complete_graph(order)
    index = {}
    for i, factor in enumerate(fact.factors):
        for u, v in factor:
            if v < order:
                index[(u, v)] = i + 1
    return G, EdgeColouring(order, tuple(index[e] for e in G.edges))


# -- random instances ---------------------------------------------------------

def random_bounded_degree(n: int, max_degree: int, multigraph: bool = False,
                          seed: Optional[int] = None, attempts: int = 200) -> Multigraph:
    """Seeded random graph with maximum degree at most ``max_degree``.

    Edges are proposed in random order and kept while both ends have spare
    degree.  With ``multigraph=True`` repeated pairs are allowed and the draw
    is retried until at least one parallel pair appears.
    """
    if max_degree not in (2, 3, 4):
        raise ValueError("max_degree must be 2, 3 or 4")
    if n < 2:
        raise ValueError("need at least two vertices")
    rng = random.Random(seed)
    for _ in range(attempts):
        deg = [0] * n
        edges = []
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        if multigraph:
            pairs = pairs * 2
        rng.shuffle(pairs)
        seen = set()
        for u, v in pairs:
            if deg[u] >= max_degree or deg[v] >= max_degree:
                continue
            if (u, v) in seen and not multigraph:
                continue
            if rng.random() < 0.25:
                continue
            seen.add((u, v))
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
        G = build_graph(n, sorted(edges))
        if G.m and (not multigraph or not G.is_simple()):
            return G
    raise ValueError(f"could not draw a graph with n = {n}, max degree {max_degree}"
                     f"{' and a parallel pair' if multigraph else ''}")


def _colour_search(G: Multigraph, k: int, rng: Optional[random.Random]) -> Optional[list[int]]:
    col = [0] * G.m
    order = list(range(G.m))
    palette = list(range(1, k + 1))

    def options(e):
        u, v = G.edges[e]
        taken = {col[f] for f in G.incidence[u] + G.incidence[v] if col[f]}
        opts = [x for x in palette if x not in taken]
        if rng is not None:
            rng.shuffle(opts)
        return opts

    stack = [(0, iter(options(0)))] if order else []
    while stack:
        i, it = stack[-1]
        e = order[i]
        x = next(it, None)
        if x is None:
            col[e] = 0
            stack.pop()
            continue
        col[e] = x
        if i + 1 == G.m:
            return col
        stack.append((i + 1, iter(options(order[i + 1]))))
    return col if not order else None


def any_colouring(G: Multigraph, k: int) -> EdgeColouring:
    """First proper ``k``-colouring in edge order (backtracking).

    Raises
    ------
    ColouringError
        If ``G`` has no proper ``k``-edge-colouring.
    """
    col = _colour_search(G, k, None)
    if col is None:
        raise ColouringError(f"no proper {k}-edge-colouring exists")
    return EdgeColouring(k, tuple(col))


def random_colouring(G: Multigraph, k: int, seed=None) -> EdgeColouring:
    """A proper ``k``-colouring found by randomized backtracking."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    col = _colour_search(G, k, rng)
    if col is None:
        raise ColouringError(f"no proper {k}-edge-colouring exists")
    return EdgeColouring(k, tuple(col))
