"""Independent reference implementations used to derive frozen test values.

Nothing here imports the package under test: graphs are plain edge lists,
colourings plain tuples, and components come from networkx.
"""

from __future__ import annotations

import itertools
from collections import deque

import networkx as nx


def proper(n, edges, col):
    for v in range(n):
        seen = [col[e] for e, (x, y) in enumerate(edges) if v in (x, y)]
        if len(seen) != len(set(seen)):
            return False
    return True


def all_colourings(n, edges, k):
    """Every proper labelled colouring, by plain edge-order backtracking."""
    out = []
    col = []

    def clash(e, x):
        u, v = edges[e]
        return any(col[f] == x and ({u, v} & set(edges[f])) for f in range(e))

    def go(e):
        if e == len(edges):
            out.append(tuple(col))
            return
        for x in range(1, k + 1):
            if not clash(e, x):
                col.append(x)
                go(e + 1)
                col.pop()

    go(0)
    return out


def canon(col):
    """Least colour word over all permutations of the palette."""
    k = max(col, default=0)
    return min(tuple(p[x - 1] for x in col) for p in itertools.permutations(range(1, k + 1)))


def kempe_component(n, edges, col, a, b, seed):
    H = nx.MultiGraph()
    H.add_nodes_from(range(n))
    for e, (x, y) in enumerate(edges):
        if col[e] in (a, b):
            H.add_edge(x, y, key=e)
    x, _ = edges[seed]
    verts = nx.node_connected_component(H, x)
    return frozenset(key for u, v, key in H.edges(keys=True) if u in verts)


def switches(n, edges, col, k):
    out = set()
    for e in range(len(edges)):
        for other in range(1, k + 1):
            if other == col[e]:
                continue
            comp = kempe_component(n, edges, col, col[e], other, e)
            a, b = col[e], other
            new = tuple((b if c == a else a) if i in comp else c for i, c in enumerate(col))
            out.add(new)
    return out


def kempe_classes(n, edges, k):
    """Connected components of the switch graph on canonical words."""
    words = {canon(c) for c in all_colourings(n, edges, k)}
    seen = set()
    classes = []
    for w in sorted(words):
        if w in seen:
            continue
        cls = {w}
        queue = deque([w])
        while queue:
            x = queue.popleft()
            for y in switches(n, edges, x, k):
                cy = canon(y)
                if cy not in cls:
                    cls.add(cy)
                    queue.append(cy)
        seen |= cls
        classes.append(cls)
    return classes


def matching_number(n, edges):
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(edges)
    return len(nx.max_weight_matching(G, maxcardinality=True))


def class_index(n, edges, k):
    """Map each canonical word to the index of its Kempe class."""
    return {w: i for i, cls in enumerate(kempe_classes(n, edges, k)) for w in cls}


def components_qualify(n, edges, matched):
    """Every component of G - M has a vertex of degree <= 2, or of degree 3
    with at most two degree-4 neighbours; degrees are taken in G - M."""
    H = nx.MultiGraph()
    H.add_nodes_from(range(n))
    H.add_edges_from(e for i, e in enumerate(edges) if i not in matched)
    deg = dict(H.degree())
    for comp in nx.connected_components(H):
        if not any(deg[v] <= 2 or (deg[v] == 3 and sum(deg[u] == 4 for u in H.neighbors(v)) <= 2)
                   for v in comp):
            return False
    return True
