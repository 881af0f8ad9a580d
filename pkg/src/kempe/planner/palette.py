"""Shrinking a colouring's palette to ``Delta + 1`` colours by Kempe changes.

Off-palette edges are eliminated one at a time.  An edge whose ends share a
missing palette colour is a single-edge component for that colour pair and
is recoloured directly.  Otherwise an alternating-path switch at one end
tries to create a shared missing colour, and failing that a Vizing fan is
rotated, every rotation step itself being a single-edge Kempe change.
"""

from __future__ import annotations

import heapq
from typing import Optional

from ..chains import component_edges
from ..graph import EdgeColouring, Multigraph
from .engine import PreconditionError, ProofCaseGap, Trace
from .lemmas import check_palette
from .plan import KempePlan, verify_plan

__all__ = ["reduce_palette", "reduce_trace"]

MAX_RETRIES = 8


def _recolour(tr: Trace, e: int, colour: int, tag: str) -> None:
    """Single-edge switch of ``e`` to ``colour``; both ends must miss it."""
    comp = tr.switch(tr.col[e], colour, e, tag)
    if comp != {e}:
        raise ProofCaseGap(f"recolouring edge {e} touched {sorted(comp)}")


def _shared_missing(tr: Trace, e: int, top: int) -> Optional[int]:
    x, y = tr.G.edges[e]
    common = tr.missing(x, top) & tr.missing(y, top)
    return min(common) if common else None


def _path_retry(tr: Trace, e: int, top: int, tag: str) -> bool:
    """Switch an (alpha, beta) path at one end that avoids the other end."""
    G = tr.G
    x, y = G.edges[e]
    tries = 0
    for alpha in sorted(tr.missing(x, top)):
        for beta in sorted(tr.missing(y, top)):
            if tries >= MAX_RETRIES:
                return False
            tries += 1
            # y misses beta and sees alpha; the path from y must not reach x
            f = tr.edge_with(y, alpha)
            if f is None:
                continue
            comp = component_edges(G, tr.col, alpha, beta, f)
            touched = {w for g in comp for w in G.edges[g]}
            if x not in touched:
                tr.switch(alpha, beta, f, tag)
                return True
    return False


def _vizing_fan(tr: Trace, e: int, top: int, tag: str) -> None:
    """Recolour ``e`` into the palette with a Misra-Gries fan at one end."""
    G = tr.G
    x, y0 = G.edges[e]

    def free(v):
        return tr.missing(v, top)

    fan, fan_edges = [y0], [e]
    while True:
        last = fan[-1]
        nxt = None
        for f in sorted(G.incidence[x]):
            z = G.other_end(f, x)
            if f in fan_edges or z in fan or tr.col[f] > top:
                continue
            if tr.col[f] in free(last):
                nxt = (f, z)
                break
        if nxt is None:
            break
        fan_edges.append(nxt[0])
        fan.append(nxt[1])
    c = min(free(x))
    d = min(free(fan[-1]))
    if d not in free(x):
        f = tr.edge_with(x, d)
        tr.switch(c, d, f, tag)

    def is_fan(prefix_len: int) -> bool:
        return all(tr.col[fan_edges[j]] <= top and tr.col[fan_edges[j]] in free(fan[j - 1])
                   for j in range(1, prefix_len))

    for i, w in enumerate(fan):
        if d in free(w) and is_fan(i + 1):
            break
    else:
        raise ProofCaseGap("no fan vertex misses the inverted colour")
    old = [tr.col[f] for f in fan_edges[: i + 1]]
    _recolour(tr, fan_edges[i], d, tag)
    for j in range(i, 0, -1):
        _recolour(tr, fan_edges[j - 1], old[j], tag)


def _best_first(tr: Trace, top: int, budget: int = 20000) -> None:
    """Fallback: search switches minimizing the number of off-palette edges."""
    from ..chains import enumerate_switches

    def score(col):
        return sum(1 for x in col if x > top)

    start = tuple(tr.col)
    parent = {start: None}
    heap = [(score(start), 0, start)]
    counter = 0
    while heap:
        s, _, col = heapq.heappop(heap)
        if s == 0:
            path = []
            while parent[col] is not None:
                col, mv = parent[col]
                path.append(mv)
            for a, b, seed in reversed(path):
                tr.switch(a, b, seed, "search-fallback")
            return
        counter += 1
        if counter > budget:
            break
        for ch in enumerate_switches(tr.G, EdgeColouring(tr.k, col)):
            new = list(col)
            for f in ch.edges:
                new[f] = ch.b if col[f] == ch.a else ch.a
            t = tuple(new)
            if t not in parent:
                parent[t] = (col, (ch.a, ch.b, ch.seed))
                heapq.heappush(heap, (score(t), len(parent), t))
    raise ProofCaseGap("palette reduction search budget exhausted")


def reduce_trace(tr: Trace, top: int, tag: str = "palette") -> None:
    """Rewrite ``tr`` until every colour is at most ``top``."""
    for e in range(tr.G.m):
        for _ in range(MAX_RETRIES + 2):
            if tr.col[e] <= top:
                break
            alpha = _shared_missing(tr, e, top)
            if alpha is not None:
                _recolour(tr, e, alpha, tag)
                break
            if _path_retry(tr, e, top, tag):
                continue
            try:
                snapshot = (list(tr.col), len(tr.steps))
                _vizing_fan(tr, e, top, tag)
            except ProofCaseGap:
                tr.col, tr.steps = snapshot[0], tr.steps[: snapshot[1]]
                _best_first(tr, top)
    if any(x > top for x in tr.col):
        _best_first(tr, top)


def reduce_palette(G: Multigraph, c: EdgeColouring,
                   target: Optional[int] = None) -> tuple[EdgeColouring, KempePlan]:
    """Kempe-equivalent colouring using only colours ``1..target``.

    Parameters
    ----------
    G, c :
        Graph and a valid ``k``-colouring with ``k >= Delta + 1``.
    target :
        Palette size to reach; defaults to ``Delta + 1``.

    Returns
    -------
    (EdgeColouring, KempePlan)
        The reduced colouring (still a ``k``-colouring) and a verified plan
        reaching it from ``c``.
    """
    check_palette(G, c, c.k)
    top = G.max_degree() + 1 if target is None else target
    if top < G.max_degree() + 1 or c.k < top:
        raise PreconditionError(f"need Delta + 1 <= target <= k, got target {top}, k {c.k}")
    tr = Trace(G, c.colours, c.k)
    reduce_trace(tr, top)
    final = tr.colouring()
    plan = KempePlan(c.k, tuple(range(1, c.k + 1)), [s for s, _ in tr.steps],
                     [t for _, t in tr.steps])
    check = verify_plan(G, c, plan, final)
    assert check.ok, check.reason
    return final, plan
