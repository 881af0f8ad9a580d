"""Lifting a Kempe change from a subgraph ``H = G - R`` back to ``G``.

A change on the component ``K'`` of ``H`` is realized in ``G`` by switching
the component ``K`` of ``G`` through the same seed once ``K - R == K'``.
Until then, preparatory switches confined to ``R`` break ``K`` apart; they
leave every edge of ``H`` untouched, so the change stays applicable.
"""

from __future__ import annotations

from typing import Optional

from ..chains import KempeChange, chain_component, component_edges
from ..graph import EdgeColouring, Multigraph, validate_colouring
from .cycle import OrientedCycle
from .engine import PreconditionError, ProofCaseGap, Trace, confined_search
from .plan import KempePlan, verify_plan

__all__ = ["LiftContext", "lift_step", "lift_change"]

Move = tuple[int, int, int]


class LiftContext:
    """Which edges were removed and how preparatory steps are tagged.

    Parameters
    ----------
    removed :
        Edge ids of ``G`` absent from the subgraph.
    prep_tag :
        Tag for case-analysis preparatory switches.
    search_tag :
        Tag for steps found by the search confined to ``removed``.
    cycle :
        The removed cycle, when ``removed`` is the edge set of a cycle; it
        enables the segment cases.
    """

    def __init__(self, removed, prep_tag: str = "lift", search_tag: str = "search-fallback",
                 cycle: Optional[OrientedCycle] = None):
        self.removed = frozenset(removed)
        self.prep_tag = prep_tag
        self.search_tag = search_tag
        self.cycle = cycle


def _is_clean(G, col, a, b, seed, removed, target) -> bool:
    return frozenset(component_edges(G, col, a, b, seed)) - removed == target


def _missing(G, col, v, k) -> set[int]:
    present = {col[e] for e in G.incidence[v]}
    return {x for x in range(1, k + 1) if x not in present}


def _case_common_missing(G, col, k, a, b, K, removed) -> list[Move]:
    """Removed edges of K whose ends share a missing colour outside {a, b}."""
    out = []
    for e in sorted(K):
        if e not in removed:
            continue
        x, y = G.edges[e]
        common = (_missing(G, col, x, k) & _missing(G, col, y, k)) - {a, b}
        if common:
            out.append((col[e], min(common), e))
    return out


def _case_star(G, col, k, a, b, K, removed) -> list[Move]:
    """Two removed edges xv, yv of K where a third colour is missing at x and y."""
    out = []
    ks = [e for e in sorted(K) if e in removed]
    for e1 in ks:
        for e2 in ks:
            if e1 == e2:
                continue
            shared = set(G.edges[e1]) & set(G.edges[e2])
            if len(shared) != 1:
                continue
            (v,) = shared
            x, y = G.other_end(e1, v), G.other_end(e2, v)
            mx, my, mv = (_missing(G, col, u, k) for u in (x, y, v))
            for g in sorted((mx & my) - mv - {a, b}):
                ez = next(f for f in G.incidence[v] if col[f] == g)
                if ez not in removed:
                    continue
                z = G.other_end(ez, v)
                spare = (mv & _missing(G, col, z, k)) - {a, b, g}
                if spare:
                    out.append((g, min(spare), ez))
                comp = frozenset(component_edges(G, col, col[e2], g, e2))
                if comp <= removed:
                    out.append((col[e2], g, e2))
    return out


def _runs(G, col, a, b, seed, target, cycle_edges):
    """Maximal stretches of removed edges in K, oriented away from K'.

    Yields ``(run_edges, run_vertices)`` for stretches with K' on one side
    and some other edge on the far side.
    """
    comp = chain_component(G, col, a, b, edge=seed)
    edges, verts = list(comp.edges), list(comp.vertices)
    L = len(edges)
    cyclic = comp.shape == "cycle"
    if cyclic:
        start = next((i for i in range(L) if edges[i] not in cycle_edges), None)
        if start is None:
            return
        edges = edges[start:] + edges[:start]
        verts = verts[start:] + verts[:start]
        verts.append(verts[0])
    i = 0
    while i < L:
        if edges[i] not in cycle_edges:
            i += 1
            continue
        j = i
        while j + 1 < L and edges[j + 1] in cycle_edges:
            j += 1
        before = edges[i - 1] if i > 0 else (edges[-1] if cyclic else None)
        after = edges[j + 1] if j + 1 < L else (edges[0] if cyclic else None)
        run = edges[i:j + 1]
        rv = verts[i:j + 2]
        if before in target and after is not None and after not in target:
            yield run, rv
        elif after in target and before is not None and before not in target:
            yield run[::-1], rv[::-1]
        i = j + 1


def _case_segment(G, col, k, a, b, seed, target, cycle: OrientedCycle) -> list[Move]:
    """Switches on alternating paths lying on the cycle near a dirty stretch."""
    cedges = cycle.edge_set
    out = []
    others = sorted(set(range(1, k + 1)) - {a, b})
    for run, rv in _runs(G, col, a, b, seed, target, cedges):
        x, x_prev = rv[-1], rv[-2]
        # the cycle edge at x beyond the stretch
        beyond = [f for f in G.incidence[x] if f in cedges and f != run[-1]]
        if beyond and col[beyond[0]] in others and len(others) == 2:
            c, d = others
            comp = frozenset(component_edges(G, col, c, d, beyond[0]))
            if comp <= cedges:
                out.append((c, d, beyond[0]))
        rho = col[run[-1]]
        for g in sorted(_missing(G, col, x_prev, k) - {a, b}):
            comp = frozenset(component_edges(G, col, rho, g, run[-1]))
            if comp <= cedges:
                out.append((rho, g, run[-1]))
    return out


def _candidates(G, col, k, a, b, seed, target, ctx: LiftContext) -> list[Move]:
    K = frozenset(component_edges(G, col, a, b, seed))
    out = _case_common_missing(G, col, k, a, b, K, ctx.removed)
    out += _case_star(G, col, k, a, b, K, ctx.removed)
    if ctx.cycle is not None:
        out += _case_segment(G, col, k, a, b, seed, target, ctx.cycle)
    return out


def _apply(G, col, mv: Move) -> list[int]:
    p, q, s = mv
    new = list(col)
    for f in component_edges(G, col, p, q, s):
        new[f] = q if col[f] == p else p
    return new


def lift_step(tr: Trace, change: KempeChange, tag: str, ctx: LiftContext,
              max_rounds: int = 64, compound: bool = True) -> None:
    """Realize ``change`` (edge ids of ``G``, certificate = ``K'``) on ``tr``.

    Preparatory switches are chosen by the case analysis with one step of
    lookahead: a candidate is taken when afterwards the change is clean or
    another common-missing-colour switch is available.  When no case fits
    the whole component ``K`` is switched and the other components of ``H``
    it dragged along are switched back, each by a nested lift.  A search
    confined to the removed edges is the last resort.
    """
    G = tr.G
    a, b, seed = change.a, change.b, change.seed
    target = change.edges
    removed = ctx.removed
    if target is None:
        raise ValueError("lifting needs the component certificate")

    def clean(col) -> bool:
        return _is_clean(G, col, a, b, seed, removed, target)

    _prepare(tr, change, ctx, clean, max_rounds)
    if not clean(tr.col) and compound:
        mark, saved = len(tr.steps), list(tr.col)
        try:
            _compound(tr, change, tag, ctx, max_rounds)
            return
        except ProofCaseGap:
            del tr.steps[mark:]
            tr.col[:] = saved
    if not clean(tr.col):
        moves = confined_search(tr, removed, clean)
        if moves is None:
            raise ProofCaseGap(f"cannot lift ({a}, {b}) change at edge {seed}")
        for p, q, s in moves:
            tr.switch(p, q, s, ctx.search_tag)
    comp = tr.switch(a, b, seed, tag)
    assert comp - removed == target


def _prepare(tr: Trace, change: KempeChange, ctx: LiftContext, clean, max_rounds: int) -> None:
    G, k = tr.G, tr.k
    a, b, seed = change.a, change.b, change.seed
    for _ in range(max_rounds):
        if clean(tr.col):
            return
        chosen = None
        for mv in _candidates(G, tr.col, k, a, b, seed, change.edges, ctx):
            if not frozenset(component_edges(G, tr.col, mv[0], mv[1], mv[2])) <= ctx.removed:
                continue
            after = _apply(G, tr.col, mv)
            if clean(after):
                chosen = mv
                break
            K2 = frozenset(component_edges(G, after, a, b, seed))
            if _case_common_missing(G, after, k, a, b, K2, ctx.removed):
                chosen = mv
                break
        if chosen is None:
            return
        tr.switch(chosen[0], chosen[1], chosen[2], ctx.prep_tag)


def _compound(tr: Trace, change: KempeChange, tag: str, ctx: LiftContext,
              max_rounds: int) -> None:
    """Switch all of ``K`` and undo its extra parts in ``H`` one by one.

    Each extra part is a maximal ``(a, b)``-component of ``H`` both before
    and after the switch, so undoing it is again a Kempe change of ``H``.
    """
    G = tr.G
    a, b = change.a, change.b
    kept = frozenset(range(G.m)) - ctx.removed
    K = frozenset(tr.component(a, b, change.seed))
    extra = set(K - ctx.removed - change.edges)
    parts = []
    while extra:
        s = min(extra)
        part = frozenset(tr.component(a, b, s, kept))
        parts.append((s, part))
        extra -= part
    tr.switch(a, b, change.seed, tag)
    for s, part in parts:
        lift_step(tr, KempeChange(a, b, s, part), ctx.prep_tag, ctx, max_rounds, compound=False)


def lift_change(G: Multigraph, v: int, c: EdgeColouring, change: KempeChange) -> KempePlan:
    """Realize a Kempe change of ``G - v`` as a short plan in ``G``.

    Parameters
    ----------
    G, c :
        The graph and its current colouring.
    v :
        The deleted vertex; ``G - v`` keeps ``v`` isolated so edge ids are
        those of ``G.delete_vertex(v)``.
    change :
        A Kempe change valid in ``G - v``, in that subgraph's edge ids.

    Returns
    -------
    KempePlan
        Plan from ``c`` whose effect on the edges of ``G - v`` equals the
        change.  Its target is the colouring it reaches.
    """
    if not validate_colouring(G, c).valid:
        raise PreconditionError("colouring is not valid")
    H, emap = G.delete_vertex(v)
    sub = [c.colours[e] for e in emap]
    if sub[change.seed] not in (change.a, change.b):
        raise PreconditionError("change does not apply to the restricted colouring")
    comp = component_edges(H, sub, change.a, change.b, change.seed)
    if change.edges is not None and frozenset(change.edges) != frozenset(comp):
        raise PreconditionError("change certificate is not a maximal component of G - v")
    lifted = KempeChange(change.a, change.b, emap[change.seed], frozenset(emap[f] for f in comp))
    tr = Trace(G, c.colours, c.k)
    lift_step(tr, lifted, "lift", LiftContext(G.incidence[v]))
    final = tr.colouring()
    plan = KempePlan(c.k, tuple(range(1, c.k + 1)), [s for s, _ in tr.steps],
                     [t for _, t in tr.steps])
    check = verify_plan(G, c, plan, final)
    assert check.ok, check.reason
    return plan

