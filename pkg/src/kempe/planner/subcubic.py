"""Subcubic graphs with ``Delta + 1`` colours.

Components with a vertex of degree at most two go through the
vertex-deletion recursion.  A cubic component is handled through a shortest
cycle ``C``: plan on ``G - E(C)``, lift every change back, then resolve the
remaining disagreement, which lives on ``C`` only.  That last stage works
with difference vertices, balance normalization and double switches.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from ..graph import EdgeColouring, Multigraph
from .cycle import OrientedCycle, shortest_cycle
from .engine import (
    SEGMENT_SEARCH, PreconditionError, ProofCaseGap, Steps, Trace, map_steps, merge, restrict,
    search_steps,
)
from .lemmas import low_degree_vertex, vertex_deletion_steps
from .lifting import LiftContext, lift_step
from .paths import close_path_difference

__all__ = [
    "ObservationPath",
    "subcubic_steps",
    "cubic_cycle_steps",
    "difference_vertices",
    "double_switch",
    "find_disjoint_alternating_path",
]

LOCAL_SEARCH_BUDGET = 200000


def _side(G: Multigraph, C: OrientedCycle, col: Sequence[int], v: int) -> tuple[int, int, int]:
    """(left, off, right) colours at cycle vertex ``v``."""
    return col[C.e_minus(v)], col[C.off_edge(G, v)], col[C.e_plus(v)]


def difference_vertices(G: Multigraph, C: OrientedCycle, phi: Sequence[int],
                        psi: Sequence[int]) -> list[int]:
    """Cycle vertices whose left and right colour pairs differ, in cycle order."""
    out = []
    for v in C.verts:
        left = {phi[C.e_minus(v)], psi[C.e_minus(v)]}
        right = {phi[C.e_plus(v)], psi[C.e_plus(v)]}
        if left != right:
            out.append(v)
    return out


def _balanced(C: OrientedCycle, phi, psi) -> bool:
    return all(psi[C.e_minus(v)] == phi[C.e_plus(v)] for v in C.verts)


def _double_ready(G, C, fwd: Trace, bwd: Trace, v: int) -> bool:
    off = C.off_edge(G, v)
    a, b = fwd.col[off], fwd.col[C.e_plus(v)]
    if bwd.col[off] != a or bwd.col[C.e_minus(v)] != b:
        return False
    return (set(fwd.component(a, b, off)) == {off, C.e_plus(v)}
            and set(bwd.component(a, b, off)) == {off, C.e_minus(v)})


def _double(G, C, fwd: Trace, bwd: Trace, v: int) -> None:
    off = C.off_edge(G, v)
    a, b = fwd.col[off], fwd.col[C.e_plus(v)]
    fwd.switch(a, b, off, "double-switch")
    bwd.switch(a, b, off, "double-switch")


def _switch_stretch(G, C, fwd: Trace, bwd: Trace, D: list[int]) -> bool:
    """Switch a stretch between consecutive difference vertices if it is a
    maximal alternating path in either colouring."""
    if len(D) < 2:
        return False
    for i, x in enumerate(D):
        y = D[(i + 1) % len(D)]
        path = set(C.arc_edges(x, y))
        e = C.e_plus(x)
        p, q = fwd.col[e], bwd.col[e]
        for tr in (fwd, bwd):
            if set(tr.component(p, q, e)) == path:
                tr.switch(p, q, e, "balance")
                return True
    return False


def _switch_confined_path(G, C, fwd: Trace, bwd: Trace) -> bool:
    """Switch a cycle-confined path that creates an agreeing cycle edge."""
    EC = C.edge_set
    for v in C.verts:
        p = fwd.col[C.e_minus(v)]
        if p in fwd.missing(C.right(v)):
            e = C.e_plus(v)
            if set(fwd.component(p, fwd.col[e], e)) <= EC:
                fwd.switch(p, fwd.col[e], e, "balance")
                return True
        q = bwd.col[C.e_plus(v)]
        if q in bwd.missing(C.left(v)):
            e = C.e_minus(v)
            if set(bwd.component(q, bwd.col[e], e)) <= EC:
                bwd.switch(q, bwd.col[e], e, "balance")
                return True
    return False


def _repair(G, C, fwd: Trace, bwd: Trace, v: int, D: list[int]) -> bool:
    """Moves that restore the structure around ``v`` when a double switch
    is not yet available there."""
    EC = C.edge_set
    off = C.off_edge(G, v)
    a, b = fwd.col[off], fwd.col[C.e_plus(v)]
    for m in sorted(fwd.missing(v)):
        if m in fwd.missing(C.right(v)):
            fwd.switch(fwd.col[C.e_plus(v)], m, C.e_plus(v), "balance")
            return True
    for m in sorted(bwd.missing(v)):
        if m in bwd.missing(C.left(v)):
            bwd.switch(bwd.col[C.e_minus(v)], m, C.e_minus(v), "balance")
            return True
    u_off = G.other_end(off, v)
    for d in sorted(fwd.missing(u_off) - {a, b}):
        cf = set(fwd.component(a, d, off))
        cb = set(bwd.component(a, d, off))
        if cf - EC == cb - EC:
            fwd.switch(a, d, off, "balance")
            bwd.switch(a, d, off, "balance")
            return True
    w = C.left(v)
    if w in D and _double_ready(G, C, fwd, bwd, w):
        _double(G, C, fwd, bwd, w)
        return True
    return False


def _even_pair(C: OrientedCycle, D: list[int]) -> tuple[int, int]:
    L = len(C)
    for i, x in enumerate(D):
        for j in range(1, len(D)):
            y = D[(i + j) % len(D)]
            r = (C.pos(y) - C.pos(x)) % L
            if r and r % 2 == 0:
                return x, r
    raise ProofCaseGap("no two difference vertices at even distance")


def cycle_base(G: Multigraph, C0: OrientedCycle, fwd: Trace, bwd: Trace) -> None:
    """Bring two colourings that agree off ``C0`` into full agreement."""
    EC = C0.edge_set
    L = len(C0)
    for _ in range(12 * L + 24):
        if any(fwd.col[e] != bwd.col[e] for e in range(G.m) if e not in EC):
            raise ProofCaseGap("colourings disagree off the cycle")
        dis = [e for e in C0.edges if fwd.col[e] != bwd.col[e]]
        if not dis:
            return
        if len(dis) < L:
            close_path_difference(fwd, bwd)
            return
        D = difference_vertices(G, C0, fwd.col, bwd.col)
        if not D:
            e0, e1 = C0.edges[0], C0.edges[1]
            comp = fwd.switch(fwd.col[e0], fwd.col[e1], e0, "balance")
            if comp != EC:
                raise ProofCaseGap("two-coloured cycle is not one component")
            continue
        if _switch_stretch(G, C0, fwd, bwd, D):
            continue
        C = C0 if _balanced(C0, fwd.col, bwd.col) else C0.reversed()
        if not _balanced(C, fwd.col, bwd.col):
            raise ProofCaseGap("cycle vertices cannot be balanced")
        if _switch_confined_path(G, C, fwd, bwd):
            continue
        D = difference_vertices(G, C, fwd.col, bwd.col)
        x, r = _even_pair(C, D)
        i0 = C.pos(x)
        moved = False
        for t in range(1, r, 2):
            u = C.verts[(i0 + t) % L]
            if _double_ready(G, C, fwd, bwd, u):
                _double(G, C, fwd, bwd, u)
                moved = True
            else:
                if not _repair(G, C, fwd, bwd, u, D):
                    raise ProofCaseGap(f"no double switch or repair at vertex {u}")
                moved = True
                break
        if not moved:
            raise ProofCaseGap("double switch sequence was empty")
    raise ProofCaseGap("cycle stage did not converge")


def cubic_cycle_steps(G: Multigraph, phi: Sequence[int], psi: Sequence[int]) -> Steps:
    """Exact steps between 4-colourings of a connected cubic simple graph."""
    if list(phi) == list(psi):
        return []
    C = shortest_cycle(G)
    EC = C.edge_set
    H, emap = G.delete_edges(EC)
    sub = vertex_deletion_steps(H, restrict(phi, emap), restrict(psi, emap), 4, low_degree_vertex)
    fwd = Trace(G, phi, 4)
    ctx = LiftContext(EC, prep_tag="segment", search_tag=SEGMENT_SEARCH, cycle=C)
    for ch, tag in map_steps(sub, emap):
        lift_step(fwd, ch, tag, ctx)
    bwd = Trace(G, psi, 4)
    try:
        cycle_base(G, C, fwd, bwd)
    except ProofCaseGap:
        search_steps(fwd, bwd.col, LOCAL_SEARCH_BUDGET, "search-fallback")
    return merge(fwd, bwd)


def subcubic_steps(G: Multigraph, phi: Sequence[int], psi: Sequence[int], k: int) -> Steps:
    """Exact steps for a simple graph with ``Delta <= 3`` and ``Delta + 1 <= k <= 4``."""
    out: Steps = []
    for comp in G.edge_components():
        Q, emap = G.edge_subgraph(comp)
        p, q = restrict(phi, emap), restrict(psi, emap)
        degs = [d for d in Q.degrees() if d]
        if min(degs) == 3:
            if k != 4:
                raise PreconditionError("cubic components need exactly four colours")
            sub = cubic_cycle_steps(Q, p, q)
        else:
            sub = vertex_deletion_steps(Q, p, q, k, low_degree_vertex)
        out += map_steps(sub, emap)
    return out


# -- public helpers for the cycle stage --------------------------------------

def _as_cycle(G: Multigraph, C: Union[OrientedCycle, Sequence[int]]) -> OrientedCycle:
    if isinstance(C, OrientedCycle):
        return C
    verts = list(C)
    L = len(verts)
    edges = []
    for t in range(L):
        between = G.edges_between(verts[t], verts[(t + 1) % L])
        if not between:
            raise PreconditionError(f"{verts[t]} and {verts[(t + 1) % L]} are not adjacent")
        edges.append(min(between))
    return OrientedCycle(tuple(verts), tuple(edges))


def double_switch(G: Multigraph, C, phi: EdgeColouring, psi: EdgeColouring,
                  v: int) -> tuple[EdgeColouring, EdgeColouring]:
    """Switch ``v_o v v+`` in ``phi`` and ``v_o v v-`` in ``psi`` together.

    Parameters
    ----------
    C :
        An :class:`OrientedCycle` or its vertex sequence in orientation order.

    Raises
    ------
    PreconditionError
        If the pair is not in normal form on ``C`` (agree off ``C``, disagree
        on all of ``C``, every cycle vertex balanced) or the two three-edge
        paths at ``v`` are not maximal alternating paths.
    """
    C = _as_cycle(G, C)
    EC = C.edge_set
    if any(phi[e] != psi[e] for e in range(G.m) if e not in EC):
        raise PreconditionError("colourings disagree off the cycle")
    if any(phi[e] == psi[e] for e in EC):
        raise PreconditionError("colourings agree on a cycle edge")
    if not _balanced(C, phi.colours, psi.colours):
        raise PreconditionError("cycle vertices are not balanced")
    fwd, bwd = Trace(G, phi.colours, phi.k), Trace(G, psi.colours, psi.k)
    if not _double_ready(G, C, fwd, bwd, v):
        raise PreconditionError(f"no matching three-edge paths at vertex {v}")
    before = set(difference_vertices(G, C, fwd.col, bwd.col))
    _double(G, C, fwd, bwd, v)
    after = set(difference_vertices(G, C, fwd.col, bwd.col))
    assert all(fwd.col[e] == bwd.col[e] for e in range(G.m) if e not in EC)
    assert all(fwd.col[e] != bwd.col[e] for e in EC)
    assert _balanced(C, fwd.col, bwd.col)
    assert before ^ after == {C.left(v), C.right(v)}
    return fwd.colouring(), bwd.colouring()


@dataclass(frozen=True)
class ObservationPath:
    """A maximal alternating path lying on the cycle.

    ``missing_at_ends`` records, for each end vertex, the colour of the pair
    it misses: the reason the path cannot be extended.
    """

    colour_pair: tuple[int, int]
    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    missing_at_ends: tuple[int, int]

    def __len__(self) -> int:
        return len(self.edges)


def find_disjoint_alternating_path(G: Multigraph, C, phi: EdgeColouring, u: int,
                                   v: int) -> ObservationPath:
    """Shortest maximal alternating path on ``C`` avoiding the arc ``v ... u``.

    With ``a`` the colour of ``u``'s left edge and ``b`` of its off-cycle
    edge, the path alternates in ``{a, b}`` or in the complementary pair and
    uses only edges of the arc walked right from ``u`` to ``v``.  Ties go to
    the path met first on that walk.

    Raises
    ------
    PreconditionError
        If ``{phi(v_o v), phi(v v+)}`` is neither ``{a, b}`` nor its
        complement, or ``phi`` has other than four colours.
    """
    from ..chains import chain_component

    C = _as_cycle(G, C)
    if phi.k != 4:
        raise PreconditionError("the observation concerns 4-colourings")
    col = phi.colours
    a, b = col[C.e_minus(u)], col[C.off_edge(G, u)]
    c, d = sorted({1, 2, 3, 4} - {a, b})
    at_v = {col[C.off_edge(G, v)], col[C.e_plus(v)]}
    if at_v not in ({a, b}, {c, d}):
        raise PreconditionError("colours at v match neither the pair at u nor its complement")
    arc = C.arc_edges(u, v) if u != v else list(C.edges)
    allowed = set(arc)
    best = None
    for idx, e in enumerate(arc):
        for pair in ((min(a, b), max(a, b)), (c, d)):
            if col[e] not in pair:
                continue
            comp = chain_component(G, col, pair[0], pair[1], edge=e)
            if comp.shape != "path" or not set(comp.edges) <= allowed:
                continue
            key = (len(comp), idx)
            if best is None or key < best[0]:
                best = (key, pair, comp)
    if best is None:
        raise ProofCaseGap("no maximal alternating path on the arc")
    _, pair, comp = best
    ends = comp.endpoints

    def miss(x):
        present = {col[f] for f in G.incidence[x]}
        return next(t for t in pair if t not in present)

    return ObservationPath(pair, comp.edges, comp.vertices, (miss(ends[0]), miss(ends[1])))
