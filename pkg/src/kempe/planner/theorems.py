"""Public planners: each checks its hypotheses and returns a verified plan.

All planners aim at ``sigma o psi`` for the colour permutation ``sigma``
agreeing most with ``phi``; the internal routines work towards that exact
colouring.  A :class:`ProofCaseGap` anywhere in the constructive route is
answered by a certified search over the whole instance, tagged
``search-fallback``.
"""

from __future__ import annotations

from typing import Callable, Optional, Sequence

from ..enumerator import search_plan
from ..graph import EdgeColouring, Multigraph
from ..matching import maximum_matching, repair_matching
from .engine import (
    SEGMENT_SEARCH, PreconditionError, ProofCaseGap, Steps, Trace, map_steps, merge, restrict,
    search_steps,
)
from .lemmas import check_palette, low_degree_vertex, qualifying_vertex, vertex_deletion_steps
from .lifting import LiftContext, lift_step
from .palette import reduce_trace
from .paths import close_path_difference
from .plan import KempePlan, best_target_permutation, verify_plan
from .subcubic import subcubic_steps

__all__ = [
    "NotEquivalentError",
    "plan_subcubic_nonregular",
    "plan_subquartic_conditional",
    "plan_subcubic",
    "plan_subquartic",
    "plan_multigraph",
    "plan_search",
    "plan_kempe",
    "constructive_hypotheses",
]

FALLBACK_BUDGET = 10**6

Exact = Callable[[list[int], list[int]], Steps]


class NotEquivalentError(RuntimeError):
    """Exhaustive search showed the colourings lie in different classes."""


def _to_plan(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring, sigma, steps: Steps,
             notes: Optional[dict] = None) -> KempePlan:
    tags = []
    seg = 0
    for _, t in steps:
        if t == SEGMENT_SEARCH:
            seg += 1
            t = "segment"
        tags.append(t)
    plan = KempePlan(phi.k, tuple(sigma), [s for s, _ in steps], tags, seg, notes or {})
    check = verify_plan(G, phi, plan, psi)
    if not check.ok:
        raise AssertionError(f"planner produced an invalid plan: step {check.failed_step}: "
                             f"{check.reason}")
    return plan


def _certified(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring, exact: Exact,
               budget: int = FALLBACK_BUDGET) -> KempePlan:
    sigma = best_target_permutation(phi, psi)
    target = list(psi.permuted(sigma).colours)
    notes = {}
    try:
        steps = exact(list(phi.colours), target)
    except ProofCaseGap as gap:
        notes["gap"] = str(gap)
        tr = Trace(G, phi.colours, phi.k)
        try:
            search_steps(tr, target, budget, "search-fallback")
        except ProofCaseGap as exc:
            raise NotEquivalentError(str(exc)) from exc
        steps = tr.steps
    return _to_plan(G, phi, psi, sigma, steps, notes)


def _check_pair(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring, k: Optional[int]) -> int:
    k = phi.k if k is None else k
    check_palette(G, phi, k)
    check_palette(G, psi, k)
    return k


def _check_connected(G: Multigraph) -> None:
    if not G.is_connected():
        raise PreconditionError("graph must be connected")


# -- exact routines ---------------------------------------------------------

def subquartic_steps(G: Multigraph, phi: Sequence[int], psi: Sequence[int], k: int) -> Steps:
    """Exact steps for a simple graph with ``Delta <= 4`` and ``k >= Delta + 2``."""
    delta = G.max_degree()
    if delta == 0:
        return []
    fwd, bwd = Trace(G, phi, k), Trace(G, psi, k)
    if delta <= 3:
        top = min(delta + 1, 4)
        reduce_trace(fwd, top)
        reduce_trace(bwd, top)
        fwd.replay(subcubic_steps(G, fwd.col, bwd.col, top))
        return merge(fwd, bwd)
    reduce_trace(fwd, 5)
    reduce_trace(bwd, 5)
    M = repair_matching(G, maximum_matching(G))
    for e in sorted(M.edges):
        for tr in (fwd, bwd):
            comp = tr.switch(tr.col[e], 6, e, "matching-recolour")
            assert comp == {e}, "matching edge recolour touched other edges"
    H, emap = G.delete_edges(M.edges)
    sub = vertex_deletion_steps(H, restrict(fwd.col, emap), restrict(bwd.col, emap), 5,
                                qualifying_vertex)
    fwd.replay(map_steps(sub, emap))
    return merge(fwd, bwd)


def simple_steps(G: Multigraph, phi: Sequence[int], psi: Sequence[int], k: int) -> Steps:
    """Exact steps for a simple graph under either theorem's hypotheses."""
    delta = G.max_degree()
    if delta <= 3 and k >= delta + 1:
        if k <= 4:
            return subcubic_steps(G, phi, psi, k)
        return subquartic_steps(G, phi, psi, k)
    if delta == 4 and k >= 6:
        return subquartic_steps(G, phi, psi, k)
    raise PreconditionError(f"no constructive route for Delta = {delta}, k = {k}")


def _parallel_edge(G: Multigraph) -> Optional[int]:
    """Second-smallest edge id of the least vertex pair joined more than once."""
    groups: dict[tuple[int, int], list[int]] = {}
    for e, (u, v) in enumerate(G.edges):
        groups.setdefault((min(u, v), max(u, v)), []).append(e)
    multi = sorted(key for key, es in groups.items() if len(es) > 1)
    return groups[multi[0]][1] if multi else None


def multigraph_steps(G: Multigraph, phi: Sequence[int], psi: Sequence[int], k: int) -> Steps:
    """Delete parallel edges one at a time, lifting the plan back over each."""
    if list(phi) == list(psi):
        return []
    e = _parallel_edge(G)
    if e is None:
        return simple_steps(G, phi, psi, k)
    H, emap = G.delete_edges([e])
    sub = multigraph_steps(H, restrict(phi, emap), restrict(psi, emap), k)
    fwd = Trace(G, phi, k)
    ctx = LiftContext([e], prep_tag="multigraph")
    for ch, tag in map_steps(sub, emap):
        lift_step(fwd, ch, tag, ctx)
    bwd = Trace(G, psi, k)
    close_path_difference(fwd, bwd)
    return merge(fwd, bwd)


# -- public planners ----------------------------------------------------------

def plan_subcubic_nonregular(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring) -> KempePlan:
    """Plan between 4-colourings of a connected subcubic graph with a vertex
    of degree at most two.

    The recursion deletes the least such vertex, plans on what remains and
    lifts each change back, closing the final disagreement at the vertex
    with the path argument.
    """
    _check_pair(G, phi, psi, 4)
    _check_connected(G)
    if G.max_degree() > 3 or (G.m and low_degree_vertex(G) is None):
        raise PreconditionError("needs Delta <= 3 and a vertex of degree at most two")
    return _certified(G, phi, psi, lambda p, q: vertex_deletion_steps(G, p, q, 4, low_degree_vertex))


def plan_subquartic_conditional(G: Multigraph, phi: EdgeColouring,
                                psi: EdgeColouring) -> KempePlan:
    """Plan between 5-colourings of a connected graph with ``Delta <= 4``, no
    two adjacent degree-four vertices and a qualifying vertex.

    A vertex qualifies when its degree is at most two, or it is three with at
    most two degree-four neighbours.
    """
    _check_pair(G, phi, psi, 5)
    _check_connected(G)
    if G.max_degree() > 4:
        raise PreconditionError("needs Delta <= 4")
    deg = G.degrees()
    if any(deg[u] == 4 and deg[v] == 4 for u, v in G.edges):
        raise PreconditionError("two degree-four vertices are adjacent")
    if G.m and qualifying_vertex(G) is None:
        raise PreconditionError("no qualifying vertex")
    return _certified(G, phi, psi, lambda p, q: vertex_deletion_steps(G, p, q, 5, qualifying_vertex))


def plan_subcubic(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring) -> KempePlan:
    """Plan between ``k``-colourings of a simple graph with ``Delta <= 3``.

    ``k`` is 4, or ``Delta + 1`` for ``Delta <= 2``.  Cubic components go
    through a shortest cycle; the rest through vertex deletion.

    Returns
    -------
    KempePlan
        Verified; ``fallback_steps`` counts any search steps and
        ``segment_search_steps`` the steps of cycle-confined searches.
    """
    k = _check_pair(G, phi, psi, None)
    if not G.is_simple():
        raise PreconditionError("graph must be simple (use plan_multigraph)")
    delta = G.max_degree()
    if delta > 3 or not (delta + 1 <= k <= 4):
        raise PreconditionError(f"needs Delta <= 3 and Delta + 1 <= k <= 4, got {delta}, {k}")
    return _certified(G, phi, psi, lambda p, q: subcubic_steps(G, p, q, k))


def plan_subquartic(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring) -> KempePlan:
    """Plan between 6-colourings of a simple graph with ``Delta <= 4``.

    Both colourings are first reduced to five colours, a repaired maximum
    matching is moved to colour 6, and the rest is planned componentwise
    with five colours.  Graphs with ``Delta <= 3`` are reduced to
    ``Delta + 1`` colours and planned as subcubic graphs.
    """
    _check_pair(G, phi, psi, 6)
    if not G.is_simple():
        raise PreconditionError("graph must be simple (use plan_multigraph)")
    if G.max_degree() > 4:
        raise PreconditionError("needs Delta <= 4")
    return _certified(G, phi, psi, lambda p, q: subquartic_steps(G, p, q, 6))


def plan_multigraph(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring) -> KempePlan:
    """Plan for a multigraph with ``Delta <= 3, k = Delta + 1`` or ``Delta = 4, k = 6``.

    Parallel edges are deleted one at a time; each lifted change is prepared
    by recolouring the deleted edge with a colour missing at both its ends.
    """
    k = _check_pair(G, phi, psi, None)
    delta = G.max_degree()
    if not ((delta <= 3 and k == delta + 1) or (delta == 4 and k == 6)):
        raise PreconditionError(f"needs Delta <= 3 with k = Delta + 1, or Delta = 4 with k = 6; "
                                f"got Delta = {delta}, k = {k}")
    return _certified(G, phi, psi, lambda p, q: multigraph_steps(G, p, q, k))


def plan_search(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring,
                k: Optional[int] = None, budget: int = FALLBACK_BUDGET) -> KempePlan:
    """Shortest plan by bidirectional search over canonical forms.

    Raises
    ------
    NotEquivalentError
        The search exhausted one endpoint's class.
    SearchBudgetExceeded
        More than ``budget`` expansions were needed.
    """
    _check_pair(G, phi, psi, k)
    steps, sigma, explored = search_plan(G, phi, psi, budget)
    if steps is None:
        raise NotEquivalentError(f"not equivalent (explored {explored} forms)")
    return _to_plan(G, phi, psi, sigma, [(s, "search-fallback") for s in steps],
                    {"explored": explored})


def constructive_hypotheses(G: Multigraph, k: int) -> Optional[str]:
    """Name of the constructive planner covering ``(G, k)``, or None."""
    delta = G.max_degree()
    if not G.is_simple():
        if (delta <= 3 and k == delta + 1) or (delta == 4 and k == 6):
            return "multigraph"
        return None
    if delta <= 3 and delta + 1 <= k <= 4:
        return "subcubic"
    if delta == 4 and k == 6:
        return "subquartic"
    if (delta <= 3 and k > 4) or (delta == 4 and k > 6):
        return "reduced"
    return None


def plan_kempe(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring, *,
               method: str = "constructive", budget: int = FALLBACK_BUDGET) -> KempePlan:
    """Pick a planner by maximum degree, palette size and simplicity.

    ``method="search"`` always searches.  Constructive planning raises
    :class:`PreconditionError` when no theorem covers the instance.
    """
    if method == "search":
        return plan_search(G, phi, psi, budget=budget)
    if method != "constructive":
        raise ValueError(f"unknown method {method!r}")
    k = _check_pair(G, phi, psi, None)
    route = constructive_hypotheses(G, k)
    if route == "multigraph":
        return plan_multigraph(G, phi, psi)
    if route == "subcubic":
        return plan_subcubic(G, phi, psi)
    if route == "subquartic":
        return plan_subquartic(G, phi, psi)
    if route == "reduced":
        return _certified(G, phi, psi, lambda p, q: simple_steps(G, p, q, k), budget)
    raise PreconditionError(
        f"no constructive planner covers Delta = {G.max_degree()}, k = {k}"
        f"{'' if G.is_simple() else ' on a multigraph'}; use method='search'")

