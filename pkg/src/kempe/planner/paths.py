"""Closing a difference set made of vertex-disjoint paths."""

from __future__ import annotations

from ..chains import chain_component
from ..graph import EdgeColouring, Multigraph, _edges_form_disjoint_paths, diff
from .engine import PreconditionError, ProofCaseGap, Trace, merge
from .plan import KempePlan, best_target_permutation, verify_plan

__all__ = ["close_path_difference", "plan_path_difference"]


def _path_from(G: Multigraph, col, a: int, b: int, e: int, start: int) -> list[int]:
    comp = chain_component(G, col, a, b, edge=e)
    if comp.shape != "path" or start not in comp.endpoints:
        raise ProofCaseGap(f"({a}, {b})-component of edge {e} does not end at {start}")
    return list(comp.edges) if comp.endpoints[0] == start else list(comp.edges[::-1])


def _disagreement_start(G: Multigraph, F: list[int]) -> tuple[int, int]:
    """Least end vertex of the F-path through the least edge, and its F-edge."""
    Fs = set(F)
    first = min(F)
    # walk the F-path containing ``first`` to both ends
    ends = []
    for x in G.edges[first]:
        prev, cur = first, x
        while True:
            nxt = [f for f in G.incidence[cur] if f in Fs and f != prev]
            if not nxt:
                ends.append((cur, prev))
                break
            prev = nxt[0]
            cur = G.other_end(prev, cur)
    return min(ends)


def close_path_difference(fwd: Trace, bwd: Trace, tag: str = "path-lemma") -> None:
    """Make two traces agree when their difference is vertex-disjoint paths.

    Each round takes a maximal disagreement path from its lower end ``v1``,
    builds the alternating paths from ``v1`` in both colourings and switches
    the shorter one, which is a prefix of the other.
    """
    G = fwd.G
    for _ in range(G.m + 1):
        F = [e for e in range(G.m) if fwd.col[e] != bwd.col[e]]
        if not F:
            return
        if not _edges_form_disjoint_paths(G, F):
            raise PreconditionError("difference set is not a union of vertex-disjoint paths")
        v1, e = _disagreement_start(G, F)
        a, b = fwd.col[e], bwd.col[e]
        p_fwd = _path_from(G, fwd.col, a, b, e, v1)
        p_bwd = _path_from(G, bwd.col, a, b, e, v1)
        if len(p_fwd) <= len(p_bwd):
            if p_bwd[: len(p_fwd)] != p_fwd:
                raise ProofCaseGap("shorter alternating path is not a prefix")
            fwd.switch(a, b, e, tag)
        else:
            if p_fwd[: len(p_bwd)] != p_bwd:
                raise ProofCaseGap("shorter alternating path is not a prefix")
            bwd.switch(a, b, e, tag)
    raise ProofCaseGap("path closing did not terminate")


def plan_path_difference(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring) -> KempePlan:
    """Plan between colourings whose difference is vertex-disjoint paths.

    The colour permutation of ``psi`` agreeing most with ``phi`` is tried
    first; the identity is used when only it leaves a path-shaped difference.

    Returns
    -------
    KempePlan
        At most ``|F|`` steps, each tagged ``path-lemma``.

    Raises
    ------
    PreconditionError
        If neither target leaves a disjoint-paths difference.
    """
    if phi.k != psi.k:
        raise PreconditionError("palettes differ")
    identity = tuple(range(1, phi.k + 1))
    for sigma in (best_target_permutation(phi, psi), identity):
        target = psi.permuted(sigma)
        if diff(G, phi, target).is_disjoint_paths:
            break
    else:
        raise PreconditionError("difference set is not a union of vertex-disjoint paths")
    fwd = Trace(G, phi.colours, phi.k)
    bwd = Trace(G, target.colours, phi.k)
    close_path_difference(fwd, bwd)
    steps = merge(fwd, bwd)
    plan = KempePlan(phi.k, sigma, [s for s, _ in steps], [t for _, t in steps])
    check = verify_plan(G, phi, plan, psi)
    assert check.ok, check.reason
    return plan
