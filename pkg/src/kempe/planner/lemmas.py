"""Vertex-deletion recursion for graphs with a low-degree vertex.

Delete a qualifying vertex ``v``, plan on the components of ``G - v``, lift
every change back through ``v`` and finally close the disagreement left on
the edges at ``v``.  With four colours the qualifying vertices are those of
degree at most two; with five colours also degree-three vertices with at
most two degree-four neighbours.
"""

from __future__ import annotations

from typing import Callable, Optional, Sequence

from ..graph import EdgeColouring, Multigraph, _edges_form_disjoint_paths, validate_colouring
from .engine import PreconditionError, ProofCaseGap, Steps, Trace, map_steps, merge, restrict
from .lifting import LiftContext, lift_step
from .paths import close_path_difference

__all__ = [
    "low_degree_vertex",
    "qualifying_vertex",
    "vertex_deletion_steps",
    "star_endgame",
]

Chooser = Callable[[Multigraph], Optional[int]]


def low_degree_vertex(G: Multigraph) -> Optional[int]:
    """Least non-isolated vertex of degree at most two."""
    return next((v for v in range(G.n) if 1 <= G.degree(v) <= 2), None)


def qualifying_vertex(G: Multigraph) -> Optional[int]:
    """Least vertex of degree at most two, or of degree three with at most
    two degree-four neighbours."""
    v = low_degree_vertex(G)
    if v is not None:
        return v
    for v in range(G.n):
        if G.degree(v) == 3 and sum(1 for u in G.neighbours(v) if G.degree(u) == 4) <= 2:
            return v
    return None


def star_endgame(fwd: Trace, bwd: Trace, v: int, tag: str = "lift") -> None:
    """Turn a disagreement confined to the edges at ``v`` into a path.

    Only needed when three edges at ``v`` all disagree: either one edge can
    be recoloured directly with its target colour, or a neighbour's second
    missing colour recolours ``xv`` or switches the two-edge path ``xvz``.
    """
    G = fwd.G
    for _ in range(2 * G.degree(v) + 2):
        F = [e for e in G.incidence[v] if fwd.col[e] != bwd.col[e]]
        if _edges_form_disjoint_paths(G, F):
            return
        done = False
        for e in F:
            t = bwd.col[e]
            x = G.other_end(e, v)
            if t in fwd.missing(v) and t in fwd.missing(x):
                fwd.switch(fwd.col[e], t, e, tag)
                done = True
                break
        if done:
            continue
        for e in F:
            x = G.other_end(e, v)
            for m in sorted(fwd.missing(x) - {bwd.col[e]}):
                if m in fwd.missing(v):
                    fwd.switch(fwd.col[e], m, e, tag)
                    done = True
                    break
                ez = fwd.edge_with(v, m)
                if set(fwd.component(fwd.col[e], m, e)) == {e, ez}:
                    fwd.switch(fwd.col[e], m, e, tag)
                    done = True
                    break
            if done:
                break
        if not done:
            raise ProofCaseGap(f"no endgame move at vertex {v}")
    raise ProofCaseGap(f"endgame at vertex {v} did not converge")


def vertex_deletion_steps(G: Multigraph, phi: Sequence[int], psi: Sequence[int], k: int,
                          choose: Chooser) -> Steps:
    """Steps taking ``phi`` exactly to ``psi`` by recursive vertex deletion."""
    if list(phi) == list(psi):
        return []
    comps = G.edge_components()
    if len(comps) > 1:
        out: Steps = []
        for comp in comps:
            H, emap = G.edge_subgraph(comp)
            sub = vertex_deletion_steps(H, restrict(phi, emap), restrict(psi, emap), k, choose)
            out += map_steps(sub, emap)
        return out
    v = choose(G)
    if v is None:
        raise PreconditionError("no qualifying vertex to delete")
    H, emap = G.delete_vertex(v)
    sub = vertex_deletion_steps(H, restrict(phi, emap), restrict(psi, emap), k, choose)
    fwd = Trace(G, phi, k)
    ctx = LiftContext(G.incidence[v])
    for ch, tag in map_steps(sub, emap):
        lift_step(fwd, ch, tag, ctx)
    bwd = Trace(G, psi, k)
    star_endgame(fwd, bwd, v)
    close_path_difference(fwd, bwd)
    return merge(fwd, bwd)


def check_palette(G: Multigraph, c: EdgeColouring, k: int) -> None:
    if c.k != k:
        raise PreconditionError(f"expected a {k}-colouring, got k = {c.k}")
    report = validate_colouring(G, c)
    if not report.valid:
        raise PreconditionError(f"invalid colouring: {report.violations or report.bad_edges}")
