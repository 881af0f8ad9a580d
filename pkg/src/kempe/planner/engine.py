"""Shared machinery for the constructive planners.

A :class:`Trace` carries a mutable colouring together with the steps applied
so far.  Two-sided planning keeps one trace from each end and joins them with
:func:`merge`; since every switch is an involution the backward half is
simply replayed in reverse.
"""

from __future__ import annotations

from collections import deque
from typing import Collection, Iterable, Optional, Sequence

from ..chains import KempeChange, component_edges
from ..graph import EdgeColouring, Multigraph, canonical_word

# internal tag for steps found by the cycle-confined search; exported as "segment"
SEGMENT_SEARCH = "segment-search"


class ProofCaseGap(RuntimeError):
    """No constructive case applied; the caller decides how to fall back."""


class PreconditionError(ValueError):
    """Planner hypotheses are not met by the input."""


Steps = list[tuple[KempeChange, str]]


class Trace:
    """A colouring being rewritten by recorded Kempe changes."""

    def __init__(self, G: Multigraph, colours: Sequence[int], k: int):
        self.G = G
        self.k = k
        self.col = list(colours)
        self.steps: Steps = []

    def missing(self, v: int, palette: Optional[int] = None) -> set[int]:
        top = self.k if palette is None else palette
        present = {self.col[e] for e in self.G.incidence[v]}
        return {x for x in range(1, top + 1) if x not in present}

    def edge_with(self, v: int, colour: int) -> Optional[int]:
        for e in self.G.incidence[v]:
            if self.col[e] == colour:
                return e
        return None

    def component(self, a: int, b: int, seed: int,
                  within: Optional[Collection[int]] = None) -> list[int]:
        return component_edges(self.G, self.col, a, b, seed, within)

    def switch(self, a: int, b: int, seed: int, tag: str) -> frozenset[int]:
        if self.col[seed] not in (a, b):
            raise ProofCaseGap(f"seed {seed} is coloured {self.col[seed]}, not {a}/{b}")
        comp = frozenset(component_edges(self.G, self.col, a, b, seed))
        for f in comp:
            self.col[f] = b if self.col[f] == a else a
        self.steps.append((KempeChange(a, b, seed, comp), tag))
        return comp

    def replay(self, steps: Iterable[tuple[KempeChange, str]]) -> None:
        """Apply foreign steps, checking each certificate still holds."""
        for ch, tag in steps:
            comp = self.switch(ch.a, ch.b, ch.seed, tag)
            if ch.edges is not None and comp != ch.edges:
                raise ProofCaseGap("replayed step does not match its certificate")

    def colouring(self) -> EdgeColouring:
        return EdgeColouring(self.k, tuple(self.col))


def merge(fwd: Trace, bwd: Trace) -> Steps:
    """Join two traces that have met in the middle."""
    if fwd.col != bwd.col:
        raise ProofCaseGap("traces have not met")
    return list(fwd.steps) + list(reversed(bwd.steps))


def map_steps(steps: Steps, emap: Sequence[int]) -> Steps:
    """Translate steps from a subgraph's edge ids to the parent's."""
    return [
        (KempeChange(ch.a, ch.b, emap[ch.seed],
                     None if ch.edges is None else frozenset(emap[f] for f in ch.edges)), tag)
        for ch, tag in steps
    ]


def restrict(colours: Sequence[int], emap: Sequence[int]) -> list[int]:
    return [colours[e] for e in emap]


def realize_permutation(tr: Trace, target: Sequence[int], tag: str) -> None:
    """Reach ``target`` from a colouring equal to it up to colour names.

    Swapping two colour names everywhere is a Kempe change on each component
    of ``G(a, b)`` in turn.
    """
    if canonical_word(tr.col) != canonical_word(target):
        raise ProofCaseGap("colourings differ by more than a permutation")
    while tr.col != list(target):
        e = next(e for e in range(tr.G.m) if tr.col[e] != target[e])
        a, b = tr.col[e], target[e]
        done: set[int] = set()
        for f in range(tr.G.m):
            if f not in done and tr.col[f] in (a, b):
                done |= tr.switch(a, b, f, tag)


def search_steps(tr: Trace, target: Sequence[int], budget: int, tag: str) -> None:
    """Unconstrained certified search from the trace to ``target`` exactly."""
    from ..enumerator import SearchBudgetExceeded, search_plan

    phi = tr.colouring()
    psi = EdgeColouring(tr.k, tuple(target))
    try:
        steps, _, _ = search_plan(tr.G, phi, psi, budget)
    except SearchBudgetExceeded as exc:
        raise ProofCaseGap(str(exc)) from exc
    if steps is None:
        raise ProofCaseGap("search exhausted: colourings are not Kempe equivalent")
    tr.replay((ch, tag) for ch in steps)
    realize_permutation(tr, target, tag)


def confined_search(tr: Trace, allowed: frozenset[int], goal, *, max_depth: int = 8,
                    max_nodes: int = 20000) -> Optional[list[tuple[int, int, int]]]:
    """BFS over switches whose components stay inside ``allowed``.

    ``goal(col)`` tests a full colouring.  Returns the move list
    ``[(a, b, seed), ...]`` without applying it, or ``None``.
    """
    G, k = tr.G, tr.k
    order = sorted(allowed)
    start = tuple(tr.col[e] for e in order)
    base = list(tr.col)

    def full(state):
        col = list(base)
        for e, x in zip(order, state):
            col[e] = x
        return col

    if goal(base):
        return []
    parent = {start: None}
    queue = deque([(start, 0)])
    while queue:
        state, depth = queue.popleft()
        if depth >= max_depth:
            continue
        col = full(state)
        seen_moves: set[frozenset[int]] = set()
        for a in range(1, k + 1):
            for b in range(a + 1, k + 1):
                for e in order:
                    if col[e] not in (a, b):
                        continue
                    comp = component_edges(G, col, a, b, e)
                    key = frozenset(comp)
                    if key in seen_moves or not key <= allowed:
                        continue
                    seen_moves.add(key)
                    new = list(col)
                    for f in comp:
                        new[f] = b if col[f] == a else a
                    nstate = tuple(new[f] for f in order)
                    if nstate in parent:
                        continue
                    parent[nstate] = (state, (a, b, e))
                    if goal(new):
                        moves = []
                        s = nstate
                        while parent[s] is not None:
                            s, mv = parent[s]
                            moves.append(mv)
                        return moves[::-1]
                    if len(parent) > max_nodes:
                        return None
                    queue.append((nstate, depth + 1))
    return None
