"""Brute-force ground truth for Kempe equivalence of edge-colourings.

Colourings are handled modulo colour permutation throughout: a canonical
word relabels colours by first appearance, so backtracking with the rule
"the next edge may use at most one colour beyond those already used" visits
exactly one colouring per permutation class.  Kempe classes are then
connected components of the switch graph on those words.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from .chains import KempeChange, component_edges, enumerate_switches
from .graph import (
    CanonicalForm,
    EdgeColouring,
    Multigraph,
    canonical_form,
    canonical_word,
    validate_colouring,
)

__all__ = [
    "ClassReport",
    "SameClassResult",
    "SizeGuardExceeded",
    "SearchBudgetExceeded",
    "DEFAULT_MAX_FORMS",
    "DEFAULT_MAX_NODES",
    "iter_colourings",
    "enumerate_colourings",
    "enumerate_canonical_words",
    "kempe_classes",
    "same_class",
    "is_rigid",
    "switch_neighbours",
    "bidirectional_search",
]

log = logging.getLogger(__name__)

DEFAULT_MAX_FORMS = 10**7
DEFAULT_MAX_NODES = 10**8


class SizeGuardExceeded(RuntimeError):
    """Enumeration would exceed the configured node or form cap."""


class SearchBudgetExceeded(RuntimeError):
    """A search stopped on its budget before deciding reachability."""


# -- backtracking ---------------------------------------------------------

def _earlier_neighbours(G: Multigraph) -> list[list[int]]:
    """For each edge, the lower-id edges sharing an endpoint with it."""
    out = []
    for e, (u, v) in enumerate(G.edges):
        out.append(sorted({f for f in G.incidence[u] + G.incidence[v] if f < e}))
    return out


def iter_colourings(G: Multigraph, k: int, *, canonical: bool = False,
                    max_nodes: Optional[int] = DEFAULT_MAX_NODES,
                    rng: Optional[random.Random] = None) -> Iterator[tuple[int, ...]]:
    """Yield proper ``k``-edge-colourings as colour tuples, by edge-order backtracking.

    With ``canonical=True`` only first-appearance-normalised colourings are
    produced (one per colour-permutation class).  ``rng`` shuffles the colour
    order at every node, which turns the first hit into a random colouring.
    """
    m = G.m
    if m == 0:
        yield ()
        return
    prev = _earlier_neighbours(G)
    col = [0] * m
    nodes = 0
    # explicit stack of candidate lists keeps deep graphs off the recursion limit
    stack: list[list[int]] = []

    def candidates(e: int) -> list[int]:
        blocked = {col[f] for f in prev[e]}
        top = k
        if canonical:
            top = min(k, max(col[:e], default=0) + 1)
        cands = [x for x in range(1, top + 1) if x not in blocked]
        if rng is not None:
            rng.shuffle(cands)
        else:
            cands.reverse()  # popped from the end: ascending order
        return cands

    stack.append(candidates(0))
    while stack:
        e = len(stack) - 1
        cands = stack[-1]
        if not cands:
            stack.pop()
            if e < m:
                col[e] = 0
            continue
        col[e] = cands.pop()
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise SizeGuardExceeded(f"backtracking exceeded {max_nodes} nodes")
        if e == m - 1:
            yield tuple(col)
            col[e] = 0
            continue
        stack.append(candidates(e + 1))


def enumerate_colourings(G: Multigraph, k: int, *,
                         max_nodes: Optional[int] = DEFAULT_MAX_NODES) -> list[EdgeColouring]:
    """All proper ``k``-edge-colourings in backtracking order (empty if none)."""
    return [EdgeColouring(k, c) for c in iter_colourings(G, k, max_nodes=max_nodes)]


def enumerate_canonical_words(G: Multigraph, k: int, *,
                              max_nodes: Optional[int] = DEFAULT_MAX_NODES,
                              max_forms: Optional[int] = DEFAULT_MAX_FORMS) -> list[bytes]:
    words = []
    for c in iter_colourings(G, k, canonical=True, max_nodes=max_nodes):
        words.append(bytes(c))
        if max_forms is not None and len(words) > max_forms:
            raise SizeGuardExceeded(f"more than {max_forms} canonical forms")
    return words


# -- switch graph -----------------------------------------------------------

def switch_neighbours(G: Multigraph, k: int, word: Sequence[int]) -> list[bytes]:
    """Canonical words reachable from ``word`` by one Kempe change (with repeats)."""
    col = list(word)
    out = []
    for a in range(1, k + 1):
        for b in range(a + 1, k + 1):
            seen: set[int] = set()
            for e in range(G.m):
                x = col[e]
                if (x != a and x != b) or e in seen:
                    continue
                comp = component_edges(G, col, a, b, e)
                seen.update(comp)
                for f in comp:
                    col[f] = b if col[f] == a else a
                out.append(canonical_word(col))
                for f in comp:
                    col[f] = b if col[f] == a else a
    return out


def _neighbour_chunk(args) -> list[list[bytes]]:
    G, k, words = args
    return [switch_neighbours(G, k, w) for w in words]


@dataclass(frozen=True)
class ClassReport:
    """Kempe classes of the ``k``-edge-colourings of a graph.

    ``classes`` holds ``(representative, size)`` pairs, the representative
    being the least canonical form in the class and sizes counted in
    canonical forms.  Sorted by representative.
    """

    k: int
    classes: tuple[tuple[CanonicalForm, int], ...]
    n_forms: int = 0
    n_colourings_labelled: Optional[int] = None
    members: Optional[dict] = field(default=None, repr=False, compare=False)

    @property
    def kappa(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {
            "kappa": self.kappa,
            "classes": [
                {"size": size, "representative": list(rep.word)} for rep, size in self.classes
            ],
        }


def _find(parent: list[int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def kempe_classes(G: Multigraph, k: int, *, workers: int = 1, reverse: bool = False,
                  max_nodes: Optional[int] = DEFAULT_MAX_NODES,
                  max_forms: Optional[int] = DEFAULT_MAX_FORMS,
                  keep_members: bool = False) -> ClassReport:
    """Count Kempe classes by union-find over canonical forms.

    Parameters
    ----------
    workers :
        Neighbour computation is split across this many processes; the
        union-find merge stays in the caller, so the report does not depend
        on it.
    reverse :
        Process forms in reverse order (a traversal-order sanity check).
    keep_members :
        Also return ``members``: class representative word -> list of words.
    """
    words = enumerate_canonical_words(G, k, max_nodes=max_nodes, max_forms=max_forms)
    index = {w: i for i, w in enumerate(words)}
    parent = list(range(len(words)))
    order = list(range(len(words)))
    if reverse:
        order.reverse()

    def merge(i: int, nbrs: list[bytes]) -> None:
        ri = _find(parent, i)
        for w in nbrs:
            rj = _find(parent, index[w])
            if ri != rj:
                lo, hi = min(ri, rj), max(ri, rj)
                parent[hi] = lo
                ri = lo

    if workers > 1 and len(words) > 1000:
        chunk = max(1, len(order) // (workers * 8))
        batches = [order[i:i + chunk] for i in range(0, len(order), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_neighbour_chunk, [(G, k, [words[i] for i in b]) for b in batches])
            for batch, res in zip(batches, results):
                for i, nbrs in zip(batch, res):
                    merge(i, nbrs)
    else:
        for i in order:
            merge(i, switch_neighbours(G, k, words[i]))

    roots = np.array([_find(parent, i) for i in range(len(words))], dtype=np.int64)
    labels, sizes = np.unique(roots, return_counts=True)
    # the root is always the least index in its class, and words are in
    # lexicographic order, so words[root] is the least form of the class
    classes = tuple(sorted((CanonicalForm(words[r]), int(s)) for r, s in zip(labels, sizes)))
    members = None
    if keep_members:
        members = {}
        for i, r in enumerate(roots):
            members.setdefault(words[r], []).append(words[i])
    return ClassReport(k=k, classes=classes, n_forms=len(words), members=members)


# -- reachability ------------------------------------------------------------

@dataclass
class SearchOutcome:
    """Result of :func:`bidirectional_search` on canonical words."""

    status: str  # "found" | "exhausted"
    path: list[bytes]
    explored: int


def bidirectional_search(G: Multigraph, k: int, start: bytes, goal: bytes,
                         budget: int = 10**6) -> SearchOutcome:
    """Level-synchronous bidirectional BFS over canonical words.

    Returns a shortest word path on success.  ``"exhausted"`` means one side
    ran out of frontier, i.e. the whole class of that endpoint was explored.
    Raises :class:`SearchBudgetExceeded` after ``budget`` expansions.
    """
    if start == goal:
        return SearchOutcome("found", [start], 0)
    parents = [{start: None}, {goal: None}]
    frontiers = [[start], [goal]]
    explored = 0
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        here, there = parents[side], parents[1 - side]
        nxt: list[bytes] = []
        meet = None
        for w in frontiers[side]:
            explored += 1
            if explored > budget:
                raise SearchBudgetExceeded(f"search budget of {budget} expansions exhausted")
            for u in switch_neighbours(G, k, w):
                if u in here:
                    continue
                here[u] = w
                nxt.append(u)
                if u in there and (meet is None or u < meet):
                    meet = u
        if meet is not None:
            left, right = [], []
            x = meet
            while x is not None:
                left.append(x)
                x = parents[0][x]
            x = parents[1][meet]
            while x is not None:
                right.append(x)
                x = parents[1][x]
            return SearchOutcome("found", left[::-1] + right, explored)
        frontiers[side] = nxt
    return SearchOutcome("exhausted", [], explored)


def _step_between(G: Multigraph, c: EdgeColouring, target: bytes) -> KempeChange:
    """A switch taking ``c`` to a colouring with canonical word ``target``."""
    for ch in enumerate_switches(G, c):
        col = list(c.colours)
        for f in ch.edges:
            col[f] = ch.b if col[f] == ch.a else ch.a
        if canonical_word(col) == target:
            return ch
    raise AssertionError("consecutive search words are not one switch apart")


def _permutation_between(src: Sequence[int], dst: Sequence[int], k: int) -> tuple[int, ...]:
    """sigma with ``sigma o dst == src`` (both colourings share a canonical word)."""
    sigma: dict[int, int] = {}
    for x, y in zip(src, dst):
        sigma.setdefault(y, x)
    free = iter(sorted(set(range(1, k + 1)) - set(sigma.values())))
    return tuple(sigma[y] if y in sigma else next(free) for y in range(1, k + 1))


def search_plan(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring, budget: int = 10**6):
    """Witness steps from ``phi`` to a permutation of ``psi``, or ``None``.

    Returns ``(steps, sigma, explored)`` where replaying ``steps`` from
    ``phi`` yields exactly ``sigma o psi``; ``steps`` is ``None`` when the
    class of one endpoint was exhausted without meeting the other.
    """
    k = phi.k
    out = bidirectional_search(G, k, canonical_word(phi.colours), canonical_word(psi.colours), budget)
    if out.status != "found":
        return None, None, out.explored
    steps = []
    cur = phi
    for target in out.path[1:]:
        ch = _step_between(G, cur, target)
        steps.append(ch)
        col = list(cur.colours)
        for f in ch.edges:
            col[f] = ch.b if col[f] == ch.a else ch.a
        cur = EdgeColouring(k, tuple(col))
    sigma = _permutation_between(cur.colours, psi.colours, k)
    return steps, sigma, out.explored


@dataclass(frozen=True)
class SameClassResult:
    equivalent: bool
    plan: Optional[object]  # KempePlan when equivalent
    explored: int

    def __bool__(self) -> bool:
        return self.equivalent


def same_class(G: Multigraph, phi: EdgeColouring, psi: EdgeColouring, k: Optional[int] = None,
               budget: int = 10**6) -> SameClassResult:
    """Decide ``phi ~_k psi`` exhaustively; a ``True`` answer carries a witness plan."""
    from .planner.plan import KempePlan

    k = phi.k if k is None else k
    if phi.k != k or psi.k != k:
        raise ValueError("palette mismatch")
    for c in (phi, psi):
        if not validate_colouring(G, c).valid:
            raise ValueError("colourings must be valid")
    steps, sigma, explored = search_plan(G, phi, psi, budget)
    if steps is None:
        return SameClassResult(False, None, explored)
    plan = KempePlan(k=k, target_permutation=sigma, steps=tuple(steps),
                     tags=tuple("search-fallback" for _ in steps))
    return SameClassResult(True, plan, explored)


def is_rigid(G: Multigraph, c: EdgeColouring, k: Optional[int] = None) -> bool:
    """True iff no Kempe change alters the canonical form of ``c``."""
    if k is not None and k != c.k:
        c = EdgeColouring(k, c.colours)
    here = canonical_form(G, c).word
    return all(w == here for w in switch_neighbours(G, c.k, c.colours))
