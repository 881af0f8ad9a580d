"""Certified Kempe plans: representation, replay, inversion, JSON."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..chains import KempeChange, component_edges
from ..graph import EdgeColouring, Multigraph, apply_permutation

__all__ = [
    "TAGS",
    "KempePlan",
    "PlanCheck",
    "PlanVerificationError",
    "verify_plan",
    "invert_plan",
    "replay",
    "best_target_permutation",
]

TAGS = frozenset({
    "path-lemma", "lift", "palette", "matching-recolour", "balance",
    "double-switch", "segment", "multigraph", "search-fallback",
})


class PlanVerificationError(ValueError):
    """A plan failed replay where a verified plan was required."""


@dataclass(frozen=True)
class KempePlan:
    """An ordered list of Kempe changes taking ``phi`` to ``sigma o psi``.

    ``target_permutation`` is ``(sigma(1), ..., sigma(k))``.  ``tags`` names
    the argument that produced each step.  ``segment_search_steps`` counts
    steps found by the segment-confined search inside cycle lifting (they are
    tagged ``segment``); ``fallback_steps`` counts unconstrained search steps.
    """

    k: int
    target_permutation: tuple[int, ...]
    steps: tuple[KempeChange, ...] = ()
    tags: tuple[str, ...] = ()
    segment_search_steps: int = 0
    notes: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "target_permutation", tuple(self.target_permutation))
        object.__setattr__(self, "steps", tuple(self.steps))
        tags = tuple(self.tags)
        if len(tags) != len(self.steps):
            raise ValueError("one tag per step is required")
        unknown = set(tags) - TAGS
        if unknown:
            raise ValueError(f"unknown step tags {sorted(unknown)}")
        object.__setattr__(self, "tags", tags)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def fallback_steps(self) -> int:
        return sum(1 for t in self.tags if t == "search-fallback")

    def to_json(self) -> dict:
        return {
            "target_permutation": list(self.target_permutation),
            "steps": [dict(s.to_json(), tag=t) for s, t in zip(self.steps, self.tags)],
            "fallback_steps": self.fallback_steps,
        }

    @classmethod
    def from_json(cls, data: dict) -> "KempePlan":
        perm = tuple(int(x) for x in data["target_permutation"])
        steps = []
        tags = []
        for s in data["steps"]:
            steps.append(KempeChange(int(s["a"]), int(s["b"]), int(s["seed_edge"])))
            tags.append(s.get("tag", "search-fallback"))
        return cls(k=len(perm), target_permutation=perm, steps=tuple(steps), tags=tuple(tags))


@dataclass(frozen=True)
class PlanCheck:
    ok: bool
    failed_step: Optional[int] = None
    reason: str = ""
    final: Optional[EdgeColouring] = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "failed_step": self.failed_step, "reason": self.reason}


def replay(G: Multigraph, phi: EdgeColouring, steps: Sequence[KempeChange]) -> PlanCheck:
    """Apply ``steps`` from ``phi``, re-deriving every component."""
    col = list(phi.colours)
    for i, st in enumerate(steps):
        if not (0 <= st.seed < G.m):
            return PlanCheck(False, i, f"seed edge {st.seed} out of range")
        if not (1 <= st.a <= phi.k and 1 <= st.b <= phi.k) or st.a == st.b:
            return PlanCheck(False, i, f"bad colour pair ({st.a}, {st.b})")
        if col[st.seed] not in (st.a, st.b):
            return PlanCheck(False, i, f"seed edge {st.seed} has colour {col[st.seed]}")
        comp = component_edges(G, col, st.a, st.b, st.seed)
        if st.edges is not None and frozenset(comp) != st.edges:
            return PlanCheck(False, i, "stale component certificate")
        for f in comp:
            col[f] = st.b if col[f] == st.a else st.a
    return PlanCheck(True, None, "", EdgeColouring(phi.k, tuple(col)))


def verify_plan(G: Multigraph, phi: EdgeColouring, plan: KempePlan, psi: EdgeColouring) -> PlanCheck:
    """Replay ``plan`` from ``phi`` and compare with ``sigma o psi`` edge for edge.

    A failing step is reported by index; a wrong end colouring is reported
    at index ``len(plan.steps)``.
    """
    if phi.k != psi.k or plan.k != phi.k:
        return PlanCheck(False, 0, "palette mismatch")
    if sorted(plan.target_permutation) != list(range(1, phi.k + 1)):
        return PlanCheck(False, 0, "target_permutation is not a permutation of the palette")
    res = replay(G, phi, plan.steps)
    if not res.ok:
        return res
    target = apply_permutation(psi, plan.target_permutation)
    if res.final.colours != target.colours:
        bad = [e for e in range(G.m) if res.final.colours[e] != target.colours[e]]
        return PlanCheck(False, len(plan.steps), f"end colouring differs on edges {bad}", res.final)
    return res


def invert_plan(plan: KempePlan, G: Optional[Multigraph] = None,
                phi: Optional[EdgeColouring] = None,
                psi: Optional[EdgeColouring] = None) -> KempePlan:
    """Reverse a plan: from ``sigma o psi`` back to ``phi``.

    Switches are involutions, so reversing the step order inverts the plan
    and each certificate stays valid.  When ``G``, ``phi`` and ``psi`` are
    given the input plan is verified first.
    """
    if G is not None:
        if phi is None or psi is None:
            raise TypeError("verification needs both phi and psi")
        check = verify_plan(G, phi, plan, psi)
        if not check.ok:
            raise PlanVerificationError(f"cannot invert an unverified plan: {check.reason}")
    identity = tuple(range(1, plan.k + 1))
    return KempePlan(
        k=plan.k,
        target_permutation=identity,
        steps=plan.steps[::-1],
        tags=plan.tags[::-1],
        segment_search_steps=plan.segment_search_steps,
    )


def best_target_permutation(phi: EdgeColouring, psi: EdgeColouring) -> tuple[int, ...]:
    """Colour permutation of ``psi`` agreeing with ``phi`` on the most edges.

    Ties go to the lexicographically least permutation.  Palettes above 8
    colours use an assignment solver instead of enumeration.
    """
    k = phi.k
    agree = [[0] * (k + 1) for _ in range(k + 1)]
    for x, y in zip(phi.colours, psi.colours):
        agree[y][x] += 1
    if k > 8:
        import numpy as np
        from scipy.optimize import linear_sum_assignment

        gain = np.array([[agree[y][x] for x in range(1, k + 1)] for y in range(1, k + 1)])
        rows, cols = linear_sum_assignment(-gain)
        return tuple(int(cols[i]) + 1 for i in np.argsort(rows))
    best, best_score = None, -1
    for perm in itertools.permutations(range(1, k + 1)):
        score = sum(agree[y][perm[y - 1]] for y in range(1, k + 1))
        if score > best_score:
            best, best_score = perm, score
    return tuple(best)
