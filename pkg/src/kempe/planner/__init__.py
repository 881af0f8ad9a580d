"""Certified Kempe plans between edge-colourings."""

from ..enumerator import SearchBudgetExceeded
from .cycle import OrientedCycle, shortest_cycle
from .engine import PreconditionError, ProofCaseGap
from .lifting import lift_change
from .palette import reduce_palette
from .paths import plan_path_difference
from .plan import (
    TAGS, KempePlan, PlanCheck, PlanVerificationError, best_target_permutation, invert_plan,
    replay, verify_plan,
)
from .subcubic import (
    ObservationPath, difference_vertices, double_switch, find_disjoint_alternating_path,
)
from .theorems import (
    NotEquivalentError, constructive_hypotheses, plan_kempe, plan_multigraph, plan_search,
    plan_subcubic, plan_subcubic_nonregular, plan_subquartic, plan_subquartic_conditional,
)

__all__ = [
    "TAGS", "KempePlan", "PlanCheck", "PlanVerificationError", "verify_plan", "invert_plan",
    "replay", "best_target_permutation", "PreconditionError", "ProofCaseGap",
    "NotEquivalentError", "SearchBudgetExceeded", "OrientedCycle", "shortest_cycle",
    "lift_change", "reduce_palette", "plan_path_difference", "plan_subcubic_nonregular",
    "plan_subquartic_conditional", "plan_subcubic", "plan_subquartic", "plan_multigraph",
    "plan_search", "plan_kempe", "constructive_hypotheses", "ObservationPath",
    "difference_vertices", "double_switch", "find_disjoint_alternating_path",
]
