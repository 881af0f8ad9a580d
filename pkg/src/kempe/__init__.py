"""Kempe equivalence of edge-colourings: chains, class enumeration and
certified constructive plans."""

from .chains import (
    ChainComponent, KempeChange, StaleComponentError, apply_switch, chain_component,
    enumerate_switches, missing_colours,
)
from .enumerator import (
    ClassReport, SearchBudgetExceeded, SizeGuardExceeded, enumerate_colourings, is_rigid,
    kempe_classes, same_class,
)
from .graph import (
    CanonicalForm, ColouringError, DifferenceSet, EdgeColouring, GraphError, Multigraph,
    ValidationReport, apply_permutation, build_graph, canonical_form, diff, validate_colouring,
)
from .matching import Matching, check_matching_lemma, maximum_matching, repair_matching
from .planner import (
    KempePlan, NotEquivalentError, PreconditionError, invert_plan, plan_kempe, plan_multigraph,
    plan_path_difference, plan_search, plan_subcubic, plan_subquartic, reduce_palette,
    verify_plan,
)

__all__ = [
    "Multigraph", "EdgeColouring", "CanonicalForm", "DifferenceSet", "ValidationReport",
    "GraphError", "ColouringError", "build_graph", "validate_colouring", "canonical_form",
    "diff", "apply_permutation",
    "ChainComponent", "KempeChange", "StaleComponentError", "missing_colours",
    "chain_component", "apply_switch", "enumerate_switches",
    "ClassReport", "SizeGuardExceeded", "SearchBudgetExceeded", "enumerate_colourings",
    "kempe_classes", "same_class", "is_rigid",
    "Matching", "maximum_matching", "check_matching_lemma", "repair_matching",
    "KempePlan", "NotEquivalentError", "PreconditionError", "verify_plan", "invert_plan",
    "plan_kempe", "plan_path_difference", "plan_subcubic", "plan_subquartic",
    "plan_multigraph", "plan_search", "reduce_palette",
]
