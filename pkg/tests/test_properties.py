"""Randomized property suites, each run on at least 1000 generated cases.

``CASES`` counts the cases each suite actually executed so the acceptance
run can confirm the volume.
"""

import random
from collections import Counter
from functools import lru_cache

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracle
from kempe.chains import apply_switch, chain_component
from kempe.enumerator import same_class
from kempe.generators import (
    complete_bipartite, complete_graph, cube_graph, prism_graph,
    random_bounded_degree, random_colouring,
)
from kempe.graph import (
    apply_permutation, build_graph, canonical_form, validate_colouring,
)
from kempe.matching import maximum_matching, repair_matching
from kempe.planner import (
    NotEquivalentError, constructive_hypotheses, plan_kempe, verify_plan,
)

EXAMPLES = 1000
CASES = Counter()

suite = settings(max_examples=EXAMPLES, deadline=None, derandomize=True, database=None,
                 suppress_health_check=[HealthCheck.too_slow])


def palette(G):
    """Smallest palette some constructive planner covers."""
    d = G.max_degree()
    return d + 1 if d <= 3 else 6


@st.composite
def instances(draw, max_n=10):
    n = draw(st.integers(3, max_n))
    degree = draw(st.sampled_from([3, 4]))
    multi = draw(st.booleans()) and n <= 6
    G = random_bounded_degree(n, degree, multi, draw(st.integers(0, 10**6)))
    # simple graphs also take a larger palette, which the reduction step handles
    k = palette(G) + (draw(st.sampled_from([0, 0, 0, 1])) if G.is_simple() else 0)
    return G, k


@st.composite
def coloured(draw):
    G, k = draw(instances())
    return G, random_colouring(G, k, seed=draw(st.integers(0, 10**6)))


@given(coloured(), st.data())
@suite
def test_switch_involution(gc, data):
    CASES["switch involution"] += 1
    G, c = gc
    e = data.draw(st.integers(0, G.m - 1))
    b = data.draw(st.sampled_from([x for x in range(1, c.k + 1) if x != c[e]]))
    comp = chain_component(G, c, c[e], b, edge=e)
    once = apply_switch(G, c, comp)
    assert apply_switch(G, once, chain_component(G, once, b, c[e], edge=e)) == c


@given(coloured(), st.data())
@suite
def test_switch_preserves_properness(gc, data):
    CASES["properness preservation"] += 1
    G, c = gc
    e = data.draw(st.integers(0, G.m - 1))
    b = data.draw(st.sampled_from([x for x in range(1, c.k + 1) if x != c[e]]))
    comp = chain_component(G, c, c[e], b, edge=e)
    out = apply_switch(G, c, comp)
    assert validate_colouring(G, out).valid
    assert {f for f in range(G.m) if out[f] != c[f]} == set(comp.edges)


@given(coloured(), st.randoms(use_true_random=False))
@suite
def test_canonical_form_permutation_invariant(gc, rnd):
    CASES["canonical-form invariance"] += 1
    G, c = gc
    perm = list(range(1, c.k + 1))
    rnd.shuffle(perm)
    assert canonical_form(G, apply_permutation(c, perm)) == canonical_form(G, c)
    if c.k <= 6:
        assert tuple(canonical_form(G, c).word) == oracle.canon(c.colours)


@given(coloured(), st.integers(0, 10**6))
@suite
def test_plan_soundness(gc, seed):
    CASES["plan soundness"] += 1
    G, phi = gc
    psi = random_colouring(G, phi.k, seed=seed)
    plan = plan_kempe(G, phi, psi)
    check = verify_plan(G, phi, plan, psi)
    assert check.ok, check.to_json()


def _enumerable():
    out = [(complete_graph(4), 4), (complete_graph(4), 5), (complete_graph(5), 5),
           (complete_bipartite(3, 3), 3), (complete_bipartite(3, 3), 4), (prism_graph(3), 4),
           (complete_bipartite(2, 3), 3),
           (cube_graph(), 3), (build_graph(3, [(0, 1), (0, 1), (1, 2), (0, 2)]), 4),
           (build_graph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3)]), 3)]
    rng = random.Random(0)
    while len(out) < 24:
        n = rng.randint(4, 6)
        G = random_bounded_degree(n, rng.choice([3, 4]), rng.random() < 0.3, rng.randrange(10**6))
        if G.m <= 9:
            out.append((G, palette(G) - (1 if rng.random() < 0.3 else 0)))
    return [(G, k) for G, k in out if _colourable(G, k)]


def _colourable(G, k):
    try:
        random_colouring(G, k, seed=0)
    except ValueError:
        return False
    return True


ENUMERABLE = _enumerable()


@lru_cache(maxsize=None)
def _classes(i):
    G, k = ENUMERABLE[i]
    return oracle.class_index(G.n, list(G.edges), k)


@given(st.integers(0, len(ENUMERABLE) - 1), st.integers(0, 10**6), st.integers(0, 10**6))
@suite
def test_oracle_agreement(i, s1, s2):
    CASES["oracle agreement"] += 1
    G, k = ENUMERABLE[i]
    phi, psi = random_colouring(G, k, seed=s1), random_colouring(G, k, seed=s2)
    method = "constructive" if constructive_hypotheses(G, k) else "search"
    try:
        plan = plan_kempe(G, phi, psi, method=method)
        planned = verify_plan(G, phi, plan, psi).ok
    except NotEquivalentError:
        planned = False
    classes = _classes(i)
    truth = classes[oracle.canon(phi.colours)] == classes[oracle.canon(psi.colours)]
    assert planned == truth == same_class(G, phi, psi).equivalent


@given(st.integers(4, 12), st.integers(0, 10**6), st.randoms(use_true_random=False))
@suite
def test_repair_matching_postcondition(n, seed, rnd):
    CASES["repair_matching postcondition"] += 1
    G = random_bounded_degree(n, 4, False, seed)
    # relabel vertices and edges so the blossom search returns varied matchings
    relabel = list(range(n))
    rnd.shuffle(relabel)
    edges = [(relabel[u], relabel[v]) for u, v in G.edges]
    rnd.shuffle(edges)
    H = build_graph(n, [tuple(sorted(e)) for e in edges])
    M = maximum_matching(H)
    out = repair_matching(H, M)
    assert len(out) == len(M) == oracle.matching_number(H.n, list(H.edges))
    ends = [v for e in out.edges for v in H.edges[e]]
    assert len(ends) == len(set(ends))
    assert oracle.components_qualify(H.n, list(H.edges), out.edges)
