import pytest

import oracle
from kempe.enumerator import (
    SearchBudgetExceeded, SizeGuardExceeded, bidirectional_search, enumerate_colourings,
    iter_colourings, is_rigid, kempe_classes, same_class, search_plan,
)
from kempe.generators import (
    complete_bipartite, complete_graph, cycle_graph, perfect_one_factorization, petersen_graph,
    prism_graph, random_colouring, rigid_colouring,
)
from kempe.graph import EdgeColouring, apply_permutation, canonical_form, canonical_word
from kempe.planner import verify_plan


class TestEnumerate:
    def test_k5_counts(self):
        # [DERIVED] oracle backtracking: 720 labelled, 6 forms
        G = complete_graph(5)
        cols = enumerate_colourings(G, 5)
        assert len(cols) == 720
        assert len({canonical_form(G, c) for c in cols}) == 6

    def test_k4_three_colours_one_form(self):
        G = complete_graph(4)
        assert len({canonical_form(G, c) for c in enumerate_colourings(G, 3)}) == 1

    def test_triangle_two_colours_empty(self):
        assert enumerate_colourings(cycle_graph(3), 2) == []

    def test_matches_oracle_labelled(self):
        G = complete_bipartite(2, 3)
        got = {c.colours for c in enumerate_colourings(G, 3)}
        assert got == set(oracle.all_colourings(G.n, list(G.edges), 3))

    def test_canonical_words_are_canonical(self):
        G = prism_graph(3)
        words = list(iter_colourings(G, 4, canonical=True))
        assert len(words) == len(set(words))
        assert all(canonical_word(w) == bytes(w) for w in words)
        labelled = oracle.all_colourings(G.n, list(G.edges), 4)
        assert len(words) == len({oracle.canon(c) for c in labelled})

    def test_node_guard(self):
        with pytest.raises(SizeGuardExceeded):
            enumerate_colourings(complete_graph(6), 5, max_nodes=100)


class TestKempeClasses:
    def test_k5_kappa_six(self):
        # [PAPER] six classes of 5-colourings of K5
        rep = kempe_classes(complete_graph(5), 5)
        assert rep.kappa == 6
        assert all(size == 1 for _, size in rep.classes)

    def test_k4_kappa_one(self):
        # [DERIVED] oracle: 4 forms, a single class
        rep = kempe_classes(complete_graph(4), 4)
        assert (rep.kappa, rep.n_forms) == (1, 4)

    def test_k33_three_colours(self):
        # [DERIVED] oracle: two singleton classes
        rep = kempe_classes(complete_bipartite(3, 3), 3)
        assert rep.kappa == 2 and [s for _, s in rep.classes] == [1, 1]

    def test_k33_four_colours(self):
        # [DERIVED] oracle: 44 forms, one class
        rep = kempe_classes(complete_bipartite(3, 3), 4)
        assert (rep.kappa, rep.n_forms) == (1, 44)

    @pytest.mark.parametrize("G,k", [(prism_graph(3), 4), (complete_bipartite(2, 3), 3),
                                     (cycle_graph(6), 3)])
    def test_matches_oracle(self, G, k):
        classes = oracle.kempe_classes(G.n, list(G.edges), k)
        rep = kempe_classes(G, k, keep_members=True)
        assert rep.kappa == len(classes)
        got = sorted(sorted(tuple(w) for w in ws) for ws in rep.members.values())
        assert got == sorted(sorted(c) for c in classes)

    def test_traversal_order_and_workers_irrelevant(self):
        G = complete_bipartite(3, 3)
        base = kempe_classes(G, 4)
        assert kempe_classes(G, 4, reverse=True) == base
        assert kempe_classes(G, 4, workers=2) == base

    def test_process_pool_agrees(self):
        # [DERIVED] oracle: 49920 labelled = 2080 forms x 4!; enough to take the multi-process path
        G = petersen_graph()
        rep = kempe_classes(G, 4, workers=2)
        assert rep == kempe_classes(G, 4) and (rep.kappa, rep.n_forms) == (1, 2080)

    def test_form_guard(self):
        with pytest.raises(SizeGuardExceeded):
            kempe_classes(complete_bipartite(3, 3), 4, max_forms=10)

    def test_json(self):
        js = kempe_classes(complete_graph(5), 5).to_json()
        assert js["kappa"] == 6 and len(js["classes"]) == 6


class TestReachability:
    def test_permuted_same_class_empty_plan(self):
        G = prism_graph(3)
        phi = random_colouring(G, 4, seed=1)
        psi = apply_permutation(phi, (2, 3, 4, 1))
        res = same_class(G, phi, psi)
        assert res.equivalent and len(res.plan) == 0
        assert verify_plan(G, phi, res.plan, psi).ok

    def test_rigid_k5_distinct_not_equivalent(self):
        G = complete_graph(5)
        reps = [rep.colouring(5) for rep, _ in kempe_classes(G, 5).classes]
        res = same_class(G, reps[0], reps[1])
        assert not res.equivalent and res.plan is None

    def test_prism_all_pairs(self):
        G = prism_graph(3)
        forms = [EdgeColouring(4, w) for w in iter_colourings(G, 4, canonical=True)]
        for psi in forms:
            res = same_class(G, forms[0], psi)
            assert res.equivalent
            assert verify_plan(G, forms[0], res.plan, psi).ok

    def test_search_is_shortest(self):
        # [DERIVED] oracle: the K4 switch graph at k = 4 has diameter 2
        G = complete_graph(4)
        forms = list(iter_colourings(G, 4, canonical=True))
        for a in forms:
            for b in forms:
                out = bidirectional_search(G, 4, bytes(a), bytes(b))
                assert out.status == "found" and len(out.path) - 1 <= 2

    def test_search_budget(self):
        G = complete_bipartite(3, 3)
        phi = random_colouring(G, 4, seed=0)
        psi = random_colouring(G, 4, seed=1)
        if canonical_word(phi.colours) != canonical_word(psi.colours):
            with pytest.raises(SearchBudgetExceeded):
                search_plan(G, phi, psi, budget=0)


class TestRigid:
    def test_k5_classes_rigid(self):
        G = complete_graph(5)
        for rep, _ in kempe_classes(G, 5).classes:
            assert is_rigid(G, rep.colouring(5))

    def test_k9_rigid(self):
        G, c = rigid_colouring(9)
        assert is_rigid(G, c)

    def test_k4_not_rigid(self):
        G = complete_graph(4)
        assert not any(is_rigid(G, EdgeColouring(4, w)) for w in iter_colourings(G, 4, canonical=True))

    def test_factorization_k4_three_colours_rigid(self):
        G, c = perfect_one_factorization(4).colouring()
        assert is_rigid(G, c)
