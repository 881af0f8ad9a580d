import itertools
import random

import pytest

import oracle
from kempe.chains import (
    KempeChange, StaleComponentError, apply_switch, chain_component, enumerate_switches,
    missing_colours,
)
from kempe.generators import (
    complete_graph, cube_graph, perfect_one_factorization, petersen_graph, random_colouring,
    star_graph,
)
from kempe.graph import ColouringError, EdgeColouring, build_graph, canonical_form


class TestMissingColours:
    def test_degree_three_k4(self):
        G = petersen_graph()
        c = random_colouring(G, 4, seed=1)
        assert all(len(missing_colours(G, c, v)) == 1 for v in range(G.n))

    def test_rigid_k5_one_missing_each(self, k5_rigid):
        G, c = k5_rigid
        missing = [missing_colours(G, c, v) for v in range(5)]
        assert all(len(m) == 1 for m in missing)
        assert sorted(next(iter(m)) for m in missing) == [1, 2, 3, 4, 5]

    def test_degree_four_k6(self):
        G = star_graph(4)
        c = random_colouring(G, 6, seed=2)
        assert len(missing_colours(G, c, 0)) == 2

    def test_raw_sequence_needs_k(self):
        G = star_graph(2)
        with pytest.raises(TypeError):
            missing_colours(G, (1, 2), 0)
        assert missing_colours(G, (1, 2), 0, k=3) == {3}


class TestChainComponent:
    def test_rigid_k5_hamilton_paths(self, k5_rigid):
        G, c = k5_rigid
        for a, b in itertools.combinations(range(1, 6), 2):
            for e in range(G.m):
                if c[e] in (a, b):
                    comp = chain_component(G, c, a, b, edge=e)
                    assert comp.shape == "path" and len(comp) == 4
                    assert len(set(comp.vertices)) == 5

    def test_k4_factorization_four_cycle(self):
        G, c = perfect_one_factorization(4).colouring()
        comp = chain_component(G, c, 1, 2, edge=next(e for e in range(6) if c[e] == 1))
        assert comp.shape == "cycle" and len(comp) == 4

    def test_vertex_missing_both_is_empty(self):
        G = star_graph(2)
        c = EdgeColouring(4, (1, 2))
        comp = chain_component(G, c, 3, 4, vertex=0)
        assert comp.shape == "empty" and len(comp) == 0

    def test_alternation_and_order(self):
        G = petersen_graph()
        c = random_colouring(G, 4, seed=5)
        for a, b in itertools.combinations(range(1, 5), 2):
            for e in range(G.m):
                if c[e] not in (a, b):
                    continue
                comp = chain_component(G, c, a, b, edge=e)
                cols = [c[f] for f in comp.edges]
                assert all(x != y for x, y in zip(cols, cols[1:]))
                for f, g in zip(comp.edges, comp.edges[1:]):
                    assert set(G.edges[f]) & set(G.edges[g])

    def test_matches_networkx_components(self):
        # [DERIVED] components agree with networkx on random colourings
        rng = random.Random(0)
        for G in (petersen_graph(), cube_graph(), complete_graph(5)):
            k = G.max_degree() + 1
            for _ in range(5):
                c = random_colouring(G, k, seed=rng.randrange(10**6))
                for e in range(G.m):
                    b = rng.choice([x for x in range(1, k + 1) if x != c[e]])
                    got = chain_component(G, c, c[e], b, edge=e).edge_set
                    assert got == oracle.kempe_component(G.n, list(G.edges), c.colours, c[e], b, e)

    def test_seed_wrong_colour(self):
        G = star_graph(2)
        with pytest.raises(ColouringError):
            chain_component(G, EdgeColouring(3, (1, 2)), 2, 3, edge=0)

    def test_exactly_one_seed(self):
        G = star_graph(2)
        with pytest.raises(TypeError):
            chain_component(G, EdgeColouring(3, (1, 2)), 1, 2)


class TestApplySwitch:
    def test_involution(self):
        G = petersen_graph()
        c = random_colouring(G, 4, seed=9)
        comp = chain_component(G, c, 1, 2, edge=next(e for e in range(G.m) if c[e] == 1))
        once = apply_switch(G, c, comp)
        assert apply_switch(G, once, comp) == c

    def test_single_edge_recolour(self):
        G = build_graph(3, [(0, 1), (1, 2)])
        c = EdgeColouring(3, (1, 2))
        comp = chain_component(G, c, 1, 3, edge=0)
        assert apply_switch(G, c, comp).colours == (3, 2)

    def test_rigid_k5_form_unchanged(self, k5_rigid):
        G, c = k5_rigid
        comp = chain_component(G, c, 1, 2, edge=next(e for e in range(G.m) if c[e] == 1))
        assert canonical_form(G, apply_switch(G, c, comp)) == canonical_form(G, c)

    def test_stale_certificate(self):
        G = build_graph(3, [(0, 1), (1, 2)])
        c = EdgeColouring(3, (1, 2))
        comp = chain_component(G, c, 1, 3, edge=0)
        with pytest.raises(StaleComponentError):
            apply_switch(G, EdgeColouring(3, (1, 3)), comp)


class TestEnumerateSwitches:
    def test_rigid_k5_ten_trivial(self, k5_rigid):
        G, c = k5_rigid
        changes = enumerate_switches(G, c)
        assert len(changes) == 10
        form = canonical_form(G, c)
        for ch in changes:
            comp = chain_component(G, c, ch.a, ch.b, edge=ch.seed)
            assert canonical_form(G, apply_switch(G, c, comp)) == form

    def test_isolated_edge_component(self):
        G = complete_graph(4)
        c = EdgeColouring(4, (1, 2, 3, 3, 2, 1))
        # colour 4 is unused, so each (1, 4) component is a single edge
        singles = [ch for ch in enumerate_switches(G, c) if (ch.a, ch.b) == (1, 4)]
        assert [sorted(ch.edges) for ch in singles] == [[0], [5]]

    def test_empty_graph(self):
        G = build_graph(3, [])
        assert enumerate_switches(G, EdgeColouring(2, ())) == []

    def test_change_normalizes_pair(self):
        ch = KempeChange(3, 1, 0, [0, 2])
        assert (ch.a, ch.b) == (1, 3) and ch.edges == frozenset({0, 2})
        assert ch.to_json() == {"a": 1, "b": 3, "seed_edge": 0}
