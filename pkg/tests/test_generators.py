import itertools

import networkx as nx
import pytest

from kempe.enumerator import enumerate_switches, is_rigid
from kempe.generators import (
    any_colouring, circulant_graph, complete_bipartite, complete_graph, cube_graph, is_perfect,
    perfect_one_factorization, petersen_graph, prism_graph, random_bounded_degree,
    random_colouring, rigid_colouring,
)
from kempe.graph import ColouringError, validate_colouring


def union_is_single_cycle(order, f, g):
    H = nx.MultiGraph()
    H.add_nodes_from(range(order))
    H.add_edges_from(list(f) + list(g))
    return nx.is_connected(H) and all(d == 2 for _, d in H.degree())


class TestConstructions:
    def test_k5(self):
        G = complete_graph(5)
        assert G.m == 10 and set(G.degrees()) == {4}

    def test_k33(self):
        G = complete_bipartite(3, 3)
        assert G.m == 9 and set(G.degrees()) == {3}

    def test_k1(self):
        assert complete_graph(1).m == 0

    def test_lexicographic_edges(self):
        assert list(complete_graph(4).edges) == sorted(complete_graph(4).edges)

    @pytest.mark.parametrize("G,nx_graph", [
        (petersen_graph(), nx.petersen_graph()),
        (cube_graph(), nx.hypercube_graph(3)),
        (prism_graph(3), nx.circular_ladder_graph(3)),
        (circulant_graph(8, (1, 2)), nx.circulant_graph(8, [1, 2])),
    ])
    def test_isomorphic_to_networkx(self, G, nx_graph):
        H = nx.Graph(list(G.edges))
        assert nx.is_isomorphic(H, nx_graph)


class TestFactorizations:
    @pytest.mark.parametrize("order", [4, 6, 8, 10])
    def test_perfect(self, order):
        f = perfect_one_factorization(order)
        assert f.perfect and len(f.factors) == order - 1
        for a, b in itertools.combinations(f.factors, 2):
            assert union_is_single_cycle(order, a, b)
        G, c = f.colouring()
        assert validate_colouring(G, c).valid

    def test_rotational_factor_shape(self):
        f = perfect_one_factorization(6)
        # factor 0 holds the infinity edge (0, 5) and the pairs (1, 4), (2, 3)
        assert f.factors[0] == ((0, 5), (1, 4), (2, 3))

    def test_detects_imperfect(self):
        # factor i pairs v with v xor i; factors 1 and 2 unite into two 4-cycles
        bad = [
            ((0, 1), (2, 3), (4, 5), (6, 7)), ((0, 2), (1, 3), (4, 6), (5, 7)),
            ((0, 3), (1, 2), (4, 7), (5, 6)), ((0, 4), (1, 5), (2, 6), (3, 7)),
            ((0, 5), (1, 4), (2, 7), (3, 6)), ((0, 6), (1, 7), (2, 4), (3, 5)),
            ((0, 7), (1, 6), (2, 5), (3, 4)),
        ]
        assert not is_perfect(8, bad)

    @pytest.mark.parametrize("order", [3, 5, 0])
    def test_bad_order(self, order):
        with pytest.raises(ValueError):
            perfect_one_factorization(order)


class TestRigid:
    @pytest.mark.parametrize("order", [3, 5, 9])
    def test_pair_unions_hamilton_paths(self, order):
        G, c = rigid_colouring(order)
        assert c.k == order and validate_colouring(G, c).valid
        for a, b in itertools.combinations(range(1, order + 1), 2):
            H = nx.Graph([G.edges[e] for e in range(G.m) if c[e] in (a, b)])
            assert H.number_of_nodes() == order and nx.is_connected(H)
            assert H.number_of_edges() == order - 1

    def test_k5_rigid(self):
        G, c = rigid_colouring(5)
        assert is_rigid(G, c)

    def test_k9_switches_trivial(self):
        G, c = rigid_colouring(9)
        assert len(enumerate_switches(G, c)) == 36
        assert is_rigid(G, c)

    def test_even_order_rejected(self):
        with pytest.raises(ValueError):
            rigid_colouring(6)


class TestRandom:
    def test_subcubic_replayable(self):
        G = random_bounded_degree(10, 3, False, 7)
        assert G.max_degree() <= 3 and G.is_simple()
        assert random_bounded_degree(10, 3, False, 7) == G

    def test_subquartic(self):
        G = random_bounded_degree(8, 4, False, 1)
        assert G.max_degree() <= 4 and G.is_simple()

    def test_multigraph_has_parallel_pair(self):
        G = random_bounded_degree(4, 3, True, 2)
        assert not G.is_simple() and G.max_degree() <= 3

    def test_bad_degree(self):
        with pytest.raises(ValueError):
            random_bounded_degree(5, 5, seed=0)


class TestColourings:
    def test_k4_three_colours(self):
        G = complete_graph(4)
        c = any_colouring(G, 3)
        assert validate_colouring(G, c).valid
        # a 3-colouring of K4 is its 1-factorization: each class a perfect matching
        for x in (1, 2, 3):
            assert sorted(v for e in range(6) if c[e] == x for v in G.edges[e]) == [0, 1, 2, 3]

    def test_petersen_class_two(self):
        with pytest.raises(ColouringError):
            any_colouring(petersen_graph(), 3)

    def test_vizing_bound(self):
        for seed in range(30):
            G = random_bounded_degree(9, 3 + seed % 2, seed % 3 == 0, seed)
            k = G.max_degree() + 1 if G.is_simple() else G.max_degree() + (G.max_degree() + 1) // 2
            assert validate_colouring(G, random_colouring(G, k, seed=seed)).valid

    def test_random_colouring_seeded(self):
        G = petersen_graph()
        assert random_colouring(G, 4, seed=3) == random_colouring(G, 4, seed=3)
