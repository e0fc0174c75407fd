import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from anagramfree import oracle
from anagramfree.colouring import (Colouring, Status, colour_path_asf, dnc_colour,
                                   dnc_colour_bound, verify_anagram_free)
from anagramfree.errors import InvalidInputError, PreconditionError
from anagramfree.graphs import (Graph, PathDecomposition, build_clique_chain, build_ladder,
                                build_path_graph, clique_chain_decomposition,
                                enumerate_simple_paths, ladder_decomposition,
                                path_graph_decomposition)
from anagramfree.words import find_abelian_square, is_anagram


def random_graph(rng, max_vertices=8):
    n = rng.randint(1, max_vertices)
    p = rng.random()
    return Graph(n, tuple(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def first_anagram_path(g, phi):
    for path in enumerate_simple_paths(g):
        if len(path) % 2 == 0 and is_anagram(phi.spell(path)):
            return path
    return None


class TestColouring:
    def test_rejects_bad_symbol(self):
        with pytest.raises(InvalidInputError):
            Colouring(2, (0, 2))

    def test_json_round_trip(self):
        phi = Colouring(3, (0, 2, 1))
        assert Colouring.from_json(phi.to_json()) == phi

    def test_mismatched_length(self):
        with pytest.raises(InvalidInputError):
            verify_anagram_free(build_path_graph(3), Colouring(2, (0, 1)))


class TestVerify:
    def test_single_edge_same_colour(self):
        v = verify_anagram_free(build_path_graph(2), Colouring(1, (0, 0)))
        assert v.status is Status.COUNTEREXAMPLE and v.path == (0, 1)

    def test_rainbow_is_ok(self):
        g, _ = build_ladder(4)
        assert verify_anagram_free(g, Colouring(8, tuple(range(8)))).ok

    def test_p4_abab(self):
        v = verify_anagram_free(build_path_graph(4), Colouring(2, (0, 1, 0, 1)))
        assert v.path == (0, 1, 2, 3)

    def test_cap_gives_unknown(self):
        g, _ = build_ladder(4)
        v = verify_anagram_free(g, Colouring(8, tuple(range(8))), cap=100)
        assert v.status is Status.UNKNOWN and not v.ok

    def test_exhaustive_four_vertex_graphs(self):
        pairs = list(itertools.combinations(range(4), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(4, tuple(e for b, e in enumerate(pairs) if mask >> b & 1))
            for colours in itertools.product(range(2), repeat=4):
                phi = Colouring(2, colours)
                v = verify_anagram_free(g, phi)
                assert v.ok == (oracle.brute_find_anagram_path(g, phi) is None)
                assert v.path == first_anagram_path(g, phi)

    def test_random_agreement_with_oracle(self):
        rng = random.Random(20240611)
        for _ in range(1000):
            g = random_graph(rng)
            phi = Colouring(2, tuple(rng.randrange(2) for _ in range(g.vertex_count)))
            v = verify_anagram_free(g, phi)
            assert v.ok == (oracle.brute_find_anagram_path(g, phi) is None)
            if not v.ok:
                assert len(v.path) % 2 == 0 and is_anagram(phi.spell(v.path))

    @settings(max_examples=50, deadline=None)
    @given(st.randoms(use_true_random=False), st.permutations(range(3)))
    def test_renaming_preserves_verdict(self, rng, perm):
        g = random_graph(rng, 7)
        phi = Colouring(3, tuple(rng.randrange(3) for _ in range(g.vertex_count)))
        renamed = Colouring(3, tuple(perm[c] for c in phi.colours))
        a, b = verify_anagram_free(g, phi), verify_anagram_free(g, renamed)
        assert a.status == b.status and a.path == b.path


class TestAsfPath:
    def test_single_vertex(self):
        phi = colour_path_asf(1)
        assert len(phi) == 1 and verify_anagram_free(build_path_graph(1), phi).ok

    def test_four_vertices(self):
        phi = colour_path_asf(4)
        assert phi.colours_used() <= 4 and find_abelian_square(phi.colours) is None

    @pytest.mark.parametrize("n", [2, 7, 30, 200])
    def test_verifier_ok(self, n):
        phi = colour_path_asf(n)
        assert phi.colours_used() <= 4
        assert verify_anagram_free(build_path_graph(n), phi).ok

    def test_rejects_zero(self):
        with pytest.raises(InvalidInputError):
            colour_path_asf(0)


class TestDnc:
    def test_k4_rainbow(self):
        g = Graph(4, tuple(itertools.combinations(range(4), 2)))
        phi = dnc_colour(g, PathDecomposition(({0, 1, 2, 3},)))
        assert sorted(phi.colours) == [0, 1, 2, 3]
        assert verify_anagram_free(g, phi).ok

    def test_invalid_decomposition(self):
        with pytest.raises(PreconditionError):
            dnc_colour(build_path_graph(3), PathDecomposition(({0, 1},)))

    def test_p8(self):
        phi = dnc_colour(build_path_graph(8), path_graph_decomposition(8))
        assert phi.colours_used() <= 6 == dnc_colour_bound(1, 7)
        assert verify_anagram_free(build_path_graph(8), phi).ok

    @pytest.mark.parametrize("n", range(2, 9))
    def test_ladders(self, n):
        g, _ = build_ladder(n)
        d = ladder_decomposition(n)
        phi = dnc_colour(g, d)
        assert phi.colours_used() <= dnc_colour_bound(3, len(d.bags))
        assert verify_anagram_free(g, phi).ok

    @pytest.mark.parametrize("n", range(1, 17))
    def test_paths(self, n):
        g, d = build_path_graph(n), path_graph_decomposition(n)
        phi = dnc_colour(g, d)
        assert phi.colours_used() <= dnc_colour_bound(d.width, len(d.bags))
        assert verify_anagram_free(g, phi).ok

    @pytest.mark.parametrize("n", range(2, 5))
    def test_clique_chains(self, n):
        g, _ = build_clique_chain(n, 3)
        d = clique_chain_decomposition(n, 3)
        phi = dnc_colour(g, d)
        assert phi.colours_used() <= dnc_colour_bound(5, len(d.bags))
        assert verify_anagram_free(g, phi).ok

    def test_colour_ids_dense(self):
        g, _ = build_ladder(6)
        phi = dnc_colour(g, ladder_decomposition(6))
        assert set(phi.colours) == set(range(phi.alphabet_size))
