import itertools
import random

import pytest

from anagramfree import oracle
from anagramfree.colouring import Colouring
from anagramfree.errors import BudgetExceededError, EnumerationOverflowError, InvalidInputError
from anagramfree.graphs import Graph, build_ladder, build_path_graph


def test_find_path_edge():
    assert oracle.brute_find_anagram_path(build_path_graph(2), Colouring(1, (0, 0))) is not None


def test_find_path_rainbow_k4():
    k4 = Graph(4, tuple(itertools.combinations(range(4), 2)))
    assert oracle.brute_find_anagram_path(k4, Colouring(4, (0, 1, 2, 3))) is None


def test_find_path_cap():
    k4 = Graph(4, tuple(itertools.combinations(range(4), 2)))
    with pytest.raises(EnumerationOverflowError):
        oracle.brute_find_anagram_path(k4, Colouring(4, (0, 1, 2, 3)), cap=5)


def test_canonical_colourings_count():
    # restricted growth strings of length 4 with <= 2 blocks: 2^3
    assert len(list(oracle.canonical_colourings(4, 2))) == 8
    # Bell number B_4
    assert len(list(oracle.canonical_colourings(4, 4))) == 15


@pytest.mark.parametrize("graph, expected", [
    (build_path_graph(1), 1),
    (build_path_graph(2), 2),
    (build_path_graph(3), 2),
    (build_path_graph(4), 3),
    (build_ladder(3)[0], 4),
])
def test_min_afcn(graph, expected):
    assert oracle.brute_min_afcn(graph, 6) == expected


def test_min_afcn_none_when_too_few_colours():
    assert oracle.brute_min_afcn(build_path_graph(4), 2) is None


def test_min_afcn_monotone_under_edge_addition():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(2, 6)
        pairs = list(itertools.combinations(range(n), 2))
        edges = [e for e in pairs if rng.random() < 0.4]
        extra = [e for e in pairs if e not in edges]
        base = oracle.brute_min_afcn(Graph(n, tuple(edges)), n)
        if extra:
            bigger = oracle.brute_min_afcn(Graph(n, tuple(edges + [rng.choice(extra)])), n)
            assert bigger >= base


def test_brute_split():
    assert oracle.brute_split((0, 1, 1, 0)) == (0, 0)
    assert oracle.brute_split((0, 1)) is None
    with pytest.raises(InvalidInputError):
        oracle.brute_split((0, 1, 1))


def test_brute_assignment():
    assert oracle.brute_assignment([{0, 1, 2}] * 3, 1)
    assert not oracle.brute_assignment([{0, 1, 2}] * 2, 1)


def test_asf_max():
    assert oracle.brute_asf_max(1) == 1
    assert oracle.brute_asf_max(2) == 3
    assert oracle.brute_asf_max(3) == 7
    with pytest.raises(BudgetExceededError):
        oracle.brute_asf_max(4, cap=10**4)
