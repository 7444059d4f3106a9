import pytest

from rmis.classification import (
    Robustness,
    all_mis_robust,
    biconnected_shortcut,
    classify,
    is_complete_bipartite,
    is_sputnik,
    on_cycle_vertices,
)
from rmis.generators import random_biconnected, sputnik_from
from rmis.graph import bull_graph, complete_bipartite_graph, complete_graph, cycle_graph, new_graph, path_graph, star_graph
from rmis.oracle import exists_rmis_bf, forall_rmis_bf, is_robust_mis

from .conftest import connected_graphs

# triangle 0-1-2 with one pendant on each corner
ANTENNA_TRIANGLE = new_graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)])


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete_bipartite_graph(2, 3), True),
        (star_graph(4), True),
        (cycle_graph(4), True),
        (cycle_graph(6), False),
        (cycle_graph(3), False),
        (path_graph(4), False),
    ],
)
def test_complete_bipartite(g, expected):
    assert is_complete_bipartite(g) is expected


def test_on_cycle_vertices(bull):
    assert on_cycle_vertices(bull) == {1, 2, 3}
    assert on_cycle_vertices(path_graph(5)) == set()
    assert on_cycle_vertices(ANTENNA_TRIANGLE) == {0, 1, 2}


def test_sputnik_examples(bull):
    assert is_sputnik(ANTENNA_TRIANGLE)
    assert not is_sputnik(bull)
    assert is_sputnik(path_graph(4))  # nothing lies on a cycle
    assert is_sputnik(sputnik_from(complete_graph(4)))


def test_all_mis_robust_examples(bull):
    assert all_mis_robust(cycle_graph(4))
    assert all_mis_robust(ANTENNA_TRIANGLE)
    assert not all_mis_robust(bull)
    assert not all_mis_robust(cycle_graph(6))


def test_all_mis_robust_matches_brute_force():
    for n in range(1, 7):
        for g in connected_graphs(n)[::2]:
            assert all_mis_robust(g) == forall_rmis_bf(g), sorted(g.edges)


def test_biconnected_shortcut(bull):
    assert biconnected_shortcut(cycle_graph(6)) is True
    assert biconnected_shortcut(cycle_graph(5)) is False
    assert biconnected_shortcut(bull) is None
    for seed in range(40):
        g = random_biconnected(8, seed, bipartite=seed % 2 == 0)
        assert biconnected_shortcut(g) is (exists_rmis_bf(g) is not None)


@pytest.mark.parametrize(
    "g, text",
    [
        (cycle_graph(4), "ALL_ROBUST complete-bipartite"),
        (path_graph(5), "ALL_ROBUST tree"),
        (ANTENNA_TRIANGLE, "ALL_ROBUST sputnik"),
        (bull_graph(), "SOME_ROBUST witness 0,3,4"),
        (cycle_graph(5), "NONE_ROBUST biconnected-non-bipartite"),
    ],
)
def test_classify_examples(g, text):
    assert str(classify(g)) == text


def test_classify_algorithm_reject():
    # square with a bare triangle hanging from vertex 0
    g = new_graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 0)])
    c = classify(g)
    assert c.tag is Robustness.NONE_ROBUST and c.evidence == "algorithm-reject"


def test_some_robust_witness_is_robust():
    for g in connected_graphs(5):
        c = classify(g)
        if c.tag is Robustness.SOME_ROBUST:
            assert is_robust_mis(g, c.witness)
            assert not forall_rmis_bf(g)
