from itertools import combinations

from bcoloring.coloring import is_b_dominating, is_colorful, is_proper
from bcoloring.fixtures import (
    KG73_CLASSES,
    KG73_DESIGNATED,
    heawood,
    kg73_colorful_five,
    kg73_colorful_four,
    petersen,
    q3,
)
from bcoloring.graphs import girth, is_bipartite, regularity
from bcoloring.kneser import kneser_graph

import oracles


def test_kg73_classes_partition_all_triples():
    assert [len(cls) for cls in KG73_CLASSES] == [8, 12, 5, 10]
    union = set().union(*KG73_CLASSES)
    assert union == set(combinations(range(1, 8), 3))
    assert sum(len(cls) for cls in KG73_CLASSES) == 35


def test_kg73_designated_vertices_sit_in_their_classes():
    for cls, designated in zip(KG73_CLASSES, KG73_DESIGNATED):
        assert designated in cls


def test_kg73_fixture_is_a_colorful_four_coloring():
    kg = kneser_graph(7, 3)
    coloring, designated = kg73_colorful_four()
    assert coloring.k == 4
    assert is_proper(kg.graph, coloring)
    ok, _ = is_colorful(kg.graph, coloring)
    assert ok
    for class_number, v in enumerate(designated, start=1):
        assert coloring.colors[v] == class_number
        assert is_b_dominating(kg.graph, coloring, v)


def test_kg73_persisted_five_coloring():
    kg = kneser_graph(7, 3)
    coloring = kg73_colorful_five()
    assert coloring.k == 5
    assert is_colorful(kg.graph, coloring)[0]


def test_petersen_fixture():
    g = petersen()
    assert g == kneser_graph(5, 2).graph
    assert regularity(g) == 3
    assert girth(g) == 5
    assert oracles.naive_girth(g) == 5


def test_q3_fixture():
    g = q3()
    assert g.n == 8 and g.edge_count() == 12
    assert regularity(g) == 3
    assert is_bipartite(g)[0]


def test_heawood_fixture():
    g = heawood()
    assert g.n == 14 and g.edge_count() == 21
    assert regularity(g) == 3
    assert girth(g) == 6
    assert oracles.naive_girth(g) == 6
    assert is_bipartite(g)[0]
    # Satisfies the d-regular, girth >= 5 hypotheses and is not Petersen.
    assert g.n != petersen().n
