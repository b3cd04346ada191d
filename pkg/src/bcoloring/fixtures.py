"""Golden combinatorial data: the explicit colorful 4-coloring of KG(7,3)
with its four designated b-dominating vertices, the small named graphs the
desk checks run on, and a persisted 5-coloring of KG(7,3) found by search.

Every test that needs this data reads it from here; nothing re-types it.
"""

from __future__ import annotations

from importlib import resources
from itertools import combinations

from .coloring import Coloring, read_coloring
from .graphs import Graph, graph_from_edges
from .kneser import kneser_graph

# Class 1 and class 3 are explicit lists; classes 2 and 4 are set-builder
# expressions (all triples through a fixed element) with removals, class 4
# with three extra triples unioned in. _expand_kg73_classes keeps that
# structure visible and checks it, so a transcription slip in either the
# explicit or the expanded form cannot pass silently.

_V1 = [(1, 2, 3), (1, 4, 5), (2, 5, 6), (1, 2, 6), (1, 2, 7), (1, 3, 6), (1, 6, 7), (1, 4, 6)]
_V2_REMOVED = [(1, 4, 5), (2, 5, 6), (4, 5, 7)]
_V3 = [(1, 2, 4), (1, 3, 7), (4, 5, 7), (1, 4, 7), (2, 6, 7)]
_V4_REMOVED = [(1, 2, 4), (1, 4, 6), (1, 4, 7)]
_V4_EXTRA = [(2, 3, 6), (2, 3, 7), (3, 6, 7)]

KG73_DESIGNATED = ((1, 2, 3), (5, 6, 7), (2, 6, 7), (1, 3, 4))


def _triples_through(pivot, others):
    return {tuple(sorted((pivot, x, y))) for x, y in combinations(others, 2)}


def _expand_kg73_classes() -> list[set[tuple[int, int, int]]]:
    v2_pool = _triples_through(5, (1, 2, 3, 4, 6, 7))
    v4_pool = _triples_through(4, (1, 2, 3, 6, 7))
    for removed, pool in ((_V2_REMOVED, v2_pool), (_V4_REMOVED, v4_pool)):
        for triple in removed:
            if triple not in pool:
                raise AssertionError(f"removed triple {triple} is not in its builder set")
    for triple in _V4_EXTRA:
        if triple in v4_pool:
            raise AssertionError(f"extra triple {triple} already in the builder set")
    classes = [
        set(_V1),
        v2_pool - set(_V2_REMOVED),
        set(_V3),
        (v4_pool - set(_V4_REMOVED)) | set(_V4_EXTRA),
    ]
    if [len(cls) for cls in classes] != [8, 12, 5, 10]:
        raise AssertionError(f"class sizes {[len(c) for c in classes]} != [8, 12, 5, 10]")
    everything = set(combinations(range(1, 8), 3))
    union = set().union(*classes)
    if union != everything or sum(len(cls) for cls in classes) != len(everything):
        raise AssertionError("classes do not partition the 35 triples of {1..7}")
    for cls, designated in zip(classes, KG73_DESIGNATED):
        if designated not in cls:
            raise AssertionError(f"designated vertex {designated} missing from its class")
    return classes


KG73_CLASSES = _expand_kg73_classes()


def kg73_colorful_four() -> tuple[Coloring, tuple[int, int, int, int]]:
    """The colorful 4-coloring of KG(7,3) and its designated b-dominating vertices.

    Returns the coloring (class i gets color i) and the vertex indices of
    the four designated dominating vertices, one per class in class order.
    """
    kg = kneser_graph(7, 3)
    colors = [0] * kg.graph.n
    for class_number, cls in enumerate(KG73_CLASSES, start=1):
        for triple in cls:
            colors[kg.index_of(triple)] = class_number
    designated = tuple(kg.index_of(triple) for triple in KG73_DESIGNATED)
    return Coloring(4, tuple(colors)), designated


def kg73_colorful_five() -> Coloring:
    """A colorful 5-coloring of KG(7,3), found by search and persisted."""
    kg = kneser_graph(7, 3)
    data = resources.files(__package__) / "data" / "kg73_colorful5.coloring"
    with resources.as_file(data) as path:
        return read_coloring(path, kg.graph)


def petersen() -> Graph:
    """The Petersen graph, materialized as KG(5,2)."""
    return kneser_graph(5, 2).graph


def q3() -> Graph:
    """The 3-dimensional cube: vertices are 3-bit words, edges flip one bit."""
    edges = [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    return graph_from_edges(8, edges)


def heawood() -> Graph:
    """The Heawood graph: 14-vertex cycle plus chords i to i+5 for even i.

    3-regular, girth 6, bipartite; the desk-check subject for the
    d-regular girth >= 5 theorems (it is not the Petersen graph).
    """
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return graph_from_edges(14, edges)
