from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperbetti.generators import cycle_graph, path_graph
from hyperbetti.hypergraph import build, from_edge_labels

__all__ = ["cycle_graph", "path_graph"]


@pytest.fixture
def p3():
    return from_edge_labels([["x", "y"], ["y", "z"]])


@pytest.fixture
def p4():
    return from_edge_labels([["w", "x"], ["x", "y"], ["y", "z"]])


@pytest.fixture
def p6():
    return from_edge_labels([["u", "v"], ["v", "w"], ["w", "x"], ["x", "y"], ["y", "z"]])


@pytest.fixture
def c3():
    return from_edge_labels([["x", "y"], ["x", "z"], ["y", "z"]])


@pytest.fixture
def c4():
    return from_edge_labels([["w", "x"], ["x", "y"], ["y", "z"], ["z", "w"]])


@pytest.fixture
def triple_overlap():
    # six vertices, three triples; the middle triple is absorbed by the
    # other two only jointly, never singly
    return build(
        ["x1", "x2", "x3", "x4", "x5", "x6"],
        [(0, 1, 2), (1, 2, 3), (1, 4, 5)],
    )
