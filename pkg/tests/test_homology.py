"""Betti tables from restriction homology, gated by the brute oracle.

The frozen tables below were computed first with tests/oracle.py, which
shares no code with the engine under test. Everything else must agree
with them exactly.
"""

from __future__ import annotations

import pytest

from hyperbetti.errors import SizeCapExceeded
from hyperbetti.homology import (
    betti_table,
    independent_faces,
    reduced_homology_dims,
    table_from_homology,
    homology_of_restrictions,
)
from hyperbetti.hypergraph import build
from hyperbetti.linalg import GF2, QQ

from conftest import cycle_graph, path_graph
from oracle import oracle_betti

FROZEN = {
    "P3": {(0, 0): 1, (1, 2): 2, (2, 3): 1},
    "C3": {(0, 0): 1, (1, 2): 3, (2, 3): 2},
    "C4": {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1},
    "P6": {(0, 0): 1, (1, 2): 5, (2, 3): 4, (2, 4): 3, (3, 5): 4, (4, 6): 1},
}


def _instances():
    return {
        "P3": path_graph(3),
        "C3": cycle_graph(3),
        "C4": cycle_graph(4),
        "P6": path_graph(6),
    }


def test_oracle_matches_frozen_tables():
    # guards the oracle itself against drift
    for name, h in _instances().items():
        assert oracle_betti(h.n, [h.edge_vertices(s) for s in range(h.m)]) == FROZEN[name]


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_engine_matches_oracle(name):
    h = _instances()[name]
    assert betti_table(h, QQ).entries == FROZEN[name]


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_gf2_agrees_here(name):
    h = _instances()[name]
    assert betti_table(h, GF2).entries == FROZEN[name]


def test_edgeless_table():
    h = build(["a", "b", "c"], [])
    t = betti_table(h)
    assert t.entries == {(0, 0): 1}
    assert t.projective_dimension() == 0
    assert t.regularity() == 0


def test_single_edge_table():
    h = build(["a", "b", "c"], [(0, 2)])
    assert betti_table(h).entries == {(0, 0): 1, (1, 2): 1}


def test_pd_reg_values(p6=None):
    t = betti_table(_instances()["P6"])
    assert t.projective_dimension() == 4
    assert t.regularity() == 2
    t = betti_table(_instances()["C4"])
    assert t.projective_dimension() == 3
    assert t.regularity() == 1


def test_faces_of_four_cycle():
    h = cycle_graph(4)
    by_dim = independent_faces(h, h.vertex_mask)
    assert [len(level) for level in by_dim] == [4, 2]
    # two disjoint segments: one reduced homology class in degree 0
    assert reduced_homology_dims(by_dim, QQ) == [0, 1]


def test_empty_restriction_contributes_identity():
    h = cycle_graph(3)
    assert reduced_homology_dims(independent_faces(h, 0), QQ) == [1]


def test_restriction_table_counts_inside_subset():
    h = path_graph(4)
    hom = homology_of_restrictions(h, QQ)
    # restriction to the first three vertices is a path with two edges
    sub = table_from_homology(hom, QQ, h.n, within=0b0111)
    assert sub.entries == FROZEN["P3"]


def test_vertex_cap_enforced():
    h = build([f"v{i}" for i in range(15)], [(0, 1)])
    with pytest.raises(SizeCapExceeded):
        betti_table(h)


def test_explicit_cap_parameter(monkeypatch):
    monkeypatch.setenv("BETTI_CAP_N", "3")
    h = build(["a", "b", "c", "d"], [(0, 1), (2, 3)])
    with pytest.raises(SizeCapExceeded):
        betti_table(h)
    assert betti_table(h, cap=4).get(2, 4) == 1


def test_cap_env_override(monkeypatch):
    h = build(["a", "b", "c", "d", "e"], [(0, 1)])
    monkeypatch.setenv("BETTI_CAP_N", "4")
    with pytest.raises(SizeCapExceeded):
        betti_table(h)
    monkeypatch.setenv("BETTI_CAP_N", "5")
    assert betti_table(h).get(1, 2) == 1
