from __future__ import annotations

import pytest

from nsd_forge import fixtures
from nsd_forge.coloring import vertex_sums, verify
from nsd_forge.exact import SearchBudget, min_index


def test_inventory():
    assert fixtures.names() == sorted(["K2,2-qmnsd4", "K3,3-mnsd5", "K4-mnsd5", "K4-qmnsd3",
                                       "K5,5-mnsd4", "K6-mnsd4", "K7,7-mnsd3"])


@pytest.mark.parametrize("name", fixtures.names())
def test_fixture_verifies(name):
    fx = fixtures.load(name)
    c = fx.coloring()
    assert verify(fx.graph, c, fx.mode, fx.k).passed
    assert tuple(vertex_sums(fx.graph, c)) == fx.sums
    assert fx.provenance


def test_k4_sums_exact():
    assert fixtures.load("K4-qmnsd3").sums == (5, 4, 6, 7)


def test_k6_sums_exact():
    assert set(fixtures.load("K6-mnsd4").sums) == {9, 10, 11, 13, 14, 15}


def test_k7_7_side_sums():
    fx = fixtures.load("K7,7-mnsd3")
    assert set(fx.sums[:7]) == {13, 16} and set(fx.sums[7:]) == {14, 15}


def test_k5_5_profile_and_derivation_flag():
    fx = fixtures.load("K5,5-mnsd4")
    assert fx.derived
    assert fx.sums == (9, 10, 16, 10, 14, 12, 12, 12, 12, 11)


@pytest.mark.parametrize("name", ["K4-mnsd5", "K2,2-qmnsd4", "K3,3-mnsd5", "K4-qmnsd3"])
def test_fixture_palette_is_optimal(name):
    fx = fixtures.load(name)
    res = min_index(fx.graph, fx.mode, SearchBudget(max_k=fx.k))
    assert res.k == fx.k
