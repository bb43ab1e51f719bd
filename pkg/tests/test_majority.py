from __future__ import annotations

import pytest

from nsd_forge.coloring import verify
from nsd_forge.exact import min_index
from nsd_forge.graph import GraphInputError
from nsd_forge.majority import (CompleteLevel, mnsd_complete, mnsd_complete_bipartite,
                                odd_square_coloring, odd_square_profile)

from conftest import gen


def bipartite_index(n: int, m: int) -> int:
    if n % 2 == 0 and m % 2 == 0:
        return 4 if n == m == 2 else (3 if n == m else 2)
    return {3: 5, 5: 4}.get(n, 3) if n == m else 3


@pytest.mark.parametrize("n", range(3, 19))
def test_complete(n):
    levels: list[CompleteLevel] = []
    k, c = mnsd_complete(n, levels)
    assert k == (3 if n % 2 else (5 if n == 4 else 4))
    assert verify(c.graph, c, "majority", k).passed
    for lv in levels:
        assert lv.sums == sorted(set(lv.sums)) and lv.slack
    if n % 2 == 0 and n >= 6:
        assert [lv.n for lv in levels] == list(range(6, n + 1, 2))


@pytest.mark.parametrize("n", range(2, 12))
@pytest.mark.parametrize("m", range(2, 12))
def test_complete_bipartite(n, m):
    k, c = mnsd_complete_bipartite(n, m)
    assert k == bipartite_index(n, m)
    assert verify(c.graph, c, "majority", k).passed


@pytest.mark.parametrize("n", range(9, 18, 2))
def test_odd_square_profile(n):
    g = gen("complete_bipartite", n, n)
    c = odd_square_coloring(g, n)
    left, right = odd_square_profile(c, n)
    q = (n - 1) // 2  # n = 2q + 1
    assert left <= {3 * q + 3, 3 * q + 4, 3 * q + 6, 3 * q + 8}
    assert right <= {3 * q + 5, 3 * q + 7}
    assert verify(g, c, "majority", 3).passed


@pytest.mark.parametrize("n, m", [(2, 3), (3, 4), (2, 5), (4, 5), (3, 5)])
def test_small_bipartite_against_search(n, m):
    assert min_index(gen("complete_bipartite", n, m), "majority").k == bipartite_index(n, m)


def test_rejects_small_inputs():
    with pytest.raises(GraphInputError):
        mnsd_complete(2)
    with pytest.raises(GraphInputError):
        mnsd_complete_bipartite(1, 4)
