"""Majority NSD colorings of complete and complete bipartite graphs at
their exact index.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fixtures
from .coloring import EdgeColoring, verify
from .families import color_complete, color_complete_bipartite
from .graph import FamilySpec, GraphInputError, generate

__all__ = [
    "CompleteLevel",
    "mnsd_complete",
    "mnsd_complete_bipartite",
    "odd_square_profile",
    "odd_square_coloring",
]


def _checked(g, c: EdgeColoring, k: int) -> tuple[int, EdgeColoring]:
    report = verify(g, c, "majority", k)
    if not report.passed:
        raise AssertionError(f"construction failed verification: {report.witnesses[:3]}")
    c.k = k
    return k, c


@dataclass
class CompleteLevel:
    n: int
    case: int  # 1 or 2; 0 for the base
    order: list[int]  # vertices by increasing sum
    sums: list[int]  # sums along ``order``
    slack: bool  # the slack condition needed by the next level holds


def _slack(col, order: list[int], half: int) -> tuple[bool, bool]:
    """(color-2 slack at v_half, color-3 slack at v_{half+1}), 1-based."""
    def count(v: int, c: int) -> int:
        return sum(1 for (a, b), x in col.items() if x == c and v in (a, b))

    return (count(order[half - 1], 2) <= half - 2,
            count(order[half], 3) <= half - 2)


def mnsd_complete(n: int, levels: list[CompleteLevel] | None = None) -> tuple[int, EdgeColoring]:
    """Odd n reuses the QM construction (all degrees even); K4 is a stored
    5-coloring; even n >= 6 grows the K6 base two vertices at a time."""
    if n < 3:
        raise GraphInputError(f"complete graphs need n >= 3, got {n}")
    g = generate(FamilySpec("complete", n))
    if n % 2:
        _, c = color_complete(n)
        return _checked(g, c, 3)
    if n == 4:
        fx = fixtures.load("K4-mnsd5")
        return _checked(g, fx.coloring(), fx.k)
    fx = fixtures.load("K6-mnsd4")
    col = {e: c for e, c in zip(fx.graph.edges, fx.colors)}
    sums = dict(enumerate(fx.sums))
    order = sorted(range(6), key=sums.get)
    levels = levels if levels is not None else []
    size = 6
    levels.append(CompleteLevel(6, 0, list(order), [sums[v] for v in order],
                                any(_slack(col, order, 3))))
    while size < n:
        k = size // 2 + 1  # building K_{2k} from K_{2k-2}
        case1, case2 = _slack(col, order, k - 1)
        if not (case1 or case2):
            raise AssertionError(f"slack condition lost at n={size}")
        case = 1 if case1 else 2
        x, y = size, size + 1
        v = lambda i: order[i - 1]  # noqa: E731 - 1-based view of the order
        new = {(x, y): 3 if case == 1 else 2}
        for i in range(1, k - 1):
            new[(v(i), x)] = 1
            new[(v(i), y)] = 3
        for i in range(k + 1, 2 * k - 1):
            new[(v(i), x)] = 2
            new[(v(i), y)] = 4
        if case == 1:
            new[(v(k - 1), x)], new[(v(k - 1), y)] = 2, 2
            new[(v(k), x)], new[(v(k), y)] = 1, 4
        else:
            new[(v(k - 1), x)], new[(v(k - 1), y)] = 1, 4
            new[(v(k), x)], new[(v(k), y)] = 3, 3
        for (a, b), c in new.items():
            col[(min(a, b), max(a, b))] = c
            sums[a] = sums.get(a, 0) + c
            sums[b] = sums.get(b, 0) + c
        order = [x] + order + [y]
        size += 2
        seq = [sums[u] for u in order]
        assert all(p < q for p, q in zip(seq, seq[1:])), seq
        levels.append(CompleteLevel(size, case, list(order), seq, any(_slack(col, order, size // 2))))
    return _checked(g, EdgeColoring(g, [col[e] for e in g.edges]), 4)


def odd_square_profile(c: EdgeColoring, n: int) -> tuple[set[int], set[int]]:
    sums = [c.partial_sum(v) for v in range(2 * n)]
    return set(sums[:n]), set(sums[n:])


def mnsd_complete_bipartite(n: int, m: int) -> tuple[int, EdgeColoring]:
    """Sides ``a_i = i - 1`` and ``b_j = n + j - 1`` (1-based i, j)."""
    if n < 2 or m < 2:
        raise GraphInputError("majority colorings of K_n,m need n, m >= 2")
    g = generate(FamilySpec("complete_bipartite", n, m))
    if n % 2 == 0 and m % 2 == 0:
        k, c = color_complete_bipartite(n, m)
        return _checked(g, c, k)
    if n == m:
        if n in (3, 5, 7):
            fx = fixtures.load(f"K{n},{n}-mnsd{ {3: 5, 5: 4, 7: 3}[n] }".replace(" ", ""))
            return _checked(g, fx.coloring(), fx.k)
        return _checked(g, odd_square_coloring(g, n), 3)
    # interval coloring i + j - 1 reduced mod 3, residue 0 -> color 3
    col = {}
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            col[(i, j)] = (i + j - 1) % 3 or 3
    if {n % 3, m % 3} == {1, 2} and n // 3 == m // 3:
        for i in range(1, min(n, m) + 1, 3):
            col[(i, i)] = 3
    colors = [col[(u + 1, v - n + 1)] for u, v in g.edges]
    return _checked(g, EdgeColoring(g, colors), 3)


def odd_square_coloring(g, n: int) -> EdgeColoring:
    """Parity coloring of K_{n,n} (n odd) plus the five color-3 recoloring steps.

    Majority only for n >= 9; K_{7,7} uses the stored coloring instead.
    """
    k = (n - 1) // 2
    col = {(i, j): 1 if (i + j - 1) % 2 else 2 for i in range(1, n + 1) for j in range(1, n + 1)}
    threes = []
    for i in range(1, 2 * k, 2):  # step 1
        threes += [(i, i), (i, i + 1), (i + 1, i), (i + 1, i + 1)]
    threes.append((2 * k + 1, 2 * k + 1))  # step 2
    for i in range(2, 2 * k - 1, 2):  # step 3
        threes += [(i, i + 1), (i, i + 2)]
    threes += [(2 * k, 1), (2 * k, 2)]  # step 4
    threes.append((1, 2 * k + 1))  # step 5
    for e in threes:
        col[e] = 3
    return EdgeColoring(g, [col[(u + 1, v - n + 1)] for u, v in g.edges])
