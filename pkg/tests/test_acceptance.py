"""One check per acceptance criterion.

Each criterion prints a single PASS/FAIL line (collected in the terminal
summary under pytest, or printed directly with ``python3 tests/test_acceptance.py``).
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nsd_forge import fixtures  # noqa: E402
from nsd_forge.bipartite import qmnsd_six  # noqa: E402
from nsd_forge.coloring import vertex_sums, verify  # noqa: E402
from nsd_forge.exact import SearchBudget, min_index  # noqa: E402
from nsd_forge.families import color_complete, color_tree, complete_color2_profile, has_equal_even_adjacency  # noqa: E402
from nsd_forge.general_bounds import kalkowski_mnsd18, kalkowski_qmnsd12  # noqa: E402
from nsd_forge.graph import FamilySpec, generate  # noqa: E402
from nsd_forge.majority import CompleteLevel, mnsd_complete  # noqa: E402
from nsd_forge.maxdeg4 import ScanExhausted, Trace, qmnsd_maxdeg4  # noqa: E402
from nsd_forge.theorems import HarnessConfig, run  # noqa: E402

from corpora import bipartite_corpus, m18_corpus, maxdeg4_corpus, qm12_corpus  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}


def _g(family, n, m=0, seed=0):
    return generate(FamilySpec(family, n, m, seed=seed))


def _index_table(mode, table, limit):
    bad, slowest = [], 0.0
    for spec, want in table:
        t = time.perf_counter()
        res = min_index(_g(*spec), mode, SearchBudget(max_k=8, time_limit=limit))
        dt = time.perf_counter() - t
        slowest = max(slowest, dt)
        if res.k != want or dt >= limit:
            bad.append((spec, res.k, want))
    return not bad, f"{len(table)} instances, slowest {slowest:.2f}s" + (f", wrong: {bad}" if bad else "")


def criterion_1():
    table = [(("path", 3), 2)] + [(("path", n), 3) for n in range(4, 8)] + [
        (("cycle", 3), 3), (("cycle", 6), 3), (("cycle", 4), 4), (("cycle", 7), 4), (("cycle", 5), 5),
        (("complete", 3), 3), (("complete", 4), 3), (("complete", 5), 3),
        (("complete_bipartite", 2, 2), 4), (("complete_bipartite", 2, 3), 2),
        (("complete_bipartite", 3, 3), 3)]
    return _index_table("quasi_majority", table, 10.0)


def criterion_2():
    table = [(("complete", 4), 5), (("complete", 5), 3), (("complete", 6), 4),
             (("complete_bipartite", 3, 3), 5), (("complete_bipartite", 2, 2), 4)]
    return _index_table("majority", table, 60.0)


def criterion_3():
    rows = run(HarnessConfig(oracle_max_edges=12, time_limit=60.0))
    small = [r for r in rows if r.edges <= 12]
    bad = [r for r in small if r.status != "match"]
    return not bad, f"{len(small)} rows with |E| <= 12, {len(bad)} not matched" + (f": {bad[:3]}" if bad else "")


def criterion_4():
    t = time.perf_counter()
    failures = []
    for i, g in enumerate(qm12_corpus()):
        if not verify(g, kalkowski_qmnsd12(g), "quasi_majority", 12).passed:
            failures.append(("qm12", i))
    for i, g in enumerate(m18_corpus()):
        if not verify(g, kalkowski_mnsd18(g), "majority", 18).passed:
            failures.append(("m18", i))
    for i, g in enumerate(maxdeg4_corpus()):
        if not verify(g, qmnsd_maxdeg4(g), "quasi_majority", 7).passed:
            failures.append(("maxdeg4", i))
    for i, g in enumerate(bipartite_corpus()):
        if not verify(g, qmnsd_six(g), "quasi_majority", 6).passed:
            failures.append(("six", i))
    dt = time.perf_counter() - t
    ok = not failures and dt < 300
    return ok, f"500 graphs in {dt:.1f}s" + (f", failures {failures[:5]}" if failures else "")


def criterion_5():
    bad = []
    for n in range(3, 21):
        prof = sorted(complete_color2_profile(color_complete(n)[1]))
        h = n // 2
        if n % 2:
            ok = prof == [h - 1] * h + [h] * (h + 1)
        else:
            ok = sum(1 for x in prof if x <= h - 1) >= h - 1
        if not ok:
            bad.append(("qm", n))
    for n in range(6, 17, 2):
        levels: list[CompleteLevel] = []
        mnsd_complete(n, levels)
        if not all(lv.slack and lv.sums == sorted(set(lv.sums)) for lv in levels):
            bad.append(("majority", n))
    return not bad, "complete n=3..20, majority recursion n=6..16" + (f", bad {bad}" if bad else "")


def criterion_6():
    import random
    rng = random.Random(6)
    bad = []
    counts = {2: 0, 3: 0}
    for _ in range(500):
        g = _g("random_tree", rng.randint(3, 14), seed=rng.getrandbits(32))
        k, _ = color_tree(g)
        predicted = 3 if has_equal_even_adjacency(g) else 2
        oracle = min_index(g, "quasi_majority", SearchBudget(max_k=4)).k
        counts[k] += 1
        if not (k == predicted == oracle):
            bad.append((g.edges, k, predicted, oracle))
    return not bad, f"500 trees (k=2: {counts[2]}, k=3: {counts[3]})" + (f", bad {bad[:2]}" if bad else "")


def criterion_7():
    bad = []
    for name in fixtures.names():
        fx = fixtures.load(name)
        c = fx.coloring()
        if not verify(fx.graph, c, fx.mode, fx.k).passed or tuple(vertex_sums(fx.graph, c)) != fx.sums:
            bad.append(name)
    if fixtures.load("K4-qmnsd3").sums != (5, 4, 6, 7):
        bad.append("K4 sums")
    if set(fixtures.load("K6-mnsd4").sums) != {9, 10, 11, 13, 14, 15}:
        bad.append("K6 sums")
    return not bad, f"{len(fixtures.names())} fixtures" + (f", bad {bad}" if bad else "")


def criterion_8():
    steps = {1: 0, 2: 0}
    try:
        for g in maxdeg4_corpus():
            trace = Trace()
            qmnsd_maxdeg4(g, trace)
            for case, _, _ in trace.steps:
                steps[case] += 1
    except ScanExhausted as exc:
        return False, f"empty scan: {exc}"
    return True, f"{steps[1]} pair scans, {steps[2]} tuple scans, none empty"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 9)}


def _record(i: int) -> tuple[bool, str]:
    ok, detail = CRITERIA[i]()
    RESULTS[i] = (ok, detail)
    return ok, detail


@pytest.mark.parametrize("i", range(1, 9))
def test_criterion(i):
    ok, detail = _record(i)
    assert ok, detail


def report_lines() -> list[str]:
    return [f"criterion {i}: {'PASS' if ok else 'FAIL'} - {d}" for i, (ok, d) in sorted(RESULTS.items())]


if __name__ == "__main__":
    for i in CRITERIA:
        _record(i)
        print(report_lines()[-1], flush=True)
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
