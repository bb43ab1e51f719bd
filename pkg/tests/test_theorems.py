from __future__ import annotations

import pytest

from nsd_forge.theorems import HarnessConfig, build_tasks, run, to_records, to_tsv


def test_path_and_cycle_rows():
    rows = run(HarnessConfig(families=("path", "cycle"), max_n=12))
    paths = [r for r in rows if r.family == "path" and r.params[0] <= 10]
    assert [r.constructed_k for r in paths] == [2] + [3] * 7
    cycles = [r for r in rows if r.family == "cycle"]
    assert [r.constructed_k for r in cycles] == [3, 4, 5, 3, 4, 4, 3, 4, 4, 3]
    assert all(r.status == "match" for r in rows)


def test_rows_sorted_and_parallel_stable():
    cfg = HarnessConfig(families=("tree", "complete"), trees=20, max_n=8)
    a = run(cfg, workers=1)
    b = run(cfg, workers=2)
    assert a == b
    assert [r.key for r in a] == sorted(r.key for r in a)


def test_tree_tasks_are_seeded():
    cfg = HarnessConfig(families=("tree",), trees=10, seed=3)
    assert build_tasks(cfg) == build_tasks(cfg)
    assert build_tasks(cfg) != build_tasks(HarnessConfig(families=("tree",), trees=10, seed=4))


def test_budget_gives_unknown_not_mismatch():
    rows = run(HarnessConfig(families=("complete",), max_n=5, node_limit=1))
    assert {r.status for r in rows} <= {"unknown", "match"}
    assert "unknown" in {r.status for r in rows}


def test_outputs():
    rows = run(HarnessConfig(families=("majority_complete",), max_n=6))
    tsv = to_tsv(rows)
    assert tsv.splitlines()[0].startswith("family\tparams")
    assert len(tsv.splitlines()) == len(rows) + 1
    assert to_records(rows)[0]["family"] == "majority_complete"


def test_unknown_family():
    with pytest.raises(ValueError):
        build_tasks(HarnessConfig(families=("nope",)))


def test_bipartite_survey():
    from nsd_forge.theorems import bipartite_survey
    s = bipartite_survey(80, seed=2, max_side=5)
    assert sum(s["histogram"].values()) + s["unknown"] == 80
    assert s["max_observed"] <= 6 and s["example"]
    assert bipartite_survey(80, seed=2, max_side=5) == s
