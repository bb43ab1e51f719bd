"""Regenerate src/nsd_forge/fixtures/*.json.

Transcribed colorings are written as-is.  The K4 majority 5-coloring and
the K2,2 witness come from the exact search.  The K5,5 fixture keeps the
transcribed labels outside rows a2 and a4 and lets the search fill those
two rows so that the sums match the recorded profile.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from nsd_forge.coloring import EdgeColoring, verify
from nsd_forge.exact import SearchBudget, complete_partial, min_index
from nsd_forge.graph import FamilySpec, generate

OUT = Path(__file__).resolve().parents[1] / "src" / "nsd_forge" / "fixtures"

K6 = {(0, 1): 1, (0, 2): 2, (0, 3): 2, (0, 4): 3, (0, 5): 1, (1, 2): 3, (1, 3): 1,
      (1, 4): 2, (1, 5): 3, (2, 3): 2, (2, 4): 1, (2, 5): 3, (3, 4): 4, (3, 5): 4,
      (4, 5): 4}
K33 = [[5, 2, 4], [4, 5, 1], [3, 1, 2]]
K55_PRINTED = [[3, 2, 1, 2, 1], [3, 3, 2, 1, 2], [4, 4, 3, 2, 3], [1, 1, 2, 3, 2], [1, 2, 4, 4, 3]]
K55_SUMS = [9, 10, 16, 10, 14, 12, 12, 12, 12, 11]
K77 = [[1, 2, 3, 3, 2, 2, 3], [1, 2, 3, 3, 3, 2, 2], [2, 1, 2, 2, 3, 3, 3],
       [2, 1, 1, 1, 2, 3, 3], [3, 3, 1, 1, 2, 2, 1], [3, 3, 2, 2, 1, 1, 1],
       [3, 3, 2, 2, 1, 1, 1]]


def flat(rows):
    return [c for row in rows for c in row]


def record(name, spec, mode, k, colors, provenance, derived):
    g = generate(spec)
    c = EdgeColoring(g, colors, k)
    report = verify(g, c, mode, k)
    assert report.passed, (name, report.witnesses[:3])
    return {
        "name": name,
        "graph": {"family": spec.family, "n": spec.n, "m": spec.m},
        "mode": mode,
        "k": k,
        "colors": colors,
        "sums": report.sums,
        "derived": derived,
        "provenance": provenance,
    }


def k55():
    spec = FamilySpec("complete_bipartite", 5, 5)
    g = generate(spec)
    colors = flat(K55_PRINTED)
    free = {g.eid(a, 5 + j) for a in (1, 3) for j in range(5)}
    partial = EdgeColoring(g, [None if i in free else c for i, c in enumerate(colors)], 4)
    forbidden = {v: set(range(0, 4 * 5 + 1)) - {s} for v, s in enumerate(K55_SUMS)}
    res = complete_partial(g, partial, mode="majority", k=4, forbidden=forbidden,
                           budget=SearchBudget(4))
    assert res.found
    return res.coloring.colors


def oracle(spec, mode):
    res = min_index(generate(spec), mode)
    assert res.status == "exact"
    return res.k, res.witness.colors


def build() -> list[dict]:
    out = [
        record("K4-qmnsd3", FamilySpec("complete", 4), "quasi_majority", 3,
               [1, 2, 2, 1, 2, 3], "hand-transcribed base coloring of K4", False),
        record("K6-mnsd4", FamilySpec("complete", 6), "majority", 4,
               [K6[e] for e in sorted(K6)], "hand-transcribed base coloring of K6", False),
        record("K3,3-mnsd5", FamilySpec("complete_bipartite", 3, 3), "majority", 5,
               flat(K33), "hand-transcribed base coloring of K3,3", False),
        record("K7,7-mnsd3", FamilySpec("complete_bipartite", 7, 7), "majority", 3,
               flat(K77), "hand-transcribed base coloring of K7,7", False),
        record("K5,5-mnsd4", FamilySpec("complete_bipartite", 5, 5), "majority", 4, k55(),
               "edge labels outside rows a2 and a4 hand-transcribed; "
               "those two rows re-solved by exact search under the recorded sum profile "
               "because the transcribed labels give equal sums on edge a2-b10", True),
    ]
    k, colors = oracle(FamilySpec("complete", 4), "majority")
    out.append(record("K4-mnsd5", FamilySpec("complete", 4), "majority", k, colors,
                      "first witness of the exact search at the minimum palette", True))
    k, colors = oracle(FamilySpec("complete_bipartite", 2, 2), "quasi_majority")
    out.append(record("K2,2-qmnsd4", FamilySpec("complete_bipartite", 2, 2), "quasi_majority",
                      k, colors, "first witness of the exact search at the minimum palette", True))
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for fx in build():
        path = args.out / (fx["name"].replace(",", "_") + ".json")
        path.write_text(json.dumps(fx, indent=1) + "\n")
        print(path.name, fx["k"], fx["sums"])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
