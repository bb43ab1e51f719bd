"""Pure-Python depth-first search kernel.

Mirrors ``_kernel.pyx`` line for line; it is used when the compiled
extension is unavailable and as a reference in the tests.
"""

from __future__ import annotations

import time

FOUND, NONE, UNKNOWN = 0, 1, 2


def search(n, edges, k, caps, domains, forbidden, nsd, first_max, node_limit, time_limit):
    """Find the first coloring in lexicographic order (edge order, colors ascending).

    ``domains[i]`` is a bitmask of allowed colors for edge ``i`` (bit ``c``
    for color ``c``), ``forbidden[v]`` a set of sums vertex ``v`` may not
    take, ``first_max`` caps the color of edge 0.  A vertex's sum is
    checked when its last incident edge is colored.  Returns
    ``(status, colors, nodes)``.
    """
    m = len(edges)
    if m == 0:
        return FOUND, [], 0
    last = [-1] * n
    for i, (u, v) in enumerate(edges):
        last[u] = i
        last[v] = i
    # vertices completed by edge i, with their already-complete neighbors
    finish: list[list[tuple[int, list[int]]]] = [[] for _ in range(m)]
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    for v in range(n):
        if last[v] >= 0:
            i = last[v]
            done = [w for w in nbrs[v] if last[w] < i or (last[w] == i and w < v)]
            finish[i].append((v, done))
    counts = [[0] * (k + 2) for _ in range(n)]
    sums = [0] * n
    colors = [0] * m
    top = [min(k, first_max) if i == 0 else k for i in range(m)]
    nodes = 0
    deadline = None if time_limit is None else time.perf_counter() + time_limit
    i = 0
    while True:
        if i == m:
            return FOUND, colors, nodes
        u, v = edges[i]
        c = colors[i]
        if c:
            counts[u][c] -= 1
            counts[v][c] -= 1
            sums[u] -= c
            sums[v] -= c
        placed = False
        cu, cv = counts[u], counts[v]
        capu, capv = caps[u], caps[v]
        dom = domains[i]
        for c in range(c + 1, top[i] + 1):
            if not (dom >> c) & 1 or cu[c] >= capu or cv[c] >= capv:
                continue
            cu[c] += 1
            cv[c] += 1
            sums[u] += c
            sums[v] += c
            ok = True
            for x, done in finish[i]:
                s = sums[x]
                if s in forbidden[x]:
                    ok = False
                    break
                if nsd:
                    for w in done:
                        if sums[w] == s:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                colors[i] = c
                placed = True
                break
            cu[c] -= 1
            cv[c] -= 1
            sums[u] -= c
            sums[v] -= c
        nodes += 1
        if placed:
            i += 1
        else:
            colors[i] = 0
            i -= 1
            if i < 0:
                return NONE, None, nodes
        if node_limit is not None and nodes >= node_limit:
            return UNKNOWN, None, nodes
        if deadline is not None and not nodes & 0x3FFF and time.perf_counter() > deadline:
            return UNKNOWN, None, nodes
