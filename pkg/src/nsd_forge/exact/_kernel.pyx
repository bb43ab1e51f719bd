# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled depth-first search kernel; same contract as ``_kernel_py``."""

from libc.stdlib cimport calloc, free
import time

FOUND, NONE, UNKNOWN = 0, 1, 2


def search(int n, edges, int k, caps, domains, forbidden, bint nsd, int first_max,
           node_limit, time_limit):
    cdef int m = len(edges)
    if m == 0:
        return FOUND, [], 0
    cdef int i, j, c, u, v, x, w, s, top_i, smax
    cdef long long nodes = 0
    cdef long long limit = -1 if node_limit is None else node_limit
    cdef bint ok, placed

    cdef int *eu = <int *> calloc(m, sizeof(int))
    cdef int *ev = <int *> calloc(m, sizeof(int))
    cdef long long *dom = <long long *> calloc(m, sizeof(long long))
    cdef int *col = <int *> calloc(m, sizeof(int))
    cdef int *last = <int *> calloc(n, sizeof(int))
    cdef int *cap = <int *> calloc(n, sizeof(int))
    cdef int *sums = <int *> calloc(n, sizeof(int))
    cdef int *cnt = <int *> calloc(n * (k + 2), sizeof(int))
    # finish lists in CSR form: for edge i, vertices fin[fs[i]:fs[i+1]];
    # for each such vertex, its complete neighbors nb[ns[t]:ns[t+1]]
    cdef int *fs = <int *> calloc(m + 1, sizeof(int))
    cdef int *fin = <int *> calloc(n + 1, sizeof(int))
    cdef int *ns = <int *> calloc(n + 2, sizeof(int))
    cdef int *nb = <int *> calloc(2 * m + 1, sizeof(int))
    cdef int *deg = <int *> calloc(n, sizeof(int))
    smax = 0
    for i in range(m):
        u, v = edges[i]
        eu[i] = u
        ev[i] = v
        dom[i] = domains[i]
        last[u] = i
        last[v] = i
        deg[u] += 1
        deg[v] += 1
    for v in range(n):
        cap[v] = caps[v]
        if deg[v] * k > smax:
            smax = deg[v] * k
    cdef unsigned char *forb = <unsigned char *> calloc(n * (smax + 1) + 1, sizeof(unsigned char))
    for v in range(n):
        for s in forbidden[v]:
            if 0 <= s <= smax:
                forb[v * (smax + 1) + s] = 1

    adj = [[] for _ in range(n)]
    for i in range(m):
        adj[eu[i]].append(ev[i])
        adj[ev[i]].append(eu[i])
    per_edge = [[] for _ in range(m)]
    for v in range(n):
        if deg[v]:
            per_edge[last[v]].append(v)
    cdef int t = 0, q = 0
    for i in range(m):
        fs[i] = t
        for v in per_edge[i]:
            fin[t] = v
            ns[t] = q
            for w in adj[v]:
                if last[w] < i or (last[w] == i and w < v):
                    nb[q] = w
                    q += 1
            t += 1
    fs[m] = t
    ns[t] = q

    cdef double deadline = -1.0
    if time_limit is not None:
        deadline = time.perf_counter() + time_limit
    cdef int stride = k + 2
    cdef int status = NONE
    i = 0
    try:
        while True:
            if i == m:
                status = FOUND
                break
            u = eu[i]
            v = ev[i]
            c = col[i]
            if c:
                cnt[u * stride + c] -= 1
                cnt[v * stride + c] -= 1
                sums[u] -= c
                sums[v] -= c
            placed = False
            top_i = k
            if i == 0 and first_max < k:
                top_i = first_max
            c += 1
            while c <= top_i:
                if (dom[i] >> c) & 1 and cnt[u * stride + c] < cap[u] and cnt[v * stride + c] < cap[v]:
                    cnt[u * stride + c] += 1
                    cnt[v * stride + c] += 1
                    sums[u] += c
                    sums[v] += c
                    ok = True
                    for t in range(fs[i], fs[i + 1]):
                        x = fin[t]
                        s = sums[x]
                        if forb[x * (smax + 1) + s]:
                            ok = False
                            break
                        if nsd:
                            for j in range(ns[t], ns[t + 1]):
                                if sums[nb[j]] == s:
                                    ok = False
                                    break
                            if not ok:
                                break
                    if ok:
                        col[i] = c
                        placed = True
                        break
                    cnt[u * stride + c] -= 1
                    cnt[v * stride + c] -= 1
                    sums[u] -= c
                    sums[v] -= c
                c += 1
            nodes += 1
            if placed:
                i += 1
            else:
                col[i] = 0
                i -= 1
                if i < 0:
                    status = NONE
                    break
            if limit >= 0 and nodes >= limit:
                status = UNKNOWN
                break
            if deadline >= 0 and (nodes & 0x3FFFF) == 0 and time.perf_counter() > deadline:
                status = UNKNOWN
                break
        result = [col[i] for i in range(m)] if status == FOUND else None
    finally:
        free(eu); free(ev); free(dom); free(col); free(last); free(cap)
        free(sums); free(cnt); free(fs); free(fin); free(ns); free(nb)
        free(deg); free(forb)
    return status, result, nodes
