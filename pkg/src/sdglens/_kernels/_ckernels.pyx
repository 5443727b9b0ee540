# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled shortest-path kernels.

Same contract as ``sdglens._kernels.pure``; the accumulation loops are the
hot part of centrality computation, so they run as C loops here.
"""

import numpy as np


def all_pairs_shortest_lengths(indptr, indices, int n):
    cdef int[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int[::1] adj = np.ascontiguousarray(indices, dtype=np.int32)
    dist_arr = np.full((n, n), -1, dtype=np.int32)
    cdef int[:, ::1] dist = dist_arr
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] queue = queue_arr
    cdef int s, u, w, k, head, tail, du
    for s in range(n):
        dist[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[s, u] + 1
            for k in range(ptr[u], ptr[u + 1]):
                w = adj[k]
                if dist[s, w] < 0:
                    dist[s, w] = du
                    queue[tail] = w
                    tail += 1
    return dist_arr


def betweenness_accumulate(indptr, indices, int n):
    cdef int[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int[::1] adj = np.ascontiguousarray(indices, dtype=np.int32)
    score_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] score = score_arr
    cdef int[::1] order = np.empty(n, dtype=np.int32)
    cdef int[::1] dist = np.empty(n, dtype=np.int32)
    cdef double[::1] sigma = np.empty(n, dtype=np.float64)
    cdef double[::1] delta = np.empty(n, dtype=np.float64)
    cdef int s, u, w, k, i, head, tail, du
    cdef double acc
    for s in range(n):
        for i in range(n):
            dist[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = order[head]
            head += 1
            du = dist[u]
            for k in range(ptr[u], ptr[u + 1]):
                w = adj[k]
                if dist[w] < 0:
                    dist[w] = du + 1
                    order[tail] = w
                    tail += 1
                if dist[w] == du + 1:
                    sigma[w] += sigma[u]
        for i in range(tail - 1, -1, -1):
            u = order[i]
            du = dist[u]
            acc = 0.0
            for k in range(ptr[u], ptr[u + 1]):
                w = adj[k]
                if dist[w] == du + 1:
                    acc += sigma[u] / sigma[w] * (1.0 + delta[w])
            delta[u] = acc
            if u != s:
                score[u] += acc
    return score_arr


def load_accumulate(indptr, indices, dist, int n):
    cdef int[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int[::1] adj = np.ascontiguousarray(indices, dtype=np.int32)
    cdef int[:, ::1] d = np.ascontiguousarray(dist, dtype=np.int32)
    acc_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] acc = acc_arr
    cdef double[::1] flow = np.zeros(n, dtype=np.float64)
    cdef long[::1] stamp = np.full(n, -1, dtype=np.int64)
    cdef int[::1] order = np.empty(n, dtype=np.int32)
    cdef int s, t, u, w, k, i, j, reach, du, d_st, nsucc
    cdef long tag
    cdef double share
    for s in range(n):
        # reachable nodes sorted by (distance from s, index); counting sort
        # over distances keeps this O(n + reach)
        reach = 0
        for du in range(n):
            for i in range(n):
                if d[s, i] == du:
                    order[reach] = i
                    reach += 1
        for t in range(n):
            d_st = d[s, t]
            if t == s or d_st < 0:
                continue
            tag = (<long> s) * n + t
            flow[s] = 1.0
            stamp[s] = tag
            for i in range(reach):
                u = order[i]
                du = d[s, u]
                if du >= d_st:
                    break
                if stamp[u] != tag or flow[u] == 0.0:
                    continue
                nsucc = 0
                for k in range(ptr[u], ptr[u + 1]):
                    w = adj[k]
                    if d[s, w] == du + 1 and d[w, t] == d_st - du - 1:
                        nsucc += 1
                if nsucc == 0:
                    continue
                share = flow[u] / nsucc
                for k in range(ptr[u], ptr[u + 1]):
                    w = adj[k]
                    if d[s, w] == du + 1 and d[w, t] == d_st - du - 1:
                        if stamp[w] != tag:
                            stamp[w] = tag
                            flow[w] = 0.0
                        flow[w] += share
                if u != s:
                    acc[u] += flow[u]
    return acc_arr
