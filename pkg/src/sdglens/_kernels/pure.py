"""Pure-Python shortest-path kernels.

Fallback backend with the same contract as the compiled extension: all
functions take a CSR out-adjacency (indptr, indices) over nodes 0..n-1 and
return numpy arrays. Kept dependency-free beyond numpy so the package works
without a C toolchain.
"""

from __future__ import annotations

from collections import deque

import numpy as np


def _adjacency_lists(indptr, indices, n):
    indptr = np.asarray(indptr)
    indices = np.asarray(indices)
    return [[int(w) for w in indices[indptr[u]:indptr[u + 1]]] for u in range(n)]


def all_pairs_shortest_lengths(indptr, indices, n: int) -> np.ndarray:
    """BFS distance matrix; dist[s, t] = hops on the directed graph, -1 if
    t is unreachable from s."""
    adj = _adjacency_lists(indptr, indices, n)
    dist = np.full((n, n), -1, dtype=np.int32)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for w in adj[u]:
                if row[w] < 0:
                    row[w] = du
                    queue.append(w)
    return dist


def betweenness_accumulate(indptr, indices, n: int) -> np.ndarray:
    """Raw (unnormalized) shortest-path betweenness, endpoints excluded.

    One BFS per source builds path counts over the shortest-path DAG; the
    dependency sweep then walks nodes in reverse BFS order, following
    out-edges that advance the distance by one.
    """
    adj = _adjacency_lists(indptr, indices, n)
    score = np.zeros(n, dtype=np.float64)
    for s in range(n):
        order: list[int] = []
        dist = [-1] * n
        sigma = [0.0] * n
        dist[s] = 0
        sigma[s] = 1.0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            du = dist[u]
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    queue.append(w)
                if dist[w] == du + 1:
                    sigma[w] += sigma[u]
        delta = [0.0] * n
        for u in reversed(order):
            du = dist[u]
            acc = 0.0
            for w in adj[u]:
                if dist[w] == du + 1:
                    acc += sigma[u] / sigma[w] * (1.0 + delta[w])
            delta[u] = acc
            if u != s:
                score[u] += acc
    return score


def load_accumulate(indptr, indices, dist, n: int) -> np.ndarray:
    """Raw load: forward flow splitting over shortest-path DAGs.

    For every ordered pair (s, t) a unit of flow leaves s and is split
    equally among each node's on-path successors; interior nodes accumulate
    the flow passing through them. ``dist`` is the all-pairs matrix from
    :func:`all_pairs_shortest_lengths`.
    """
    adj = _adjacency_lists(indptr, indices, n)
    dist = np.asarray(dist)
    acc = np.zeros(n, dtype=np.float64)
    flow = [0.0] * n
    stamp = [-1] * n
    for s in range(n):
        ds = dist[s]
        # nodes reachable from s in order of increasing distance
        order = sorted((u for u in range(n) if ds[u] >= 0), key=lambda u: (ds[u], u))
        for t in range(n):
            d_st = ds[t]
            if t == s or d_st < 0:
                continue
            tag = s * n + t
            flow[s] = 1.0
            stamp[s] = tag
            for u in order:
                du = ds[u]
                if du >= d_st:
                    break
                if stamp[u] != tag or flow[u] == 0.0:
                    continue
                # on-path successors: one hop further from s, still on a
                # shortest s->t path
                succs = [
                    w for w in adj[u]
                    if ds[w] == du + 1 and dist[w, t] == d_st - du - 1
                ]
                if not succs:
                    continue
                share = flow[u] / len(succs)
                for w in succs:
                    if stamp[w] != tag:
                        stamp[w] = tag
                        flow[w] = 0.0
                    flow[w] += share
                if u != s:
                    acc[u] += flow[u]
    return acc
