"""Brute-force references, deliberately naive and independent of the package internals."""

from __future__ import annotations

import itertools

import numpy as np


def edge_list(g):
    return list(g.edges)


def brute_conflicts(edges):
    """Pairs of edge ids at distance <= 1, by direct pairwise inspection."""
    m = len(edges)
    out = {e: set() for e in range(m)}
    for e, f in itertools.combinations(range(m), 2):
        a, b = edges[e]
        c, d = edges[f]
        close = bool({a, b} & {c, d})
        if not close:
            for x, y in edges:
                if ({x, y} & {a, b}) and ({x, y} & {c, d}):
                    close = True
                    break
        if close:
            out[e].add(f)
            out[f].add(e)
    return out


def brute_degeneracy(n, edges):
    """Max over nonempty vertex subsets of the minimum induced degree."""
    best = 0
    for r in range(1, n + 1):
        for sub in itertools.combinations(range(n), r):
            s = set(sub)
            deg = dict.fromkeys(s, 0)
            for u, v in edges:
                if u in s and v in s:
                    deg[u] += 1
                    deg[v] += 1
            best = max(best, min(deg.values()))
    return best


def is_strong(edges, colors):
    conf = brute_conflicts(edges)
    return all(colors[e] != colors[f] for e in conf for f in conf[e])


def product_min_colors(edges):
    """Try every map edges -> {0..c-1} for c = 1, 2, ... (tiny graphs only)."""
    m = len(edges)
    if m == 0:
        return 0
    conf = brute_conflicts(edges)
    pairs = [(e, f) for e in conf for f in conf[e] if e < f]
    for c in range(1, m + 1):
        for colors in itertools.product(range(c), repeat=m):
            if all(colors[e] != colors[f] for e, f in pairs):
                return c
    raise AssertionError("unreachable")


def partitions(m):
    """All set partitions of m items as restricted growth strings (numpy rows)."""
    rows = np.zeros((1, 0), dtype=np.int8)
    for _ in range(m):
        width = rows.shape[1]
        top = rows.max(axis=1) if width else np.full(len(rows), -1)
        parts = []
        for c in range(int(top.max()) + 2 if len(rows) else 1):
            keep = rows[top + 1 >= c]
            parts.append(np.hstack([keep, np.full((len(keep), 1), c, dtype=np.int8)]))
        rows = np.vstack(parts)
    return rows


def partition_min_colors(edges):
    """Exhaustive over every set partition of the edges (feasible up to ~11 edges)."""
    m = len(edges)
    if m == 0:
        return 0
    conf = brute_conflicts(edges)
    rows = partitions(m)
    ok = np.ones(len(rows), dtype=bool)
    for e in range(m):
        for f in conf[e]:
            if e < f:
                ok &= rows[:, e] != rows[:, f]
    return int(rows[ok].max(axis=1).min()) + 1


def inclusion_exclusion_min_colors(edges):
    """Smallest c such that edges are covered by c conflict-free sets.

    Counts c-tuples of independent sets covering everything by
    inclusion-exclusion over all 2^m edge subsets.
    """
    m = len(edges)
    if m == 0:
        return 0
    conf = brute_conflicts(edges)
    nb = [sum(1 << f for f in conf[e]) | (1 << e) for e in range(m)]
    ind = [0] * (1 << m)
    ind[0] = 1
    for s in range(1, 1 << m):
        low = (s & -s).bit_length() - 1
        ind[s] = ind[s & ~(1 << low)] + ind[s & ~nb[low]]
    sign = [(-1) ** (m - bin(s).count("1")) for s in range(1 << m)]
    for c in range(1, m + 1):
        total = sum(sg * i**c for sg, i in zip(sign, ind))
        if total > 0:
            return c
    raise AssertionError("unreachable")
