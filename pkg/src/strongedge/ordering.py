"""Degeneracy, special edges, and the special-edge ordering of a multigraph.

A vertex is *special* (for a parameter ``k``, inside a live subgraph) when
at most ``k`` of its distinct live neighbors have live degree above ``k``.
An edge is *special* when one endpoint is special and the other has live
degree at most ``k``. Repeatedly deleting a special edge and prepending it
to a list yields an ordering ``e_1 .. e_m`` in which every ``e_i`` is
special in the subgraph formed by ``e_1 .. e_i``.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass

from .graph import EdgeSubset, GraphError, MultiGraph, restricted_degree


class NotKDegenerateError(ValueError):
    """No special edge exists: the (live) graph is not ``k``-degenerate."""


@dataclass(frozen=True)
class DegeneracyCertificate:
    k: int
    peel_order: tuple[int, ...]
    back_degrees: tuple[int, ...]  # indexed by vertex id


@dataclass(frozen=True)
class EdgeOrdering:
    """Edges ``e_1 .. e_m`` (stored 0-based) with the special endpoint ``u_i`` of each.

    ``moreover_held`` is False if some construction step had a live vertex
    of degree above ``k`` but no qualifying special endpoint of degree above
    ``k``; for ``k``-degenerate input this never happens.
    """

    sequence: tuple[tuple[int, int], ...]
    k: int
    moreover_held: bool = True

    def __len__(self) -> int:
        return len(self.sequence)

    @property
    def edge_ids(self) -> list[int]:
        return [e for e, _ in self.sequence]

    def positions(self) -> dict[int, int]:
        return {e: i for i, (e, _) in enumerate(self.sequence)}


@dataclass(frozen=True)
class OrderingVerdict:
    ok: bool
    position: int | None = None  # 1-based
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def degeneracy(g: MultiGraph) -> DegeneracyCertificate:
    """Peel minimum-degree vertices (ties by smallest id) with bucket queues.

    Degrees count parallel edges. The returned ``k`` is the largest degree
    seen at removal time, which equals the degeneracy.
    """
    n = g.n
    deg = [len(a) for a in g.adjacency]
    maxd = max(deg, default=0)
    buckets: list[set[int]] = [set() for _ in range(maxd + 1)]
    for v, d in enumerate(deg):
        buckets[d].add(v)
    removed = [False] * n
    back = [0] * n
    order = []
    k = 0
    low = 0
    for _ in range(n):
        while not buckets[low]:
            low += 1
        v = min(buckets[low])
        buckets[low].remove(v)
        removed[v] = True
        order.append(v)
        back[v] = deg[v]
        k = max(k, deg[v])
        for _, w in g.adjacency[v]:
            if not removed[w]:
                buckets[deg[w]].remove(w)
                deg[w] -= 1
                buckets[deg[w]].add(w)
                low = min(low, deg[w])
    return DegeneracyCertificate(k, tuple(order), tuple(back))


# ------------------------------------------------------- reference predicates


def is_special_vertex(g: MultiGraph, live: EdgeSubset, v: int, k: int) -> bool:
    g.check_vertex(v)
    high = {
        w
        for e, w in g.adjacency[v]
        if e in live.members and restricted_degree(g, live, w) > k
    }
    return len(high) <= k


def _candidates(g: MultiGraph, live: EdgeSubset, k: int):
    deg = {v: restricted_degree(g, live, v) for v in range(g.n)}
    for e in live:
        a, b = g.edges[e]
        for u, v in ((a, b), (b, a)):
            if deg[v] <= k and is_special_vertex(g, live, u, k):
                yield (0 if deg[u] > k else 1, u, e)


def find_special_edge(g: MultiGraph, live: EdgeSubset, k: int, *, prefer_high: bool = True):
    """Return ``(edge, special_endpoint)`` for the live subgraph, or None.

    Among qualifying pairs, those whose special endpoint has live degree
    above ``k`` come first (unless ``prefer_high`` is False), then the
    smallest endpoint id, then the smallest edge id. This is the slow,
    direct evaluation; :func:`build_ordering` keeps incremental state.
    """
    if not len(live):
        raise ValueError("live edge set is empty")
    best = None
    for tier, u, e in _candidates(g, live, k):
        key = (tier if prefer_high else 0, u, e)
        if best is None or key < best:
            best = key
    return None if best is None else (best[2], best[1])


# ------------------------------------------------------------ construction


class _Peeler:
    """Live-subgraph state under edge deletion."""

    def __init__(self, g: MultiGraph, k: int, prefer_high: bool):
        self.g = g
        self.k = k
        self.prefer_high = prefer_high
        n = g.n
        self.alive = [True] * g.m
        self.deg = [len(a) for a in g.adjacency]
        self.mult: list[Counter] = [Counter(w for _, w in a) for a in g.adjacency]
        self.high = [sum(1 for w in self.mult[v] if self.deg[w] > k) for v in range(n)]
        self.n_high = sum(1 for d in self.deg if d > k)
        self.status: list[tuple | None] = [None] * n
        self.heap: list[tuple] = []
        for v in range(n):
            self.refresh(v)

    def refresh(self, u: int) -> None:
        k, deg = self.k, self.deg
        st = None
        if deg[u] and self.high[u] <= k:
            best = None
            for e, w in self.g.adjacency[u]:
                if self.alive[e] and deg[w] <= k and (best is None or e < best):
                    best = e
            if best is not None:
                tier = 0 if (deg[u] > k or not self.prefer_high) else 1
                st = (tier, u, best)
        self.status[u] = st
        if st is not None:
            heapq.heappush(self.heap, st)

    def pop(self) -> tuple | None:
        heap, status = self.heap, self.status
        while heap:
            st = heap[0]
            if status[st[1]] == st:
                return st
            heapq.heappop(heap)
        return None

    def remove(self, e: int) -> None:
        k, deg, mult, high = self.k, self.deg, self.mult, self.high
        a, b = self.g.edges[e]
        self.alive[e] = False
        dirty = {a, b}
        was_high = (deg[a] > k, deg[b] > k)
        mult[a][b] -= 1
        mult[b][a] -= 1
        if not mult[a][b]:
            del mult[a][b], mult[b][a]
            # the pair is no longer adjacent; drop each side from the other's count
            if was_high[1]:
                high[a] -= 1
            if was_high[0]:
                high[b] -= 1
        deg[a] -= 1
        deg[b] -= 1
        for v, before in ((a, was_high[0]), (b, was_high[1])):
            if before and deg[v] == k:
                self.n_high -= 1
                for w in mult[v]:
                    high[w] -= 1
                    dirty.add(w)
        for v in dirty:
            self.refresh(v)


def build_ordering(g: MultiGraph, k: int | None = None, *, prefer_high: bool = True) -> EdgeOrdering:
    """Order the edges so each ``e_i`` is special in the prefix ``e_1 .. e_i``.

    The first special edge found goes last. ``k`` defaults to the
    degeneracy of ``g``; a smaller ``k`` may raise
    :class:`NotKDegenerateError`. With ``prefer_high=False`` the
    degree-above-``k`` preference is dropped and only id tie-breaks apply.
    """
    if k is None:
        k = degeneracy(g).k
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    state = _Peeler(g, k, prefer_high)
    picked = []
    moreover = True
    for step in range(g.m):
        st = state.pop()
        if st is None:
            raise NotKDegenerateError(
                f"no special edge for k={k} after removing {step} of {g.m} edges"
            )
        tier, u, e = st
        if state.n_high:
            # some live vertex has degree > k, so some qualifying special
            # endpoint must have degree > k as well
            found = tier == 0 if prefer_high else _has_high_candidate(state)
            moreover = moreover and found
        picked.append((e, u))
        state.remove(e)
    picked.reverse()
    return EdgeOrdering(tuple(picked), k, moreover)


def _has_high_candidate(state: _Peeler) -> bool:
    return any(st is not None and state.deg[st[1]] > state.k for st in state.status)


# ------------------------------------------------------------ verification


def verify_ordering(g: MultiGraph, k: int, ordering: EdgeOrdering) -> OrderingVerdict:
    """Re-check an ordering by growing the prefix graphs forward from empty.

    Raises :class:`GraphError` if the sequence is not a permutation of the
    edge ids.
    """
    seq = ordering.sequence
    ids = [e for e, _ in seq]
    if sorted(ids) != list(range(g.m)):
        raise GraphError("ordering is not a permutation of the edge ids")
    deg = [0] * g.n
    nbrs: list[Counter] = [Counter() for _ in range(g.n)]
    for i, (e, u) in enumerate(seq, 1):
        a, b = g.edges[e]
        if u not in (a, b):
            return OrderingVerdict(False, i, f"special vertex {u} is not an endpoint of edge {e}")
        v = b if u == a else a
        deg[a] += 1
        deg[b] += 1
        nbrs[a][b] += 1
        nbrs[b][a] += 1
        if deg[v] > k:
            return OrderingVerdict(False, i, f"endpoint {v} of edge {e} has degree {deg[v]} > {k}")
        heavy = sum(1 for w in nbrs[u] if deg[w] > k)
        if heavy > k:
            return OrderingVerdict(
                False, i, f"vertex {u} has {heavy} neighbors of degree > {k}, so it is not special"
            )
    return OrderingVerdict(True)


def ordering_to_json(g: MultiGraph, ordering: EdgeOrdering) -> list[dict]:
    return [
        {
            "pos": i,
            "edge": [g.label(a), g.label(b)],
            "id": e,
            "special": g.label(u),
        }
        for i, (e, u) in enumerate(ordering.sequence, 1)
        for a, b in (g.edges[e],)
    ]


def ordering_from_json(g: MultiGraph, records: list[dict], k: int) -> EdgeOrdering:
    """Rebuild an ordering from :func:`ordering_to_json` output (``id`` and ``special``)."""
    index = {g.label(v): v for v in range(g.n)}
    try:
        rows = sorted(records, key=lambda r: r["pos"])
        seq = tuple((int(r["id"]), index[r["special"]]) for r in rows)
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed ordering record: {exc}") from None
    return EdgeOrdering(seq, k)
