"""Seeded graph families for test corpora.

Randomness comes from :class:`random.Random` (Mersenne Twister MT19937)
seeded with the integer ``seed``; the draws below are made in a fixed
order, so a ``GenSpec`` always yields the same edge list.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import MultiGraph

FAMILIES = (
    "random-k-degenerate",
    "multi-k-degenerate",
    "saturated-k-degenerate",
    "path",
    "cycle",
    "complete",
    "star",
    "random-tree",
)


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    k: int = 1
    seed: int = 0
    parallel_prob: float = 0.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if not 0.0 <= self.parallel_prob <= 1.0:
            raise ValueError("parallel_prob must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.family == "cycle" and self.n < 3:
            raise ValueError("a cycle needs n >= 3")


def _attach(spec: GenSpec, exact: bool) -> MultiGraph:
    """Vertex i joins some earlier vertices; every vertex sends at most k edges back.

    With ``exact`` the count is min(k, i), otherwise uniform in 1..min(k, i).
    In the multigraph family each chosen edge is duplicated with probability
    ``parallel_prob`` while vertex i stays within its k back-edges.
    """
    rng = random.Random(spec.seed)
    k = spec.k
    edges = []
    for i in range(1, spec.n):
        cap = min(k, i)
        if cap == 0:
            continue
        count = cap if exact else rng.randint(1, cap)
        targets = sorted(rng.sample(range(i), count))
        budget = k - count
        for t in targets:
            edges.append((t, i))
            if spec.parallel_prob and budget and rng.random() < spec.parallel_prob:
                edges.append((t, i))
                budget -= 1
    return MultiGraph(spec.n, edges)


def generate(spec: GenSpec) -> MultiGraph:
    n = spec.n
    family = spec.family
    if family == "random-k-degenerate":
        return _attach(GenSpec(family, n, spec.k, spec.seed), exact=False)
    if family == "multi-k-degenerate":
        return _attach(spec, exact=False)
    if family == "saturated-k-degenerate":
        return saturate_k(spec)
    if family == "path":
        return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        return MultiGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if family == "star":
        return MultiGraph(n, [(0, i) for i in range(1, n)])
    # random-tree: uniform random recursive tree
    return _attach(GenSpec(family, n, 1, spec.seed), exact=True)


def saturate_k(spec: GenSpec) -> MultiGraph:
    """Each vertex i attaches to exactly min(k, i) random earlier vertices.

    The first k+1 vertices form a clique, so the degeneracy is exactly k.
    ``parallel_prob`` is honoured as in the multigraph family.
    """
    if spec.n <= spec.k:
        raise ValueError(f"saturate_k needs n > k (got n={spec.n}, k={spec.k})")
    return _attach(spec, exact=True)


def petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph(10, outer + spokes + inner)
