"""Exact strong chromatic index of small multigraphs by branch and bound."""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import StrongColoring, bound, greedy_color, verify_strong_coloring
from .graph import MultiGraph, max_degree
from .ordering import build_ordering, degeneracy

SOFT_EDGE_LIMIT = 20


@dataclass(frozen=True)
class ExactResult:
    chi_s: int  # exact value, or the best upper bound when timed out
    witness: StrongColoring
    nodes_explored: int
    timed_out: bool
    lower_bound: int


def _clique_lower_bound(conflicts: list[frozenset[int]]) -> int:
    """Greedy clique in the conflict relation, seeded from every edge."""
    best = 1 if conflicts else 0
    for seed in range(len(conflicts)):
        clique = [seed]
        pool = set(conflicts[seed])
        while pool:
            f = max(pool, key=lambda x: (len(conflicts[x] & pool), -x))
            clique.append(f)
            pool &= conflicts[f]
        best = max(best, len(clique))
    return best


def exact_chi_s(g: MultiGraph, budget: int = 1_000_000) -> ExactResult:
    """Smallest number of colors in a strong edge-coloring of ``g``.

    Edges are branched in descending conflict-set size. A color index may
    only be opened as ``1 + (largest index in use)``. The search starts from
    the greedy coloring as incumbent and stops early once it meets the
    clique lower bound. Each assignment tried counts as one node; when
    ``budget`` nodes are spent the best coloring so far is returned with
    ``timed_out=True``.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    m = g.m
    if m == 0:
        return ExactResult(0, StrongColoring(()), 0, False, 0)
    conflicts = [g.conflicts(e) for e in range(m)]
    order = sorted(range(m), key=lambda e: (-len(conflicts[e]), e))
    rank = {e: i for i, e in enumerate(order)}
    # conflicts already colored when an edge is reached
    earlier = [[f for f in conflicts[e] if rank[f] < rank[e]] for e in order]

    incumbent = greedy_color(g, build_ordering(g, degeneracy(g).k))
    best_colors = list(incumbent.assignment)
    best = incumbent.colors_used
    lower = _clique_lower_bound(conflicts)

    colors = [-1] * m
    nodes = 0
    timed_out = False

    def search(depth: int, used: int) -> None:
        nonlocal best, best_colors, nodes, timed_out
        if depth == m:
            best = used
            best_colors = colors[:]
            return
        e = order[depth]
        taken = {colors[f] for f in earlier[depth]}
        c = 0
        # colors 0..used-1 plus one fresh index, all below the incumbent
        while c < min(used + 1, best - 1):
            if c not in taken:
                if nodes >= budget:
                    timed_out = True
                    return
                nodes += 1
                colors[e] = c
                search(depth + 1, max(used, c + 1))
                colors[e] = -1
                if timed_out or best <= lower:
                    return
            c += 1

    if best > lower:
        search(0, 0)
    witness = StrongColoring(tuple(best_colors))
    assert verify_strong_coloring(g, witness)
    return ExactResult(best, witness, nodes, timed_out, lower)


@dataclass(frozen=True)
class SandwichVerdict:
    status: str  # "pass", "fail" or "inconclusive"
    exact: int
    greedy: int
    bound: int | None

    def __bool__(self) -> bool:
        return self.status == "pass"


def sandwich_check(g: MultiGraph, budget: int = 1_000_000) -> SandwichVerdict:
    """Check ``exact <= greedy <= bound(degeneracy, max degree)``."""
    k = degeneracy(g).k
    greedy = greedy_color(g, build_ordering(g, k)).colors_used
    ub = bound(k, max_degree(g)) if g.m else None
    result = exact_chi_s(g, budget)
    if result.timed_out:
        return SandwichVerdict("inconclusive", result.chi_s, greedy, ub)
    ok = result.chi_s <= greedy and (ub is None or greedy <= ub)
    return SandwichVerdict("pass" if ok else "fail", result.chi_s, greedy, ub)


def exact_to_json(g: MultiGraph, result: ExactResult) -> dict:
    return {
        "chi_s": result.chi_s,
        "timed_out": result.timed_out,
        "nodes": result.nodes_explored,
        "lower_bound": result.lower_bound,
        "witness": [
            {"id": e, "edge": [g.label(a), g.label(b)], "color": c}
            for e, ((a, b), c) in enumerate(zip(g.edges, result.witness.assignment))
        ],
    }
