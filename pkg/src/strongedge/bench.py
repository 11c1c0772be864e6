"""Corpus runs: color, verify and audit many seeded graphs."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .coloring import audit, bound, greedy_color, verify_strong_coloring
from .exact import SOFT_EDGE_LIMIT, exact_chi_s
from .generators import GenSpec, generate
from .graph import MultiGraph, max_degree
from .ordering import build_ordering, degeneracy, verify_ordering


@dataclass
class RunRow:
    name: str
    seed: int
    n: int
    m: int
    k: int
    max_degree: int
    colors_used: int
    bound: int | None
    slack: int | None
    valid: bool
    ordering_valid: bool
    audit_pass: bool
    exact: int | None = None
    wall_time: float | None = None

    @property
    def ok(self) -> bool:
        return (
            self.valid
            and self.ordering_valid
            and self.audit_pass
            and (self.slack is None or self.slack >= 0)
            and (self.exact is None or self.exact <= self.colors_used)
        )


def run_instance(
    g: MultiGraph, name: str = "", seed: int = 0, *, exact: bool = False, budget: int = 200_000
) -> RunRow:
    """Full pipeline on one graph with ``k`` set to its degeneracy."""
    start = time.perf_counter()
    k = degeneracy(g).k
    ordering = build_ordering(g, k)
    coloring = greedy_color(g, ordering)
    valid = verify_strong_coloring(g, coloring).ok
    ordering_valid = verify_ordering(g, k, ordering).ok
    audit_pass = ordering_valid and all(r.passed for r in audit(g, k, ordering))
    delta = max_degree(g)
    ub = bound(k, delta) if g.m and k >= 1 else None
    chi = None
    if exact and g.m <= SOFT_EDGE_LIMIT:
        result = exact_chi_s(g, budget)
        chi = None if result.timed_out else result.chi_s
    used = coloring.colors_used
    return RunRow(
        name=name,
        seed=seed,
        n=g.n,
        m=g.m,
        k=k,
        max_degree=delta,
        colors_used=used,
        bound=ub,
        slack=None if ub is None else ub - used,
        valid=valid,
        ordering_valid=ordering_valid,
        audit_pass=audit_pass,
        exact=chi,
        wall_time=round(time.perf_counter() - start, 6),
    )


def instance_seeds(seed: int, count: int) -> list[int]:
    """Per-instance 64-bit seeds drawn from ``random.Random(seed)``."""
    rng = random.Random(seed)
    return [rng.getrandbits(64) for _ in range(count)]


def _job(args) -> RunRow:
    spec, index, exact, budget = args
    return run_instance(generate(spec), f"{spec.family}-{index}", spec.seed, exact=exact, budget=budget)


def run_bench(
    family: str,
    n: int,
    k: int,
    count: int,
    seed: int,
    *,
    parallel_prob: float = 0.0,
    jobs: int = 1,
    exact: bool = False,
    budget: int = 200_000,
) -> list[RunRow]:
    """Rows come back in instance order whatever ``jobs`` is."""
    tasks = [
        (GenSpec(family, n, k, s, parallel_prob), i, exact, budget)
        for i, s in enumerate(instance_seeds(seed, count))
    ]
    if jobs <= 1:
        return [_job(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_job, tasks))


def summarize(rows: list[RunRow]) -> dict:
    slacks = [r.slack for r in rows if r.slack is not None]
    return {
        "count": len(rows),
        "all_valid": all(r.valid for r in rows),
        "all_orderings_valid": all(r.ordering_valid for r in rows),
        "all_audits_pass": all(r.audit_pass for r in rows),
        "min_slack": min(slacks) if slacks else None,
        "max_colors": max((r.colors_used for r in rows), default=0),
        "ok": all(r.ok for r in rows),
    }


def report_to_json(rows: list[RunRow], *, timing: bool = True) -> dict:
    out = []
    for r in rows:
        d = asdict(r)
        if not timing:
            del d["wall_time"]
        out.append(d)
    return {"summary": summarize(rows), "rows": out}
