"""Greedy strong edge-coloring along a special-edge ordering, plus its audit."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .graph import GraphError, MultiGraph, max_degree
from .ordering import EdgeOrdering, build_ordering, degeneracy, verify_ordering


@dataclass(frozen=True)
class StrongColoring:
    assignment: tuple[int, ...]  # color of edge id i

    @property
    def colors_used(self) -> int:
        return 1 + max(self.assignment) if self.assignment else 0

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for e, c in enumerate(self.assignment):
            out.setdefault(c, []).append(e)
        return out


@dataclass(frozen=True)
class ColoringVerdict:
    ok: bool
    pair: tuple[int, int] | None = None
    color: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "valid strong edge-coloring"
        e, f = self.pair
        return f"edges {e} and {f} are within distance one and share color {self.color}"


def bound(k: int, delta: int) -> int:
    """Colors sufficient for a k-degenerate multigraph of maximum degree ``delta``."""
    return (4 * k - 2) * delta - k * (2 * k - 1) + 1


def greedy_color(g: MultiGraph, ordering: EdgeOrdering) -> StrongColoring:
    """First-fit along ``ordering``: each edge takes the smallest color not
    used by an already-colored edge of its conflict set."""
    colors = [-1] * g.m
    for e, _ in ordering.sequence:
        taken = {colors[f] for f in g.conflicts(e)}
        c = 0
        while c in taken:
            c += 1
        colors[e] = c
    if -1 in colors:
        raise GraphError("ordering does not cover every edge")
    return StrongColoring(tuple(colors))


def verify_strong_coloring(g: MultiGraph, coloring: StrongColoring) -> ColoringVerdict:
    """Check every color class is an induced matching.

    Two edges of one color clash when they share an endpoint or some edge
    of ``g`` joins an endpoint of one to an endpoint of the other. The
    smallest clashing pair found is reported.
    """
    assignment = coloring.assignment
    if len(assignment) != g.m or any(c is None or c < 0 for c in assignment):
        raise GraphError("coloring must assign a non-negative color to every edge")
    clashes = []
    # at[v][c] = smallest edge of color c incident to v
    at: list[dict[int, int]] = [{} for _ in range(g.n)]
    for e, (a, b) in enumerate(g.edges):
        c = assignment[e]
        for v in (a, b):
            prev = at[v].get(c)
            if prev is None:
                at[v][c] = e
            elif prev != e:
                clashes.append(((prev, e), c))
    for a, b in g.edges:
        shared = at[a].keys() & at[b].keys()
        for c in shared:
            ea, eb = at[a][c], at[b][c]
            if ea != eb:
                clashes.append((tuple(sorted((ea, eb))), c))
    if not clashes:
        return ColoringVerdict(True)
    pair, c = min(clashes)
    return ColoringVerdict(False, pair, c)


# ------------------------------------------------------------------- audit


CHECKS = ("total_bound", "u_side_bound", "v_side_bound", "x1_special", "y1_special",
          "x3_future", "y2_future")


@dataclass
class AuditRecord:
    position: int  # 1-based
    edge: int
    u: int
    v: int
    X1: list[int]
    X2: list[int]
    X3: list[int]
    Y1: list[int]
    Y2: list[int]
    x: int
    x3_high: int
    y2_high: int
    u_side_count: int
    v_side_count: int
    total_conflicts: int
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return asdict(self)


def audit(g: MultiGraph, k: int, ordering: EdgeOrdering) -> list[AuditRecord]:
    """Recount, for every position ``i``, the colored ("blue") edges near ``e_i``.

    Blue edges are those at positions ``<= i``; the rest are yellow.
    Conflicts are the blue edges at positions ``< i`` within distance one
    of ``e_i`` in the full graph. A conflict is on the u-side when it is not
    incident to ``v_i`` and touches ``u_i`` or a neighbor of ``u_i``; every
    other conflict is on the v-side.

    Raises :class:`GraphError` if ``ordering`` fails :func:`verify_ordering`.
    """
    verdict = verify_ordering(g, k, ordering)
    if not verdict:
        raise GraphError(f"invalid ordering at position {verdict.position}: {verdict.reason}")
    delta = max_degree(g)
    total_cap = (4 * k - 2) * delta - k * (2 * k - 1)
    u_cap = 2 * k * delta - k * k
    v_cap = (2 * k - 2) * delta - k * (k - 1)

    pos = ordering.positions()
    deg = [0] * g.n
    records = []
    for i, (e, u) in enumerate(ordering.sequence):
        a, b = g.edges[e]
        v = b if u == a else a
        deg[a] += 1
        deg[b] += 1

        def split(center: int) -> tuple[set[int], set[int]]:
            blue, yellow = set(), set()
            for f, w in g.adjacency[center]:
                (blue if pos[f] <= i else yellow).add(w)
            return blue, yellow - blue

        blue_u, X3 = split(u)
        X1 = {w for w in blue_u if deg[w] > k}
        X2 = blue_u - X1
        Y1, Y2 = split(v)
        x = max(0, k - len(X1) - len(X2))
        x3_high = sum(1 for w in X3 if deg[w] > k)
        y2_high = sum(1 for w in Y2 if deg[w] > k)

        closed_u = g.neighbors(u) | {u}
        conflicts = [f for f in g.conflicts(e) if pos[f] < i]
        u_side = sum(
            1
            for f in conflicts
            if v not in g.edges[f] and (g.edges[f][0] in closed_u or g.edges[f][1] in closed_u)
        )
        total = len(conflicts)
        records.append(
            AuditRecord(
                position=i + 1,
                edge=e,
                u=u,
                v=v,
                X1=sorted(X1),
                X2=sorted(X2),
                X3=sorted(X3),
                Y1=sorted(Y1),
                Y2=sorted(Y2),
                x=x,
                x3_high=x3_high,
                y2_high=y2_high,
                u_side_count=u_side,
                v_side_count=total - u_side,
                total_conflicts=total,
                checks={
                    "total_bound": total <= total_cap,
                    "u_side_bound": u_side <= u_cap,
                    "v_side_bound": total - u_side <= v_cap,
                    "x1_special": len(X1) <= k,
                    "y1_special": len(Y1) <= k,
                    "x3_future": x3_high <= x,
                    "y2_future": y2_high <= k - len(Y1),
                },
            )
        )
    return records


# ---------------------------------------------------------------- pipeline


@dataclass(frozen=True)
class ColorReport:
    n: int
    m: int
    k: int
    degeneracy: int
    max_degree: int
    bound: int | None
    colors_used: int
    valid: bool
    detail: str

    @property
    def within_bound(self) -> bool:
        return self.bound is None or self.colors_used <= self.bound


def color_graph(g: MultiGraph, k: int | None = None) -> tuple[StrongColoring, ColorReport, EdgeOrdering]:
    """Degeneracy, ordering, first-fit coloring and verification in one call.

    The bound is only reported for graphs with at least one edge. It is
    evaluated at ``min(k, max_degree)``: every graph is Δ-degenerate and the
    formula shrinks as ``k`` grows past Δ.
    """
    degen = degeneracy(g).k
    k = degen if k is None else k
    ordering = build_ordering(g, k)
    coloring = greedy_color(g, ordering)
    verdict = verify_strong_coloring(g, coloring)
    delta = max_degree(g)
    report = ColorReport(
        n=g.n,
        m=g.m,
        k=k,
        degeneracy=degen,
        max_degree=delta,
        bound=bound(min(k, delta), delta) if g.m and k >= 1 else None,
        colors_used=coloring.colors_used,
        valid=verdict.ok,
        detail=verdict.describe(),
    )
    return coloring, report, ordering


def coloring_to_json(g: MultiGraph, coloring: StrongColoring, report: ColorReport) -> dict:
    return {
        "n": report.n,
        "m": report.m,
        "k": report.k,
        "max_degree": report.max_degree,
        "bound": report.bound,
        "colors_used": report.colors_used,
        "valid": report.valid,
        "assignment": [
            {"id": e, "edge": [g.label(a), g.label(b)], "color": c}
            for e, ((a, b), c) in enumerate(zip(g.edges, coloring.assignment))
        ],
    }


def coloring_from_json(g: MultiGraph, data) -> StrongColoring:
    """Read an assignment from coloring JSON (a full report or a bare list of
    ``{"id", "color"}`` records)."""
    rows = data["assignment"] if isinstance(data, dict) else data
    colors: list[int | None] = [None] * g.m
    try:
        for row in rows:
            e = int(row["id"])
            g.check_edge(e)
            colors[e] = int(row["color"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed coloring record: {exc}") from None
    if any(c is None for c in colors):
        missing = [e for e, c in enumerate(colors) if c is None]
        raise GraphError(f"coloring misses edges {missing[:10]}")
    return StrongColoring(tuple(colors))
