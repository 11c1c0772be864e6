"""Immutable multigraph, degree queries and the strong-coloring conflict relation."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs and out-of-range ids."""


class MultiGraph:
    """Undirected loopless multigraph on vertices ``0..n-1``.

    Edge ids are dense (``0..m-1``) and follow the order of ``edges``.
    Parallel edges are allowed; loops are rejected.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (int, int)
        Endpoint pairs. Repeating a pair creates a parallel edge.
    labels : sequence, optional
        Original vertex labels, kept for output only.
    """

    __slots__ = ("n", "edges", "adjacency", "labels", "_incident", "_nbrs", "_conflicts")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence | None = None):
        if isinstance(n, bool) or int(n) != n or n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
        n = int(n)
        pairs = []
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {eid} ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge {eid} is a loop at vertex {u}")
            pairs.append((u, v))
            adjacency[u].append((eid, v))
            adjacency[v].append((eid, u))
        if labels is not None and len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(pairs)
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(tuple(a) for a in adjacency)
        self.labels = tuple(labels) if labels is not None else None
        self._incident = tuple(frozenset(e for e, _ in a) for a in adjacency)
        self._nbrs = tuple(frozenset(w for _, w in a) for a in adjacency)
        self._conflicts: list[frozenset[int] | None] = [None] * len(pairs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def check_edge(self, e: int) -> None:
        if not 0 <= e < self.m:
            raise GraphError(f"edge {e} out of range for m={self.m}")

    def label(self, v: int):
        return v if self.labels is None else self.labels[v]

    def neighbors(self, v: int) -> frozenset[int]:
        """Distinct neighbors of ``v``."""
        self.check_vertex(v)
        return self._nbrs[v]

    def incident(self, v: int) -> frozenset[int]:
        """Ids of edges with ``v`` as an endpoint."""
        self.check_vertex(v)
        return self._incident[v]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    def conflicts(self, e: int) -> frozenset[int]:
        """Cached version of :func:`conflict_set`."""
        cached = self._conflicts[e]
        if cached is None:
            a, b = self.edges[e]
            out: set[int] = set()
            inc = self._incident
            for w in self._nbrs[a] | self._nbrs[b]:
                out.update(inc[w])
            out.discard(e)
            cached = self._conflicts[e] = frozenset(out)
        return cached

    def multiplicity(self, u: int, v: int) -> int:
        return len(self._incident[u] & self._incident[v])


class EdgeSubset:
    """A set of edge ids of a fixed graph (a live subgraph, e.g. a prefix of an ordering)."""

    __slots__ = ("graph", "members")

    def __init__(self, graph: MultiGraph, members: Iterable[int] = ()):
        members = frozenset(int(e) for e in members)
        for e in members:
            graph.check_edge(e)
        self.graph = graph
        self.members = members

    @classmethod
    def full(cls, graph: MultiGraph) -> "EdgeSubset":
        return cls(graph, range(graph.m))

    def __contains__(self, e: int) -> bool:
        return e in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def without(self, e: int) -> "EdgeSubset":
        return EdgeSubset(self.graph, self.members - {e})


def degree(g: MultiGraph, v: int) -> int:
    """Degree of ``v`` counting parallel edges with multiplicity."""
    g.check_vertex(v)
    return len(g.adjacency[v])


def restricted_degree(g: MultiGraph, live: EdgeSubset, v: int) -> int:
    """Number of ``live`` edges incident to ``v``."""
    g.check_vertex(v)
    return sum(1 for e, _ in g.adjacency[v] if e in live.members)


def max_degree(g: MultiGraph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def conflict_set(g: MultiGraph, e: int) -> set[int]:
    """Edges within distance one of ``e`` in the full graph.

    ``f`` conflicts with ``e`` when they share an endpoint or some edge joins
    an endpoint of ``f`` to an endpoint of ``e``. Parallel copies of ``e``
    are included, ``e`` itself is not.
    """
    g.check_edge(e)
    return set(g.conflicts(e))


# ---------------------------------------------------------------- text formats


class GraphFormatError(GraphError):
    pass


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def parse_graph(text: str) -> MultiGraph:
    """Parse the canonical edge list or the DIMACS-like format.

    The format is picked from the first token: ``p`` (or a DIMACS ``c``
    comment line) selects DIMACS with 1-based ids, anything else the
    canonical ``n m`` header followed by ``u v`` lines.

    Canonical vertex tokens that are not integers in ``0..n-1`` are treated
    as labels and remapped to dense ids in order of first appearance.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("empty graph input")
    if lines[0][1][0] in ("p", "c"):
        return _parse_dimacs(lines)
    return _parse_canonical(lines)


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected an integer, got {tok!r}") from None


def _parse_canonical(lines: list[tuple[int, list[str]]]) -> MultiGraph:
    lineno, head = lines[0]
    if len(head) != 2:
        raise GraphFormatError(f"line {lineno}: header must be 'n m'")
    n, m = _parse_int(head[0], lineno), _parse_int(head[1], lineno)
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative n or m")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}")
    raw = []
    for lineno, toks in body:
        if len(toks) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        raw.append((lineno, toks[0], toks[1]))

    def dense(tok: str) -> bool:
        try:
            return 0 <= int(tok) < n
        except ValueError:
            return False

    if all(dense(a) and dense(b) for _, a, b in raw):
        edges = [(int(a), int(b)) for _, a, b in raw]
        labels = None
    else:
        ids: dict[str, int] = {}
        edges = []
        for lineno, a, b in raw:
            for tok in (a, b):
                if tok not in ids:
                    if len(ids) == n:
                        raise GraphFormatError(f"line {lineno}: more than {n} distinct vertex labels")
                    ids[tok] = len(ids)
            edges.append((ids[a], ids[b]))
        labels = list(ids) + [f"_{i}" for i in range(len(ids), n)]
    try:
        return MultiGraph(n, edges, labels)
    except GraphFormatError:
        raise
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def _parse_dimacs(lines: list[tuple[int, list[str]]]) -> MultiGraph:
    n = m = None
    edges = []
    for lineno, toks in lines:
        kind = toks[0]
        if kind == "c":
            continue
        if kind == "p":
            if n is not None or len(toks) != 4:
                raise GraphFormatError(f"line {lineno}: bad problem line")
            n, m = _parse_int(toks[2], lineno), _parse_int(toks[3], lineno)
        elif kind == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(toks) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e u v'")
            u, v = _parse_int(toks[1], lineno), _parse_int(toks[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: vertex outside 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {kind!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    if len(edges) != m:
        raise GraphFormatError(f"problem line declares {m} edges, found {len(edges)}")
    try:
        return MultiGraph(n, edges, labels=list(range(1, n + 1)))
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def format_graph(g: MultiGraph) -> str:
    """Canonical edge-list text with 0-based dense ids."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"
