"""scikit-learn style front end.

Edges play the role of samples: ``fit`` takes a graph (a :class:`MultiGraph`
or an ``(n_edges, 2)`` integer array of endpoints) and ``labels_`` holds one
color per edge, as with clustering estimators.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .coloring import audit, bound, greedy_color, verify_strong_coloring
from .exact import exact_chi_s
from .graph import GraphError, MultiGraph, max_degree
from .ordering import build_ordering, degeneracy


def check_graph(X, n_vertices: int | None = None) -> MultiGraph:
    """Coerce ``X`` to a :class:`MultiGraph`.

    Arrays must be integer-valued with shape ``(n_edges, 2)``; the vertex
    count defaults to ``1 + max endpoint``.
    """
    if isinstance(X, MultiGraph):
        if n_vertices is not None and n_vertices != X.n:
            raise ValueError(f"graph has {X.n} vertices, expected {n_vertices}")
        return X
    arr = np.asarray(X)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an edge array of shape (n_edges, 2), got {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.issubdtype(arr.dtype, np.number) or not np.all(np.mod(arr, 1) == 0):
            raise ValueError("edge endpoints must be integers")
        arr = arr.astype(np.int64)
    if arr.size and arr.min() < 0:
        raise ValueError("edge endpoints must be non-negative")
    n = int(arr.max()) + 1 if arr.size else 0
    if n_vertices is not None:
        if n_vertices < n:
            raise ValueError(f"endpoint {n - 1} out of range for n_vertices={n_vertices}")
        n = n_vertices
    try:
        return MultiGraph(n, arr.tolist())
    except GraphError as exc:
        raise ValueError(str(exc)) from None


class StrongEdgeColoring(ClusterMixin, BaseEstimator):
    """Strong edge-coloring by first-fit along a special-edge ordering.

    Parameters
    ----------
    k : int or None, default=None
        Degeneracy parameter used to build the ordering. ``None`` uses the
        graph's degeneracy; a smaller value may raise
        :class:`~strongedge.ordering.NotKDegenerateError`.
    prefer_high_degree : bool, default=True
        Prefer special endpoints of degree above ``k`` when choosing the
        next special edge.
    n_vertices : int or None, default=None
        Vertex count for array input (isolated high ids).

    Attributes
    ----------
    graph_ : MultiGraph
    degeneracy_ : int
    k_ : int
    max_degree_ : int
    ordering_ : EdgeOrdering
    coloring_ : StrongColoring
    labels_ : ndarray of shape (n_edges,)
        Color index of every edge.
    n_colors_ : int
    bound_ : int or None
        Guaranteed color budget, evaluated at ``min(k_, max_degree_)``;
        None for edgeless graphs.
    """

    def __init__(self, k=None, prefer_high_degree=True, n_vertices=None):
        self.k = k
        self.prefer_high_degree = prefer_high_degree
        self.n_vertices = n_vertices

    def fit(self, X, y=None):
        g = check_graph(X, self.n_vertices)
        if self.k is not None and (not isinstance(self.k, (int, np.integer)) or self.k < 0):
            raise ValueError(f"k must be a non-negative integer or None, got {self.k!r}")
        self.graph_ = g
        self.degeneracy_ = degeneracy(g).k
        self.k_ = self.degeneracy_ if self.k is None else int(self.k)
        self.max_degree_ = max_degree(g)
        self.ordering_ = build_ordering(g, self.k_, prefer_high=self.prefer_high_degree)
        self.coloring_ = greedy_color(g, self.ordering_)
        self.labels_ = np.asarray(self.coloring_.assignment, dtype=np.int64)
        self.n_colors_ = self.coloring_.colors_used
        self.bound_ = (
            bound(min(self.k_, self.max_degree_), self.max_degree_) if g.m and self.k_ >= 1 else None
        )
        return self

    def verify(self):
        """Verdict of the independent strong-coloring check on the fitted graph."""
        check_is_fitted(self, "coloring_")
        return verify_strong_coloring(self.graph_, self.coloring_)

    def audit(self):
        check_is_fitted(self, "ordering_")
        return audit(self.graph_, self.k_, self.ordering_)


class EdgeColorEncoder(TransformerMixin, BaseEstimator):
    """One-hot color-class indicator matrix for the edges of the fitted graph.

    ``transform`` returns an ``(n_edges, n_colors)`` 0/1 array; each column
    is an induced matching.
    """

    def __init__(self, k=None):
        self.k = k

    def fit(self, X, y=None):
        self.colorer_ = StrongEdgeColoring(k=self.k).fit(X)
        self.n_colors_ = self.colorer_.n_colors_
        return self

    def transform(self, X):
        check_is_fitted(self, "colorer_")
        g = check_graph(X)
        if g.edges != self.colorer_.graph_.edges:
            raise ValueError("transform expects the graph passed to fit")
        out = np.zeros((g.m, self.n_colors_), dtype=np.int64)
        out[np.arange(g.m), self.colorer_.labels_] = 1
        return out


class ExactStrongColoring(ClusterMixin, BaseEstimator):
    """Optimal strong edge-coloring for small graphs (see :func:`exact_chi_s`)."""

    def __init__(self, budget=1_000_000, n_vertices=None):
        self.budget = budget
        self.n_vertices = n_vertices

    def fit(self, X, y=None):
        g = check_graph(X, self.n_vertices)
        result = exact_chi_s(g, self.budget)
        self.graph_ = g
        self.result_ = result
        self.chi_s_ = result.chi_s
        self.timed_out_ = result.timed_out
        self.labels_ = np.asarray(result.witness.assignment, dtype=np.int64)
        return self
