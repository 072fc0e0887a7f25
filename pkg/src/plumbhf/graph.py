"""Weighted plumbing trees and their intersection forms.

A plumbing graph is a forest whose vertices carry integer weights m(v).
Its intersection matrix has m(v) on the diagonal and a 1 in position
(u, v) for every edge.  The boundary of the plumbed 4-manifold is an
integral homology sphere exactly when the determinant is +-1, and the
counting algorithm in :mod:`plumbhf.game` applies when the form is
negative definite with at most one bad vertex (a vertex with
m(v) > -degree(v)).

All arithmetic here is exact over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BadIdError,
    CycleCreatedError,
    CycleDetectedError,
    DisconnectedError,
    DuplicateEdgeError,
)


@dataclass(frozen=True)
class PlumbingGraph:
    """Immutable weighted forest on vertices 0..n-1.

    Edges are stored as sorted (low, high) pairs in sorted order, so two
    graphs with the same vertices and edges compare and hash equal.  The
    empty graph is allowed; it denotes the standard 3-sphere.
    """

    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    name: str | None = None

    @property
    def vertex_count(self) -> int:
        return len(self.weights)

    def weight(self, v: int) -> int:
        return self.weights[v]

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in self.weights]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @cached_property
    def is_connected(self) -> bool:
        n = self.vertex_count
        if n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for u in self.neighbors[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == n


def build_graph(
    weights: Sequence[int],
    edges: Iterable[Sequence[int]] = (),
    name: str | None = None,
) -> PlumbingGraph:
    """Validate weights/edges and return a canonical PlumbingGraph.

    Vertex ids are the positions 0..n-1 of ``weights``.  Raises BadIdError
    for an endpoint outside that range, DuplicateEdgeError for a repeated
    unordered pair, and CycleDetectedError for a self-loop or any edge
    that would close a cycle (the graph must be a forest).
    """
    ws = tuple(weights)
    n = len(ws)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    canon: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n) or not (0 <= v < n):
            raise BadIdError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        if u == v:
            raise CycleDetectedError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"edge {key} appears twice")
        seen.add(key)
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CycleDetectedError(f"edge {key} closes a cycle")
        parent[ru] = rv
        canon.append(key)
    return PlumbingGraph(ws, tuple(sorted(canon)), name)


@dataclass(frozen=True)
class IntersectionMatrix:
    """Symmetric integer matrix of a plumbing graph."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.entries)


def intersection_matrix(g: PlumbingGraph) -> IntersectionMatrix:
    """Weights on the diagonal, 1 for every edge, 0 elsewhere."""
    n = g.vertex_count
    rows = [[0] * n for _ in range(n)]
    for v, w in enumerate(g.weights):
        rows[v][v] = w
    for u, v in g.edges:
        rows[u][v] = 1
        rows[v][u] = 1
    return IntersectionMatrix(tuple(tuple(r) for r in rows))


def determinant(m: IntersectionMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every intermediate quantity is an integer; each division is by the
    previous pivot and is exact.  Row pivoting handles zero pivots, so
    singular matrices return 0 correctly.  The empty matrix has det 1.
    """
    a = [list(row) for row in m.entries]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                # exact by construction: prev divides the bracket
                row_i[j] = (row_i[j] * pk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def graph_determinant(g: PlumbingGraph) -> int:
    return determinant(intersection_matrix(g))


def is_homology_sphere(g: PlumbingGraph) -> bool:
    """True iff the boundary 3-manifold has trivial first homology.

    Requires a connected graph (raises DisconnectedError otherwise); the
    empty graph denotes S^3 and counts as a homology sphere.
    """
    if not g.is_connected:
        raise DisconnectedError("homology-sphere test needs a connected graph")
    return abs(graph_determinant(g)) == 1


def is_negative_definite(g: PlumbingGraph) -> bool:
    """Leading-principal-minor test in exact integer arithmetic.

    The form is negative definite iff the k-th leading principal minor
    has sign (-1)^k for k = 1..n.  Minors are produced by unpivoted
    Bareiss sweeps; a zero minor already refutes definiteness, so the
    exact divisions below it are never reached.  The empty form is
    vacuously negative definite.
    """
    a = [list(row) for row in intersection_matrix(g).entries]
    n = len(a)
    prev = 1
    for k in range(n):
        minor = a[k][k]  # after k sweeps: the (k+1)x(k+1) leading minor
        if minor == 0:
            return False
        if (minor < 0) != (k % 2 == 0):
            return False
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * minor - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = minor
    return True


def bad_vertices(g: PlumbingGraph) -> list[int]:
    """Vertices with m(v) > -degree(v), ascending."""
    return [v for v in range(g.vertex_count) if g.weights[v] > -g.degree(v)]


def blow_down(g: PlumbingGraph) -> PlumbingGraph:
    """Collapse weight -1 vertices of degree <= 2 until none remains.

    Degree 0: delete the vertex.  Degree 1: delete it and add 1 to the
    neighbor's weight.  Degree 2: delete it, join its two neighbors by an
    edge, and add 1 to each of their weights.  The boundary 3-manifold
    and |det| are unchanged.  Candidates are consumed smallest id first,
    so the fixed point is deterministic.  Surviving vertices are
    renumbered densely, preserving relative order.
    """
    weights = dict(enumerate(g.weights))
    adj: dict[int, set[int]] = {v: set(g.neighbors[v]) for v in range(g.vertex_count)}
    while True:
        v = min((u for u in weights if weights[u] == -1 and len(adj[u]) <= 2), default=None)
        if v is None:
            break
        nbrs = sorted(adj[v])
        for u in nbrs:
            adj[u].discard(v)
        del weights[v], adj[v]
        if len(nbrs) == 1:
            weights[nbrs[0]] += 1
        elif len(nbrs) == 2:
            u, w = nbrs
            if w in adj[u]:
                raise CycleCreatedError(
                    f"blowing down {v} would double the edge ({u}, {w})"
                )
            adj[u].add(w)
            adj[w].add(u)
            weights[u] += 1
            weights[w] += 1
    ids = sorted(weights)
    index = {old: new for new, old in enumerate(ids)}  # order-preserving, so pairs stay sorted
    new_edges = sorted((index[u], index[v]) for u in ids for v in adj[u] if u < v)
    return PlumbingGraph(tuple(weights[i] for i in ids), tuple(new_edges), g.name)
