"""Shared helpers and independent oracles for the test suite.

The oracles reimplement the library's core answers from their
definitions (cofactor expansion, uncached breadth-first search over the
raw move rules, a brute scan of the sphere equation) so the production
code is checked against something it does not share internals with.
"""

from fractions import Fraction

from plumbhf import build_graph


def star(center, *rays, name=None):
    """Star graph: center vertex first, then each ray walking outward."""
    weights = [center]
    edges = []
    for ray in rays:
        prev = 0
        for w in ray:
            weights.append(w)
            edges.append((prev, len(weights) - 1))
            prev = len(weights) - 1
    return build_graph(weights, edges, name=name)


def chain(*weights):
    return build_graph(list(weights), [(i, i + 1) for i in range(len(weights) - 1)])


def e8():
    return star(-2, [-2] * 4, [-2] * 2, [-2], name="e8")


def cofactor_det(rows):
    """Textbook cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = 1 if j % 2 == 0 else -1
        total += sign * rows[0][j] * cofactor_det(minor)
    return total


def oracle_completes(graph, values):
    """Uncached BFS over the raw move rules; True iff a final state is
    reachable from the given association values."""
    kmax = tuple(-w for w in graph.weights)
    nbrs = graph.neighbors
    start = tuple((n - w) // 2 for n, w in zip(values, graph.weights))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            capped = [v for v in range(len(s)) if s[v] == kmax[v]]
            if not capped:
                return True
            for v in capped:
                if any(s[u] >= kmax[u] for u in nbrs[v]):
                    continue
                child = list(s)
                child[v] = 0
                for u in nbrs[v]:
                    child[u] += 1
                child = tuple(child)
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        frontier = nxt
    return False


def oracle_count(graph):
    """Full good-initial count through oracle_completes."""
    import itertools

    ranges = [range(w + 2, -w + 1, 2) for w in graph.weights]
    return sum(
        1 for values in itertools.product(*ranges) if oracle_completes(graph, values)
    )


def brute_quadruples(bound):
    """Canonical quadruple tuples with a1 + a2 <= bound, by raw scan of
    the sphere equation a1*a2 + a2*b1 + a1*b2 = 1."""
    from plumbhf import SphereQuadruple

    out = set()
    for a1 in range(2, bound - 1):
        for a2 in range(2, bound - a1 + 1):
            for b1 in range(-a1 + 1, 0):
                for b2 in range(-a2 + 1, 0):
                    if a1 * a2 + a2 * b1 + a1 * b2 == 1:
                        q = SphereQuadruple(a1, b1, a2, b2)
                        out.add(q.canonical().as_tuple())
    return out


def random_forest(rng, max_vertices=6, weight_range=(-4, -1), edge_chance=0.8):
    n = rng.randint(1, max_vertices)
    weights = [rng.randint(*weight_range) for _ in range(n)]
    edges = []
    for v in range(1, n):
        if rng.random() < edge_chance:
            edges.append((rng.randrange(v), v))
    return build_graph(weights, edges)


def random_small_star(rng):
    """Negative-definite all-(<= -2) star: rays <= 3, weights >= -5,
    at most 8 vertices.  Retries until the form is negative definite."""
    from plumbhf import is_negative_definite

    while True:
        nrays = rng.randint(1, 3)
        lengths = [rng.randint(1, 3) for _ in range(nrays)]
        while 1 + sum(lengths) > 8:
            lengths[lengths.index(max(lengths))] -= 1
            if 0 in lengths:
                lengths.remove(0)
        rays = [[rng.randint(-5, -2) for _ in range(l)] for l in lengths if l > 0]
        g = star(rng.randint(-5, -2), *rays)
        if is_negative_definite(g):
            return g


def blow_up_edge(g, u, v):
    """Insert a -1 vertex on edge (u, v), dropping both end weights by 1."""
    key = (min(u, v), max(u, v))
    assert key in g.edges
    weights = list(g.weights)
    weights[u] -= 1
    weights[v] -= 1
    weights.append(-1)
    new = len(weights) - 1
    edges = [e for e in g.edges if e != key] + [(u, new), (v, new)]
    return build_graph(weights, edges)


def blow_up_leaf(g, u):
    """Hang a -1 leaf off u, dropping u's weight by 1."""
    weights = list(g.weights)
    weights[u] -= 1
    weights.append(-1)
    return build_graph(weights, list(g.edges) + [(u, len(weights) - 1)])


def reduced_fractions(limit):
    """All reduced a/b < -1 with |a|, |b| <= limit."""
    import math

    for a in range(2, limit + 1):
        for b in range(1, a):
            if math.gcd(a, b) == 1:
                yield Fraction(-a, b)
