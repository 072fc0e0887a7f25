"""The association game on weighted plumbing trees.

An association assigns each vertex an integer n(v) with n(v) = m(v)
(mod 2) and |n(v)| <= -m(v).  It is *initial* when m(v) < n(v) <= -m(v)
everywhere and *final* when m(v) <= n(v) < -m(v) everywhere.  A legal
move picks a vertex with n(v) = -m(v), flips it to m(v), and adds 2 to
each neighbor, provided the result is still an association.  A good
sequence runs from an initial association to a final one.

For a negative-definite tree with at most one bad vertex the number of
initial associations that start a good sequence equals the rank of the
kernel of the U-action on HF+ of the boundary (with Z/2 coefficients,
summed over spin-c structures), by the Ozsvath-Szabo plumbing
algorithm.

Internally states live in offset coordinates k(v) = (n(v) - m(v)) / 2,
which range over 0..-m(v); a vertex is movable exactly at the top of its
range and a state is final exactly when no vertex sits at the top.

The game is confluent: two vertices movable at the same state are never
adjacent (an adjacent pair at the top of their ranges blocks both), so
their moves commute, and when one move caps a shared neighbor the other
order caps it too, leaving an adjacent capped pair that no later move
can lower.  Every maximal play from a state therefore has the same
outcome, and one deterministic play decides a start.  That play cannot
revisit a state while the intersection form is nonsingular (a repeat
would need a nonzero move multiset in the form's kernel), so the fast
engine follows single plays and a breadth-first engine with a visited
set covers the singular case.
"""

from __future__ import annotations

import itertools
import logging
import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .contfrac import convergents, expand_cf
from .errors import (
    DimensionMismatchError,
    IllegalMoveError,
    TooManyBadVerticesError,
    WeightTooLargeError,
)
from .graph import (
    PlumbingGraph,
    bad_vertices,
    graph_determinant,
    is_negative_definite,
)
from .seifert import SphereQuadruple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Association:
    """An integer vector on the vertices of a fixed graph.

    Validates the parity and bound constraints at construction, so every
    instance is a genuine association.
    """

    graph: PlumbingGraph
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.graph.vertex_count:
            raise ValueError(
                f"expected {self.graph.vertex_count} values, got {len(self.values)}"
            )
        for v, (m, x) in enumerate(zip(self.graph.weights, self.values)):
            if (x - m) % 2 != 0:
                raise ValueError(f"value {x} at vertex {v} has wrong parity for weight {m}")
            if abs(x) > -m:
                raise ValueError(f"value {x} at vertex {v} exceeds |{m}|")


def is_initial(n: Association) -> bool:
    return all(m < x <= -m for m, x in zip(n.graph.weights, n.values))


def is_final(n: Association) -> bool:
    return all(m <= x < -m for m, x in zip(n.graph.weights, n.values))


def legal_moves(n: Association) -> list[int]:
    """Vertices where a change is legal, ascending."""
    g = n.graph
    out = []
    for v, (m, x) in enumerate(zip(g.weights, n.values)):
        if x != -m:
            continue
        if all(n.values[u] + 2 <= -g.weights[u] for u in g.neighbors[v]):
            out.append(v)
    return out


def apply_move(n: Association, v: int) -> Association:
    """The changed association, or IllegalMoveError."""
    g = n.graph
    if not (0 <= v < g.vertex_count):
        raise IllegalMoveError(f"no vertex {v}")
    if n.values[v] != -g.weights[v]:
        raise IllegalMoveError(f"vertex {v} is not at -m(v)")
    vals = list(n.values)
    vals[v] = g.weights[v]
    for u in g.neighbors[v]:
        vals[u] += 2
        if vals[u] > -g.weights[u]:
            raise IllegalMoveError(f"move at {v} would push neighbor {u} past its bound")
    return Association(g, tuple(vals))


@dataclass(frozen=True)
class GoodSequence:
    """A witness: states[0] initial, states[-1] final, one move per step."""

    states: tuple[Association, ...]
    moved: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.states:
            raise ValueError("a sequence has at least one state")
        if len(self.moved) != len(self.states) - 1:
            raise ValueError("need exactly one moved vertex per step")

    @property
    def graph(self) -> PlumbingGraph:
        return self.states[0].graph

    def to_jsonable(self) -> dict:
        return {
            "states": [list(s.values) for s in self.states],
            "moved": list(self.moved),
        }


def is_good_sequence(seq: GoodSequence) -> bool:
    """Replay against the definition, independent of the search engine."""
    if not is_initial(seq.states[0]) or not is_final(seq.states[-1]):
        return False
    g = seq.graph
    for before, after, v in zip(seq.states, seq.states[1:], seq.moved):
        if after.graph != g or before.graph != g:
            return False
        if before.values[v] != -g.weights[v] or after.values[v] != g.weights[v]:
            return False
        nbrs = set(g.neighbors[v])
        for u, (x, y) in enumerate(zip(before.values, after.values)):
            if u == v:
                continue
            if y != x + (2 if u in nbrs else 0):
                return False
    return True


def reverse_negate(seq: GoodSequence) -> GoodSequence:
    """The reversed, negated sequence; good whenever seq is good."""
    g = seq.graph
    states = tuple(
        Association(g, tuple(-x for x in s.values)) for s in reversed(seq.states)
    )
    return GoodSequence(states, tuple(reversed(seq.moved)))


@dataclass(frozen=True)
class GoodInitialResult:
    """Outcome of a (possibly truncated) scan over initial associations."""

    count: int
    initials: tuple[Association, ...]
    witnesses: tuple[GoodSequence, ...]
    partial: bool
    initial_total: int


class AssociationGame:
    """Search context for one graph, with cross-start memoization.

    ``move_order`` only changes the order in which legal moves are
    expanded ("ascending" or "descending" vertex id); results are
    independent of it, which the tests assert.
    """

    def __init__(self, graph: PlumbingGraph, move_order: str = "ascending") -> None:
        if move_order not in ("ascending", "descending"):
            raise ValueError(f"unknown move order {move_order!r}")
        self.graph = graph
        self._descending = move_order == "descending"
        self._kmax = tuple(-w for w in graph.weights)
        self._nbrs = graph.neighbors
        self._bad = bad_vertices(graph)
        self._negative_definite = is_negative_definite(graph)
        self._singular = graph_determinant(graph) == 0
        small = all(0 <= k <= 255 for k in self._kmax)
        self._freeze = bytes if small else tuple
        self._thaw = bytearray if small else list
        # reach[s] is True when a final state is reachable from s, False
        # when provably not; step[s] is a move known to lead toward one.
        self._reach: dict = {}
        self._step: dict = {}

    # -- conversions ----------------------------------------------------

    def _to_state(self, n: Association):
        return self._freeze((x - m) // 2 for m, x in zip(self.graph.weights, n.values))

    def _to_assoc(self, state) -> Association:
        return Association(
            self.graph,
            tuple(m + 2 * k for m, k in zip(self.graph.weights, state)),
        )

    def _bump(self, state, v: int):
        mut = self._thaw(state)
        mut[v] = 0
        for u in self._nbrs[v]:
            mut[u] += 1
        return self._freeze(mut)

    def _triggered(self, state) -> frozenset:
        kmax = self._kmax
        return frozenset(v for v, k in enumerate(state) if k == kmax[v])

    # -- search ---------------------------------------------------------

    def _warn_if_outside_domain(self) -> None:
        if len(self._bad) > 1 or not self._negative_definite:
            warnings.warn(
                "graph is outside the validity domain (negative definite, "
                "at most one bad vertex); game counts are not HF+ ranks here",
                stacklevel=3,
            )

    def _search(self, s0) -> list[int] | None:
        """Moves from s0 to some final state, or None if unreachable."""
        if self._singular:
            return self._search_bfs(s0)
        return self._play(s0)

    def _play(self, s0) -> list[int] | None:
        """Decide s0 by one deterministic maximal play (see module doc).

        Sound only on nonsingular forms, where a play cannot revisit a
        state and confluence makes its outcome the outcome of every
        play.  Visited states are memoized with the move taken, so later
        starts splice into stored plays instead of replaying them.
        """
        reach, step = self._reach, self._step
        kmax, nbrs = self._kmax, self._nbrs
        path_states: list = []
        path_moves: list[int] = []
        s = s0
        while True:
            known = reach.get(s)
            if known is not None:
                good = known
                break
            triggered = [v for v, k in enumerate(s) if k == kmax[v]]
            if not triggered:
                good = True
                break
            if self._descending:
                triggered.reverse()
            move = None
            for v in triggered:
                if all(s[u] < kmax[u] for u in nbrs[v]):
                    move = v
                    break
            if move is None:
                logger.debug("dead-end state %r on %s", s, self.graph.name)
                good = False
                break
            path_states.append(s)
            path_moves.append(move)
            s = self._bump(s, move)
        reach[s] = good
        if not good:
            for t in path_states:
                reach[t] = False
            return None
        # every path state was a memo miss, so these never overwrite
        for t, v in zip(path_states, path_moves):
            reach[t] = True
            step[t] = v
        while True:  # append the memoized continuation, if any
            v = step.get(s)
            if v is None:
                break
            path_moves.append(v)
            s = self._bump(s, v)
        return path_moves

    def _search_bfs(self, s0) -> list[int] | None:
        """Breadth-first fallback for singular intersection forms."""
        reach, step = self._reach, self._step
        kmax, nbrs = self._kmax, self._nbrs
        if reach.get(s0) is False:
            return None
        parent: dict = {s0: None}
        queue: deque = deque()
        queue.append((s0, self._triggered(s0)))
        goal = None
        while queue:
            s, triggered = queue.popleft()
            if not triggered or reach.get(s):
                goal = s  # final, or already known to reach a final
                break
            order = sorted(triggered, reverse=self._descending)
            stuck = True
            for v in order:
                if any(s[u] >= kmax[u] for u in nbrs[v]):
                    continue  # a neighbor sits at its bound: illegal
                stuck = False
                child = self._bump(s, v)
                if child in parent or reach.get(child) is False:
                    continue
                parent[child] = (s, v)
                child_triggered = triggered.difference((v,)).union(
                    u for u in nbrs[v] if s[u] + 1 == kmax[u]
                )
                queue.append((child, child_triggered))
            if stuck:
                # a maximal move order that is not final; empirical data
                logger.debug("dead-end state %r on %s", s, self.graph.name)
        if goal is None:
            # nothing reachable from any visited state reaches a final
            for s in parent:
                reach[s] = False
            return None
        moves: list[int] = []
        cur = goal
        while parent[cur] is not None:
            prev, v = parent[cur]
            moves.append(v)
            cur = prev
        moves.reverse()
        # splice in the memoized continuation if the goal was a memo hit
        s = goal
        while True:
            v = step.get(s)
            if v is None:
                break
            moves.append(v)
            s = self._bump(s, v)
        # memoize the witness path; never overwrite, so step chains stay acyclic
        s = s0
        for v in moves:
            if reach.get(s) is not True:
                reach[s] = True
                step[s] = v
            s = self._bump(s, v)
        reach[s] = True
        return moves

    def _witness(self, s0, moves: Sequence[int]) -> GoodSequence:
        states = [self._to_assoc(s0)]
        s = s0
        for v in moves:
            s = self._bump(s, v)
            states.append(self._to_assoc(s))
        return GoodSequence(tuple(states), tuple(moves))

    # -- public operations ----------------------------------------------

    def completes_to_good(self, n0: Association) -> GoodSequence | None:
        """A good sequence starting at n0, or None.

        n0 must be an initial association on this game's graph.  The
        witness ends at the first final state the search reaches, so a
        start that is itself final yields the one-state sequence.
        """
        if n0.graph != self.graph:
            raise ValueError("association belongs to a different graph")
        if not is_initial(n0):
            raise ValueError("completes_to_good needs an initial association")
        self._warn_if_outside_domain()
        moves = self._search(self._to_state(n0))
        if moves is None:
            return None
        return self._witness(self._to_state(n0), moves)

    def initial_associations(self) -> Iterator[Association]:
        """All initial associations, lexicographic by vertex id."""
        for state in self._initial_states():
            yield self._to_assoc(state)

    def _initial_states(self) -> Iterator:
        ranges = [range(1, k + 1) for k in self._kmax]
        if any(len(r) == 0 for r in ranges):
            return
        for kt in itertools.product(*ranges):
            yield self._freeze(kt)

    def good_initial_count(self, early_stop: int | None = None) -> GoodInitialResult:
        """Count (and list) the initial associations that complete.

        Scans initial associations in lexicographic order.  With
        ``early_stop=K`` the scan may stop as soon as K good ones are
        found; the result is flagged partial iff candidates were left
        unscanned, so a count below K is always exact.  Raises
        TooManyBadVerticesError beyond one bad vertex and warns when the
        form is not negative definite.
        """
        if len(self._bad) > 1:
            raise TooManyBadVerticesError(
                f"graph has bad vertices {self._bad}; the count needs at most one"
            )
        if not self._negative_definite:
            self._warn_if_outside_domain()
        if early_stop is not None and early_stop < 1:
            raise ValueError("early_stop must be at least 1")
        total = 1
        for k in self._kmax:
            total *= max(k, 0)
        goods: list[Association] = []
        witnesses: list[GoodSequence] = []
        scanned = 0
        for s0 in self._initial_states():
            scanned += 1
            moves = self._search(s0)
            if moves is None:
                continue
            goods.append(self._to_assoc(s0))
            witnesses.append(self._witness(s0, moves))
            if early_stop is not None and len(goods) >= early_stop:
                break
        return GoodInitialResult(
            count=len(goods),
            initials=tuple(goods),
            witnesses=tuple(witnesses),
            partial=scanned < total,
            initial_total=total,
        )


def completes_to_good(n0: Association) -> GoodSequence | None:
    """One-shot wrapper; see AssociationGame.completes_to_good."""
    return AssociationGame(n0.graph).completes_to_good(n0)


def good_initial_count(
    graph: PlumbingGraph,
    early_stop: int | None = None,
    move_order: str = "ascending",
) -> GoodInitialResult:
    """One-shot wrapper; see AssociationGame.good_initial_count."""
    return AssociationGame(graph, move_order).good_initial_count(early_stop)


def interior_association_count(graph: PlumbingGraph) -> int:
    """prod(-1 - m(w)): the associations strictly inside their bounds.

    Each such association is simultaneously initial and final, so this
    is a lower bound for the good-initial count.  Only meaningful when
    every weight is <= -2 (WeightTooLargeError otherwise).
    """
    out = 1
    for v, m in enumerate(graph.weights):
        if m > -2:
            raise WeightTooLargeError(f"vertex {v} has weight {m} > -2")
        out *= -1 - m
    return out


def _vector(x) -> tuple[int, ...]:
    return tuple(getattr(x, "values", x))


def pairing(x, y) -> int:
    """Coordinatewise dot product sum n(w) n'(w)."""
    xs, ys = _vector(x), _vector(y)
    if len(xs) != len(ys):
        raise DimensionMismatchError(f"lengths {len(xs)} and {len(ys)} differ")
    return sum(a * b for a, b in zip(xs, ys))


@dataclass(frozen=True)
class PairingVector:
    """Distinguished integer vector on a two-ray star.

    Entries (in canonical vertex order: center, first ray, second ray)
    are -A1*C1 at the center, C1*B_i along the first ray and A1*D_j
    along the second, where (A_i, B_i) and (C_j, D_j) are the convergent
    pairs of the two ray ratios.  Along any good sequence its pairing
    with the states jumps by exactly 2 at center moves and 0 otherwise.
    """

    values: tuple[int, ...]


def pairing_vector(q: SphereQuadruple) -> PairingVector:
    c = q.canonical()
    first = convergents(expand_cf(Fraction(c.a1, c.b1)))
    second = convergents(expand_cf(Fraction(c.a2, c.b2)))
    a1 = first[0][0]
    c1 = second[0][0]
    values = (
        (-a1 * c1,)
        + tuple(c1 * b for _, b in first[:-1])
        + tuple(a1 * d for _, d in second[:-1])
    )
    return PairingVector(values)


def central_count(seq: GoodSequence, center: int) -> int:
    """How many moves of the sequence happen at the center vertex."""
    return sum(1 for v in seq.moved if v == center)
