"""Reports, surveys, and the append-only result cache.

Reports are plain dataclasses with snake_case JSON emissions; the CSV
emissions carry the same data field-by-field, with tuple-valued columns
joined by ';'.  The survey cache is a JSONL file keyed by the canonical
graph hash, reused only when the stored early_stop setting matches.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .contfrac import expand_cf
from .errors import PlumbingError
from .files import canonical_graph_hash
from .game import (
    AssociationGame,
    central_count,
    is_good_sequence,
    pairing,
    pairing_vector,
    reverse_negate,
)
from .graph import (
    PlumbingGraph,
    bad_vertices,
    graph_determinant,
    is_negative_definite,
)
from .seifert import (
    SphereQuadruple,
    brieskorn,
    enumerate_quadruples,
    quadruple_star,
    star_graph,
)

ASSUMPTION_NOTE = "good initial associations are assumed linearly independent in Ker(U)"


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analyze path computes for one graph."""

    name: str | None
    graph_hash: str
    vertex_count: int
    det: int
    negative_definite: bool
    bad_vertices: tuple[int, ...]
    is_homology_sphere: bool
    initial_count: int
    good_initial_count: int
    partial: bool
    good_initials: tuple[tuple[int, ...], ...]
    elapsed_ms: int
    early_stop: int | None
    sequences: tuple[dict, ...] | None = None

    def to_obj(self) -> dict:
        obj = {
            "name": self.name,
            "graph_hash": self.graph_hash,
            "vertex_count": self.vertex_count,
            "det": self.det,
            "negative_definite": self.negative_definite,
            "bad_vertices": list(self.bad_vertices),
            "is_homology_sphere": self.is_homology_sphere,
            "initial_count": self.initial_count,
            "good_initial_count": self.good_initial_count,
            "partial": self.partial,
            "good_initials": [list(v) for v in self.good_initials],
            "elapsed_ms": self.elapsed_ms,
            "early_stop": self.early_stop,
            "assumes_independent_generators": ASSUMPTION_NOTE,
        }
        if self.sequences is not None:
            obj["sequences"] = list(self.sequences)
        return obj


def analyze(
    graph: PlumbingGraph,
    early_stop: int | None = None,
    emit_sequences: bool = False,
) -> AnalysisReport:
    """Run the full pipeline on one graph.

    Propagates TooManyBadVerticesError from the count; a disconnected
    graph simply reports is_homology_sphere False (homology spheres are
    connected).
    """
    start = time.perf_counter()
    det = graph_determinant(graph)
    result = AssociationGame(graph).good_initial_count(early_stop)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return AnalysisReport(
        name=graph.name,
        graph_hash=canonical_graph_hash(graph),
        vertex_count=graph.vertex_count,
        det=det,
        negative_definite=is_negative_definite(graph),
        bad_vertices=tuple(bad_vertices(graph)),
        is_homology_sphere=graph.is_connected and abs(det) == 1,
        initial_count=result.initial_total,
        good_initial_count=result.count,
        partial=result.partial,
        good_initials=tuple(a.values for a in result.initials),
        elapsed_ms=elapsed_ms,
        early_stop=early_stop,
        sequences=tuple(w.to_jsonable() for w in result.witnesses)
        if emit_sequences
        else None,
    )


@dataclass(frozen=True)
class SurveyRow:
    """One family member in a survey emission."""

    params: tuple[int, ...]
    verdict: str
    count: int | None = None
    partial: bool = False
    graph_hash: str | None = None
    reason: str | None = None

    def to_obj(self) -> dict:
        return {
            "params": list(self.params),
            "verdict": self.verdict,
            "count": self.count,
            "partial": self.partial,
            "graph_hash": self.graph_hash,
            "reason": self.reason,
        }


class ResultCache:
    """Append-only JSONL cache of analyze results keyed by graph hash."""

    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)
        self.records: dict[tuple[str, int | None], dict] = {}
        if self.path.exists():
            with self.path.open() as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    self.records[(rec["graph_hash"], rec["early_stop"])] = rec

    def get(self, graph_hash: str, early_stop: int | None) -> dict | None:
        return self.records.get((graph_hash, early_stop))

    def put(self, record: dict) -> None:
        key = (record["graph_hash"], record["early_stop"])
        if key in self.records:
            return
        self.records[key] = record
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps(record, separators=(",", ":"), sort_keys=True) + "\n")


def _coprime_tuples(max_a: int, rays: int) -> list[tuple[int, ...]]:
    out = []
    for t in itertools.combinations(range(2, max_a + 1), rays):
        if all(math.gcd(x, y) == 1 for x, y in itertools.combinations(t, 2)):
            out.append(t)
    return out


def brieskorn_row(
    multiplicities: Sequence[int],
    early_stop: int | None = 2,
    cache: ResultCache | None = None,
) -> SurveyRow:
    """Analyze one Brieskorn sphere and classify it."""
    params = tuple(multiplicities)
    try:
        inv = brieskorn(params)
        graph = star_graph(inv, name="sigma" + str(params))
        graph_hash = register_graph(graph)
        cached = cache.get(graph_hash, early_stop) if cache is not None else None
        if cached is not None:
            count, partial = cached["good_initial_count"], cached["partial"]
        else:
            report = analyze(graph, early_stop=early_stop)
            count, partial = report.good_initial_count, report.partial
            if cache is not None:
                cache.put(_cache_record(report))
        verdict = "nontrivial" if count >= 2 else "trivial-rank"
        return SurveyRow(
            params=params,
            verdict=verdict,
            count=count,
            partial=partial,
            graph_hash=graph_hash,
        )
    except PlumbingError as exc:
        return SurveyRow(
            params=params,
            verdict="skipped",
            reason=f"{type(exc).__name__}: {exc}",
        )


def _cache_record(report: AnalysisReport) -> dict:
    return {
        "graph_hash": report.graph_hash,
        "early_stop": report.early_stop,
        "good_initial_count": report.good_initial_count,
        "partial": report.partial,
        "det": report.det,
        "initial_count": report.initial_count,
    }


def survey_brieskorn(
    max_a: int = 30,
    rays: int = 3,
    early_stop: int | None = 2,
    cache: ResultCache | None = None,
) -> list[SurveyRow]:
    """One row per pairwise-coprime multiplicity tuple within the bound."""
    return [
        brieskorn_row(t, early_stop=early_stop, cache=cache)
        for t in _coprime_tuples(max_a, rays)
    ]


def survey_all_minus_two(max_p: int = 12, rays: int = 3) -> list[SurveyRow]:
    """Exact solution scan of 2 - sum p/(p+1) = 1/prod(p+1), no game runs.

    A solution tuple is exactly one whose all-(-2) star (ray lengths p_i,
    center -2) bounds a homology sphere; these are the candidates with
    interior-association count 1.
    """
    rows = []
    for p in itertools.combinations_with_replacement(range(1, max_p + 1), rays):
        lhs = 2 - sum(Fraction(pi, pi + 1) for pi in p)
        rhs = Fraction(1, math.prod(pi + 1 for pi in p))
        rows.append(SurveyRow(params=p, verdict="solution" if lhs == rhs else "non-solution"))
    return rows


def reverify_cache(
    cache: ResultCache,
    used_hashes: Iterable[str],
    sample: int,
    seed: int = 0,
) -> list[str]:
    """Recompute a random sample of cached rows; return mismatch messages.

    Only rows whose graph can be rebuilt from this run (hashes in
    ``used_hashes``) are eligible; timing fields are not compared.
    """
    used = set(used_hashes)
    eligible = [rec for (h, _), rec in sorted(cache.records.items()) if h in used]
    if not eligible or sample <= 0:
        return []
    rng = random.Random(seed)
    picked = rng.sample(eligible, min(sample, len(eligible)))
    problems = []
    for rec in picked:
        graph = _GRAPHS_BY_HASH.get(rec["graph_hash"])
        if graph is None:
            continue
        fresh = _cache_record(analyze(graph, early_stop=rec["early_stop"]))
        if fresh != rec:
            problems.append(
                f"cache mismatch for {rec['graph_hash'][:12]}: {rec} != {fresh}"
            )
    return problems


# reverify needs the graphs back from their hashes; survey runs register them
_GRAPHS_BY_HASH: dict[str, PlumbingGraph] = {}


def register_graph(graph: PlumbingGraph) -> str:
    h = canonical_graph_hash(graph)
    _GRAPHS_BY_HASH[h] = graph
    return h


@dataclass(frozen=True)
class S3Row:
    """Per-quadruple verification outcomes for the two-ray S^3 family."""

    quadruple: tuple[int, int, int, int]
    unique_good_initial: bool
    bumped_sums_hold: bool
    central_count_matches: bool
    pairing_jumps_match: bool
    reversal_is_good: bool
    count: int
    central_moves: int

    def all_pass(self) -> bool:
        return (
            self.unique_good_initial
            and self.bumped_sums_hold
            and self.central_count_matches
            and self.pairing_jumps_match
            and self.reversal_is_good
        )

    def to_obj(self) -> dict:
        return {
            "quadruple": list(self.quadruple),
            "unique_good_initial": self.unique_good_initial,
            "bumped_sums_hold": self.bumped_sums_hold,
            "central_count_matches": self.central_count_matches,
            "pairing_jumps_match": self.pairing_jumps_match,
            "reversal_is_good": self.reversal_is_good,
            "count": self.count,
            "central_moves": self.central_moves,
        }


def s3_row(q: SphereQuadruple) -> S3Row:
    """Check the five structural properties on one quadruple's star."""
    from .contfrac import bumped_sum_check

    c = q.canonical()
    graph = quadruple_star(c, name="s3" + str(c.as_tuple()))
    result = AssociationGame(graph).good_initial_count()
    expected_minimum = tuple(m + 2 for m in graph.weights)
    unique = result.count == 1 and result.initials[0].values == expected_minimum
    witness = result.witnesses[0] if result.witnesses else None

    t = expand_cf(Fraction(c.a1, c.b1))
    s = expand_cf(Fraction(c.a2, c.b2))
    bumped = bumped_sum_check(t, s) == (True, True)

    central = central_count(witness, 0) if witness else -1
    central_ok = central == c.a1 + c.a2 - 1

    jumps_ok = False
    reversal_ok = False
    if witness is not None:
        pv = pairing_vector(c)
        values = [pairing(pv, state) for state in witness.states]
        jumps_ok = all(
            after - before == (2 if moved == 0 else 0)
            for before, after, moved in zip(values, values[1:], witness.moved)
        )
        reversal_ok = is_good_sequence(reverse_negate(witness))

    return S3Row(
        quadruple=c.as_tuple(),
        unique_good_initial=unique,
        bumped_sums_hold=bumped,
        central_count_matches=central_ok,
        pairing_jumps_match=jumps_ok,
        reversal_is_good=reversal_ok,
        count=result.count,
        central_moves=central,
    )


def s3_rows(bound: int = 20) -> list[S3Row]:
    return [s3_row(q) for q in enumerate_quadruples(bound)]


# -- emission ---------------------------------------------------------------


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ";".join(str(x) for x in value)
    return str(value)


def rows_to_csv(rows: Sequence) -> str:
    """CSV with one row per survey/s3 row, tuple columns joined by ';'."""
    if not rows:
        return ""
    objs = [r.to_obj() for r in rows]
    buf = io.StringIO()
    writer = csv.writer(buf)
    header = list(objs[0].keys())
    writer.writerow(header)
    for obj in objs:
        writer.writerow([_csv_cell(obj[k]) for k in header])
    return buf.getvalue()


def report_to_csv(report: AnalysisReport) -> str:
    obj = report.to_obj()
    obj.pop("sequences", None)
    obj["good_initials"] = [" ".join(str(x) for x in v) for v in obj["good_initials"]]
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(list(obj.keys()))
    writer.writerow([_csv_cell(v) for v in obj.values()])
    return buf.getvalue()
