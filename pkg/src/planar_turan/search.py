"""Exact planar Turán numbers for small ``n`` and exhaustive lemma sweeps.

The search grows graphs one edge at a time.  Planarity and H-freeness are
both closed under deleting edges, so every planar H-free graph with ``e``
edges is a planar H-free graph with ``e - 1`` edges plus one edge.  Level
``e`` is therefore the set of isomorphism classes obtained by adding one
non-edge to each class of level ``e - 1`` and keeping the planar, H-free
results.  ``ex_P(n, H)`` is the last non-empty level, and the empty level
after it is the certificate that nothing larger exists.

Classes are keyed by :func:`canonical_form`, so the levels (and with them the
value, the witness and ``graphs_examined``) do not depend on sweep order or
on how the work is split between processes.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from . import face_blocks as fb
from .embedding import ALL_EMBEDDINGS_MAX, RotationSystem, all_rotation_systems, is_planar, planarity_embed
from .graph import Graph, canonical_form, canonical_labeling, from_graph6, to_graph6
from .patterns import PatternSpec, is_free, linked, parse_pattern

SEARCH_MAX = 9
ENUMERATE_MAX = 7
STRATEGY = "edge-extension by canonical class, orbit-pruned children"


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class SearchResult:
    """Outcome of :func:`exact_ex_p`.

    When ``exact`` is false the budget ran out: ``lower`` is certified by
    ``witness`` and ``upper`` is the planar bound ``3n - 6``; ``value`` is
    ``None``.
    """

    n: int
    pattern: PatternSpec
    value: int | None
    witness: Graph
    graphs_examined: int
    elapsed: float
    strategy: str
    lower: int
    upper: int
    level_counts: tuple[int, ...]

    @property
    def exact(self) -> bool:
        return self.value is not None

    @property
    def elapsed_ms(self) -> int:
        return round(self.elapsed * 1000)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern.name,
            "value": self.value,
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
            "witness": {"graph6": to_graph6(self.witness), "edges": self.witness.m},
            "graphs_examined": self.graphs_examined,
            "level_counts": list(self.level_counts),
            "strategy": self.strategy,
            "elapsed_ms": self.elapsed_ms,
        }


# ---------------------------------------------------------------------------
# Level generation
# ---------------------------------------------------------------------------


def _orbit_reps(g: Graph) -> list[tuple[int, int]]:
    """One non-edge per orbit of the automorphisms found for ``g``."""
    _, autos = canonical_labeling(g)
    seen: set[tuple[int, int]] = set()
    reps = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) or (u, v) in seen:
                continue
            reps.append((u, v))
            stack = [(u, v)]
            seen.add((u, v))
            while stack:
                a, b = stack.pop()
                for p in autos:
                    x, y = p[a], p[b]
                    e = (x, y) if x < y else (y, x)
                    if e not in seen:
                        seen.add(e)
                        stack.append(e)
    return reps


def _expand(args: tuple[list[bytes], PatternSpec | None]) -> tuple[set[bytes], int]:
    keys, pattern = args
    found: set[bytes] = set()
    examined = 0
    rejected: set[bytes] = set()
    for key in keys:
        g = from_graph6(key.decode())
        for u, v in _orbit_reps(g):
            child = g.add_edge(u, v)
            examined += 1
            if pattern is not None and not is_free(child, pattern):
                continue
            ck = canonical_form(child)
            if ck in found or ck in rejected:
                continue
            if is_planar(child):
                found.add(ck)
            else:
                rejected.add(ck)
    return found, examined


def _chunks(keys: list[bytes], parts: int) -> list[list[bytes]]:
    size = max(1, -(-len(keys) // parts))
    return [keys[i : i + size] for i in range(0, len(keys), size)]


def _levels(
    n: int, pattern: PatternSpec | None, deadline: float | None = None, jobs: int = 1
) -> Iterator[tuple[list[bytes], int]]:
    """Yield ``(sorted keys of level e, children examined to build it)`` for
    ``e = 0, 1, ...`` up to and including the first empty level."""
    level = [canonical_form(Graph.empty(n))]
    yield level, 0
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        while level:
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded
            if pool is None:
                found, examined = _expand((level, pattern))
            else:
                found, examined = set(), 0
                for f, x in pool.map(_expand, [(c, pattern) for c in _chunks(level, jobs * 4)]):
                    found |= f
                    examined += x
            level = sorted(found)
            yield level, examined
    finally:
        if pool is not None:
            pool.shutdown()


@lru_cache(maxsize=32)
def _all_levels(n: int, pattern: PatternSpec | None) -> tuple[tuple[bytes, ...], ...]:
    return tuple(tuple(level) for level, _ in _levels(n, pattern) if level)


def _as_pattern(pattern: PatternSpec | str | None) -> PatternSpec | None:
    return parse_pattern(pattern) if isinstance(pattern, str) else pattern


def exact_ex_p(n: int, pattern: PatternSpec | str, budget: float | None = None, jobs: int = 1) -> SearchResult:
    """Maximum edge count of an ``n``-vertex planar graph with no copy of
    ``pattern``, with a witness graph.

    ``budget`` is a wall-clock limit in seconds.  If it runs out the result
    is a bracket (``exact`` false) rather than a guess.
    """
    pattern = _as_pattern(pattern)
    if not 3 <= n <= SEARCH_MAX:
        raise ValueError(f"exact_ex_p supports 3 <= n <= {SEARCH_MAX}, got {n}")
    start = time.monotonic()
    deadline = None if budget is None else start + budget
    counts: list[int] = []
    examined = 0
    best: list[bytes] = []
    exact = True
    try:
        for level, x in _levels(n, pattern, deadline, jobs):
            examined += x
            if not level:
                break
            counts.append(len(level))
            best = level
    except BudgetExceeded:
        exact = False
    witness = from_graph6(best[0].decode())
    lower = witness.m
    return SearchResult(
        n=n,
        pattern=pattern,
        value=lower if exact else None,
        witness=witness,
        graphs_examined=examined,
        elapsed=time.monotonic() - start,
        strategy=STRATEGY,
        lower=lower,
        upper=lower if exact else 3 * n - 6,
        level_counts=tuple(counts),
    )


def enumerate_free_planar(
    n: int, pattern: PatternSpec | str | None, embeddings: str = "one"
) -> Iterator[tuple[Graph, RotationSystem]]:
    """Every isomorphism class of planar ``pattern``-free graph on ``n``
    vertices (all planar graphs if ``pattern`` is ``None``), in canonical
    order, with one embedding or with every embedding up to reflection."""
    pattern = _as_pattern(pattern)
    if embeddings not in ("one", "all"):
        raise ValueError("embeddings must be 'one' or 'all'")
    limit = ALL_EMBEDDINGS_MAX - 1 if embeddings == "all" else ENUMERATE_MAX
    if not 1 <= n <= limit:
        raise ValueError(f"enumerate_free_planar ({embeddings}) supports 1 <= n <= {limit}, got {n}")
    for level in _all_levels(n, pattern):
        for key in level:
            g = from_graph6(key.decode())
            if embeddings == "one":
                yield g, planarity_embed(g)
            else:
                for rs in all_rotation_systems(g):
                    yield g, rs


def free_planar_counts(n: int, pattern: PatternSpec | str | None) -> list[int]:
    """Number of classes per edge count ``0, 1, ...``."""
    return [len(level) for level in _all_levels(n, _as_pattern(pattern))]


def default_jobs() -> int:
    env = os.environ.get("TURAN_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# Lemma harness
# ---------------------------------------------------------------------------

LEMMAS = ("global_f3", "lemma41", "partition", "rv", "face_block_c33", "face_block_c34")

# Positive excess is tolerated for blocks of these sizes, up to +3.
SPECIAL_REGIME = {"face_block_c33": (5, 6), "face_block_c34": (5, 7)}


@dataclass
class HarnessReport:
    lemma: str
    n_range: tuple[int, int]
    graphs: int = 0
    embeddings: int = 0
    checks: int = 0
    violations: list[dict] = field(default_factory=list)
    positive_excess: list[dict] = field(default_factory=list)
    isolation_issues: list[dict] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "n_range": list(self.n_range),
            "graphs": self.graphs,
            "examined": self.embeddings,
            "checks": self.checks,
            "violations": self.violations,
            "positive_excess": self.positive_excess,
            "isolation_issues": self.isolation_issues,
            "extra": self.extra,
            "passed": self.passed,
            "elapsed_ms": round(self.elapsed * 1000),
        }


def _sweep_pattern(lemma: str) -> PatternSpec | None:
    if lemma in ("partition", "rv", "face_block_c33"):
        return linked(3, 3)
    if lemma == "face_block_c34":
        return linked(3, 4)
    return None


def lemma_harness(lemma: str, n_max: int, all_embeddings_max: int = ALL_EMBEDDINGS_MAX - 1) -> HarnessReport:
    """Run one lemma check over every (graph, embedding) with ``3 <= n <= n_max``.

    Graphs with ``n <= all_embeddings_max`` are checked in every embedding
    (up to reflection); larger ones in the embedding returned by
    :func:`planarity_embed`.
    """
    if lemma not in LEMMAS:
        raise ValueError(f"unknown lemma {lemma!r}; expected one of {', '.join(LEMMAS)}")
    if not 3 <= n_max <= ENUMERATE_MAX:
        raise ValueError(f"lemma_harness supports 3 <= n_max <= {ENUMERATE_MAX}")
    pattern = _sweep_pattern(lemma)
    report = HarnessReport(lemma, (3, n_max))
    start = time.monotonic()
    for n in range(3, n_max + 1):
        mode = "all" if n <= all_embeddings_max else "one"
        last = None
        idx = 0
        for g, rs in enumerate_free_planar(n, pattern, mode):
            if g is not last:
                report.graphs += 1
                last, idx = g, 0
            else:
                idx += 1
            report.embeddings += 1
            _check(lemma, g, rs, idx, report)
    report.elapsed = time.monotonic() - start
    return report


def _violation(g: Graph, idx: int, **values) -> dict:
    return {"graph6": to_graph6(g), "embedding": idx, **values}


def _check(lemma: str, g: Graph, rs: RotationSystem, idx: int, report: HarnessReport) -> None:
    if lemma == "global_f3":
        report.checks += 1
        total = sum(fb.star_size(rs, v) for v in range(g.n))
        f3 = fb._plane(rs).f3
        if total != 3 * f3:
            report.violations.append(_violation(g, idx, star_sum=total, f3=f3))
    elif lemma == "lemma41":
        report.checks += 1
        r = fb.lemma41_check(rs)
        if not r.passed:
            report.violations.append(_violation(g, idx, m=r.m, f3=r.f3, bound=r.bound, hits_2n_minus_5=r.hits_2n_minus_5))
    elif lemma == "partition":
        for v in range(g.n):
            if fb.star_size(rs, v):
                report.checks += 1
                r = fb.partition_lemma_check(rs, v, check_free=False)
                if not r.passed:
                    report.violations.append(
                        _violation(g, idx, vertex=v, structure=str(r.structure), offenders=list(r.offenders))
                    )
    elif lemma == "rv":
        for v in range(g.n):
            if fb.star_size(rs, v):
                report.checks += 1
                r = fb.rv_lemma_check(rs, v)
                if not r.passed:
                    report.violations.append(
                        _violation(g, idx, vertex=v, block_matches=r.block_matches, rv_sum=r.rv_sum, bound=r.bound)
                    )
    else:
        family = lemma.rsplit("_", 1)[1]
        lo, hi = SPECIAL_REGIME[lemma]
        reports = fb.block_report(rs, family)
        for r in reports:
            report.checks += 1
            if r.excess <= 0:
                continue
            entry = _violation(
                g, idx, block=sorted(r.block.vertices), size=len(r.block), excess=r.excess, catalog=r.catalog_match
            )
            report.positive_excess.append(entry)
            if not (lo <= len(r.block) <= hi and r.excess <= 3):
                report.violations.append(entry)
        for issue in fb.bad_block_isolation(rs, reports):
            report.isolation_issues.append(_violation(g, idx, issue=issue))
