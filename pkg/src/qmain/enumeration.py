"""Exhaustive generation of small connected graphs, and the harness that
cross-checks the two-main characterization against every tricyclic graph of a
given order.

Generation is level-by-level: the trees on n vertices are grown by leaf
attachment, then each edge level (n, m) -> (n, m+1) is produced by adding one
edge to every graph of the previous level and deduplicating by canonical form.
Every connected graph with m >= n contains a cycle edge whose removal keeps it
connected, so induction from the tree level reaches every isomorphism class
exactly once.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from . import families
from .criterion import UNIQUE, solve_ab
from .graph_core import (
    Graph,
    GraphError,
    base,
    canonical_graph,
    graph6_decode,
    graph6_encode,
)
from .spectral import exact_main_count
from .structure import classify_base, two_main_checklist

_DEFAULT_GUARD_N = 12

# (n, m) -> sorted tuple of canonically labeled graph6 strings.  Levels are
# expensive to produce and cheap to keep; they are shared by every caller in
# the process.
_LEVELS: dict[tuple[int, int], tuple[str, ...]] = {}


def _guard_n() -> int:
    raw = os.environ.get("QMAIN_GUARD_N")
    if raw is None:
        return _DEFAULT_GUARD_N
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"QMAIN_GUARD_N must be an integer, got {raw!r}") from None


def _canon_g6(g: Graph) -> str:
    return graph6_encode(canonical_graph(g))


# ---------------------------------------------------------------------------
# level generation
# ---------------------------------------------------------------------------


def _tree_level(n: int) -> tuple[str, ...]:
    key = (n, n - 1)
    cached = _LEVELS.get(key)
    if cached is not None:
        return cached
    if n == 1:
        level = (graph6_encode(Graph(1, [0])),)
    else:
        seen: set[str] = set()
        for g6 in _tree_level(n - 1):
            parent = graph6_decode(g6)
            edges = list(parent.edges())
            for v in range(parent.n):
                seen.add(_canon_g6(Graph.from_edges(n, edges + [(v, n - 1)])))
        level = tuple(sorted(seen))
    _LEVELS[key] = level
    return level


def _augment_shard(parent_g6s) -> set[str]:
    """All one-edge extensions of the given parents, as canonical graph6."""
    out: set[str] = set()
    for g6 in parent_g6s:
        parent = graph6_decode(g6)
        for u in range(parent.n):
            for v in range(u + 1, parent.n):
                if not parent.has_edge(u, v):
                    out.add(_canon_g6(parent.with_edge(u, v)))
    return out


def _edge_level(n: int, m: int, jobs: int) -> tuple[str, ...]:
    if m == n - 1:
        return _tree_level(n)
    key = (n, m)
    cached = _LEVELS.get(key)
    if cached is not None:
        return cached
    parents = _edge_level(n, m - 1, jobs)
    if jobs <= 1 or len(parents) < 2 * jobs:
        merged = _augment_shard(parents)
    else:
        chunk = (len(parents) + jobs - 1) // jobs
        shards = [parents[i : i + chunk] for i in range(0, len(parents), chunk)]
        merged = set()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_augment_shard, shards):
                merged |= part
    level = tuple(sorted(merged))
    _LEVELS[key] = level
    return level


def enumerate_connected(
    n: int, m: int, *, jobs: int = 1, force: bool = False
) -> Iterator[Graph]:
    """One representative per isomorphism class of connected (n, m)-graphs.

    Orders above the guard (QMAIN_GUARD_N, default 12) are refused unless
    `force` is set.  `jobs` > 1 shards the edge-augmentation work across
    processes; the output set is identical for every job count.
    """
    if n < 1 or n > 64:
        raise GraphError(f"order {n} out of range 1..64")
    cap = n * (n - 1) // 2
    if m < 0 or m > cap:
        raise GraphError(f"size {m} out of range 0..{cap} for order {n}")
    if jobs < 1:
        raise GraphError("jobs must be >= 1")
    guard = _guard_n()
    if n > guard and not force:
        raise GraphError(
            f"order {n} exceeds the enumeration guard {guard}; "
            "raise QMAIN_GUARD_N or force"
        )
    if m < n - 1:
        return iter(())
    return (graph6_decode(s) for s in _edge_level(n, m, jobs))


def enumerate_tricyclic(n: int, *, jobs: int = 1, force: bool = False) -> Iterator[Graph]:
    """Connected graphs with cyclomatic number 3: exactly m = n + 2 edges."""
    if n < 4:
        raise GraphError("tricyclic graphs need n >= 4")
    return enumerate_connected(n, n + 2, jobs=jobs, force=force)


# ---------------------------------------------------------------------------
# verification harness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PositiveCheck:
    """Cross-check record for one criterion-positive tricyclic graph."""

    graph6: str
    a: object  # int when the solution is integral, str(Fraction) otherwise
    b: object
    main_count: int
    family_id: Optional[str]
    shape_id: Optional[str]
    checklist_ok: bool


@dataclass(frozen=True)
class EnumerationReport:
    """Outcome of checking one order n against the characterization.

    Failure tuples carry graph6 strings; the report is clean iff all three
    are empty.
    """

    n: int
    visited: int
    tricyclic_count: int
    positive_count: int
    positives: tuple[str, ...]
    checks: tuple[PositiveCheck, ...]
    equivalence_failures: tuple[str, ...]
    completeness_failures: tuple[str, ...]
    structure_failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not (
            self.equivalence_failures
            or self.completeness_failures
            or self.structure_failures
        )

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "connected_visited": self.visited,
            "tricyclic": self.tricyclic_count,
            "positives": self.positive_count,
            "positive_graph6": list(self.positives),
            "checks": [
                {
                    "graph6": c.graph6,
                    "a": c.a,
                    "b": c.b,
                    "main_count": c.main_count,
                    "family": c.family_id,
                    "base_shape": c.shape_id,
                    "checklist_ok": c.checklist_ok,
                }
                for c in self.checks
            ],
            "equivalence_failures": list(self.equivalence_failures),
            "completeness_failures": list(self.completeness_failures),
            "structure_failures": list(self.structure_failures),
            "ok": self.ok,
        }


def _verify_order(n: int, *, jobs: int, force: bool) -> EnumerationReport:
    tricyclic = list(enumerate_tricyclic(n, jobs=jobs, force=force))
    visited = sum(len(_LEVELS.get((n, m), ())) for m in range(n - 1, n + 3))

    equivalence_bad: list[str] = []
    structure_bad: list[str] = []
    records: dict[str, PositiveCheck] = {}

    for g in tricyclic:
        sol = solve_ab(g)
        criterion_positive = sol.kind == UNIQUE
        mc = exact_main_count(g)
        if criterion_positive != (mc == 2):
            equivalence_bad.append(graph6_encode(g))
        if not criterion_positive or mc != 2:
            continue
        g6 = graph6_encode(g)  # level graphs are already canonically labeled
        a = int(sol.a) if sol.integral else str(sol.a)
        b = int(sol.b) if sol.integral else str(sol.b)
        core, _ = base(g)
        try:
            shape_id: Optional[str] = classify_base(core).shape_id
        except GraphError:
            shape_id = None
        checklist = two_main_checklist(
            g, int(sol.a) if sol.integral else sol.a, int(sol.b) if sol.integral else sol.b
        )
        checklist_ok = all(checklist.values())
        if shape_id is None or not checklist_ok:
            structure_bad.append(g6)
        match = families.match_family(g)
        records[g6] = PositiveCheck(
            graph6=g6,
            a=a,
            b=b,
            main_count=mc,
            family_id=match.id if match is not None else None,
            shape_id=shape_id,
            checklist_ok=checklist_ok,
        )

    expected = {
        _canon_g6(instance) for _, instance in families.enumerate_family_instances(n)
    }
    positives = tuple(sorted(records))
    completeness_bad = tuple(sorted(expected.symmetric_difference(positives)))

    return EnumerationReport(
        n=n,
        visited=visited,
        tricyclic_count=len(tricyclic),
        positive_count=len(positives),
        positives=positives,
        checks=tuple(records[g6] for g6 in positives),
        equivalence_failures=tuple(equivalence_bad),
        completeness_failures=completeness_bad,
        structure_failures=tuple(structure_bad),
    )


def verify_characterization(
    n_max: int, *, jobs: int = 1, force: bool = False
) -> list[EnumerationReport]:
    """Check, for every 4 <= n <= n_max, that the degree criterion agrees with
    the exact main-eigenvalue count on all tricyclic graphs of order n and that
    the criterion-positive graphs are exactly the realized family instances."""
    if n_max < 4:
        raise GraphError("n_max must be at least 4")
    return [_verify_order(n, jobs=jobs, force=force) for n in range(4, n_max + 1)]
