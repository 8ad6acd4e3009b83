"""Roster-wide adp matrix, per-origin statistics, histogram and CSV output."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from . import disjoint
from .graph import AnnouncementDigraph, Digraph, DomainError, converse, to_adjacency_matrix


@dataclass(frozen=True)
class AdpMatrix:
    """entries[(source, origin)]: disjoint paths ``source`` can use to reach ``origin``."""

    roster: tuple
    entries: Mapping

    def column(self, origin: int) -> list:
        return [self.entries[(j, origin)] for j in self.roster if j != origin]

    def pair_count(self) -> int:
        n = len(self.roster)
        return n * (n - 1)


@dataclass(frozen=True)
class DiversityStats:
    origin: int
    avg: Fraction
    min: int
    max: int


@dataclass(frozen=True)
class Histogram:
    counts: Mapping

    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, k: int) -> int:
        return self.counts.get(k, 0)


METRICS: dict = {"adp": disjoint.adp, "idp": disjoint.idp}


def _origin_column(args) -> list:
    origin, graph, roster, metric = args
    dest = converse(graph)
    fn = METRICS[metric]
    return [((j, origin), fn(dest, j, origin)) for j in roster if j != origin]


def compute_adp_matrix(
    digraphs: Mapping[int, AnnouncementDigraph],
    workers: Optional[int] = None,
    metric: str = "adp",
) -> AdpMatrix:
    """Entry (j, i) counts paths from j to i in the destination digraph of i.

    ``workers`` > 1 fans origins out over processes; the result does not
    depend on it.
    """
    roster = tuple(sorted(digraphs))
    for origin, a in digraphs.items():
        if a.origin != origin:
            raise DomainError(f"digraph keyed AS{origin} has origin AS{a.origin}")
        missing = set(roster) - a.graph.vertices
        if missing:
            raise DomainError(
                f"digraph of AS{origin} lacks roster members {sorted(missing)}"
            )
    jobs = [(o, digraphs[o].graph, roster, metric) for o in roster]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            columns = list(pool.map(_origin_column, jobs))
    else:
        columns = [_origin_column(job) for job in jobs]
    entries = {}
    for col in columns:
        entries.update(col)
    return AdpMatrix(roster, dict(sorted(entries.items())))


def compute_stats(m: AdpMatrix, origin: int) -> DiversityStats:
    if origin not in m.roster:
        raise DomainError(f"AS{origin} is not on the roster")
    values = m.column(origin)
    # zero entries (unreachable sources) count towards the mean
    return DiversityStats(origin, Fraction(sum(values), len(values)), min(values), max(values))


def compute_all_stats(m: AdpMatrix) -> list:
    return [compute_stats(m, o) for o in m.roster]


def compute_histogram(m: AdpMatrix) -> Histogram:
    counts: dict = {}
    for value in m.entries.values():
        counts[value] = counts.get(value, 0) + 1
    return Histogram(dict(sorted(counts.items())))


def diversity_excess(h: Histogram) -> int:
    return sum(c for k, c in h.counts.items() if k >= 2)


def format_avg(avg) -> str:
    """Two decimals, halves rounded up."""
    if isinstance(avg, Fraction):
        hundredths = math.floor(avg * 100 + Fraction(1, 2))
        sign = "-" if hundredths < 0 else ""
        whole, frac = divmod(abs(hundredths), 100)
        return f"{sign}{whole}.{frac:02d}"
    # str() keeps the decimal literal, so 2.005 stays 2.005 rather than 2.00499...
    return str(Decimal(str(avg)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _write(rows: Iterable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def write_stats_csv(rows: Iterable[DiversityStats]) -> str:
    return _write(
        [("as", "avg", "min", "max")]
        + [(r.origin, format_avg(r.avg), r.min, r.max) for r in rows]
    )


def write_matrix_csv(m: AdpMatrix) -> str:
    rows = [[""] + list(m.roster)]
    for j in m.roster:
        rows.append([j] + ["" if j == i else m.entries[(j, i)] for i in m.roster])
    return _write(rows)


def read_matrix_csv(text: str) -> AdpMatrix:
    rows = list(csv.reader(io.StringIO(text)))
    roster = tuple(int(x) for x in rows[0][1:])
    entries = {}
    for row in rows[1:]:
        j = int(row[0])
        for i, cell in zip(roster, row[1:]):
            if i != j:
                entries[(j, i)] = int(cell)
    return AdpMatrix(roster, dict(sorted(entries.items())))


def write_histogram_csv(h: Histogram) -> str:
    rows: list = [("adp", "count")]
    if h.counts:
        lo, hi = min(h.counts), max(h.counts)
        rows += [(k, h[k]) for k in range(lo, hi + 1)]
    return _write(rows)


def write_adjacency_csv(g: Digraph) -> str:
    order, matrix = to_adjacency_matrix(g)
    return _write([[""] + order] + [[v] + row for v, row in zip(order, matrix)])

