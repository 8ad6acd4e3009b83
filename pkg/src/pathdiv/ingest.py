"""Parsers for the roster, route, policy and trace files, and their
conversion into per-origin announcement digraphs.

All four formats are line oriented: ``#`` starts a comment line and blank
lines are skipped.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .graph import MAX_ASN, AnnouncementDigraph, Digraph, reachable_from, union

log = logging.getLogger(__name__)

IMPORT = "import"
EXPORT = "export"


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class Roster:
    members: frozenset

    def __post_init__(self):
        if len(self.members) < 2:
            raise ValueError(f"roster needs at least 2 ASes, got {len(self.members)}")

    def sorted(self) -> list:
        return sorted(self.members)

    def __contains__(self, asn):
        return asn in self.members

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class RouteRecord:
    """An AS_PATH: collector side first, origin last."""

    path: tuple

    @property
    def origin(self) -> int:
        return self.path[-1]


@dataclass(frozen=True)
class TraceRecord:
    """AS hops of a trace: monitor first, destination last."""

    hops: tuple

    @property
    def destination(self) -> int:
        return self.hops[-1]


@dataclass(frozen=True)
class PolicyRule:
    subject: int
    kind: str
    peer: int

    def __post_init__(self):
        if self.kind not in (IMPORT, EXPORT):
            raise ValueError(f"unknown policy kind {self.kind!r}")
        if self.subject == self.peer:
            raise ValueError(f"AS{self.subject} cannot hold a policy towards itself")


class Records(list):
    """Parsed path records plus the number of looped lines that were dropped."""

    def __init__(self, items=(), dropped: int = 0):
        super().__init__(items)
        self.dropped = dropped


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, line


def _asn(token: str, lineno: int, column: int | None = None) -> int:
    if not token.isdigit():
        raise ParseError(f"not an AS number: {token!r}", lineno, column)
    value = int(token)
    if not 1 <= value <= MAX_ASN:
        raise ParseError(f"AS number out of range: {value}", lineno, column)
    return value


def _tokens(line: str) -> Iterator[tuple[int, str]]:
    """Yield (1-based column, token) for each whitespace separated token."""
    for m in re.finditer(r"\S+", line):
        yield m.start() + 1, m.group()


def collapse_prepending(path: Iterable[int]) -> tuple:
    out: list = []
    for asn in path:
        if not out or out[-1] != asn:
            out.append(asn)
    return tuple(out)


def parse_roster(text: str) -> Roster:
    members = set()
    for lineno, line in _lines(text):
        members.add(_asn(line.strip(), lineno))
    if len(members) < 2:
        raise ValueError(f"roster needs at least 2 ASes, got {len(members)}")
    return Roster(frozenset(members))


def _parse_paths(text: str, kind: str) -> tuple[list, int]:
    paths = []
    dropped = 0
    for lineno, line in _lines(text):
        path = collapse_prepending(_asn(tok, lineno, col) for col, tok in _tokens(line))
        if len(set(path)) != len(path):
            dropped += 1
            log.warning("line %d: dropping looped %s %s", lineno, kind, " ".join(map(str, path)))
            continue
        paths.append(path)
    return paths, dropped


def parse_routes(text: str) -> Records:
    paths, dropped = _parse_paths(text, "AS_PATH")
    return Records((RouteRecord(p) for p in paths), dropped)


def parse_traces(text: str) -> Records:
    paths, dropped = _parse_paths(text, "trace")
    return Records((TraceRecord(p) for p in paths), dropped)


def parse_policies(text: str) -> list:
    rules = []
    for lineno, line in _lines(text):
        fields = line.split()
        if len(fields) != 3:
            raise ParseError("expected '<as> import|export <as>'", lineno)
        subject, kind, peer = fields
        if kind not in (IMPORT, EXPORT):
            raise ParseError(f"unknown keyword {kind!r}", lineno)
        subject, peer = _asn(subject, lineno), _asn(peer, lineno)
        if subject == peer:
            raise ParseError(f"AS{subject} declares a policy towards itself", lineno)
        rules.append(PolicyRule(subject, kind, peer))
    return rules


def format_routes(records: Iterable[RouteRecord]) -> str:
    return "".join(" ".join(map(str, r.path)) + "\n" for r in records)


def format_traces(records: Iterable[TraceRecord]) -> str:
    return "".join(" ".join(map(str, r.hops)) + "\n" for r in records)


def format_policies(rules: Iterable[PolicyRule]) -> str:
    return "".join(f"{r.subject} {r.kind} {r.peer}\n" for r in rules)


def format_roster(roster: Roster) -> str:
    return "".join(f"{asn}\n" for asn in roster.sorted())


def _empty_map(roster: Roster) -> dict:
    return {o: set() for o in roster.sorted()}


def _to_digraphs(arcs_by_origin: Mapping[int, set], roster: Roster) -> dict:
    return {
        o: AnnouncementDigraph(o, Digraph.build(roster.members, arcs))
        for o, arcs in arcs_by_origin.items()
    }


def _propagation_arcs(path_origin_last: tuple, roster: Roster) -> Iterator[tuple[int, int]]:
    # Reversed: the origin announces first. Only roster-contiguous pairs count.
    order = path_origin_last[::-1]
    for u, v in zip(order, order[1:]):
        if u in roster.members and v in roster.members:
            yield u, v


def routes_to_digraphs(records: Iterable[RouteRecord], roster: Roster) -> dict:
    arcs = _empty_map(roster)
    for rec in records:
        if rec.origin in roster.members:
            arcs[rec.origin].update(_propagation_arcs(rec.path, roster))
    return _to_digraphs(arcs, roster)


def traces_to_digraphs(records: Iterable[TraceRecord], roster: Roster) -> dict:
    arcs = _empty_map(roster)
    for rec in records:
        if rec.destination in roster.members:
            arcs[rec.destination].update(_propagation_arcs(rec.hops, roster))
    return _to_digraphs(arcs, roster)


def policy_arcs(rules: Iterable[PolicyRule], roster: Roster) -> set:
    """Arcs a->b where a exports to b and b imports from a, both on the roster."""
    declared = {(r.subject, r.kind, r.peer) for r in rules}
    return {
        (a, b)
        for a, kind, b in declared
        if kind == EXPORT
        and a in roster.members
        and b in roster.members
        and (b, IMPORT, a) in declared
    }


def policies_to_digraphs(rules: Iterable[PolicyRule], roster: Roster) -> dict:
    permitted = Digraph.build(roster.members, policy_arcs(rules, roster))
    out = {}
    for o in roster.sorted():
        reach = reachable_from(permitted, o)
        arcs = {(u, v) for u, v in permitted.arcs if u in reach}
        out[o] = AnnouncementDigraph(o, Digraph.build(roster.members, arcs))
    return out


def merge_sources(maps: Iterable[Mapping[int, AnnouncementDigraph]]) -> dict:
    maps = list(maps)
    origins = sorted(set().union(*(m.keys() for m in maps)))
    merged = {}
    for o in origins:
        graphs = [m[o].graph for m in maps if o in m]
        merged[o] = AnnouncementDigraph(o, union(*graphs))
    return merged
