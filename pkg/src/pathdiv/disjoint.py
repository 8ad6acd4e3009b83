"""Arc-disjoint and internally-disjoint path counts between two ASes.

Counts come from a unit-capacity max-flow with BFS (shortest) augmenting
paths, so one pair costs O(k * (V + A)) for a result of k.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Mapping, Sequence

from .graph import AnnouncementDigraph, Digraph, DomainError, converse

BRUTE_FORCE_ARC_LIMIT = 20


class CapacityError(ValueError):
    """Input too large for the exhaustive oracle."""


@dataclass(frozen=True)
class PathSet:
    source: int
    target: int
    paths: tuple

    def __len__(self):
        return len(self.paths)

    def arcs(self) -> list:
        return [set(zip(p, p[1:])) for p in self.paths]


def destination_digraph(a: AnnouncementDigraph) -> AnnouncementDigraph:
    return AnnouncementDigraph(a.origin, converse(a.graph))


def _check_pair(g: Digraph, s: int, t: int) -> None:
    for v in (s, t):
        if v not in g.vertices:
            raise DomainError(f"AS{v} is not a vertex")
    if s == t:
        raise DomainError(f"source and target are both AS{s}")


def unit_max_flow(succ: Mapping[Hashable, Sequence], s, t) -> set:
    """Max-flow on a network where every arc has capacity 1.

    ``succ`` maps each node to its heads in the order BFS should try them.
    Returns the set of saturated arcs.
    """
    pred: dict = {}
    for u, heads in succ.items():
        for v in heads:
            pred.setdefault(v, []).append(u)
    flow: set = set()
    while True:
        # Residual u->v exists for an unused arc (u, v) or a used arc (v, u).
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for v in succ.get(u, ()):
                if v not in parent and (u, v) not in flow:
                    parent[v] = (u, True)
                    queue.append(v)
            for v in pred.get(u, ()):
                if v not in parent and (v, u) in flow:
                    parent[v] = (u, False)
                    queue.append(v)
        if t not in parent:
            return flow
        v = t
        while parent[v] is not None:
            u, forward = parent[v]
            if forward:
                flow.add((u, v))
            else:
                flow.discard((v, u))
            v = u


def _arc_flow(g: Digraph, s: int, t: int) -> set:
    return unit_max_flow(g.successors, s, t)


def adp(g: Digraph, s: int, t: int) -> int:
    _check_pair(g, s, t)
    flow = _arc_flow(g, s, t)
    return sum(1 for a, _ in flow if a == s) - sum(1 for _, b in flow if b == s)


def _split(g: Digraph, s: int, t: int) -> dict:
    # v becomes (v, 0) -> (v, 1); s and t stay whole as (v, 0).
    def tail(v):
        return (v, 0) if v in (s, t) else (v, 1)

    succ: dict = {}
    for v in g.sorted_vertices():
        if v not in (s, t):
            succ.setdefault((v, 0), []).append((v, 1))
    for a, b in g.sorted_arcs():
        succ.setdefault(tail(a), []).append((b, 0))
    return succ


def idp(g: Digraph, s: int, t: int) -> int:
    _check_pair(g, s, t)
    flow = unit_max_flow(_split(g, s, t), (s, 0), (t, 0))
    src = (s, 0)
    return sum(1 for a, _ in flow if a == src) - sum(1 for _, b in flow if b == src)


def extract_paths(g: Digraph, s: int, t: int) -> PathSet:
    """Decompose a maximum flow into arc-disjoint simple s->t paths.

    The walk always takes the lowest-numbered unused flow arc; flow cycles
    met on the way are cancelled.
    """
    _check_pair(g, s, t)
    flow = _arc_flow(g, s, t)
    out: dict = {}
    for a, b in flow:
        out.setdefault(a, set()).add(b)
    paths = []
    while out.get(s):
        path = [s]
        where = {s: 0}
        while path[-1] != t:
            u = path[-1]
            v = min(out[u])
            out[u].discard(v)
            if v in where:
                # cancel the cycle v -> ... -> u -> v
                for x in path[where[v] + 1:]:
                    del where[x]
                del path[where[v] + 1:]
            else:
                where[v] = len(path)
                path.append(v)
        paths.append(tuple(path))
    return PathSet(s, t, tuple(sorted(paths)))


def _connected(succ: Sequence[Sequence[tuple[int, int]]], s: int, t: int, removed: set) -> bool:
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        for idx, v in succ[u]:
            if idx in removed or v in seen:
                continue
            if v == t:
                return True
            seen.add(v)
            stack.append(v)
    return False


def brute_force_adp(g: Digraph, s: int, t: int) -> int:
    """Minimum s-t arc cut found by trying every arc subset, smallest first."""
    _check_pair(g, s, t)
    if len(g.arcs) > BRUTE_FORCE_ARC_LIMIT:
        raise CapacityError(
            f"{len(g.arcs)} arcs exceeds the exhaustive search limit of {BRUTE_FORCE_ARC_LIMIT}"
        )
    arcs = g.sorted_arcs()
    order = {v: i for i, v in enumerate(g.sorted_vertices())}
    succ: list = [[] for _ in order]
    for idx, (a, b) in enumerate(arcs):
        succ[order[a]].append((idx, order[b]))
    si, ti = order[s], order[t]
    for k in range(len(arcs) + 1):
        for cut in combinations(range(len(arcs)), k):
            if not _connected(succ, si, ti, set(cut)):
                return k
    raise AssertionError("removing every arc must disconnect distinct vertices")
