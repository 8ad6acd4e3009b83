"""Immutable simple digraphs over AS numbers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

MAX_ASN = 4294967295

AsNumber = int
Arc = tuple[int, int]


class GraphError(ValueError):
    """Invalid digraph construction or matrix input."""


class DomainError(ValueError):
    """An operation was called on a vertex outside its domain."""


class InvariantError(RuntimeError):
    """An internal consistency check failed."""


def check_asn(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphError(f"AS number must be an integer, got {value!r}")
    if not 1 <= value <= MAX_ASN:
        raise GraphError(f"AS number out of range: {value}")
    return value


@dataclass(frozen=True)
class Digraph:
    vertices: frozenset
    arcs: frozenset

    def __post_init__(self):
        for v in self.vertices:
            check_asn(v)
        for tail, head in self.arcs:
            if tail == head:
                raise GraphError(f"self-loop at AS{tail}")
            if tail not in self.vertices or head not in self.vertices:
                raise GraphError(f"arc ({tail}, {head}) has an endpoint outside the vertex set")

    @classmethod
    def build(cls, vertices: Iterable[int] = (), arcs: Iterable[Arc] = ()) -> "Digraph":
        arcs = frozenset((int(a), int(b)) for a, b in arcs)
        for a, b in arcs:
            if a == b:
                raise GraphError(f"self-loop at AS{a}")
        verts = set(vertices)
        for a, b in arcs:
            verts.add(a)
            verts.add(b)
        return cls(frozenset(verts), arcs)

    @classmethod
    def empty(cls, vertices: Iterable[int] = ()) -> "Digraph":
        return cls(frozenset(vertices), frozenset())

    @cached_property
    def successors(self) -> dict:
        """Vertex -> ascending tuple of heads."""
        succ = {v: [] for v in self.vertices}
        for a, b in self.arcs:
            succ[a].append(b)
        return {v: tuple(sorted(hs)) for v, hs in succ.items()}

    @cached_property
    def predecessors(self) -> dict:
        pred = {v: [] for v in self.vertices}
        for a, b in self.arcs:
            pred[b].append(a)
        return {v: tuple(sorted(ts)) for v, ts in pred.items()}

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)

    def sorted_arcs(self) -> list:
        return sorted(self.arcs)

    def out_degree(self, v: int) -> int:
        return len(self.successors[v])

    def in_degree(self, v: int) -> int:
        return len(self.predecessors[v])

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"Digraph(V={self.sorted_vertices()}, A={self.sorted_arcs()})"


@dataclass(frozen=True)
class AnnouncementDigraph:
    """Permitted propagation of one origin's advertisement."""

    origin: int
    graph: Digraph

    def __post_init__(self):
        if self.origin not in self.graph.vertices:
            raise GraphError(f"origin AS{self.origin} is not a vertex of its digraph")


def build(vertices: Iterable[int] = (), arcs: Iterable[Arc] = ()) -> Digraph:
    return Digraph.build(vertices, arcs)


def converse(g: Digraph) -> Digraph:
    return Digraph(g.vertices, frozenset((b, a) for a, b in g.arcs))


def union(*graphs: Digraph) -> Digraph:
    verts: set = set()
    arcs: set = set()
    for g in graphs:
        verts |= g.vertices
        arcs |= g.arcs
    return Digraph(frozenset(verts), frozenset(arcs))


def _require_vertex(g: Digraph, v: int) -> None:
    if v not in g.vertices:
        raise DomainError(f"AS{v} is not a vertex")


def reachable_from(g: Digraph, v: int) -> set:
    _require_vertex(g, v)
    seen = {v}
    queue = deque([v])
    succ = g.successors
    while queue:
        u = queue.popleft()
        for w in succ[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def distances_from(g: Digraph, v: int) -> dict:
    """BFS hop counts from ``v`` to every vertex it reaches."""
    _require_vertex(g, v)
    dist = {v: 0}
    queue = deque([v])
    succ = g.successors
    while queue:
        u = queue.popleft()
        for w in succ[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_arborescence(g: Digraph, root: int) -> bool:
    _require_vertex(g, root)
    if g.in_degree(root) != 0:
        return False
    if any(g.in_degree(v) != 1 for v in g.vertices if v != root):
        return False
    return reachable_from(g, root) == set(g.vertices)


def to_adjacency_matrix(g: Digraph) -> tuple[list, list]:
    """Rows index arc tails, columns arc heads, vertices ascending."""
    order = g.sorted_vertices()
    index = {v: i for i, v in enumerate(order)}
    matrix = [[0] * len(order) for _ in order]
    for a, b in g.arcs:
        matrix[index[a]][index[b]] = 1
    return order, matrix


def from_adjacency_matrix(vertices: Sequence[int], matrix: Sequence[Sequence[int]]) -> Digraph:
    n = len(vertices)
    if len(set(vertices)) != n:
        raise GraphError("duplicate vertex in matrix header")
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise GraphError(f"dimension mismatch: {n} vertices but matrix is not {n}x{n}")
    arcs = []
    for r, row in enumerate(matrix):
        for c, cell in enumerate(row):
            if cell not in (0, 1) or isinstance(cell, bool):
                raise GraphError(f"bad entry {cell!r} at row {r + 1}, column {c + 1}")
            if cell == 1:
                if r == c:
                    raise GraphError(f"nonzero diagonal at AS{vertices[r]}")
                arcs.append((vertices[r], vertices[c]))
    return Digraph.build(vertices, arcs)


def to_dot(g: Digraph, highlight: Optional[int] = None, name: str = "G") -> str:
    lines = [f'digraph "{name}" {{']
    for v in g.sorted_vertices():
        attrs = f'label="AS{v}"'
        if v == highlight:
            attrs += ", style=filled, fillcolor=gray80, penwidth=2"
        lines.append(f"  {v} [{attrs}];")
    for a, b in g.sorted_arcs():
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
