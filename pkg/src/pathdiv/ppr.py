"""Preferred-Paths-Rule: collapse an announcement digraph to the single-path
tree BGP actually uses.

Each AS keeps one route: the shortest AS path, ties going to the neighbour
with the lowest AS number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import AnnouncementDigraph, Digraph, InvariantError, distances_from, is_arborescence


@dataclass(frozen=True)
class BgpDigraph:
    origin: int
    graph: Digraph
    unreached: frozenset

    def parent(self, v: int):
        preds = self.graph.predecessors[v]
        return preds[0] if preds else None

    def path_to(self, v: int) -> tuple:
        """Origin -> v along the tree."""
        path = [v]
        while path[-1] != self.origin:
            path.append(self.parent(path[-1]))
        return tuple(reversed(path))


def select_bgp_digraph(a: AnnouncementDigraph) -> BgpDigraph:
    g = a.graph
    dist = distances_from(g, a.origin)
    arcs = []
    for v, d in dist.items():
        if v == a.origin:
            continue
        # predecessors are ascending, so the first at distance d-1 wins the tie
        parent = next(p for p in g.predecessors[v] if dist.get(p) == d - 1)
        arcs.append((parent, v))
    tree = Digraph(frozenset(dist), frozenset(arcs))
    return BgpDigraph(a.origin, tree, frozenset(g.vertices - dist.keys()))


def verify_single_path(b: BgpDigraph) -> bool:
    """Enumerate origin-rooted simple paths; every vertex must be hit exactly once."""
    g = b.graph
    if b.origin not in g.vertices:
        return False
    hits = {b.origin: 1}
    stack = [(b.origin, frozenset([b.origin]))]
    while stack:
        u, on_path = stack.pop()
        for v in g.successors[u]:
            if v in on_path:
                continue
            hits[v] = hits.get(v, 0) + 1
            if hits[v] > 1:
                return False
            stack.append((v, on_path | {v}))
    # an arc back into the origin would give it a second, closed path
    return g.in_degree(b.origin) == 0 and hits.keys() == g.vertices


def check_invariants(b: BgpDigraph) -> None:
    if not is_arborescence(b.graph, b.origin):
        raise InvariantError(f"PPR output for AS{b.origin} is not an arborescence")
