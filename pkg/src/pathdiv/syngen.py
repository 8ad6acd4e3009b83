"""Synthetic customer/provider/peer topologies with valley-free routing.

Generation algorithm (all draws are ``random.Random(seed).random()``, in
this order):

1. ASes are numbered 1..as_count; lower numbers sit higher in the
   hierarchy, AS1 is the single top-tier AS.
2. For i = 2..as_count: one draw picks a primary provider
   ``1 + floor(r * (i - 1))``; then for each j < i (ascending, skipping the
   primary) one draw adds j as an extra provider when ``r < provider_ratio``.
3. For each pair i < j (lexicographic) with no customer/provider link, one
   draw adds a peer link when ``r < peer_probability``.

Policies: every link is declared as an export and an import in both
directions. The rule format has no per-destination scope, and valley-free
export always offers at least the AS's own and customer routes across
every link, so all adjacencies carry announcements in both directions.

Routes: each AS's own prefix is propagated under Gao-Rexford preferences
(customer > peer > provider route, then shortest path, then lowest next-hop
AS) and every other AS records its selected AS_PATH.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from typing import Optional

CUSTOMER_TO_PROVIDER = "c2p"
PROVIDER_TO_CUSTOMER = "p2c"
PEER = "p2p"


@dataclass(frozen=True)
class SynConfig:
    as_count: int = 45
    provider_ratio: float = 0.1
    peer_probability: float = 0.05
    seed: int = 0

    def __post_init__(self):
        if self.as_count < 2:
            raise ValueError(f"as_count must be at least 2, got {self.as_count}")
        if not 0 < self.provider_ratio < 1:
            raise ValueError(f"provider_ratio must lie in (0, 1), got {self.provider_ratio}")
        if not 0 <= self.peer_probability < 1:
            raise ValueError(f"peer_probability must lie in [0, 1), got {self.peer_probability}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass
class Topology:
    asns: list
    providers: dict = field(default_factory=dict)
    peers: dict = field(default_factory=dict)

    def customers(self, asn: int) -> list:
        return sorted(c for c, ps in self.providers.items() if asn in ps)

    def relationship(self, a: int, b: int) -> Optional[str]:
        """How ``a`` relates to ``b``; None when they are not linked."""
        if b in self.providers[a]:
            return CUSTOMER_TO_PROVIDER
        if a in self.providers[b]:
            return PROVIDER_TO_CUSTOMER
        if b in self.peers[a]:
            return PEER
        return None

    def neighbors(self, asn: int) -> list:
        return sorted(set(self.providers[asn]) | set(self.customers(asn)) | self.peers[asn])


def build_topology(cfg: SynConfig) -> Topology:
    rng = random.Random(cfg.seed)
    asns = list(range(1, cfg.as_count + 1))
    providers: dict = {1: set()}
    for i in asns[1:]:
        primary = 1 + int(rng.random() * (i - 1))
        chosen = {primary}
        for j in range(1, i):
            if j != primary and rng.random() < cfg.provider_ratio:
                chosen.add(j)
        providers[i] = chosen
    peers: dict = {a: set() for a in asns}
    for i in asns:
        for j in asns[i:]:
            if j in providers[i] or i in providers[j]:
                continue
            if rng.random() < cfg.peer_probability:
                peers[i].add(j)
                peers[j].add(i)
    return Topology(asns, providers, peers)


def select_routes(topo: Topology, origin: int) -> dict:
    """Each AS's chosen path towards ``origin`` (itself first, origin last)."""
    customers = {a: topo.customers(a) for a in topo.asns}
    best = {origin: (origin,)}

    # customer routes climb the hierarchy level by level
    frontier = [origin]
    while frontier:
        offers: dict = {}
        for x in frontier:
            for p in sorted(topo.providers[x]):
                if p not in best and p not in offers:
                    offers[p] = (p,) + best[x]
        best.update(offers)
        frontier = sorted(offers)

    # peer routes: only customer routes are offered to peers
    offers = {}
    for y in topo.asns:
        if y in best:
            continue
        heard = [(len(best[x]), x) for x in topo.peers[y] if x in best]
        if heard:
            _, x = min(heard)
            offers[y] = (y,) + best[x]
    best.update(offers)

    # provider routes flow down to customers, shortest first
    heap = [(len(best[p]) + 1, p, c) for p in best for c in customers[p] if c not in best]
    heapq.heapify(heap)
    while heap:
        _, p, c = heapq.heappop(heap)
        if c in best:
            continue
        best[c] = (c,) + best[p]
        for cc in customers[c]:
            if cc not in best:
                heapq.heappush(heap, (len(best[c]) + 1, c, cc))
    return best


def policy_text(topo: Topology) -> str:
    lines = []
    for a in topo.asns:
        for b in topo.neighbors(a):
            lines.append(f"{a} import {b}\n")
            lines.append(f"{a} export {b}\n")
    return "".join(lines)


def routes_text(topo: Topology) -> str:
    lines = []
    for origin in topo.asns:
        best = select_routes(topo, origin)
        for collector in topo.asns:
            if collector != origin and collector in best:
                lines.append(" ".join(map(str, best[collector])) + "\n")
    return "".join(lines)


def roster_text(topo: Topology) -> str:
    return "".join(f"{a}\n" for a in topo.asns)


def generate(cfg: SynConfig) -> tuple[str, str, str]:
    """(roster, policies, routes) file contents for ``cfg``."""
    topo = build_topology(cfg)
    return roster_text(topo), policy_text(topo), routes_text(topo)
