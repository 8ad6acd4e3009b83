"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get the PASS/FAIL summary block.
"""

import random
import time
from fractions import Fraction
from pathlib import Path

from oracles import bfs_distances, random_digraph
from pathdiv import ingest, syngen
from pathdiv.cli import main
from pathdiv.disjoint import adp, brute_force_adp
from pathdiv.graph import AnnouncementDigraph, converse, is_arborescence, union
from pathdiv.ppr import select_bgp_digraph
from pathdiv.report import (
    DiversityStats,
    compute_adp_matrix,
    compute_all_stats,
    compute_histogram,
    diversity_excess,
    write_histogram_csv,
    write_matrix_csv,
    write_stats_csv,
)

FIXTURE = Path(__file__).parent / "fixtures" / "golden5"


def pairs(g):
    vs = sorted(g.vertices)
    return [(s, t) for s in vs for t in vs if s != t]


def syngen_digraphs(cfg):
    roster_t, policy_t, routes_t = syngen.generate(cfg)
    roster = ingest.parse_roster(roster_t)
    return ingest.merge_sources([
        ingest.routes_to_digraphs(ingest.parse_routes(routes_t), roster),
        ingest.policies_to_digraphs(ingest.parse_policies(policy_t), roster),
    ])


def test_c1_menger_oracle_equivalence(criterion):
    with criterion(1, "adp == brute-force min cut on 500 digraphs (<=6 vertices, <=12 arcs), < 60 s"):
        rng = random.Random(20071129)
        start = time.perf_counter()
        mismatches, checked = [], 0
        for _ in range(500):
            g = random_digraph(rng, rng.randint(2, 6), max_arcs=12, p=rng.uniform(0.1, 0.7))
            assert len(g.vertices) <= 6 and len(g.arcs) <= 12
            for s, t in pairs(g):
                checked += 1
                if adp(g, s, t) != brute_force_adp(g, s, t):
                    mismatches.append((g, s, t))
        elapsed = time.perf_counter() - start
        assert not mismatches, mismatches[:3]
        assert checked > 500
        assert elapsed < 60, elapsed


def test_c2_converse_and_union_algebra(criterion):
    with criterion(2, "converse involution; union idempotent/commutative/associative on 1000 digraphs"):
        rng = random.Random(20071219)
        graphs = [random_digraph(rng, rng.randint(0, 8), p=rng.random()) for _ in range(1000)]
        for i, g in enumerate(graphs):
            h, k = graphs[i - 1], graphs[i - 2]
            assert converse(converse(g)) == g
            assert union(g, g) == g
            assert union(g, h) == union(h, g)
            assert union(union(g, h), k) == union(g, union(h, k))


def test_c3_ppr_structure(criterion):
    with criterion(3, "PPR output: arborescence, |A| = |V| - 1, shortest distances kept, adp 1 to origin"):
        rng = random.Random(12)
        for _ in range(200):
            g = random_digraph(rng, rng.randint(1, 9), p=rng.uniform(0.1, 0.6))
            origin = rng.choice(sorted(g.vertices))
            b = select_bgp_digraph(AnnouncementDigraph(origin, g))
            dist = bfs_distances(g.arcs, origin)
            assert is_arborescence(b.graph, origin)
            assert len(b.graph.arcs) == len(b.graph.vertices) - 1
            assert b.graph.vertices == set(dist)
            for v in b.graph.vertices:
                assert len(b.path_to(v)) - 1 == dist[v]
            rev = converse(b.graph)
            for v in b.graph.vertices - {origin}:
                assert adp(rev, v, origin) == 1


def test_c4_diversity_dominance(criterion):
    with criterion(4, "adp in D_d >= adp in converse PPR tree; 45-AS syngen diversity_excess > 0"):
        rng = random.Random(4)
        for _ in range(200):
            g = random_digraph(rng, rng.randint(2, 8), p=rng.uniform(0.1, 0.6))
            origin = rng.choice(sorted(g.vertices))
            b = select_bgp_digraph(AnnouncementDigraph(origin, g))
            dest, tree = converse(g), converse(b.graph)
            for v in g.vertices - {origin}:
                full = adp(dest, v, origin)
                single = adp(tree, v, origin) if v in tree.vertices else 0
                assert single == (1 if v in b.graph.vertices else 0)
                assert full >= single
        m = compute_adp_matrix(syngen_digraphs(syngen.SynConfig(as_count=45)))
        assert diversity_excess(compute_histogram(m)) > 0


def test_c5_golden_fixture(criterion, tmp_path):
    with criterion(5, "analyze reproduces the 5-AS golden CSVs byte for byte in < 1 s"):
        start = time.perf_counter()
        code = main([
            "analyze",
            "--roster", str(FIXTURE / "roster.txt"),
            "--routes", str(FIXTURE / "routes.txt"),
            "--policies", str(FIXTURE / "policies.txt"),
            "--traces", str(FIXTURE / "traces.txt"),
            "--out", str(tmp_path),
            "--mode", "adp",
        ])
        elapsed = time.perf_counter() - start
        assert code == 0
        for name in ("adp_matrix.csv", "adp_stats.csv", "adp_histogram.csv"):
            assert (tmp_path / name).read_bytes() == (FIXTURE / "expected" / name).read_bytes(), name
        assert elapsed < 1.0, elapsed


def test_c6_table_rendering(criterion):
    with criterion(6, 'stats CSV renders "1299,1.61,1,4" and "8404,1.00,1,1"'):
        text = write_stats_csv([
            DiversityStats(1299, Fraction(71, 44), 1, 4),
            DiversityStats(8404, Fraction(1), 1, 1),
        ])
        assert text.splitlines() == ["as,avg,min,max", "1299,1.61,1,4", "8404,1.00,1,1"]
        assert write_stats_csv([DiversityStats(1299, 1.6136, 1, 4)]).splitlines()[1] == "1299,1.61,1,4"


def test_c7_scale(criterion):
    with criterion(7, "45-AS adp matrix < 10 s single-threaded; parallel CSVs byte-identical"):
        digraphs = syngen_digraphs(syngen.SynConfig(as_count=45, seed=1))
        start = time.perf_counter()
        serial = compute_adp_matrix(digraphs, workers=1)
        elapsed = time.perf_counter() - start
        assert len(serial.roster) == 45 and len(serial.entries) == 45 * 44
        assert elapsed < 10, elapsed
        parallel = compute_adp_matrix(digraphs, workers=4)

        def csvs(m):
            return (write_matrix_csv(m), write_stats_csv(compute_all_stats(m)),
                    write_histogram_csv(compute_histogram(m)))

        assert csvs(serial) == csvs(parallel)
