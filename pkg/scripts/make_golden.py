"""Regenerate the golden CSVs of a fixture directory with the exhaustive
min-cut oracle instead of max-flow.

    python scripts/make_golden.py tests/fixtures/golden5

Statistics, rounding and CSV text are produced here by hand so the golden
files do not share code with the report writers they check.
"""

import sys
from collections import Counter
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

from pathdiv import ingest
from pathdiv.disjoint import brute_force_adp
from pathdiv.graph import converse


def load(fixture: Path) -> dict:
    roster = ingest.parse_roster((fixture / "roster.txt").read_text())
    maps = [
        ingest.routes_to_digraphs(ingest.parse_routes((fixture / "routes.txt").read_text()), roster),
        ingest.policies_to_digraphs(ingest.parse_policies((fixture / "policies.txt").read_text()), roster),
        ingest.traces_to_digraphs(ingest.parse_traces((fixture / "traces.txt").read_text()), roster),
    ]
    return ingest.merge_sources(maps)


def main(fixture: Path) -> None:
    digraphs = load(fixture)
    roster = sorted(digraphs)
    entries = {}
    for i in roster:
        dest = converse(digraphs[i].graph)
        for j in roster:
            if j != i:
                entries[(j, i)] = brute_force_adp(dest, j, i)

    matrix = ["," + ",".join(map(str, roster))]
    for j in roster:
        cells = ["" if j == i else str(entries[(j, i)]) for i in roster]
        matrix.append(f"{j}," + ",".join(cells))

    stats = ["as,avg,min,max"]
    for i in roster:
        col = [entries[(j, i)] for j in roster if j != i]
        avg = (Decimal(sum(col)) / Decimal(len(col))).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
        stats.append(f"{i},{avg},{min(col)},{max(col)}")

    tally = Counter(entries.values())
    hist = ["adp,count"] + [f"{k},{tally.get(k, 0)}" for k in range(min(tally), max(tally) + 1)]

    out = fixture / "expected"
    out.mkdir(exist_ok=True)
    for name, lines in (("adp_matrix.csv", matrix), ("adp_stats.csv", stats), ("adp_histogram.csv", hist)):
        (out / name).write_text("\n".join(lines) + "\n")
        print(f"--- {name}")
        print("\n".join(lines))


if __name__ == "__main__":
    main(Path(sys.argv[1]))
