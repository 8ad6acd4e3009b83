"""Command-line driver: ``pathdiv analyze | ppr | gen``.

Exit codes: 0 success, 2 unreadable input / bad arguments / unwritable
output, 3 parse error, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import logging
import os
import shutil
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import ingest, report, syngen
from .graph import InvariantError, is_arborescence, to_dot
from .ppr import select_bgp_digraph, verify_single_path

EXIT_OK = 0
EXIT_IO = 2
EXIT_PARSE = 3
EXIT_INVARIANT = 4

MODES = ("adp", "idp", "ppr", "all")

log = logging.getLogger("pathdiv")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    roster_path: Path
    route_paths: list = field(default_factory=list)
    policy_paths: list = field(default_factory=list)
    trace_paths: list = field(default_factory=list)
    output_dir: Path = Path("out")
    mode: str = "all"
    workers: Optional[int] = None

    def sources(self) -> list:
        return [*self.route_paths, *self.policy_paths, *self.trace_paths]


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from exc


def _parse(path, parser):
    text = _read(path)
    try:
        return parser(text)
    except ingest.ParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from exc
    except ValueError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from exc


def load_digraphs(cfg: RunConfig) -> tuple[ingest.Roster, dict]:
    """Parse every source file and merge the per-origin digraphs."""
    roster = _parse(cfg.roster_path, ingest.parse_roster)
    maps = []
    for path in cfg.route_paths:
        records = _parse(path, ingest.parse_routes)
        if records.dropped:
            log.warning("%s: dropped %d looped paths", path, records.dropped)
        maps.append(ingest.routes_to_digraphs(records, roster))
    for path in cfg.policy_paths:
        maps.append(ingest.policies_to_digraphs(_parse(path, ingest.parse_policies), roster))
    for path in cfg.trace_paths:
        records = _parse(path, ingest.parse_traces)
        if records.dropped:
            log.warning("%s: dropped %d looped traces", path, records.dropped)
        maps.append(ingest.traces_to_digraphs(records, roster))
    merged = ingest.merge_sources(maps)
    # an origin no source mentions still gets an empty digraph over the roster
    empty = ingest.routes_to_digraphs([], roster)
    return roster, ingest.merge_sources([empty, merged])


class _Staging:
    """Collects output files in a temp dir and moves them in on success."""

    def __init__(self, output_dir: Path):
        self.output_dir = Path(output_dir)
        self.created = not self.output_dir.exists()
        try:
            self.output_dir.mkdir(parents=True, exist_ok=True)
            self.tmp = Path(tempfile.mkdtemp(prefix=".pathdiv-", dir=self.output_dir))
        except OSError as exc:
            raise CliError(f"cannot write to {output_dir}: {exc}", EXIT_IO) from exc

    def write(self, name: str, text: str) -> None:
        (self.tmp / name).write_text(text, encoding="utf-8", newline="\n")

    def commit(self) -> None:
        for item in sorted(self.tmp.iterdir()):
            os.replace(item, self.output_dir / item.name)
        self.tmp.rmdir()

    def discard(self) -> None:
        shutil.rmtree(self.tmp, ignore_errors=True)
        if self.created:
            shutil.rmtree(self.output_dir, ignore_errors=True)


def _workers(cfg_workers: Optional[int]) -> Optional[int]:
    if cfg_workers is not None:
        return cfg_workers
    env = os.environ.get("PATHDIV_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise CliError(f"PATHDIV_THREADS must be an integer, got {env!r}", EXIT_IO)
    return None


def _write_metric(out: _Staging, digraphs: dict, metric: str, workers) -> int:
    m = report.compute_adp_matrix(digraphs, workers=workers, metric=metric)
    h = report.compute_histogram(m)
    if h.total() != m.pair_count():
        raise InvariantError(f"{metric} histogram total {h.total()} != {m.pair_count()} pairs")
    stats = report.compute_all_stats(m)
    for s in stats:
        if not s.min <= s.avg <= s.max:
            raise InvariantError(f"AS{s.origin}: min <= avg <= max violated")
    out.write(f"{metric}_matrix.csv", report.write_matrix_csv(m))
    out.write(f"{metric}_stats.csv", report.write_stats_csv(stats))
    out.write(f"{metric}_histogram.csv", report.write_histogram_csv(h))
    return report.diversity_excess(h)


def _bgp_outputs(out: _Staging, a) -> list:
    b = select_bgp_digraph(a)
    if not is_arborescence(b.graph, b.origin) or not verify_single_path(b):
        raise InvariantError(f"PPR output for AS{b.origin} is not a single-path tree")
    out.write(f"bgp_AS{a.origin}.dot", to_dot(b.graph, highlight=a.origin, name=f"BGP AS{a.origin}"))
    return sorted(b.unreached)


def _unreached_line(origin: int, unreached: list) -> str:
    return f"{origin}:" + "".join(f" {v}" for v in unreached) + "\n"


def cmd_analyze(cfg: RunConfig) -> int:
    if cfg.mode not in MODES:
        raise CliError(f"unknown mode {cfg.mode!r}", EXIT_IO)
    if not cfg.sources():
        raise CliError("at least one of --routes/--policies/--traces is required", EXIT_IO)
    roster, digraphs = load_digraphs(cfg)
    workers = _workers(cfg.workers)
    out = _Staging(cfg.output_dir)
    try:
        for o, a in digraphs.items():
            out.write(f"announcement_AS{o}.dot", to_dot(a.graph, highlight=o, name=f"Announcement AS{o}"))
            out.write(f"adjacency_AS{o}.csv", report.write_adjacency_csv(a.graph))
        summary = [f"roster={len(roster)}"]
        for metric in ("adp", "idp"):
            if cfg.mode in (metric, "all"):
                excess = _write_metric(out, digraphs, metric, workers)
                summary.append(f"{metric}_diversity_excess={excess}")
        if cfg.mode in ("ppr", "all"):
            lines = [_unreached_line(o, _bgp_outputs(out, a)) for o, a in digraphs.items()]
            out.write("unreached.txt", "".join(lines))
        line = " ".join(summary)
        out.write("summary.txt", line + "\n")
        out.commit()
    except BaseException:
        out.discard()
        raise
    print(line)
    return EXIT_OK


def cmd_ppr(cfg: RunConfig, origin: int) -> int:
    if not cfg.sources():
        raise CliError("at least one of --routes/--policies/--traces is required", EXIT_IO)
    roster, digraphs = load_digraphs(cfg)
    if origin not in roster:
        raise CliError(f"AS{origin} is not on the roster", EXIT_IO)
    a = digraphs[origin]
    out = _Staging(cfg.output_dir)
    try:
        out.write(f"announcement_AS{origin}.dot", to_dot(a.graph, highlight=origin, name=f"Announcement AS{origin}"))
        unreached = _bgp_outputs(out, a)
        out.write(f"unreached_AS{origin}.txt", "".join(f"{v}\n" for v in unreached))
        out.commit()
    except BaseException:
        out.discard()
        raise
    print(f"origin={origin} unreached={','.join(map(str, unreached)) or '-'}")
    return EXIT_OK


def cmd_gen(cfg: syngen.SynConfig, output_dir) -> int:
    roster, policies, routes = syngen.generate(cfg)
    out = _Staging(output_dir)
    try:
        out.write("roster.txt", roster)
        out.write("policies.txt", policies)
        out.write("routes.txt", routes)
        out.commit()
    except OSError as exc:
        out.discard()
        raise CliError(f"cannot write to {output_dir}: {exc}", EXIT_IO) from exc
    print(f"seed={cfg.seed}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathdiv", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def sources(p):
        p.add_argument("--roster", required=True, type=Path)
        p.add_argument("--routes", action="append", default=[], type=Path)
        p.add_argument("--policies", action="append", default=[], type=Path)
        p.add_argument("--traces", action="append", default=[], type=Path)
        p.add_argument("--out", required=True, type=Path)

    analyze = sub.add_parser("analyze", help="adp/idp matrices, statistics, histograms and DOT files")
    sources(analyze)
    analyze.add_argument("--mode", choices=MODES, default="all")
    analyze.add_argument("--workers", type=int, default=None,
                         help="processes for the pairwise computation (default: $PATHDIV_THREADS or 1)")

    ppr = sub.add_parser("ppr", help="announcement digraph and PPR-selected BGP digraph of one origin")
    sources(ppr)
    ppr.add_argument("--origin", required=True, type=int)

    gen = sub.add_parser("gen", help="write a synthetic roster, policy and routes file")
    gen.add_argument("--out", required=True, type=Path)
    gen.add_argument("--as-count", type=int, default=syngen.SynConfig.as_count)
    gen.add_argument("--provider-ratio", type=float, default=syngen.SynConfig.provider_ratio)
    gen.add_argument("--peer-probability", type=float, default=syngen.SynConfig.peer_probability)
    gen.add_argument("--seed", type=int, default=syngen.SynConfig.seed)
    return parser


def _run(args) -> int:
    if args.command == "gen":
        try:
            cfg = syngen.SynConfig(args.as_count, args.provider_ratio, args.peer_probability, args.seed)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_IO) from exc
        return cmd_gen(cfg, args.out)
    run = RunConfig(
        roster_path=args.roster,
        route_paths=args.routes,
        policy_paths=args.policies,
        trace_paths=args.traces,
        output_dir=args.out,
        mode=getattr(args, "mode", "ppr"),
        workers=getattr(args, "workers", None),
    )
    if args.command == "ppr":
        return cmd_ppr(run, args.origin)
    return cmd_analyze(run)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _run(args)
    except CliError as exc:
        print(f"pathdiv: {exc}", file=sys.stderr)
        return exc.code
    except InvariantError as exc:
        print(f"pathdiv: invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
