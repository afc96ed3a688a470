"""Command-line interface: the full pipeline plus each stage on its own.

Exit codes: 0 success, 1 runtime failure, 2 usage or configuration error.
Stage timings go to stderr; machine-readable metrics via --metrics.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .errors import ConfigError, KghierError
from .export import (
    emit_viewer,
    export_dot,
    export_group_table_json,
    export_json,
    load_group_table_json,
    read_similarity_csv,
    write_similarity_csv,
)
from .grouping import DEFAULT_ALPHA, generate_groups, group_stats
from .hierarchy import DEFAULT_THETA, build_hierarchy, dag_stats
from .ingest import FORMATS, join_splits
from . import kernels
from .similarity import ENGINES


def default_jobs() -> int:
    env = os.environ.get("KGHIER_JOBS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ConfigError(f"KGHIER_JOBS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


@dataclass
class PipelineConfig:
    inputs: list[str] = field(default_factory=list)
    format: str = "tsv"
    alpha: int = DEFAULT_ALPHA
    theta: float = DEFAULT_THETA
    jobs: int = 1
    inverse: bool = False
    engine: str = "indexed"
    output: str | None = None

    def validate(self) -> None:
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.alpha < 1:
            raise ConfigError(f"--min-group-size must be >= 1, got {self.alpha}")
        if not (0 < self.theta <= 1):
            raise ConfigError(f"--theta must be in (0, 1], got {self.theta}")
        if self.jobs < 1:
            raise ConfigError(f"--jobs must be >= 1, got {self.jobs}")
        if self.engine not in ENGINES:
            raise ConfigError(
                f"--engine must be one of {tuple(ENGINES)}, got {self.engine!r}"
            )


def _add_common(parser, with_inputs=True):
    if with_inputs:
        parser.add_argument("--input", "-i", nargs="+", metavar="FILE",
                            help="triple file(s); several are joined and deduplicated")
        parser.add_argument("--format", choices=FORMATS, default="tsv")
    parser.add_argument("--min-group-size", type=int, default=DEFAULT_ALPHA,
                        metavar="N", help="drop groups smaller than N (default 10)")
    parser.add_argument("--theta", type=float, default=DEFAULT_THETA,
                        help="HPI containment threshold (default 0.9)")
    parser.add_argument("--jobs", "-j", type=int, default=None,
                        help="parallel splits (default: KGHIER_JOBS or CPU count)")
    parser.add_argument("--inverse", action="store_true",
                        help="also group objects by their (subject, predicate) anchor")
    parser.add_argument("--engine", choices=tuple(ENGINES), default="indexed")


def _config_from(args, need_inputs=True) -> PipelineConfig:
    config = PipelineConfig(
        inputs=list(getattr(args, "input", None) or []),
        format=getattr(args, "format", "tsv"),
        alpha=args.min_group_size,
        theta=args.theta,
        jobs=args.jobs if args.jobs is not None else default_jobs(),
        inverse=args.inverse,
        engine=args.engine,
        output=getattr(args, "output", None),
    )
    config.validate()
    if need_inputs and not config.inputs:
        raise ConfigError("--input is required")
    return config


def _dataset_name(args, config: PipelineConfig) -> str:
    if getattr(args, "dataset_name", None):
        return args.dataset_name
    if config.inputs:
        return Path(config.inputs[0]).stem
    groups_file = getattr(args, "groups_file", None)
    return Path(groups_file).stem if groups_file else "dataset"


class _Timer:
    def __init__(self):
        self.stages: dict[str, float] = {}

    def stage(self, name):
        return _Stage(self, name)


class _Stage:
    def __init__(self, timer, name):
        self.timer, self.name = timer, name

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        elapsed = time.perf_counter() - self.start
        self.timer.stages[self.name] = elapsed
        print(f"{self.name}: {elapsed:.3f}s", file=sys.stderr)
        return False


def _load_table(args, config: PipelineConfig, timer: _Timer):
    """Group table from raw inputs or from a previous `groups --json` dump."""
    groups_file = getattr(args, "groups_file", None)
    if groups_file:
        with timer.stage("load-groups"):
            return load_group_table_json(groups_file, alpha=config.alpha), None
    with timer.stage("ingest"):
        triples = join_splits(config.inputs, format=config.format)
    with timer.stage("grouping"):
        table = generate_groups(triples, alpha=config.alpha, jobs=config.jobs,
                                inverse=config.inverse)
    return table, triples


def _compute_matrix(args, config, table, timer):
    sim_file = getattr(args, "sim_file", None)
    if sim_file:
        with timer.stage("load-similarity"):
            return read_similarity_csv(sim_file, table)
    with timer.stage("similarity"):
        return ENGINES[config.engine](table, jobs=config.jobs)


def _write_metrics(args, timer: _Timer, config: PipelineConfig, extra: dict) -> None:
    path = getattr(args, "metrics", None)
    if not path:
        return
    payload = {
        "stages": timer.stages,
        "jobs": config.jobs,
        "engine": config.engine,
        "backend": kernels.BACKEND,
        "tool_version": __version__,
    }
    payload.update(extra)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def cmd_build(args) -> int:
    config = _config_from(args)
    if not args.output:
        raise ConfigError("--output is required")
    timer = _Timer()
    table, triples = _load_table(args, config, timer)
    matrix = _compute_matrix(args, config, table, timer)
    with timer.stage("hierarchy"):
        dag = build_hierarchy(table, matrix, theta=config.theta)
    with timer.stage("export"):
        export_json(dag, table, args.output, dataset=_dataset_name(args, config),
                    theta=config.theta, alpha=config.alpha,
                    sample_size=args.sample_size, full_members=args.full_members)
        if args.dot:
            export_dot(dag, table, args.dot)
    stats = dag_stats(dag)
    counts = {
        "triples": len(triples) if triples is not None else None,
        "groups": len(table),
        "pairs": len(matrix),
        **stats,
    }
    _write_metrics(args, timer, config, {"counts": counts})
    print(
        f"groups={len(table)} pairs={len(matrix)} nodes={stats['nodes']} "
        f"edges={stats['edges']} roots={stats['roots']} depth={stats['max_depth']}"
    )
    if args.viewer_dir:
        emit_viewer(args.output, args.viewer_dir, bundle_dir=args.bundle)
        print(f"viewer written to {args.viewer_dir}", file=sys.stderr)
    return 0


def cmd_groups(args) -> int:
    config = _config_from(args)
    timer = _Timer()
    table, _ = _load_table(args, config, timer)
    stats = group_stats(table)
    print(f"groups: {stats['group_count']}")
    for label, count in stats["histogram"].items():
        print(f"  size {label}: {count}")
    for name, size in stats["largest"]:
        print(f"  {name}: {size}")
    if args.json:
        export_group_table_json(table, args.json)
    _write_metrics(args, timer, config, {"counts": {"groups": len(table)}})
    return 0


def cmd_sim(args) -> int:
    config = _config_from(args, need_inputs=not args.groups_file)
    if not args.output:
        raise ConfigError("--output is required")
    timer = _Timer()
    table, _ = _load_table(args, config, timer)
    matrix = _compute_matrix(args, config, table, timer)
    write_similarity_csv(matrix, table, args.output)
    _write_metrics(args, timer, config, {"counts": {"groups": len(table), "pairs": len(matrix)}})
    print(f"groups={len(table)} pairs={len(matrix)}")
    return 0


def cmd_hier(args) -> int:
    config = _config_from(args, need_inputs=not args.groups_file)
    timer = _Timer()
    table, _ = _load_table(args, config, timer)
    matrix = _compute_matrix(args, config, table, timer)
    with timer.stage("hierarchy"):
        dag = build_hierarchy(table, matrix, theta=config.theta)
    stats = dag_stats(dag)
    for key, value in stats.items():
        print(f"{key}: {value}")
    _write_metrics(args, timer, config, {"counts": stats})
    return 0


def cmd_export(args) -> int:
    config = _config_from(args, need_inputs=not args.groups_file)
    if not args.output:
        raise ConfigError("--output is required")
    timer = _Timer()
    table, triples = _load_table(args, config, timer)
    matrix = _compute_matrix(args, config, table, timer)
    with timer.stage("hierarchy"):
        dag = build_hierarchy(table, matrix, theta=config.theta)
    with timer.stage("export"):
        export_json(dag, table, args.output, dataset=_dataset_name(args, config),
                    theta=config.theta, alpha=config.alpha,
                    sample_size=args.sample_size, full_members=args.full_members)
        if args.dot:
            export_dot(dag, table, args.dot)
    _write_metrics(args, timer, config, {"counts": dag_stats(dag)})
    return 0


def cmd_render(args) -> int:
    written = emit_viewer(args.doc, args.output, bundle_dir=args.bundle)
    print(f"{len(written)} files written to {args.output}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kghier",
        description="Entity groups and containment hierarchies from triple dumps",
    )
    parser.add_argument("--version", action="version", version=f"kghier {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_doc_flags(p):
        p.add_argument("--sample-size", type=int, default=25, metavar="N",
                       help="member sample size per node in the JSON document")
        p.add_argument("--full-members", action="store_true",
                       help="embed full member lists instead of samples")
        p.add_argument("--dataset-name", default=None)

    build = sub.add_parser("build", help="run the whole pipeline")
    _add_common(build)
    build.add_argument("--output", "-o", required=True, metavar="FILE")
    build.add_argument("--dot", metavar="FILE", help="also write the graph as dot")
    build.add_argument("--viewer-dir", metavar="DIR",
                       help="also emit the static viewer next to the document")
    build.add_argument("--bundle", metavar="DIR", help="viewer bundle override")
    build.add_argument("--metrics", metavar="FILE")
    add_doc_flags(build)
    build.set_defaults(func=cmd_build)

    groups = sub.add_parser("groups", help="group summary, optional JSON dump")
    _add_common(groups)
    groups.add_argument("--json", metavar="FILE", help="dump the table as JSON")
    groups.add_argument("--metrics", metavar="FILE")
    groups.set_defaults(func=cmd_groups)

    sim = sub.add_parser("sim", help="similarity matrix as CSV")
    _add_common(sim)
    sim.add_argument("--groups-file", metavar="FILE",
                     help="reuse a `groups --json` dump instead of raw inputs")
    sim.add_argument("--output", "-o", metavar="FILE")
    sim.add_argument("--metrics", metavar="FILE")
    sim.set_defaults(func=cmd_sim)

    hier = sub.add_parser("hier", help="build the hierarchy and print its stats")
    _add_common(hier)
    hier.add_argument("--groups-file", metavar="FILE")
    hier.add_argument("--sim-file", metavar="FILE")
    hier.add_argument("--metrics", metavar="FILE")
    hier.set_defaults(func=cmd_hier)

    export = sub.add_parser("export", help="write the hierarchy document")
    _add_common(export)
    export.add_argument("--groups-file", metavar="FILE")
    export.add_argument("--sim-file", metavar="FILE")
    export.add_argument("--output", "-o", metavar="FILE")
    export.add_argument("--dot", metavar="FILE")
    export.add_argument("--metrics", metavar="FILE")
    add_doc_flags(export)
    export.set_defaults(func=cmd_export)

    render = sub.add_parser("render", help="emit the static viewer for a document")
    render.add_argument("--doc", required=True, metavar="FILE")
    render.add_argument("--output", "-o", required=True, metavar="DIR")
    render.add_argument("--bundle", metavar="DIR")
    render.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"kghier: {exc}", file=sys.stderr)
        return 2
    except (KghierError, OSError) as exc:
        print(f"kghier: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
