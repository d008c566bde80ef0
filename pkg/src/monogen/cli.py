"""Command-line entry point: ``monogen analyze | corpus | thue | oracle-check``.

Exit codes: 0 success, 2 malformed input or a reducible generator,
3 failed internal check (count bounds, unverified class, oracle mismatch).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .algebra import BinaryFormZ
from .forms import DEFAULT_CONIC_POINT_BOUND, QuarticGenerator, ReducibleGeneratorError
from .monogenize import (
    MONOGENIZATIONS_MAX,
    PipelineConfig,
    PipelineReport,
    compare_with_oracle,
    enumerate_monogenizations,
)
from .oracle import DEFAULT_TRIPLE_BOX
from .report import flatten, render, rows_to_csv
from .thue import DEFAULT_CUBIC_HEIGHT, DEFAULT_QUARTIC_HEIGHT, ThueProblem, solve_bounded

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CHECK = 3
FORMATS = ("json", "csv", "text")
THREADS_ENV = "MONOGEN_THREADS"


class InputError(ValueError):
    """Malformed user input; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    cubic_height: int = DEFAULT_CUBIC_HEIGHT
    quartic_height: int = DEFAULT_QUARTIC_HEIGHT
    conic_point_bound: int = DEFAULT_CONIC_POINT_BOUND
    oracle_box: int = DEFAULT_TRIPLE_BOX
    oracle_enabled: bool = False
    output_format: str = "json"

    def __post_init__(self):
        if self.output_format not in FORMATS:
            raise InputError(f"output format must be one of {FORMATS}, got {self.output_format!r}")
        try:
            self.pipeline()
        except ValueError as exc:
            raise InputError(str(exc)) from exc

    def pipeline(self) -> PipelineConfig:
        return PipelineConfig(
            cubic_height=self.cubic_height,
            quartic_height=self.quartic_height,
            conic_point_bound=self.conic_point_bound,
            oracle_box=self.oracle_box,
            oracle_enabled=self.oracle_enabled,
        )


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    coeffs: tuple[int, int, int, int]


def parse_int_list(text: str, what: str) -> list[int]:
    parts = [p for p in text.replace(",", " ").split() if p]
    if not parts:
        raise InputError(f"{what}: no integers given")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InputError(f"{what}: not a list of integers: {text!r}") from None


def parse_generator(text: str) -> QuarticGenerator:
    coeffs = parse_int_list(text, "coefficients")
    if len(coeffs) != 4:
        raise InputError(f"expected 4 coefficients a1,a2,a3,a4, got {len(coeffs)}")
    try:
        return QuarticGenerator(*coeffs)
    except ReducibleGeneratorError as exc:
        raise InputError(f"generator is reducible: {exc}") from exc


def parse_corpus_line(line: str) -> CorpusEntry | None:
    """None for blank and comment lines; InputError for malformed entries."""
    body = line.split("#", 1)[0].strip()
    if not body:
        return None
    label, *rest = body.split()
    if len(rest) != 4:
        raise InputError(f"{label}: expected 4 coefficients, got {len(rest)}")
    try:
        coeffs = tuple(int(c) for c in rest)
    except ValueError:
        raise InputError(f"{label}: non-integer coefficient in {rest}") from None
    return CorpusEntry(label, coeffs)


def worker_count(requested: int | None) -> int:
    env = os.environ.get(THREADS_ENV)
    if env is not None:
        try:
            n = int(env)
        except ValueError:
            raise InputError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    else:
        n = requested or 1
    if n < 1:
        raise InputError(f"worker count must be >= 1, got {n}")
    return n


def report_ok(report: PipelineReport) -> bool:
    if not report.bounds["pass"]:
        return False
    return all(t.verified for b in report.branches for t in b.triples)


def emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _run_config(args) -> RunConfig:
    return RunConfig(
        cubic_height=args.cubic_height,
        quartic_height=args.quartic_height,
        conic_point_bound=args.conic_point_bound,
        oracle_box=args.oracle_box,
        oracle_enabled=args.oracle,
        output_format=args.format,
    )


def cmd_analyze(args) -> int:
    cfg = _run_config(args)
    P = parse_generator(args.coeffs)
    report = enumerate_monogenizations(P, cfg.pipeline())
    emit(render(report, cfg.output_format), args.out)
    return EXIT_OK if report_ok(report) else EXIT_CHECK


def _corpus_job(entry: CorpusEntry, cfg: PipelineConfig) -> dict:
    try:
        P = QuarticGenerator(*entry.coeffs)
    except ValueError as exc:
        return {"label": entry.label, "status": "rejected", "reason": str(exc)}
    report = enumerate_monogenizations(P, cfg)
    return {"label": entry.label, "status": "ok", "report": report}


def _summary_rows(results: list[dict]) -> list[dict]:
    rows = []
    for r in results:
        if r["status"] != "ok":
            rows.append({"label": r["label"], "status": r["status"], "reason": r["reason"]})
            continue
        rep: PipelineReport = r["report"]
        counts = rep.counts
        rows.append(
            {
                "label": r["label"],
                "status": "ok",
                "coeffs": [str(c) for c in rep.generator],
                "discriminant": str(rep.discriminant),
                "discriminant_sign": "-1" if rep.discriminant < 0 else "1",
                "cubic": str(counts["cubic"]),
                "max_per_branch": str(max(counts["per_branch"], default=0)),
                "total": str(counts["total"]),
                "bounds_pass": rep.bounds["pass"],
            }
        )
    return rows


def render_summary(rows: list[dict], fmt: str) -> str:
    ok = [r for r in rows if r["status"] == "ok"]
    summary = {
        "entries": rows,
        "processed": str(len(ok)),
        "rejected": str(len(rows) - len(ok)),
        "max_total_observed": str(max((int(r["total"]) for r in ok), default=0)),
        "total_max": str(MONOGENIZATIONS_MAX),
    }
    if fmt == "json":
        return json.dumps(summary, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return rows_to_csv(flatten(summary))
    lines = [f"{'label':<16} {'status':<9} {'disc':>14} {'cubic':>5} {'total':>5}"]
    for r in rows:
        if r["status"] == "ok":
            lines.append(
                f"{r['label']:<16} {'ok':<9} {r['discriminant']:>14} {r['cubic']:>5} {r['total']:>5}"
            )
        else:
            lines.append(f"{r['label']:<16} {'rejected':<9} {r['reason']}")
    lines.append(
        f"processed {summary['processed']}, rejected {summary['rejected']}, "
        f"max classes {summary['max_total_observed']} (bound {MONOGENIZATIONS_MAX})"
    )
    return "\n".join(lines) + "\n"


def cmd_corpus(args) -> int:
    cfg = _run_config(args)
    try:
        lines = Path(args.file).read_text().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read corpus file: {exc}") from exc
    entries: list[CorpusEntry] = []
    results: list[dict] = []
    for lineno, line in enumerate(lines, 1):
        try:
            entry = parse_corpus_line(line)
        except InputError as exc:
            logger.warning("line %d rejected: %s", lineno, exc)
            results.append({"label": f"line{lineno}", "status": "rejected", "reason": str(exc)})
            continue
        if entry is not None:
            entries.append(entry)

    workers = worker_count(args.workers)
    pcfg = cfg.pipeline()
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            done = list(pool.map(_corpus_job, entries, [pcfg] * len(entries)))
    else:
        done = [_corpus_job(e, pcfg) for e in entries]
    results.extend(done)

    if args.report_dir is not None:
        outdir = Path(args.report_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        ext = {"json": "json", "csv": "csv", "text": "txt"}[cfg.output_format]
        for r in done:
            if r["status"] == "ok":
                (outdir / f"{r['label']}.{ext}").write_text(render(r["report"], cfg.output_format))

    emit(render_summary(_summary_rows(results), cfg.output_format), args.out)
    failed = any(r["status"] == "ok" and not report_ok(r["report"]) for r in done)
    return EXIT_CHECK if failed else EXIT_OK


def cmd_thue(args) -> int:
    coeffs = parse_int_list(args.form, "form")
    rhs = parse_int_list(args.rhs, "rhs")
    if len(coeffs) not in (4, 5):
        raise InputError(f"form must have degree 3 or 4, got {len(coeffs) - 1}")
    if args.height < 1:
        raise InputError("height must be >= 1")
    try:
        result = solve_bounded(ThueProblem(BinaryFormZ(coeffs), set(rhs), args.height))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    lines = [
        f"solutions of F(u, v) in {sorted(set(rhs))} with |v| <= {args.height}, "
        "one per +-(u, v) class:"
    ]
    lines += [f"  ({u}, {v})" for u, v in result.solutions]
    lines.append(
        f"note: complete only for |v| <= {args.height}; "
        "solutions outside this box are not excluded"
    )
    if result.infinite_family:
        lines.append("note: the equation has infinitely many solutions; the list is the box part")
    lines += [f"warning: {w}" for w in result.warnings]
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    cfg = _run_config(args)
    P = parse_generator(args.coeffs)
    # The pipeline runs without oracle merging so that gaps stay visible.
    pcfg = PipelineConfig(
        cubic_height=cfg.cubic_height,
        quartic_height=cfg.quartic_height,
        conic_point_bound=cfg.conic_point_bound,
        oracle_box=cfg.oracle_box,
    )
    report = enumerate_monogenizations(P, pcfg)
    cmp = compare_with_oracle(P, report.classes, cfg.oracle_box)
    lines = [
        f"oracle box {cmp.box}: oracle {cmp.oracle_classes} classes, "
        f"pipeline {len(report.classes)} classes",
        f"missing from pipeline: {len(cmp.missing_from_pipeline)}",
    ]
    lines += [f"  {t}" for t in cmp.missing_from_pipeline]
    lines.append(f"missing from oracle: {len(cmp.missing_from_oracle)}")
    lines += [f"  {t}" for t in cmp.missing_from_oracle]
    lines.append("agree" if cmp.agree else "DISAGREE")
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if cmp.agree else EXIT_CHECK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _add_pipeline_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cubic-height", type=_positive, default=DEFAULT_CUBIC_HEIGHT)
    p.add_argument("--quartic-height", type=_positive, default=DEFAULT_QUARTIC_HEIGHT)
    p.add_argument("--conic-point-bound", type=_positive, default=DEFAULT_CONIC_POINT_BOUND)
    p.add_argument("--oracle-box", type=_positive, default=DEFAULT_TRIPLE_BOX)
    p.add_argument("--oracle", action="store_true", help="merge brute-force results and compare")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monogen", description="Monogenizations of quartic orders Z[xi].")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="enumerate monogenizations of one generator")
    p.add_argument("--coeffs", required=True, help="a1,a2,a3,a4 (use --coeffs=-1,... for a leading minus)")
    _add_pipeline_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("corpus", help="run a corpus file of 'label a1 a2 a3 a4' lines")
    p.add_argument("file")
    p.add_argument("--report-dir", help="directory for per-entry reports")
    p.add_argument("--workers", type=_positive, default=None, help=f"overridden by {THREADS_ENV}")
    _add_pipeline_flags(p)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("thue", help="bounded Thue solve of F(u, v) = rhs")
    p.add_argument("--form", required=True, help="coefficients of u^n ... v^n")
    p.add_argument("--rhs", required=True, help="comma-separated right-hand sides")
    p.add_argument("--height", type=int, default=DEFAULT_CUBIC_HEIGHT)
    p.add_argument("--out")
    p.set_defaults(func=cmd_thue)

    p = sub.add_parser("oracle-check", help="compare the pipeline with brute force")
    p.add_argument("--coeffs", required=True)
    _add_pipeline_flags(p)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"monogen: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"monogen: internal check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
