"""Serialization of pipeline reports: JSON, flat CSV and plain text.

Integers are written as decimal strings so that no consumer truncates them
to 64 bits. CSV is the JSON tree flattened to ``path,value`` rows.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .monogenize import (
    BranchReport,
    DerivedTriple,
    LiteralComparison,
    OracleComparison,
    PipelineConfig,
    PipelineReport,
    QuarticSolution,
)


def _s(n: int) -> str:
    return str(int(n))


def _ints(values) -> list[str]:
    return [_s(v) for v in values]


def _stringify(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return _s(value)
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def branch_to_dict(b: BranchReport) -> dict[str, Any]:
    return {
        "u": _s(b.u),
        "v": _s(b.v),
        "bezout": _ints(b.bezout),
        "conic": _ints(b.conic),
        "parametrization": (
            None
            if b.parametrization is None
            else {k: _ints(f) for k, f in zip("xyz", b.parametrization)}
        ),
        "quartic": (
            None
            if b.quartic is None
            else {"coeffs": _ints(b.quartic), "disc": _s(b.quartic_disc)}
        ),
        "multiplier": _s(b.multiplier),
        "quartic_solutions": [
            {"p": _s(s.p), "q": _s(s.q), "rhs": _s(s.rhs)} for s in b.quartic_solutions
        ],
        "triples": [
            {
                "x": _s(t.x),
                "y": _s(t.y),
                "z": _s(t.z),
                "verified": t.verified,
                "provenance": t.provenance,
            }
            for t in b.triples
        ],
        "fallback_used": b.fallback_used,
        "discrepancies": list(b.discrepancies),
        "literal": (
            None
            if b.literal is None
            else {
                "quartic": _ints(b.literal.quartic),
                "solutions": _s(b.literal.solutions),
                "system_hits": _s(b.literal.system_hits),
                "verified": _s(b.literal.verified),
            }
        ),
    }


def to_dict(report: PipelineReport) -> dict[str, Any]:
    oracle = report.oracle
    return {
        "generator": {"coeffs": _ints(report.generator)},
        "discriminant": _s(report.discriminant),
        "resolvent": {"coeffs": _ints(report.resolvent), "disc": _s(report.resolvent_disc)},
        "cubic_solutions": [{"u": _s(u), "v": _s(v)} for u, v in report.cubic_solutions],
        "cubic_complete_within_height": report.cubic_complete_within_height,
        "branches": [branch_to_dict(b) for b in report.branches],
        "classes": [{"x": _s(x), "y": _s(y), "z": _s(z)} for x, y, z in report.classes],
        "counts": _stringify(report.counts),
        "bounds": _stringify(report.bounds),
        "config": _stringify(report.config.to_dict()),
        "oracle": (
            None
            if oracle is None
            else {
                "box": _s(oracle.box),
                "oracle_classes": _s(oracle.oracle_classes),
                "missing_from_pipeline": [_ints(t) for t in oracle.missing_from_pipeline],
                "missing_from_oracle": [_ints(t) for t in oracle.missing_from_oracle],
                "agree": oracle.agree,
            }
        ),
        "warnings": list(report.warnings),
    }


def _i(s: str) -> int:
    return int(s)


def _it(values) -> tuple[int, ...]:
    return tuple(int(v) for v in values)


def branch_from_dict(d: dict[str, Any]) -> BranchReport:
    param = d["parametrization"]
    quartic = d["quartic"]
    literal = d.get("literal")
    return BranchReport(
        u=_i(d["u"]),
        v=_i(d["v"]),
        bezout=_it(d["bezout"]),
        conic=_it(d["conic"]),
        parametrization=None if param is None else tuple(_it(param[k]) for k in "xyz"),
        multiplier=_i(d["multiplier"]),
        quartic=None if quartic is None else _it(quartic["coeffs"]),
        quartic_disc=None if quartic is None else _i(quartic["disc"]),
        quartic_solutions=tuple(
            QuarticSolution(_i(s["p"]), _i(s["q"]), _i(s["rhs"])) for s in d["quartic_solutions"]
        ),
        triples=tuple(
            DerivedTriple(_i(t["x"]), _i(t["y"]), _i(t["z"]), t["verified"], t["provenance"])
            for t in d["triples"]
        ),
        fallback_used=d["fallback_used"],
        discrepancies=tuple(d.get("discrepancies", ())),
        literal=(
            None
            if literal is None
            else LiteralComparison(
                _it(literal["quartic"]),
                _i(literal["solutions"]),
                _i(literal["system_hits"]),
                _i(literal["verified"]),
            )
        ),
    )


def from_dict(d: dict[str, Any]) -> PipelineReport:
    cfg = d["config"]
    config = PipelineConfig(
        cubic_height=_i(cfg["cubic_height"]),
        quartic_height=_i(cfg["quartic_height"]),
        conic_point_bound=_i(cfg["conic_point_bound"]),
        oracle_box=_i(cfg["oracle_box"]),
        oracle_enabled=cfg["oracle_enabled"],
        compare_literal=cfg["compare_literal"],
    )
    o = d.get("oracle")
    oracle = None
    if o is not None:
        oracle = OracleComparison(
            box=_i(o["box"]),
            oracle_classes=_i(o["oracle_classes"]),
            missing_from_pipeline=tuple(_it(t) for t in o["missing_from_pipeline"]),
            missing_from_oracle=tuple(_it(t) for t in o["missing_from_oracle"]),
        )
    return PipelineReport(
        generator=_it(d["generator"]["coeffs"]),
        discriminant=_i(d["discriminant"]),
        resolvent=_it(d["resolvent"]["coeffs"]),
        resolvent_disc=_i(d["resolvent"]["disc"]),
        cubic_solutions=tuple((_i(c["u"]), _i(c["v"])) for c in d["cubic_solutions"]),
        cubic_complete_within_height=d["cubic_complete_within_height"],
        branches=tuple(branch_from_dict(b) for b in d["branches"]),
        classes=tuple((_i(c["x"]), _i(c["y"]), _i(c["z"])) for c in d["classes"]),
        config=config,
        oracle=oracle,
        warnings=tuple(d.get("warnings", ())),
    )


def to_json(report: PipelineReport) -> str:
    return json.dumps(to_dict(report), indent=2, sort_keys=True) + "\n"


def from_json(text: str) -> PipelineReport:
    return from_dict(json.loads(text))


def flatten(tree: Any, prefix: str = "") -> list[tuple[str, str]]:
    """Leaves of a JSON tree as (dotted path, value) pairs."""
    if isinstance(tree, dict):
        rows = []
        for k in sorted(tree):
            rows.extend(flatten(tree[k], f"{prefix}.{k}" if prefix else k))
        return rows
    if isinstance(tree, list):
        rows = []
        for i, v in enumerate(tree):
            rows.extend(flatten(v, f"{prefix}.{i}"))
        return rows
    if tree is None:
        return [(prefix, "null")]
    if isinstance(tree, bool):
        return [(prefix, "true" if tree else "false")]
    return [(prefix, str(tree))]


def rows_to_csv(rows: list[tuple[str, str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["path", "value"])
    writer.writerows(rows)
    return buf.getvalue()


def to_csv(report: PipelineReport) -> str:
    return rows_to_csv(flatten(to_dict(report)))


def to_text(report: PipelineReport) -> str:
    a1, a2, a3, a4 = report.generator
    lines = [
        f"generator: T^4 + ({a1})T^3 + ({a2})T^2 + ({a3})T + ({a4})",
        f"discriminant: {report.discriminant}",
        f"resolvent F: {list(report.resolvent)}  disc {report.resolvent_disc}",
        f"cubic solutions of F = +-1 with |v| <= {report.config.cubic_height}: "
        + ", ".join(f"({u}, {v})" for u, v in report.cubic_solutions),
    ]
    for b in report.branches:
        how = "fallback system search" if b.fallback_used else f"quartic {list(b.quartic)}"
        lines.append(
            f"  branch ({b.u}, {b.v}): {how}, multiplier {b.multiplier}, "
            f"{len(b.quartic_solutions)} quartic solutions with |q| <= {report.config.quartic_height}"
        )
        for t in b.triples:
            mark = "ok" if t.verified else "UNVERIFIED"
            lines.append(f"    ({t.x}, {t.y}, {t.z}) {mark} [{t.provenance}]")
        for msg in b.discrepancies:
            lines.append(f"    ! {msg}")
    lines.append(f"monogenization classes found: {len(report.classes)}")
    for x, y, z in report.classes:
        lines.append(f"  ({x}, {y}, {z})")
    bounds = report.bounds
    lines.append(
        f"bounds: cubic <= {bounds['cubic_max']}, quartic <= {bounds['quartic_max']}, "
        f"total <= {bounds['total_max']}: {'pass' if bounds['pass'] else 'FAIL'}"
    )
    if report.oracle is not None:
        o = report.oracle
        lines.append(
            f"oracle box {o.box}: {o.oracle_classes} classes, "
            f"missing from pipeline {list(o.missing_from_pipeline)}, "
            f"missing from oracle {list(o.missing_from_oracle)}"
        )
    for w in report.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def render(report: PipelineReport, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "text":
        return to_text(report)
    raise ValueError(f"unknown output format {fmt!r}")
