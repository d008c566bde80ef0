"""Enumerate monogenizations of Z[xi] through cubic and quartic Thue equations.

A triple (x, y, z) stands for the class of x xi + y xi^2 + z xi^3 + c, c in Z,
up to sign. It generates Z[xi] exactly when (Q1, Q2)(x, y, z) = (u, v) with
F(u, v) = +-1. The pipeline solves F = +-1, then for each solution class
+-(u0, v0) solves the two systems (Q1, Q2) = +-(u0, v0) through a quartic
Thue equation on a parametrized conic.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from math import isqrt
from typing import Any

from .algebra import TernaryQuadFormZ, disc_binary_form
from .forms import (
    DEFAULT_CONIC_POINT_BOUND,
    ConicParametrization,
    QuadraticPair,
    QuarticGenerator,
    Triple,
    bezout_matrix,
    branch_quartic,
    cubic_resolvent,
    index_of,
    primitive_divisors,
    quadratic_pair,
    quartic_thue_form_trivial,
)
from .oracle import DEFAULT_TRIPLE_BOX, oracle_monogenizers
from .thue import (
    CUBIC_THUE_MAX,
    CUBIC_THUE_MAX_LARGE_DISC,
    CUBIC_THUE_MAX_NEGATIVE_DISC,
    DEFAULT_CUBIC_HEIGHT,
    DEFAULT_QUARTIC_HEIGHT,
    QUARTIC_THUE_MAX,
    QUARTIC_THUE_MAX_LARGE_DISC,
    QUARTIC_THUE_MAX_NEGATIVE_DISC,
    ThueProblem,
    normalize_pair,
    solve_bounded,
)

logger = logging.getLogger(__name__)

MONOGENIZATIONS_MAX = 2760
MONOGENIZATIONS_MAX_LARGE_DISC = 182
MONOGENIZATIONS_MAX_NEGATIVE_DISC = 70


@dataclass(frozen=True)
class PipelineConfig:
    cubic_height: int = DEFAULT_CUBIC_HEIGHT
    quartic_height: int = DEFAULT_QUARTIC_HEIGHT
    conic_point_bound: int = DEFAULT_CONIC_POINT_BOUND
    oracle_box: int = DEFAULT_TRIPLE_BOX
    oracle_enabled: bool = False
    compare_literal: bool = False

    def __post_init__(self):
        for name in ("cubic_height", "quartic_height", "conic_point_bound", "oracle_box"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def canonicalize(x: int, y: int, z: int) -> Triple:
    """Representative of +-(x, y, z) whose first nonzero coordinate is positive."""
    for c in (x, y, z):
        if c > 0:
            return (x, y, z)
        if c < 0:
            return (-x, -y, -z)
    raise ValueError("the zero triple is not a monogenizer")


def verify_monogenizer(P: QuarticGenerator, x: int, y: int, z: int) -> bool:
    return index_of(P, x, y, z) == 1


@dataclass(frozen=True)
class QuarticSolution:
    p: int
    q: int
    rhs: int


@dataclass(frozen=True)
class DerivedTriple:
    x: int
    y: int
    z: int
    verified: bool
    provenance: str


@dataclass(frozen=True)
class LiteralComparison:
    """Outcome of the literal construction on a branch, for reporting only."""

    quartic: tuple[int, ...]
    solutions: int
    system_hits: int
    verified: int


@dataclass(frozen=True)
class BranchReport:
    u: int
    v: int
    bezout: tuple[int, int, int, int]
    conic: tuple[int, ...]
    parametrization: tuple[tuple[int, ...], ...] | None
    multiplier: int
    quartic: tuple[int, ...] | None
    quartic_disc: int | None
    quartic_solutions: tuple[QuarticSolution, ...]
    triples: tuple[DerivedTriple, ...]
    fallback_used: bool
    discrepancies: tuple[str, ...] = ()
    literal: LiteralComparison | None = None

    @property
    def key(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class OracleComparison:
    box: int
    oracle_classes: int
    missing_from_pipeline: tuple[Triple, ...]
    missing_from_oracle: tuple[Triple, ...]

    @property
    def agree(self) -> bool:
        return not self.missing_from_pipeline and not self.missing_from_oracle


@dataclass(frozen=True)
class PipelineReport:
    generator: tuple[int, int, int, int]
    discriminant: int
    resolvent: tuple[int, int, int, int]
    resolvent_disc: int
    cubic_solutions: tuple[tuple[int, int], ...]
    cubic_complete_within_height: bool
    branches: tuple[BranchReport, ...]
    classes: tuple[Triple, ...]
    config: PipelineConfig
    oracle: OracleComparison | None = None
    warnings: tuple[str, ...] = ()

    @property
    def counts(self) -> dict[str, Any]:
        return {
            "cubic": len(self.cubic_solutions),
            "per_branch": [len(b.quartic_solutions) for b in self.branches],
            "total": len(self.classes),
        }

    @property
    def bounds(self) -> dict[str, Any]:
        return bound_diagnostics(self)


def bound_diagnostics(report: PipelineReport) -> dict[str, Any]:
    """Check the unconditional solution-count bounds; report the conditional ones.

    Only cubic <= 10, per-branch quartic <= 276 and total <= 2760 are asserted;
    the large-discriminant bounds are listed for information.
    """
    failures = []
    n_cubic = len(report.cubic_solutions)
    if n_cubic > CUBIC_THUE_MAX:
        failures.append(f"cubic classes {n_cubic} > {CUBIC_THUE_MAX}")
    for b in report.branches:
        if len(b.quartic_solutions) > QUARTIC_THUE_MAX:
            failures.append(
                f"branch ({b.u}, {b.v}) quartic classes {len(b.quartic_solutions)} > {QUARTIC_THUE_MAX}"
            )
    if len(report.classes) > MONOGENIZATIONS_MAX:
        failures.append(f"total classes {len(report.classes)} > {MONOGENIZATIONS_MAX}")
    negative = report.discriminant < 0
    return {
        "cubic_max": CUBIC_THUE_MAX,
        "quartic_max": QUARTIC_THUE_MAX,
        "total_max": MONOGENIZATIONS_MAX,
        "pass": not failures,
        "failures": failures,
        "discriminant_sign": -1 if negative else 1,
        "informational": {
            "cubic_max_large_disc": CUBIC_THUE_MAX_LARGE_DISC,
            "cubic_max_negative_disc": CUBIC_THUE_MAX_NEGATIVE_DISC,
            "quartic_max_large_disc": QUARTIC_THUE_MAX_LARGE_DISC,
            "quartic_max_negative_disc": QUARTIC_THUE_MAX_NEGATIVE_DISC,
            "total_max_large_disc": MONOGENIZATIONS_MAX_LARGE_DISC,
            "total_max_negative_disc": MONOGENIZATIONS_MAX_NEGATIVE_DISC,
            "applicable_total_max_large_disc": (
                MONOGENIZATIONS_MAX_NEGATIVE_DISC if negative else MONOGENIZATIONS_MAX_LARGE_DISC
            ),
        },
    }


def _solve_for_z(Q: TernaryQuadFormZ, x: int, y: int, target: int) -> list[int]:
    a = Q.c_zz
    b = Q.c_xz * x + Q.c_yz * y
    c = Q.c_xx * x * x + Q.c_xy * x * y + Q.c_yy * y * y - target
    if a == 0:
        if b == 0:
            return []
        return [-c // b] if c % b == 0 else []
    disc = b * b - 4 * a * c
    if disc < 0 or isqrt(disc) ** 2 != disc:
        return []
    r = isqrt(disc)
    return sorted({n // (2 * a) for n in (-b + r, -b - r) if n % (2 * a) == 0})


def search_system(pair: QuadraticPair, u0: int, v0: int, bound: int) -> set[Triple]:
    """Sign-normalized solutions of Q1 = u0, Q2 = v0 with |x|, |y|, |z| <= bound.

    Solves Q2 = v0 for z at each (x, y) instead of scanning the whole cube.
    When Q2 does not involve z at some (x, y) the z-range is scanned.
    """
    out: set[Triple] = set()
    q1, q2 = pair.q1, pair.q2
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if q2.c_zz == 0 and q2.c_xz * x + q2.c_yz * y == 0:
                zs = range(-bound, bound + 1) if q2(x, y, 0) == v0 else []
            else:
                zs = _solve_for_z(q2, x, y, v0)
            for z in zs:
                if abs(z) <= bound and (x, y, z) != (0, 0, 0) and q1(x, y, z) == u0:
                    out.add(canonicalize(x, y, z))
    return out


def _param_forms(param: ConicParametrization | None):
    if param is None:
        return None
    return (param.x_form.coeffs, param.y_form.coeffs, param.z_form.coeffs)


def _literal_comparison(P, pair, u0, v0, height) -> LiteralComparison:
    lit = branch_quartic(P, u0, v0, construction="literal")
    if lit.form.is_zero():
        # Q1' restricted to Q2 = 0 can vanish identically; nothing to solve.
        return LiteralComparison(lit.form.coeffs, 0, 0, 0)
    sols = solve_bounded(ThueProblem(lit.form, {1, -1}, height))
    hits = verified = 0
    for p, q in sols:
        t = lit.parametrization(p, q)
        if t == (0, 0, 0):
            continue
        if pair(*t) in ((u0, v0), (-u0, -v0)):
            hits += 1
        if verify_monogenizer(P, *t):
            verified += 1
    return LiteralComparison(lit.form.coeffs, len(sols), hits, verified)


def _run_branch(
    P: QuarticGenerator, pair: QuadraticPair, u0: int, v0: int, cfg: PipelineConfig
) -> BranchReport:
    if (u0, v0) == (1, 0):
        bq = quartic_thue_form_trivial(P)
    else:
        bq = branch_quartic(P, u0, v0, conic_point_bound=cfg.conic_point_bound)
    A = bq.bezout if bq is not None else bezout_matrix(u0, v0)
    conic = pair.q1 * v0 - pair.q2 * u0
    triples: dict[Triple, DerivedTriple] = {}
    discrepancies: list[str] = []
    quartic_solutions: list[QuarticSolution] = []
    label = f"branch({u0},{v0})"

    if bq is not None:
        mult = bq.multiplier
        rhs_values = {s * e * e for e in primitive_divisors(mult) for s in (1, -1)}
        sols = solve_bounded(ThueProblem(bq.form, rhs_values, cfg.quartic_height))
        for p, q in sols:
            r = bq.form(p, q)
            quartic_solutions.append(QuarticSolution(p, q, r))
            sign = 1 if r > 0 else -1
            e = isqrt(abs(r))
            image = bq.parametrization(p, q)
            if any(c % e for c in image):
                continue
            t = tuple(c // e for c in image)
            if t == (0, 0, 0):
                continue
            if pair(*t) != (sign * u0, sign * v0):
                discrepancies.append(f"quartic solution ({p}, {q}) gives {t} off the system")
                continue
            ok = verify_monogenizer(P, *t)
            ct = canonicalize(*t)
            if not ok:
                discrepancies.append(f"quartic solution ({p}, {q}) gives unverified {ct}")
            if ct not in triples:
                triples[ct] = DerivedTriple(*ct, ok, f"{label}:quartic({p},{q})")
    fallback = bq is None
    if fallback or cfg.oracle_enabled:
        found = search_system(pair, u0, v0, cfg.oracle_box) | search_system(
            pair, -u0, -v0, cfg.oracle_box
        )
        for ct in sorted(found):
            if ct in triples:
                continue
            ok = verify_monogenizer(P, *ct)
            if not fallback:
                discrepancies.append(f"system search found {ct} missed by the quartic stage")
            triples[ct] = DerivedTriple(*ct, ok, f"{label}:system-search")
    literal = None
    if cfg.compare_literal and (u0, v0) != (1, 0):
        literal = _literal_comparison(P, pair, u0, v0, cfg.quartic_height)
    quartic_disc = None
    if bq is not None:
        quartic_disc = disc_binary_form(bq.form)
        if quartic_disc == 0:
            discrepancies.append("branch quartic form has zero discriminant")
    return BranchReport(
        u=u0,
        v=v0,
        bezout=tuple(A.as_list()),
        conic=conic.as_tuple(),
        parametrization=_param_forms(bq.parametrization) if bq else None,
        multiplier=bq.multiplier if bq else 1,
        quartic=bq.form.coeffs if bq else None,
        quartic_disc=quartic_disc,
        quartic_solutions=tuple(sorted(quartic_solutions, key=lambda s: (s.p, s.q))),
        triples=tuple(sorted(triples.values(), key=lambda t: (t.x, t.y, t.z))),
        fallback_used=fallback,
        discrepancies=tuple(discrepancies),
        literal=literal,
    )


def enumerate_monogenizations(
    P: QuarticGenerator, cfg: PipelineConfig | None = None
) -> PipelineReport:
    """Run the cubic stage, every branch, verification and deduplication."""
    cfg = cfg or PipelineConfig()
    F = cubic_resolvent(P)
    pair = quadratic_pair(P)
    cubic = solve_bounded(ThueProblem(F, {1, -1}, cfg.cubic_height))
    keys = sorted({normalize_pair(u, v) for u, v in cubic.solutions})
    logger.info("%s: %d cubic classes", P, len(keys))
    branches = tuple(_run_branch(P, pair, u, v, cfg) for u, v in keys)
    classes = sorted({(t.x, t.y, t.z) for b in branches for t in b.triples if t.verified})
    warnings = list(cubic.warnings)
    oracle = None
    if cfg.oracle_enabled:
        oracle = compare_with_oracle(P, classes, cfg.oracle_box)
        if not oracle.agree:
            warnings.append("pipeline and oracle disagree inside the oracle box")
    return PipelineReport(
        generator=P.coeffs,
        discriminant=P.discriminant,
        resolvent=F.coeffs,
        resolvent_disc=disc_binary_form(F),
        cubic_solutions=tuple(keys),
        cubic_complete_within_height=cubic.complete_within_height,
        branches=branches,
        classes=tuple(classes),
        config=cfg,
        oracle=oracle,
        warnings=tuple(warnings),
    )


def compare_with_oracle(P: QuarticGenerator, classes, box: int) -> OracleComparison:
    truth = oracle_monogenizers(P, box)
    inside = {c for c in classes if max(abs(v) for v in c) <= box}
    return OracleComparison(
        box=box,
        oracle_classes=len(truth),
        missing_from_pipeline=tuple(sorted(truth - inside)),
        missing_from_oracle=tuple(sorted(inside - truth)),
    )
