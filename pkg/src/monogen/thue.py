"""Bounded-height exact solver for Thue equations F(u, v) = r."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

from .algebra import BinaryFormZ, Mat2Z, UniPoly, disc_binary_form

logger = logging.getLogger(__name__)

CUBIC_THUE_MAX = 10
CUBIC_THUE_MAX_LARGE_DISC = 7
CUBIC_THUE_MAX_NEGATIVE_DISC = 5
QUARTIC_THUE_MAX = 276
QUARTIC_THUE_MAX_LARGE_DISC = 26
QUARTIC_THUE_MAX_NEGATIVE_DISC = 14

DEFAULT_CUBIC_HEIGHT = 10**4
DEFAULT_QUARTIC_HEIGHT = 10**3

Pair = tuple[int, int]


def _root_bound(p: UniPoly) -> int:
    """Integer strictly above |r| for every real root r (Cauchy)."""
    lc = abs(p.lc)
    return 2 + max(abs(c) for c in p.coeffs[:-1]) // lc if p.degree > 0 else 1


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _crossing(p: UniPoly, lo: int, hi: int) -> tuple[int, int] | None:
    """Unit bracket (k, k+1) around the sign change of p on [lo, hi].

    p must be monotone on [lo, hi] and have opposite nonzero signs at the ends.
    """
    slo = _sign(p(lo))
    while hi - lo > 1:
        mid = (lo + hi) // 2
        sm = _sign(p(mid))
        if sm == 0:
            return mid, mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _breakpoints(p: UniPoly) -> list[int]:
    """Sorted integers splitting the line into pieces where p is monotone.

    Pieces of length one may be non-monotone; they hold no interior integers.
    The outermost breakpoints enclose every real root of p.
    """
    bound = _root_bound(p)
    points = {-bound, bound}
    if p.degree >= 2:
        dp = p.derivative()
        dpoints = _breakpoints(dp)
        points.update(dpoints)
        for lo, hi in zip(dpoints, dpoints[1:]):
            if hi - lo == 1:
                continue
            slo, shi = _sign(dp(lo)), _sign(dp(hi))
            if slo == 0 or shi == 0 or slo == shi:
                continue
            k0, k1 = _crossing(dp, lo, hi)
            points.update((k0, k1))
    return sorted(points)


def integer_roots(p: UniPoly) -> list[int]:
    """All integer roots of a nonzero integer polynomial, exactly."""
    if p.is_zero():
        raise ValueError("zero polynomial has every integer as a root")
    if p.degree <= 0:
        return []
    if p.degree == 1:
        a0, a1 = p.coeffs
        return [-a0 // a1] if a0 % a1 == 0 else []
    roots: set[int] = set()
    pts = _breakpoints(p)
    for x in pts:
        if p(x) == 0:
            roots.add(x)
    for lo, hi in zip(pts, pts[1:]):
        if hi - lo <= 1:
            continue
        slo, shi = _sign(p(lo)), _sign(p(hi))
        if slo == 0 or shi == 0 or slo == shi:
            continue
        k0, k1 = _crossing(p, lo, hi)
        if p(k0) == 0:
            roots.add(k0)
        if p(k1) == 0:
            roots.add(k1)
    return sorted(roots)


def normalize_pair(u: int, v: int) -> Pair:
    """Representative of {(u, v), (-u, -v)} with v > 0, or v = 0 and u > 0."""
    if v < 0 or (v == 0 and u < 0):
        return -u, -v
    return u, v


@dataclass(frozen=True)
class ThueProblem:
    form: BinaryFormZ
    rhs_values: frozenset[int]
    height: int

    def __init__(self, form: BinaryFormZ, rhs_values: Iterable[int], height: int):
        rhs = frozenset(int(r) for r in rhs_values)
        if not rhs:
            raise ValueError("rhs_values must be nonempty")
        if height < 1:
            raise ValueError("height must be >= 1")
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "rhs_values", rhs)
        object.__setattr__(self, "height", int(height))


@dataclass
class SolutionSet:
    """Solutions up to (u, v) ~ (-u, -v), sorted.

    The stored member of each class is one that actually satisfies the
    equation; when both members do, the one with v > 0 (or v = 0, u > 0).
    ``complete_within_height`` is a claim about the box |v| <= height only.
    """

    solutions: list[Pair] = field(default_factory=list)
    complete_within_height: bool = True
    height: int | None = None
    infinite_family: bool = False
    warnings: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def __contains__(self, pair) -> bool:
        u, v = pair
        return (u, v) in self.solutions or (-u, -v) in self.solutions

    def classes(self) -> set[Pair]:
        return {normalize_pair(u, v) for u, v in self.solutions}


def dedupe_pairs(pairs: Iterable[Pair]) -> list[Pair]:
    found = set(pairs)
    out = set()
    for u, v in found:
        if (-u, -v) in found:
            out.add(normalize_pair(u, v))
        else:
            out.add((u, v))
    return sorted(out)


def has_rational_linear_factor(form: BinaryFormZ) -> bool:
    """True if F has a factor aU + bV with integers a, b."""
    c0 = form.coeffs[0]
    if c0 == 0:
        return True
    n = form.degree
    f = form.dehomogenize()
    # Integer roots of c0^(n-1) f(s / c0), a monic polynomial.
    monic = UniPoly(fk * c0 ** (n - 1 - k) if k < n else 1 for k, fk in enumerate(f.coeffs))
    return bool(integer_roots(monic))


def _infinite_family_reason(form: BinaryFormZ, rhs: frozenset[int]) -> str | None:
    """Why F = r could have infinitely many solutions, or None.

    With nonzero discriminant this only happens for r = 0 along a rational
    linear factor. Degenerate forms (repeated factors) are flagged outright.
    """
    if disc_binary_form(form) == 0:
        return "potentially infinite family: form has a repeated factor"
    if 0 in rhs and has_rational_linear_factor(form):
        return "potentially infinite family: rhs 0 and a rational linear factor"
    return None


def solve_bounded(problem: ThueProblem) -> SolutionSet:
    """All (u, v) with |v| <= height and F(u, v) in rhs_values.

    u is unrestricted: for each fixed v the integer roots of F(U, v) - r are
    extracted exactly.
    """
    form = problem.form
    if form.degree < 3:
        raise ValueError("not a Thue form: degree must be at least 3")
    if form.is_zero():
        raise ValueError("not a Thue form: zero form")
    result = SolutionSet(height=problem.height)
    reason = _infinite_family_reason(form, problem.rhs_values)
    if reason:
        result.infinite_family = True
        result.complete_within_height = False
        result.warnings.append(reason)
    n = form.degree
    flip = -1 if n % 2 else 1
    # F(-u, -v) = (-1)^n F(u, v): scan v >= 0 and recover v < 0 by negation.
    targets = sorted(problem.rhs_values | {flip * r for r in problem.rhs_values})
    found: set[Pair] = set()
    for v in range(problem.height + 1):
        base = form.in_u(v)
        for t in targets:
            poly = base - UniPoly([t])
            if poly.is_zero():
                result.infinite_family = True
                result.complete_within_height = False
                msg = f"potentially infinite family: F(u, {v}) = {t} for every u"
                if msg not in result.warnings:
                    result.warnings.append(msg)
                continue
            for u in integer_roots(poly):
                if t in problem.rhs_values:
                    found.add((u, v))
                if flip * t in problem.rhs_values:
                    found.add((-u, -v))
    result.solutions = dedupe_pairs(found)
    logger.debug("solve_bounded %s -> %d classes", form.coeffs, len(result.solutions))
    return result


def transport_solutions(form: BinaryFormZ, A: Mat2Z, solutions: SolutionSet) -> SolutionSet:
    """Carry solutions of F = r to solutions of F_{A^-1} = r.

    Since F_{A^-1}(A w) = F(w), each (u, v) is sent to A (u, v). With A the
    Bezout matrix of a primitive solution (u0, v0), that solution lands on
    (1, 0).
    """
    if abs(A.det) != 1:
        raise ValueError(f"transport needs |det A| = 1, got {A.det}")
    moved = [A.apply(u, v) for u, v in solutions.solutions]
    return SolutionSet(
        solutions=dedupe_pairs(moved),
        complete_within_height=False,
        height=None,
        infinite_family=solutions.infinite_family,
        warnings=list(solutions.warnings),
    )
