"""Forms attached to a monic quartic generator.

For P(T) = T^4 + a1 T^3 + a2 T^2 + a3 T + a4 this builds the cubic resolvent
F(U, V), the ternary quadratic pair (Q1, Q2), the conic of each cubic
solution, conic parametrizations, the quartic Thue form of each branch and
the sextic index form of Z[xi] in the basis {1, xi, xi^2, xi^3}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt
from typing import Iterable, Sequence

from sympy import divisors, factorint

from .algebra import (
    BinaryFormZ,
    Mat2Z,
    TernaryForm,
    TernaryQuadFormZ,
    UniPoly,
    binomial_shift,
    compose_binary,
    det3,
    det_generic,
    disc_binary_form,
    disc_poly,
    extended_gcd,
)

DEFAULT_CONIC_POINT_BOUND = 10**4

Triple = tuple[int, int, int]


class ReducibleGeneratorError(ValueError):
    """The quartic is reducible over Q or has a repeated root."""


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def quartic_factorization(a1: int, a2: int, a3: int, a4: int) -> str | None:
    """Describe a factorization of the monic quartic over Z, or None.

    By Gauss's lemma a monic integer quartic is reducible over Q exactly when
    it has an integer root or splits as two monic integer quadratics.
    """
    p = UniPoly([a4, a3, a2, a1, 1])
    if a4 == 0:
        return "root 0"
    for d in divisors(abs(a4)):
        for r in (d, -d):
            if p(r) == 0:
                return f"root {r}"
    # (T^2 + bT + c)(T^2 + dT + e): c e = a4, b + d = a1, c + e + b d = a2,
    # b e + c d = a3.
    for c in divisors(abs(a4)):
        for cs in (c, -c):
            e = a4 // cs
            prod = a2 - cs - e
            disc = a1 * a1 - 4 * prod
            if not _is_square(disc):
                continue
            root = isqrt(disc)
            for b in {(a1 + root) // 2, (a1 - root) // 2}:
                if (a1 + root) % 2:
                    continue
                d = a1 - b
                if b * d == prod and b * e + cs * d == a3:
                    return f"(T^2{b:+d}T{cs:+d})(T^2{d:+d}T{e:+d})"
    return None


@dataclass(frozen=True)
class QuarticGenerator:
    """Monic irreducible quartic T^4 + a1 T^3 + a2 T^2 + a3 T + a4."""

    a1: int
    a2: int
    a3: int
    a4: int

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {type(value).__name__}")
        factor = quartic_factorization(self.a1, self.a2, self.a3, self.a4)
        if factor is not None:
            raise ReducibleGeneratorError(f"reducible quartic: {factor}")
        if self.discriminant == 0:
            raise ReducibleGeneratorError("quartic has a repeated root")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> QuarticGenerator:
        if len(coeffs) != 4:
            raise ValueError(f"expected 4 coefficients a1..a4, got {len(coeffs)}")
        return cls(*(int(c) for c in coeffs))

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4)

    @property
    def poly(self) -> UniPoly:
        return UniPoly([self.a4, self.a3, self.a2, self.a1, 1])

    @cached_property
    def discriminant(self) -> int:
        return disc_poly(self.poly)

    def __str__(self) -> str:
        return "T^4" + "".join(
            f" {'+' if c >= 0 else '-'} {abs(c)}{t}"
            for c, t in zip(self.coeffs, ("T^3", "T^2", "T", ""))
            if c
        )


def cubic_resolvent(P: QuarticGenerator) -> BinaryFormZ:
    """U^3 - a2 U^2 V + (a1 a3 - 4 a4) U V^2 + (4 a2 a4 - a3^2 - a1^2 a4) V^3."""
    a1, a2, a3, a4 = P.coeffs
    return BinaryFormZ([1, -a2, a1 * a3 - 4 * a4, 4 * a2 * a4 - a3 * a3 - a1 * a1 * a4])


@dataclass(frozen=True)
class QuadraticPair:
    q1: TernaryQuadFormZ
    q2: TernaryQuadFormZ

    def __call__(self, x: int, y: int, z: int) -> tuple[int, int]:
        return self.q1(x, y, z), self.q2(x, y, z)


def quadratic_pair(P: QuarticGenerator) -> QuadraticPair:
    a1, a2, a3, a4 = P.coeffs
    q1 = TernaryQuadFormZ(
        c_xx=1,
        c_yy=a2,
        c_zz=-a1 * a3 + a2 * a2 + a4,
        c_xy=-a1,
        c_xz=a1 * a1 - 2 * a2,
        c_yz=a3 - a1 * a2,
    )
    q2 = TernaryQuadFormZ(c_yy=1, c_zz=a2, c_xz=-1, c_yz=-a1)
    return QuadraticPair(q1, q2)


def _check_primitive(u0: int, v0: int) -> None:
    if (u0, v0) == (0, 0) or gcd(u0, v0) != 1:
        raise ValueError(f"({u0}, {v0}) is not a primitive pair")


def combined_conic(pair: QuadraticPair, u0: int, v0: int) -> TernaryQuadFormZ:
    """v0 Q1 - u0 Q2, which vanishes on every solution of Q1 = u0, Q2 = v0."""
    _check_primitive(u0, v0)
    return pair.q1 * v0 - pair.q2 * u0


def gram_determinant_check(pair: QuadraticPair, F: BinaryFormZ, u0: int, v0: int) -> int:
    """|det G| for the doubled Gram matrix G of u0 Q2 - v0 Q1.

    G = 2M, so the classical 4|det M| = |F(u0, v0)| reads |det G| = 2|F(u0, v0)|.
    """
    q = pair.q2 * u0 - pair.q1 * v0
    return abs(q.gram_det())


def bezout_matrix(u0: int, v0: int) -> Mat2Z:
    """A = [[s, t], [-v0, u0]] with s u0 + t v0 = 1, so A (u0, v0) = (1, 0)."""
    g, s, t = extended_gcd(u0, v0)
    if g != 1:
        raise ValueError(f"gcd({u0}, {v0}) = {g}, expected 1")
    return Mat2Z(s, t, -v0, u0)


@dataclass(frozen=True)
class ConicParametrization:
    """Quadratic forms (X, Y, Z)(p, q) whose image lies on a conic.

    Every primitive integer zero of the conic equals +-(X, Y, Z)(p, q) / e for
    some integers p, q and a positive divisor e of ``multiplier``.
    """

    x_form: BinaryFormZ
    y_form: BinaryFormZ
    z_form: BinaryFormZ
    multiplier: int = 1

    def __call__(self, p: int, q: int) -> Triple:
        return self.x_form(p, q), self.y_form(p, q), self.z_form(p, q)

    def compose(self, Q: TernaryQuadFormZ) -> BinaryFormZ:
        return Q.compose(self.x_form, self.y_form, self.z_form)


@dataclass(frozen=True)
class BranchQuarticForm:
    form: BinaryFormZ
    source_solution: tuple[int, int]
    bezout: Mat2Z
    parametrization: ConicParametrization | None = None
    conic: TernaryQuadFormZ | None = None
    construction: str = "conic"

    @property
    def multiplier(self) -> int:
        return self.parametrization.multiplier if self.parametrization else 1


def trivial_parametrization(P: QuarticGenerator) -> ConicParametrization:
    """X = P^2 - a1 PQ + a2 Q^2, Y = PQ, Z = Q^2, the zero set of Q2."""
    return ConicParametrization(
        x_form=BinaryFormZ([1, -P.a1, P.a2]),
        y_form=BinaryFormZ([0, 1, 0]),
        z_form=BinaryFormZ([0, 0, 1]),
        multiplier=1,
    )


def shifted_quartic(P: QuarticGenerator) -> BinaryFormZ:
    """Q^4 P(P/Q - a1) as a binary form in (P, Q)."""
    shifted = binomial_shift(P.poly, -P.a1)
    return BinaryFormZ(reversed(shifted.coeffs))


def quartic_thue_form_trivial(P: QuarticGenerator) -> BranchQuarticForm:
    """Q1 composed with the trivial parametrization: the branch of (1, 0)."""
    pair = quadratic_pair(P)
    param = trivial_parametrization(P)
    return BranchQuarticForm(
        form=param.compose(pair.q1),
        source_solution=(1, 0),
        bezout=Mat2Z.identity(),
        parametrization=param,
        conic=-pair.q2,
        construction="trivial",
    )


# --- rational points on conics ---------------------------------------------


def _diagonalize(Q: TernaryQuadFormZ) -> list[Fraction]:
    """Diagonal entries of a form rationally equivalent to Q."""
    G = [[Fraction(c, 2) for c in row] for row in Q.gram()]
    diag = []
    n = 3
    for k in range(n):
        if G[k][k] == 0:
            for j in range(k + 1, n):
                if G[j][j] != 0:
                    G[k], G[j] = G[j], G[k]
                    for row in G:
                        row[k], row[j] = row[j], row[k]
                    break
            else:
                for j in range(k + 1, n):
                    if G[k][j] != 0:
                        # e_k -> e_k + e_j gives diagonal entry 2 G[k][j].
                        for row in G:
                            row[k] += row[j]
                        for c in range(n):
                            G[k][c] += G[j][c]
                        break
        pivot = G[k][k]
        diag.append(pivot)
        if pivot == 0:
            continue
        for i in range(k + 1, n):
            f = G[i][k] / pivot
            for j in range(k, n):
                G[i][j] -= f * G[k][j]
            for j in range(k, n):
                G[j][i] = G[i][j]
    return diag


def _squarefree_int(x: Fraction) -> int:
    num = x.numerator * x.denominator
    sign = -1 if num < 0 else 1
    out = 1
    for p, e in factorint(abs(num)).items():
        if e % 2:
            out *= p
    return sign * out


def _legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def hilbert_symbol(a: int, b: int, p: int) -> int:
    """(a, b)_p for nonzero integers a, b and a prime p."""

    def split(x: int) -> tuple[int, int]:
        e = 0
        while x % p == 0:
            x //= p
            e += 1
        return e, x

    alpha, u = split(a)
    beta, v = split(b)
    if p == 2:
        eps = lambda w: ((w - 1) // 2) % 2  # noqa: E731
        omega = lambda w: ((w * w - 1) // 8) % 2  # noqa: E731
        exponent = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if exponent % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    return sign * _legendre(u, p) ** beta * _legendre(v, p) ** alpha


def is_isotropic(Q: TernaryQuadFormZ) -> bool:
    """Whether a nondegenerate ternary form has a nontrivial rational zero.

    Hasse-Minkowski: check R and every Q_p with p | 2abc, where <a, b, c> is
    a squarefree diagonalization; over Q_p a rank-3 form is isotropic iff
    (-1, -abc)_p equals the Hasse invariant prod_{i<j} (a_i, a_j)_p.
    """
    diag = [_squarefree_int(d) for d in _diagonalize(Q)]
    if any(d == 0 for d in diag):
        return True
    if all(d > 0 for d in diag) or all(d < 0 for d in diag):
        return False
    a, b, c = diag
    primes = {2}
    for d in diag:
        primes.update(factorint(abs(d)).keys())
    for p in sorted(primes):
        hasse = hilbert_symbol(a, b, p) * hilbert_symbol(a, c, p) * hilbert_symbol(b, c, p)
        if hilbert_symbol(-1, -a * b * c, p) != hasse:
            return False
    return True


def _solve_coord(Q: TernaryQuadFormZ, index: int, fixed: tuple[int, int]) -> list[int]:
    """Integers w with Q = 0 when coordinate ``index`` is w and the others fixed."""
    G = Q.gram()
    others = [i for i in range(3) if i != index]
    vals = dict(zip(others, fixed))
    a = G[index][index] // 2
    b = sum(G[index][j] * vals[j] for j in others)
    i, j = others
    c = (G[i][i] // 2) * vals[i] ** 2 + G[i][j] * vals[i] * vals[j] + (G[j][j] // 2) * vals[j] ** 2
    if a == 0:
        if b == 0:
            return []
        return [-c // b] if c % b == 0 else []
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc:
        return []
    out = set()
    for num in (-b + r, -b - r):
        if num % (2 * a) == 0:
            out.add(num // (2 * a))
    return sorted(out)


def _canonical_triple(v: Triple) -> Triple:
    for c in v:
        if c:
            return v if c > 0 else (-v[0], -v[1], -v[2])
    return v


def _point_order(v: Triple) -> tuple:
    x, y, z = v
    return (abs(z), abs(y), abs(x), z, y, x)


def _shell_zeros(Q: TernaryQuadFormZ, h: int) -> set[Triple]:
    """Primitive zeros of Q with max(|x|, |y|, |z|) = h, sign-normalized."""
    found: set[Triple] = set()
    if h == 0:
        return found
    rim = [(a, b) for a in range(-h, h + 1) for b in range(-h, h + 1) if max(abs(a), abs(b)) == h]
    inner = range(-h + 1, h)
    # max(|y|, |z|) = h, x free in [-h, h]
    for y, z in rim:
        for x in _solve_coord(Q, 0, (y, z)):
            if abs(x) <= h:
                found.add((x, y, z))
        if Q.c_xx == 0 and Q.c_xy * y + Q.c_xz * z == 0 and Q(0, y, z) == 0:
            found.update((x, y, z) for x in range(-h, h + 1))
    # |x| = h, |y|, |z| < h
    for x in (-h, h):
        for y in inner:
            for z in _solve_coord(Q, 2, (x, y)):
                if abs(z) < h:
                    found.add((x, y, z))
            if Q.c_zz == 0 and Q.c_xz * x + Q.c_yz * y == 0 and Q(x, y, 0) == 0:
                found.update((x, y, z) for z in inner)
    return {
        _canonical_triple(v)
        for v in found
        if Q(*v) == 0 and gcd(gcd(v[0], v[1]), v[2]) == 1
    }


def conic_point(Q: TernaryQuadFormZ, bound: int = DEFAULT_CONIC_POINT_BOUND) -> Triple | None:
    """A primitive zero of Q with coordinates at most ``bound``, or None.

    Candidates are ordered by max(|x|, |y|, |z|), then lexicographically by
    (|z|, |y|, |x|, z, y, x) on the sign-normalized triple. Anisotropic
    nondegenerate forms are rejected without searching.
    """
    if Q.is_zero():
        raise ValueError("conic_point of the zero form")
    if Q.gram_det() != 0 and not is_isotropic(Q):
        return None
    for h in range(1, bound + 1):
        zeros = _shell_zeros(Q, h)
        if zeros:
            return min(zeros, key=_point_order)
    return None


def unimodular_completion(v: Triple) -> list[list[int]]:
    """3x3 integer matrix of determinant 1 whose first column is v."""
    a, b, c = v
    if gcd(gcd(a, b), c) != 1:
        raise ValueError(f"{v} is not primitive")

    def step(x: int, y: int) -> list[list[int]]:
        if x == 0 and y == 0:
            return [[1, 0], [0, 1]]
        g, s, t = extended_gcd(x, y)
        return [[s, t], [-y // g, x // g]]

    # U v = e1, built from two 2x2 steps; then M = U^-1.
    s1 = step(b, c)
    g = s1[0][0] * b + s1[0][1] * c
    U1 = [[1, 0, 0], [0, s1[0][0], s1[0][1]], [0, s1[1][0], s1[1][1]]]
    s2 = step(a, g)
    U2 = [[s2[0][0], s2[0][1], 0], [s2[1][0], s2[1][1], 0], [0, 0, 1]]
    U = _matmul(U2, U1)
    M = _adjugate(U)
    if det3(U) != 1:
        M = [[-x for x in row] for row in M]
    assert [M[i][0] for i in range(3)] == list(v)
    return M


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def _adjugate(m):
    def minor(i, j):
        rows = [r for k, r in enumerate(m) if k != i]
        sub = [[x for c, x in enumerate(r) if c != j] for r in rows]
        return sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]

    return [[(-1) ** (i + j) * minor(j, i) for j in range(3)] for i in range(3)]


def conic_parametrize(Q: TernaryQuadFormZ, point: Triple) -> ConicParametrization:
    """Parametrize the conic Q = 0 by the pencil of lines through ``point``.

    In coordinates w = (r, s, t) with point = e1, Q(M w) = r L(s, t) + C(s, t)
    and the second intersection of the line (s : t) = (p : q) is
    (-C(p, q), p L(p, q), q L(p, q)). The content of that triple at coprime
    (p, q) divides Res(L, C) = C(l2, -l1).
    """
    if Q.gram_det() == 0:
        raise ValueError("degenerate conic")
    if Q(*point) != 0:
        raise ValueError(f"{point} is not on the conic")
    M = unimodular_completion(point)
    moved = Q.substitute(M)
    assert moved.c_xx == 0
    l1, l2 = moved.c_xy, moved.c_xz
    C = BinaryFormZ([moved.c_yy, moved.c_yz, moved.c_zz])
    L = BinaryFormZ([l1, l2])
    p_form = BinaryFormZ([1, 0])
    q_form = BinaryFormZ([0, 1])
    w = (-C, p_form * L, q_form * L)
    forms = [
        sum((w[k] * M[i][k] for k in range(1, 3)), w[0] * M[i][0]) for i in range(3)
    ]
    content = 0
    for f in forms:
        content = gcd(content, f.content())
    forms = [BinaryFormZ(c // content for c in f.coeffs) for f in forms]
    res = abs(C(l2, -l1))
    multiplier = res // content if res % content == 0 else res
    return ConicParametrization(forms[0], forms[1], forms[2], max(multiplier, 1))


def branch_quartic(
    P: QuarticGenerator,
    u0: int,
    v0: int,
    *,
    conic_point_bound: int = DEFAULT_CONIC_POINT_BOUND,
    construction: str = "conic",
) -> BranchQuarticForm | None:
    """Quartic Thue form of the cubic solution (u0, v0).

    With A = [[s, t], [-v0, u0]] the system Q1 = u0, Q2 = v0 is equivalent to
    Q1' = s Q1 + t Q2 = 1 and Q2' = v0 Q1 - u0 Q2 = 0. ``construction="conic"``
    composes Q1' with a parametrization of Q2' = 0 through a found point and
    returns None if no point is found within ``conic_point_bound``.
    ``construction="literal"`` composes Q1' with the parametrization of
    Q2 = 0 instead; its solutions need not solve the system when v0 != 0.
    """
    F = cubic_resolvent(P)
    if abs(F(u0, v0)) != 1:
        raise ValueError(f"F({u0}, {v0}) = {F(u0, v0)}, expected +-1")
    _check_primitive(u0, v0)
    A = bezout_matrix(u0, v0)
    pair = quadratic_pair(P)
    q1_prime = pair.q1 * A.a + pair.q2 * A.b
    q2_prime = combined_conic(pair, u0, v0)
    if construction == "literal":
        param = trivial_parametrization(P)
        return BranchQuarticForm(
            param.compose(q1_prime), (u0, v0), A, param, q2_prime, "literal"
        )
    if construction != "conic":
        raise ValueError(f"unknown construction {construction!r}")
    if (u0, v0) in ((1, 0), (-1, 0)):
        # The conic is Q2 = 0 itself, with the standard parametrization.
        param = trivial_parametrization(P)
    else:
        point = conic_point(q2_prime, conic_point_bound)
        if point is None:
            return None
        param = conic_parametrize(q2_prime, point)
    return BranchQuarticForm(param.compose(q1_prime), (u0, v0), A, param, q2_prime, "conic")


# --- index form -------------------------------------------------------------


def _reduce_mod(P: QuarticGenerator, coeffs: list) -> list:
    """Reduce a polynomial in xi (lowest first, any ring) modulo P(xi)."""
    c = list(coeffs)
    a = (P.a4, P.a3, P.a2, P.a1)
    for deg in range(len(c) - 1, 3, -1):
        top = c[deg]
        c[deg] = top * 0
        # xi^deg = -sum a_k xi^(deg-4+k)
        for k in range(4):
            c[deg - 4 + k] = c[deg - 4 + k] - top * a[k]
    return c[:4]


def _mul_mod(P: QuarticGenerator, f: list, g: list, zero) -> list:
    out = [zero] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] = out[i + j] + x * y
    return _reduce_mod(P, out)


def _power_rows(P: QuarticGenerator, element: list, zero, one) -> list[list]:
    rows = [[one, zero, zero, zero]]
    cur = rows[0]
    for _ in range(3):
        cur = _mul_mod(P, cur, element, zero)
        rows.append(cur)
    return rows


def index_form(P: QuarticGenerator) -> TernaryForm:
    """Sextic I(X, Y, Z) = det of (1, L, L^2, L^3) in the basis (1, xi, xi^2, xi^3).

    L = X xi + Y xi^2 + Z xi^3. Normalized so that I(1, 0, 0) = 1.
    """
    zero = TernaryForm()
    one = TernaryForm.constant(1)
    X, Y, Z = (TernaryForm.variable(i) for i in range(3))
    rows = _power_rows(P, [zero, X, Y, Z], zero, one)
    minor = [row[1:] for row in rows[1:]]
    form = det_generic(minor)
    if form(1, 0, 0) < 0:
        form = -form
    return form


def index_of(P: QuarticGenerator, x: int, y: int, z: int) -> int:
    """Index of Z[alpha] in Z[xi] for alpha = x xi + y xi^2 + z xi^3."""
    rows = _power_rows(P, [0, x, y, z], 0, 1)
    return abs(det3([row[1:] for row in rows[1:]]))


def resolvent_composition(P: QuarticGenerator) -> TernaryForm:
    """F(Q1(X, Y, Z), Q2(X, Y, Z)) as a sextic in X, Y, Z."""
    pair = quadratic_pair(P)
    return compose_binary(
        cubic_resolvent(P),
        TernaryForm.from_quadratic(pair.q1),
        TernaryForm.from_quadratic(pair.q2),
    )


def resolvent_discriminant_matches(P: QuarticGenerator) -> bool:
    return disc_binary_form(cubic_resolvent(P)) == P.discriminant


def primitive_divisors(n: int) -> list[int]:
    return divisors(abs(n)) if n else [1]


def iter_box(bound: int) -> Iterable[Triple]:
    """Sign-normalized nonzero triples with coordinates in [-bound, bound]."""
    r = range(-bound, bound + 1)
    for x in range(0, bound + 1):
        for y in (r if x else range(0, bound + 1)):
            for z in (r if (x or y) else range(1, bound + 1)):
                yield x, y, z
