"""Exact integer algebra: univariate polynomials, binary and ternary forms,
2x2 integer matrices, resultants and discriminants.

Everything here is plain Python ``int`` arithmetic. Objects are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb, gcd
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class UniPoly:
    """Univariate integer polynomial, coefficients lowest degree first."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: UniPoly) -> UniPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other: UniPoly | int) -> UniPoly:
        if isinstance(other, int):
            return UniPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> UniPoly:
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list[int]]:
    n, m = f.degree, g.degree
    size = n + m
    fh = list(reversed(f.coeffs))
    gh = list(reversed(g.coeffs))
    rows = []
    for i in range(m):
        rows.append([0] * i + fh + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gh + [0] * (size - m - 1 - i))
    return rows


def resultant(f: UniPoly, g: UniPoly) -> int:
    """Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f.

    Evaluated as the Sylvester determinant with fraction-free elimination.
    A zero argument gives 0 unless the other argument is a nonzero constant.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("undefined resultant")
    if f.is_zero() or g.is_zero():
        other = g if f.is_zero() else f
        return 1 if other.degree == 0 else 0
    return bareiss_det(sylvester_matrix(f, g))


def disc_poly(f: UniPoly) -> int:
    """Discriminant lc^(2n-2) * prod_{i<j} (r_i - r_j)^2."""
    n = f.degree
    if n < 2:
        raise ValueError(f"discriminant needs degree >= 2, got {n}")
    r = resultant(f, f.derivative())
    q, rem = divmod(r, f.lc)
    assert rem == 0
    return -q if (n * (n - 1) // 2) % 2 else q


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Primitive gcd over Q[t], normalized to positive leading coefficient."""
    from fractions import Fraction

    a = [Fraction(c) for c in f.coeffs]
    b = [Fraction(c) for c in g.coeffs]
    while b:
        while len(a) >= len(b) and a:
            k = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] -= k * c
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    if not a:
        return UniPoly()
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    p = UniPoly(int(c * den) for c in a)
    p = UniPoly(c // p.content() for c in p.coeffs)
    return -p if p.lc < 0 else p


@dataclass(frozen=True)
class Mat2Z:
    """Integer 2x2 matrix [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: Mat2Z) -> Mat2Z:
        return Mat2Z(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, u: int, v: int) -> tuple[int, int]:
        return self.a * u + self.b * v, self.c * u + self.d * v

    def inverse(self) -> Mat2Z:
        det = self.det
        if abs(det) != 1:
            raise ValueError(f"matrix not in GL2(Z): det = {det}")
        return Mat2Z(self.d * det, -self.b * det, -self.c * det, self.a * det)

    def as_list(self) -> list[int]:
        return [self.a, self.b, self.c, self.d]

    @classmethod
    def identity(cls) -> Mat2Z:
        return cls(1, 0, 0, 1)


@dataclass(frozen=True)
class BinaryFormZ:
    """Integer binary form; ``coeffs[i]`` multiplies U^(n-i) V^i."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        c = tuple(int(a) for a in coeffs)
        if not c:
            raise ValueError("binary form needs at least one coefficient")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, u: int, v: int) -> int:
        acc = self.coeffs[0]
        vp = 1
        for c in self.coeffs[1:]:
            vp *= v
            acc = acc * u + c * vp
        return acc

    def __add__(self, other: BinaryFormZ) -> BinaryFormZ:
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degrees")
        return BinaryFormZ(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> BinaryFormZ:
        return BinaryFormZ(-a for a in self.coeffs)

    def __sub__(self, other: BinaryFormZ) -> BinaryFormZ:
        return self + (-other)

    def __mul__(self, other: BinaryFormZ | int) -> BinaryFormZ:
        if isinstance(other, int):
            return BinaryFormZ(a * other for a in self.coeffs)
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return BinaryFormZ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BinaryFormZ:
        out = BinaryFormZ([1])
        for _ in range(k):
            out = out * self
        return out

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def dehomogenize(self) -> UniPoly:
        """F(U, 1) as a polynomial in U."""
        return UniPoly(reversed(self.coeffs))

    def in_u(self, v: int) -> UniPoly:
        """F(U, v) as a polynomial in U for a fixed integer v."""
        n = self.degree
        return UniPoly(self.coeffs[n - k] * v ** (n - k) for k in range(n + 1))

    def __repr__(self) -> str:
        return f"BinaryFormZ({list(self.coeffs)})"


def _linear(a: int, b: int) -> BinaryFormZ:
    return BinaryFormZ([a, b])


def gl2_act(form: BinaryFormZ, A: Mat2Z) -> BinaryFormZ:
    """F_A(U, V) = F(aU + bV, cU + dV)."""
    n = form.degree
    first = _linear(A.a, A.b)
    second = _linear(A.c, A.d)
    out = BinaryFormZ([0] * (n + 1))
    for i, c in enumerate(form.coeffs):
        if c:
            out = out + (first ** (n - i)) * (second**i) * c
    return out


def disc_binary_form(form: BinaryFormZ) -> int:
    """prod_{i<j} (alpha_i beta_j - alpha_j beta_i)^2.

    When the U^n coefficient vanishes the form is first moved by a unipotent
    substitution V -> kU + V, which leaves the discriminant unchanged.
    """
    if form.is_zero():
        raise ValueError("discriminant of the zero form")
    n = form.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    for k in range(n + 1):
        moved = form if k == 0 else gl2_act(form, Mat2Z(1, 0, k, 1))
        if moved.coeffs[0] != 0:
            return disc_poly(moved.dehomogenize())
    raise AssertionError("nonzero form vanishing at n+1 points")


def extended_gcd(u: int, v: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*u + t*v = g = gcd(u, v) > 0.

    Among all solutions the one with |s| minimal is returned, s >= 0 on ties;
    t is then determined (t = 0 when v = 0).
    """
    if u == 0 and v == 0:
        raise ValueError("extended_gcd(0, 0) is undefined")
    g = gcd(u, v)
    if v == 0:
        return g, u // g, 0
    if u == 0:
        return g, 0, v // g
    s0 = pow(u // g, -1, abs(v // g)) if abs(v // g) > 1 else 0
    step = abs(v) // g
    s = s0 % step
    if step - s < s:
        s -= step
    t, rem = divmod(g - s * u, v)
    assert rem == 0
    return g, s, t


@dataclass(frozen=True)
class TernaryQuadFormZ:
    """c_xx X^2 + c_yy Y^2 + c_zz Z^2 + c_xy XY + c_xz XZ + c_yz YZ."""

    c_xx: int = 0
    c_yy: int = 0
    c_zz: int = 0
    c_xy: int = 0
    c_xz: int = 0
    c_yz: int = 0

    def __call__(self, x: int, y: int, z: int) -> int:
        return (
            self.c_xx * x * x
            + self.c_yy * y * y
            + self.c_zz * z * z
            + self.c_xy * x * y
            + self.c_xz * x * z
            + self.c_yz * y * z
        )

    def as_tuple(self) -> tuple[int, ...]:
        return (self.c_xx, self.c_yy, self.c_zz, self.c_xy, self.c_xz, self.c_yz)

    def __add__(self, other: TernaryQuadFormZ) -> TernaryQuadFormZ:
        return TernaryQuadFormZ(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __mul__(self, k: int) -> TernaryQuadFormZ:
        return TernaryQuadFormZ(*(a * k for a in self.as_tuple()))

    __rmul__ = __mul__

    def __neg__(self) -> TernaryQuadFormZ:
        return self * -1

    def __sub__(self, other: TernaryQuadFormZ) -> TernaryQuadFormZ:
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(self.as_tuple())

    def gram(self) -> list[list[int]]:
        """Doubled Gram matrix G with 2*Q(v) = v^T G v."""
        return [
            [2 * self.c_xx, self.c_xy, self.c_xz],
            [self.c_xy, 2 * self.c_yy, self.c_yz],
            [self.c_xz, self.c_yz, 2 * self.c_zz],
        ]

    @classmethod
    def from_gram(cls, G: Sequence[Sequence[int]]) -> TernaryQuadFormZ:
        for i in range(3):
            if G[i][i] % 2:
                raise ValueError("doubled Gram matrix must have an even diagonal")
        return cls(G[0][0] // 2, G[1][1] // 2, G[2][2] // 2, G[0][1], G[0][2], G[1][2])

    def gram_det(self) -> int:
        return det3(self.gram())

    def substitute(self, M: Sequence[Sequence[int]]) -> TernaryQuadFormZ:
        """The form w -> Q(M w)."""
        G = self.gram()
        GM = [[sum(G[i][k] * M[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        out = [[sum(M[k][i] * GM[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        return TernaryQuadFormZ.from_gram(out)

    def compose(self, x: BinaryFormZ, y: BinaryFormZ, z: BinaryFormZ) -> BinaryFormZ:
        """Q(X(P,Q), Y(P,Q), Z(P,Q)) for binary forms of equal degree."""
        return (
            x * x * self.c_xx
            + y * y * self.c_yy
            + z * z * self.c_zz
            + x * y * self.c_xy
            + x * z * self.c_xz
            + y * z * self.c_yz
        )

    def __str__(self) -> str:
        names = ("X^2", "Y^2", "Z^2", "XY", "XZ", "YZ")
        parts = [f"{c:+d}{n}" for c, n in zip(self.as_tuple(), names) if c]
        return " ".join(parts) if parts else "0"


def det3(m: Sequence[Sequence[int]]) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


Monomial = tuple[int, int, int]


def monomials(degree: int) -> list[Monomial]:
    """Exponent triples (i, j, k) of total degree ``degree`` in lex order."""
    return [
        (i, j, degree - i - j)
        for i in range(degree, -1, -1)
        for j in range(degree - i, -1, -1)
    ]


@dataclass(frozen=True)
class TernaryForm:
    """Sparse integer polynomial in X, Y, Z (homogeneous in practice).

    ``terms`` maps exponent triples to nonzero coefficients.
    """

    terms: tuple[tuple[Monomial, int], ...]

    def __init__(self, terms: dict[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Monomial, int] = {}
        for mono, c in items:
            acc[mono] = acc.get(mono, 0) + int(c)
        object.__setattr__(
            self, "terms", tuple(sorted(((m, c) for m, c in acc.items() if c), reverse=True))
        )

    @classmethod
    def constant(cls, c: int) -> TernaryForm:
        return cls({(0, 0, 0): c})

    @classmethod
    def variable(cls, index: int) -> TernaryForm:
        mono = [0, 0, 0]
        mono[index] = 1
        return cls({tuple(mono): 1})

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def __add__(self, other: TernaryForm) -> TernaryForm:
        return TernaryForm(list(self.terms) + list(other.terms))

    def __neg__(self) -> TernaryForm:
        return TernaryForm((m, -c) for m, c in self.terms)

    def __sub__(self, other: TernaryForm) -> TernaryForm:
        return self + (-other)

    def __mul__(self, other: TernaryForm | int) -> TernaryForm:
        if isinstance(other, int):
            return TernaryForm((m, c * other) for m, c in self.terms)
        out: dict[Monomial, int] = {}
        for (m1, c1) in self.terms:
            for (m2, c2) in other.terms:
                key = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[key] = out.get(key, 0) + c1 * c2
        return TernaryForm(out)

    __rmul__ = __mul__

    def __call__(self, x: int, y: int, z: int) -> int:
        return sum(c * x**i * y**j * z**k for (i, j, k), c in self.terms)

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(m) == degree for m, _ in self.terms)

    def coefficient_list(self, degree: int) -> list[int]:
        d = self.as_dict()
        return [d.get(m, 0) for m in monomials(degree)]

    @classmethod
    def from_quadratic(cls, q: TernaryQuadFormZ) -> TernaryForm:
        return cls(
            {
                (2, 0, 0): q.c_xx,
                (0, 2, 0): q.c_yy,
                (0, 0, 2): q.c_zz,
                (1, 1, 0): q.c_xy,
                (1, 0, 1): q.c_xz,
                (0, 1, 1): q.c_yz,
            }
        )


def compose_binary(form: BinaryFormZ, u: TernaryForm, v: TernaryForm) -> TernaryForm:
    """F(u, v) where u, v are polynomials in X, Y, Z."""
    n = form.degree
    out = TernaryForm()
    for i, c in enumerate(form.coeffs):
        if not c:
            continue
        term = TernaryForm.constant(c)
        for _ in range(n - i):
            term = term * u
        for _ in range(i):
            term = term * v
        out = out + term
    return out


def det_generic(matrix: Sequence[Sequence]) -> object:
    """Leibniz determinant over any commutative ring supporting + - *."""
    n = len(matrix)
    total = None
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = matrix[0][perm[0]]
        for r in range(1, n):
            term = term * matrix[r][perm[r]]
        if inversions % 2:
            term = -term
        total = term if total is None else total + term
    return total


def binomial_shift(poly: UniPoly, shift: int) -> UniPoly:
    """poly(t + shift)."""
    out = [0] * len(poly.coeffs)
    for k, c in enumerate(poly.coeffs):
        for j in range(k + 1):
            out[j] += c * comb(k, j) * shift ** (k - j)
    return UniPoly(out)
