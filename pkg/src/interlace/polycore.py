"""Exact dense univariate polynomials over the rationals.

Scalars are :class:`fractions.Fraction`, which already keeps the canonical
form (reduced, positive denominator, zero as ``0/1``).  Polynomials store
their coefficients in ascending order and never carry trailing zeros, so
the zero polynomial is the empty tuple and has degree ``-1``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from typing import Iterable, Sequence, Union

from .errors import InvalidArgumentError

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "Poly",
    "X",
    "derivative",
    "evaluate",
    "euclid_div",
    "gcd",
    "sylvester_matrix",
    "resultant",
    "discriminant",
    "squarefree_decompose",
    "squarefree_part",
    "image_polynomial",
    "integer_coefficients",
]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    return Fraction(v)


class Poly:
    """Immutable polynomial with rational coefficients, ``coeffs[k]`` times ``x**k``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)
        self._hash = None

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        return cls([value])

    @classmethod
    def monomial(cls, k: int, coeff: Scalar = 1) -> "Poly":
        return cls([0] * k + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "Poly":
        out = cls([1])
        for r in roots:
            out = out * cls([-_frac(r), 1])
        return out

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def lc(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def __bool__(self) -> bool:
        return bool(self._c)

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    # -- ring operations -------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([x * other for x in self._c])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return Poly([x / other for x in self._c])
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InvalidArgumentError("polynomial powers need a non-negative integer exponent")
        out, base = Poly([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        return euclid_div(self, other)

    def __floordiv__(self, other):
        return euclid_div(self, other)[0]

    def __mod__(self, other):
        return euclid_div(self, other)[1]

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def __call__(self, x):
        return evaluate(self, x)

    # -- calculus and normalisation --------------------------------------
    def derivative(self) -> "Poly":
        return derivative(self)

    def antiderivative(self, constant: Scalar = 0) -> "Poly":
        return Poly([constant] + [c / (k + 1) for k, c in enumerate(self._c)])

    def monic(self) -> "Poly":
        if not self._c:
            return self
        return self / self.lc

    def primitive(self) -> "Poly":
        """Positive rational multiple with coprime integer coefficients."""
        ints, _ = integer_coefficients(self)
        return Poly(ints)

    def compose(self, other: "Poly") -> "Poly":
        out = Poly()
        for c in reversed(self._c):
            out = out * other + c
        return out

    def __repr__(self):
        return f"Poly({[str(c) for c in self._c]})"

    def __str__(self):
        return render(self)


X = Poly([0, 1])


def render(p: Poly, var: str = "x") -> str:
    """Human- and parser-friendly rendering, highest power first."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a) if a.denominator == 1 else f"({a})"
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a}*{mono}"
            else:
                body = f"({a})*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def derivative(p: Poly) -> Poly:
    return Poly([k * c for k, c in enumerate(p.coeffs)][1:])


def evaluate(p: Poly, x) -> Fraction:
    x = _frac(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def euclid_div(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with ``a == q*b + r`` and ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("Euclidean division by the zero polynomial")
    r = list(a.coeffs)
    db = b.degree
    if len(r) - 1 < db:
        return Poly(), a
    inv = 1 / b.lc
    bc = b.coeffs
    q = [Fraction(0)] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        t = r[k] * inv
        if t:
            q[k - db] = t
            for j in range(db + 1):
                r[k - db + j] -= t * bc[j]
    return Poly(q), Poly(r[:db])


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise InvalidArgumentError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, euclid_div(a, b)[1]
    return a.monic()


def integer_coefficients(p: Poly) -> tuple[list, Fraction]:
    """Coprime integer coefficients ``ints`` and a positive ``scale`` with ``ints == scale*p``."""
    c = p.coeffs
    if not c:
        return [], Fraction(1)
    den = 1
    for v in c:
        den = den * v.denominator // _igcd(den, v.denominator)
    ints = [int(v * den) for v in c]
    g = 0
    for v in ints:
        g = _igcd(g, v)
    ints = [v // g for v in ints]
    return ints, Fraction(den, g)


def sylvester_matrix(a: Poly, b: Poly) -> tuple:
    """Rows of the Sylvester matrix, ``deg b`` shifted copies of ``a`` first."""
    n, m = a.degree, b.degree
    if n < 0 or m < 0:
        raise InvalidArgumentError("Sylvester matrix of a zero polynomial")
    size = n + m
    rows = []
    ac = a.coeffs[::-1]
    bc = b.coeffs[::-1]
    for i in range(m):
        row = [Fraction(0)] * size
        row[i:i + n + 1] = ac
        rows.append(tuple(row))
    for i in range(n):
        row = [Fraction(0)] * size
        row[i:i + m + 1] = bc
        rows.append(tuple(row))
    return tuple(rows)


def _bareiss_det(mat: list) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [row[:] for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def resultant(a: Poly, b: Poly) -> Fraction:
    """``det`` of the Sylvester matrix of ``a`` and ``b`` (rows of ``a`` first)."""
    if a.is_zero() or b.is_zero():
        raise InvalidArgumentError("resultant with the zero polynomial")
    n, m = a.degree, b.degree
    ai, sa = integer_coefficients(a)
    bi, sb = integer_coefficients(b)
    size = n + m
    rows = []
    for i in range(m):
        row = [0] * size
        row[i:i + n + 1] = ai[::-1]
        rows.append(row)
    for i in range(n):
        row = [0] * size
        row[i:i + m + 1] = bi[::-1]
        rows.append(row)
    # det(scaled) = sa**m * sb**n * det(original)
    return Fraction(_bareiss_det(rows)) / (sa ** m * sb ** n)


def discriminant(p: Poly) -> Fraction:
    n = p.degree
    if n < 2:
        raise InvalidArgumentError("discriminant needs degree >= 2")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(p, derivative(p)) / p.lc


def squarefree_decompose(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic, pairwise coprime, square-free factors by multiplicity."""
    if p.is_zero():
        raise InvalidArgumentError("square-free decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    dp = derivative(p)
    a0 = gcd(p, dp)
    b = euclid_div(p, a0)[0]
    c = euclid_div(dp, a0)[0]
    d = c - derivative(b)
    out = []
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = euclid_div(b, a)[0]
        c = euclid_div(d, a)[0]
        d = c - derivative(b)
        i += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``p``."""
    if p.degree <= 0:
        return Poly([1]) if not p.is_zero() else p
    return euclid_div(p, gcd(p, derivative(p)))[0].monic()


def _mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n) if a[i][k]) for j in range(n)] for i in range(n)]


def image_polynomial(f: Poly, g: Poly) -> Poly:
    """Monic ``prod (z - g(alpha))`` over the complex roots ``alpha`` of ``f``.

    Computed as the characteristic polynomial of ``g`` applied to the
    companion matrix of ``f`` (Faddeev-LeVerrier, exact over Q).
    """
    if f.degree < 0:
        raise InvalidArgumentError("image polynomial of the zero polynomial")
    n = f.degree
    if n == 0:
        return Poly([1])
    fm = f.monic().coeffs
    comp = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        comp[i][i - 1] = Fraction(1)
    for i in range(n):
        comp[i][n - 1] = -fm[i]
    # Horner in the matrix ring
    gm = [[Fraction(0)] * n for _ in range(n)]
    for c in reversed(g.coeffs):
        gm = _mat_mul(gm, comp)
        for i in range(n):
            gm[i][i] += c
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        m = _mat_mul(gm, m)
        for i in range(n):
            m[i][i] += coeffs[n - k + 1]
        am = _mat_mul(gm, m)
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    return Poly(coeffs)


def as_poly(v: Union[Poly, Sequence, Scalar]) -> Poly:
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly([v])
    return Poly(v)
