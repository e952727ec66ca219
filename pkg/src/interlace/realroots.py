"""Sturm chains, distinct real root counting and certified root isolation.

Everything here is exact.  Real algebraic numbers are carried as a
square-free defining polynomial plus an isolating interval whose endpoints
are rational and are never roots themselves (or as a single rational
point), so every comparison and sign decision below is a proof rather
than a floating-point guess.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional, Sequence, Union

from .errors import InvalidArgumentError, InvalidCertificateError
from .polycore import Poly, derivative, euclid_div, gcd, integer_coefficients, squarefree_part

NEG_INF = -math.inf
POS_INF = math.inf

OPEN, CLOSED, POINT = "open", "closed", "point"


@dataclass(frozen=True)
class IntervalQ:
    lo: Fraction
    hi: Fraction
    kind: str = OPEN

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.kind not in (OPEN, CLOSED, POINT):
            raise InvalidArgumentError(f"unknown interval kind {self.kind!r}")
        if self.lo > self.hi:
            raise InvalidArgumentError("interval with lo > hi")
        if self.kind == POINT and self.lo != self.hi:
            raise InvalidArgumentError("point interval needs lo == hi")
        if self.kind == OPEN and self.lo == self.hi:
            raise InvalidArgumentError("open interval cannot be empty")

    @classmethod
    def point(cls, value) -> "IntervalQ":
        v = Fraction(value)
        return cls(v, v, POINT)

    @property
    def is_point(self) -> bool:
        return self.kind == POINT

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        x = Fraction(x)
        if self.kind == OPEN:
            return self.lo < x < self.hi
        return self.lo <= x <= self.hi


# -- exact sign evaluation ------------------------------------------------

def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _sign_ints(ints: Sequence[int], x: Fraction) -> int:
    """Sign of the integer polynomial at the rational ``x`` (homogenised Horner)."""
    if not ints:
        return 0
    a, b = x.numerator, x.denominator
    acc = 0
    bpow = 1
    # sum c_k a^k b^(d-k); b > 0 so the sign is unchanged
    for c in reversed(ints):
        acc = acc * a + c * bpow
        bpow *= b
    return _sign(acc)


def _sign_at_inf(ints: Sequence[int], positive: bool) -> int:
    if not ints:
        return 0
    s = _sign(ints[-1])
    if not positive and (len(ints) - 1) % 2:
        s = -s
    return s


def sign_at(p: Poly, x) -> int:
    ints, _ = integer_coefficients(p)
    return _sign_ints(ints, Fraction(x))


def interval_eval(p: Poly, lo, hi) -> tuple[Fraction, Fraction]:
    """Rational enclosure of ``p`` over ``[lo, hi]`` by interval Horner evaluation."""
    lo, hi = Fraction(lo), Fraction(hi)
    a = b = Fraction(0)
    for c in reversed(p.coeffs):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


# -- Sturm chains ----------------------------------------------------------

@dataclass(frozen=True)
class SturmChain:
    """``P, P'`` then positively scaled negated remainders down to a multiple of gcd(P, P')."""

    chain: tuple

    def __len__(self):
        return len(self.chain)

    def __iter__(self):
        return iter(self.chain)

    def __getitem__(self, i):
        return self.chain[i]

    @cached_property
    def _ints(self) -> tuple:
        return tuple(tuple(integer_coefficients(p)[0]) for p in self.chain)

    def leading_signs(self) -> tuple:
        return tuple(_sign(p.lc) for p in self.chain)


def sturm_chain(p: Poly) -> SturmChain:
    if p.degree < 1:
        raise InvalidArgumentError("Sturm chain needs a polynomial of degree >= 1")
    chain = [p, derivative(p)]
    while True:
        r = euclid_div(chain[-2], chain[-1])[1]
        if r.is_zero():
            break
        chain.append(-r.primitive())
    return SturmChain(tuple(chain))


def _variations(signs) -> int:
    count, last = 0, 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def sign_variations(chain: SturmChain, at) -> int:
    """Sign changes of the chain evaluated at a rational point or at +-infinity."""
    if at == POS_INF or at == NEG_INF:
        return _variations(_sign_at_inf(c, at == POS_INF) for c in chain._ints)
    x = Fraction(at)
    return _variations(_sign_ints(c, x) for c in chain._ints)


@lru_cache(maxsize=4096)
def _squarefree_chain(p: Poly) -> SturmChain:
    return sturm_chain(squarefree_part(p))


def _bound_endpoint(v):
    if isinstance(v, float):
        if v in (POS_INF, NEG_INF):
            return v
        raise TypeError("finite bounds must be exact rationals")
    return Fraction(v)


def count_distinct_real_roots(p: Poly, within=None) -> int:
    """Distinct real roots of ``p`` over R, or in the half-open range ``(lo, hi]``.

    ``within`` may be ``None`` (all of R), an :class:`IntervalQ`, or a
    ``(lo, hi)`` pair whose ends may be ``NEG_INF`` / ``POS_INF``.  Finite
    bounds always use the half-open convention so adjacent ranges add up;
    the ``kind`` of an ``IntervalQ`` is ignored except for point intervals.
    """
    if p.degree < 1:
        raise InvalidArgumentError("root count needs a polynomial of degree >= 1")
    if within is None:
        lo, hi = NEG_INF, POS_INF
    elif isinstance(within, IntervalQ):
        if within.is_point:
            return int(p(within.lo) == 0)
        lo, hi = within.lo, within.hi
    else:
        lo, hi = (_bound_endpoint(v) for v in within)
    if lo >= hi:
        return 0
    chain = _squarefree_chain(p)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def cauchy_bound(p: Poly) -> Fraction:
    """A power of two strictly exceeding the modulus of every root of ``p``."""
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    bound = 1 + m / lc
    k = max(0, math.ceil(math.log2(bound)) if bound > 1 else 0)
    b = Fraction(2) ** k
    while b < bound:
        b *= 2
    return b


# -- isolation --------------------------------------------------------------

@dataclass(frozen=True)
class RootIsolation:
    """Sorted disjoint intervals, one per distinct real root of ``poly``."""

    poly: Poly
    squarefree: Poly
    intervals: tuple

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __getitem__(self, i):
        return self.intervals[i]

    def roots(self) -> list["AlgebraicReal"]:
        return [AlgebraicReal._trusted(self.squarefree, iv.lo, iv.hi) for iv in self.intervals]


def isolate_real_roots(p: Poly) -> RootIsolation:
    if p.degree < 1:
        raise InvalidArgumentError("root isolation needs a polynomial of degree >= 1")
    f = squarefree_part(p)
    chain = _squarefree_chain(p)
    ints = integer_coefficients(f)[0]
    b = cauchy_bound(f)
    out: list[IntervalQ] = []

    def split(lo, hi, vlo, vhi):
        # invariant: lo and hi are not roots; vlo - vhi roots inside (lo, hi)
        k = vlo - vhi
        if k == 0:
            return
        if k == 1:
            a = AlgebraicReal._trusted(f, lo, hi)
            a._clear_endpoints(chain)
            out.append(a.interval)
            return
        mid = (lo + hi) / 2
        vmid = sign_variations(chain, mid)
        if _sign_ints(ints, mid) == 0:
            split(lo, mid, vlo, vmid + 1)
            out.append(IntervalQ.point(mid))
            split(mid, hi, vmid, vhi)
        else:
            split(lo, mid, vlo, vmid)
            split(mid, hi, vmid, vhi)

    split(-b, b, sign_variations(chain, -b), sign_variations(chain, b))
    return RootIsolation(p, f, tuple(out))


def refine_root(iso: RootIsolation, index: int, width) -> IntervalQ:
    """Shrink the ``index``-th isolating interval to at most ``width``."""
    if not 0 <= index < len(iso.intervals):
        raise InvalidArgumentError(f"root index {index} out of range")
    iv = iso.intervals[index]
    if iv.is_point:
        return iv
    a = AlgebraicReal._trusted(iso.squarefree, iv.lo, iv.hi).refine(Fraction(width))
    return a.interval


# -- real algebraic numbers ---------------------------------------------------

class AlgebraicReal:
    """A real root of a square-free rational polynomial, pinned by an interval.

    Open intervals satisfy ``f(lo) * f(hi) < 0`` and contain exactly one
    root; points are exact rational roots.  Refinement returns a new object.
    """

    __slots__ = ("defining", "lo", "hi", "_ints")

    def __init__(self, defining: Poly, bracket: Union[IntervalQ, tuple]):
        if isinstance(bracket, tuple):
            bracket = IntervalQ(bracket[0], bracket[1], CLOSED if bracket[0] == bracket[1] else OPEN)
        if defining.degree < 1:
            raise InvalidArgumentError("algebraic number needs a non-constant defining polynomial")
        f = squarefree_part(defining)
        self.defining = f
        self._ints = integer_coefficients(f)[0]
        lo, hi = bracket.lo, bracket.hi
        if lo == hi:
            if f(lo) != 0:
                raise InvalidCertificateError(f"point {lo} is not a root of the defining polynomial")
            self.lo = self.hi = lo
            return
        chain = _squarefree_chain(f)
        inside = sign_variations(chain, lo) - sign_variations(chain, hi)
        # (lo, hi] -> open count, then closed if requested
        hi_root = _sign_ints(self._ints, hi) == 0
        lo_root = _sign_ints(self._ints, lo) == 0
        open_count = inside - int(hi_root)
        if bracket.kind == CLOSED:
            total = open_count + int(hi_root) + int(lo_root)
            if total != 1:
                raise InvalidCertificateError(f"bracket contains {total} roots, expected exactly one")
            if lo_root or hi_root:
                self.lo = self.hi = lo if lo_root else hi
                return
        elif open_count != 1:
            raise InvalidCertificateError(f"bracket contains {open_count} roots, expected exactly one")
        self.lo, self.hi = lo, hi
        self._clear_endpoints(chain)

    @classmethod
    def _trusted(cls, f: Poly, lo: Fraction, hi: Fraction) -> "AlgebraicReal":
        obj = cls.__new__(cls)
        obj.defining = f
        obj._ints = integer_coefficients(f)[0]
        obj.lo, obj.hi = lo, hi
        return obj

    def _copy(self, lo, hi) -> "AlgebraicReal":
        obj = AlgebraicReal.__new__(AlgebraicReal)
        obj.defining, obj._ints = self.defining, self._ints
        obj.lo, obj.hi = lo, hi
        return obj

    def _clear_endpoints(self, chain: SturmChain):
        # move endpoints that are roots of f (outside the open bracket) inward
        while _sign_ints(self._ints, self.lo) == 0 or _sign_ints(self._ints, self.hi) == 0:
            mid = (self.lo + self.hi) / 2
            if _sign_ints(self._ints, mid) == 0:
                self.lo = self.hi = mid
                return
            left = sign_variations(chain, self.lo) - sign_variations(chain, mid)
            if left == 1:
                self.hi = mid
            else:
                self.lo = mid

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def interval(self) -> IntervalQ:
        if self.is_point:
            return IntervalQ.point(self.lo)
        return IntervalQ(self.lo, self.hi, OPEN)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def bisect(self) -> "AlgebraicReal":
        if self.is_point:
            return self
        mid = (self.lo + self.hi) / 2
        s = _sign_ints(self._ints, mid)
        if s == 0:
            return self._copy(mid, mid)
        if s == _sign_ints(self._ints, self.lo):
            return self._copy(mid, self.hi)
        return self._copy(self.lo, mid)

    def refine(self, width) -> "AlgebraicReal":
        width = Fraction(width)
        if width <= 0:
            raise InvalidArgumentError("refinement width must be positive")
        a = self
        while not a.is_point and a.width > width:
            a = a.bisect()
        return a

    def compare_rational(self, x) -> int:
        """Sign of ``self - x``."""
        x = Fraction(x)
        a = self
        while True:
            if a.is_point:
                return _sign(a.lo - x)
            if x <= a.lo:
                return 1
            if x >= a.hi:
                return -1
            if _sign_ints(a._ints, x) == 0:
                return 0
            a = a.bisect()

    def compare(self, other: "AlgebraicReal") -> int:
        """Sign of ``self - other``, decided exactly."""
        a, b = self, other
        common = None
        while True:
            if a.is_point:
                return -b.compare_rational(a.lo)
            if b.is_point:
                return a.compare_rational(b.lo)
            if a.hi <= b.lo:
                return -1
            if b.hi <= a.lo:
                return 1
            if common is None:
                common = gcd(a.defining, b.defining)
            if common.degree > 0:
                lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
                # endpoints are non-roots of both defining polynomials
                if count_distinct_real_roots(common, (lo, hi)) > 0:
                    return 0
            if a.width >= b.width:
                a = a.bisect()
            else:
                b = b.bisect()

    def __eq__(self, other):
        if isinstance(other, AlgebraicReal):
            return self.compare(other) == 0
        if isinstance(other, (int, Fraction)):
            return self.compare_rational(other) == 0
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, AlgebraicReal):
            return self.compare(other) < 0
        return self.compare_rational(other) < 0

    __hash__ = None

    def sign_of(self, q: Poly) -> int:
        """Exact sign of ``q`` at this number."""
        if q.is_zero():
            return 0
        if self.is_point:
            return _sign(q(self.lo))
        g = gcd(q, self.defining)
        if g.degree > 0 and count_distinct_real_roots(g, (self.lo, self.hi)) > 0:
            return 0
        a = self
        while True:
            if a.is_point:
                return _sign(q(a.lo))
            lo, hi = interval_eval(q, a.lo, a.hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            a = a.bisect()

    def as_rational(self) -> Optional[Fraction]:
        """The exact value when it is rational, otherwise ``None``."""
        if self.is_point:
            return self.lo
        lead = abs(self._ints[-1])
        # rational roots p/q of the primitive polynomial have q | lead, so two
        # candidates differ by at least 1/lead**2
        limit = Fraction(1, lead * lead)
        a = self
        while True:
            c = _simplest_between(a.lo, a.hi)
            if _sign_ints(a._ints, c) == 0:
                return c
            if a.width < limit:
                c = ((a.lo + a.hi) / 2).limit_denominator(lead)
                if a.lo < c < a.hi and _sign_ints(a._ints, c) == 0:
                    return c
                return None
            a = a.bisect()
            if a.is_point:
                return a.lo

    def enclosure(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    def __float__(self):
        a = self.refine(Fraction(1, 2 ** 60)) if not self.is_point else self
        return float((a.lo + a.hi) / 2)

    def __repr__(self):
        if self.is_point:
            return f"AlgebraicReal({self.lo})"
        return f"AlgebraicReal(root of {self.defining} in ({self.lo}, {self.hi}))"


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator strictly inside ``(lo, hi)``."""
    if lo >= hi:
        raise InvalidArgumentError("empty range")
    fl = math.floor(lo)
    if fl + 1 < hi:
        # an integer fits; pick the one closest to zero
        if lo < 0 < hi:
            return Fraction(0)
        if hi <= 0:
            return Fraction(math.ceil(hi) - 1)
        return Fraction(fl + 1)
    # lo and hi share integer part fl (hi may equal fl + 1)
    lo_f, hi_f = lo - fl, hi - fl
    # recurse on reciprocals: x in (lo_f, hi_f) with 0 <= lo_f < hi_f <= 1
    if lo_f == 0:
        # any 1/k with 1/k < hi_f
        k = math.floor(1 / hi_f) + 1
        return fl + Fraction(1, k)
    inner = _simplest_between(1 / hi_f, 1 / lo_f)
    return fl + 1 / inner


def sign_at_algebraic(q: Poly, defining: Poly, bracket: Union[IntervalQ, tuple]) -> int:
    """Certified sign of ``q(alpha)`` where ``bracket`` isolates one root ``alpha`` of ``defining``."""
    return AlgebraicReal(defining, bracket).sign_of(q)
