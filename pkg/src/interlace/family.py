"""The centred polynomial family and its remainder cascade.

A family member of degree ``n`` is monic with no ``x**(n-1)`` term and

    a_k = n! / (k! * 3!) * c[n-2-k]      for k = 0 .. n-2,

so that the whole chain ``P_2 .. P_n`` built from one coefficient vector
``c`` satisfies ``P_{i-1} = P_i' / i``.  Splitting ``P = x*P'/n - R`` gives
the remainder ``R`` whose roots must interlace the critical points of
``P`` for all roots of ``P`` to be real and distinct.

Roots are always listed in increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .errors import InvalidArgumentError, PreconditionError
from .polycore import Poly, X, derivative
from .realroots import AlgebraicReal, RootIsolation, isolate_real_roots

# conventional names of c_0, c_1, ... as used for the low-degree cases
COEFF_NAMES = ("p", "q", "r", "s", "t", "u", "v", "w")


def coeff_name(index: int) -> str:
    return COEFF_NAMES[index] if index < len(COEFF_NAMES) else f"c{index}"


def coeff_index(name: str) -> int:
    if name in COEFF_NAMES:
        return COEFF_NAMES.index(name)
    if name.startswith("c") and name[1:].isdigit():
        return int(name[1:])
    raise InvalidArgumentError(f"unknown coefficient name {name!r}")


def family_factor(n: int, k: int) -> Fraction:
    """Multiplier taking ``c[n-2-k]`` to the coefficient of ``x**k`` in ``P_n``."""
    return Fraction(factorial(n), factorial(k) * 6)


@dataclass(frozen=True)
class FamilySpec:
    n: int
    c: tuple

    def __post_init__(self):
        if self.n < 2:
            raise InvalidArgumentError("family degree must be at least 2")
        c = tuple(Fraction(v) for v in self.c)
        if len(c) != self.n - 1:
            raise InvalidArgumentError(f"degree {self.n} needs {self.n - 1} coefficients, got {len(c)}")
        object.__setattr__(self, "c", c)


def build_family(spec: FamilySpec) -> Poly:
    n = spec.n
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    for k in range(n - 1):
        coeffs[k] = family_factor(n, k) * spec.c[n - 2 - k]
    return Poly(coeffs)


def family_parameters(p: Poly) -> Optional[FamilySpec]:
    """Inverse of :func:`build_family`; ``None`` unless ``p`` is monic with no subleading term."""
    n = p.degree
    if n < 2 or p.lc != 1 or p.coeff(n - 1) != 0:
        return None
    c = [Fraction(0)] * (n - 1)
    for k in range(n - 1):
        c[n - 2 - k] = p.coeff(k) / family_factor(n, k)
    return FamilySpec(n, tuple(c))


def family_chain(spec: FamilySpec) -> list[Poly]:
    """``[P_2, ..., P_n]`` for one coefficient vector."""
    if spec.n < 3:
        raise InvalidArgumentError("family chain needs n >= 3")
    return [build_family(FamilySpec(i, spec.c[: i - 1])) for i in range(2, spec.n + 1)]


def lift(reduced: Poly, trailing) -> Poly:
    """The degree ``m+1`` polynomial whose derivative is ``(m+1)*reduced``, with constant ``trailing``."""
    return (reduced * (reduced.degree + 1)).antiderivative(trailing)


@dataclass(frozen=True)
class CascadeStep:
    parent: Poly
    reduced: Poly
    remainder: Poly
    shifted_remainder: Poly
    center: Optional[Fraction] = None


def centroid(p: Poly) -> Fraction:
    """Mean of the roots of ``p``; the centre making the recentred remainder drop a degree."""
    m = p.degree
    if m < 1:
        raise InvalidArgumentError("centroid of a constant polynomial")
    return -p.coeff(m - 1) / (m * p.lc)


def cascade_split(parent: Poly, center=None) -> CascadeStep:
    """Split ``parent`` of degree ``m`` against its derivative.

    Without a centre, ``parent = x*reduced - remainder`` with
    ``reduced = parent'/m``.  With a centre ``b``,
    ``parent = (x - b)*parent'/m - remainder``; for ``b`` equal to
    :func:`centroid` this is minus the Euclidean remainder of
    ``parent / parent'``.
    """
    m = parent.degree
    if m < 2:
        raise InvalidArgumentError("cascade split needs degree >= 2")
    reduced = derivative(parent) / m
    if center is None:
        remainder = X * reduced - parent
    else:
        if m < 3:
            raise InvalidArgumentError("recentred cascade split needs degree >= 3")
        center = Fraction(center)
        remainder = (X - center) * reduced - parent
    shifted = Poly((0,) + remainder.coeffs[1:]) if remainder.coeffs else remainder
    return CascadeStep(parent, reduced, remainder, shifted, center)


def _roots(obj) -> list[AlgebraicReal]:
    if isinstance(obj, RootIsolation):
        return obj.roots()
    if isinstance(obj, Poly):
        return isolate_real_roots(obj).roots()
    return list(obj)


def is_interlaced(outer, inner, strict: bool = True) -> bool:
    """Whether ``inner``'s roots separate ``outer``'s: a1 < b1 < a2 < ... < b_{k} < a_{k+1}.

    Arguments are :class:`RootIsolation` objects, polynomials, or sorted
    lists of :class:`AlgebraicReal`.  ``strict=False`` allows contact.
    """
    a = _roots(outer)
    b = _roots(inner)
    if len(a) != len(b) + 1:
        return False
    seq = [a[0]]
    for bj, aj in zip(b, a[1:]):
        seq.extend((bj, aj))
    for left, right in zip(seq, seq[1:]):
        c = left.compare(right)
        if c > 0 or (strict and c == 0):
            return False
    return True


def prop1_sign_condition(reduced: Poly, remainder: Poly) -> bool:
    """Alternating-sign test of ``remainder`` at the sorted roots of ``reduced``.

    With ``n = deg(reduced) + 1``: for even ``n`` the remainder must be
    negative at the even-indexed roots and positive at the odd-indexed ones
    (1-based); for odd ``n`` the other way round.  Zero values fail.
    """
    m = reduced.degree
    if m < 1:
        raise PreconditionError("reduced polynomial must have degree >= 1")
    iso = isolate_real_roots(reduced)
    if len(iso) != m:
        raise PreconditionError(f"reduced polynomial has {len(iso)} distinct real roots, needs {m}")
    n = m + 1
    for i, alpha in enumerate(iso.roots(), start=1):
        s = alpha.sign_of(remainder)
        negative_here = (i % 2 == 0) if n % 2 == 0 else (i % 2 == 1)
        if s != (-1 if negative_here else 1):
            return False
    return True


def remainder_chain(parent: Poly, depth: Optional[int] = None) -> list[CascadeStep]:
    """The recentred cascade R -> T -> U -> ... of a remainder, each split at its centroid."""
    steps = []
    current = parent
    while current.degree >= 3 and (depth is None or len(steps) < depth):
        step = cascade_split(current, centroid(current))
        steps.append(step)
        current = step.remainder
    return steps
