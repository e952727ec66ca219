"""Building polynomials with only real, distinct roots one coefficient at a time.

Given ``P_{n-1}`` with ``n-1`` distinct real roots ``a_1 < ... < a_{n-1}``
and the constant-free remainder ``R0``, the trailing coefficient ``a0`` of
``P_n = x*P_{n-1} - R0 + a0`` keeps all ``n`` roots real and distinct
exactly when

    max  R0(a_k) over k with n-k even  <  a0  <  min  R0(a_k) over k with n-k odd.

The endpoint values ``R0(a_k)`` are real algebraic numbers.  They are all
roots of the image polynomial ``prod (z - R0(a_k))``, so we isolate that
polynomial once and identify every value with one of its roots; ties and
emptiness are then decided exactly, and rational endpoints come out exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from fractions import Fraction
from typing import Mapping, Optional, Union

from .errors import (
    CertificationError,
    ConstructionFailedError,
    GateViolationError,
    InvalidArgumentError,
    NoAdmissibleChoiceError,
    PreconditionError,
)
from .family import (
    FamilySpec,
    build_family,
    coeff_name,
    family_factor,
    family_parameters,
    is_interlaced,
    lift,
)
from .polycore import Poly, X, image_polynomial, squarefree_decompose
from .realroots import (
    AlgebraicReal,
    IntervalQ,
    count_distinct_real_roots,
    interval_eval,
    isolate_real_roots,
)

DEFAULT_TOL = Fraction(1, 2 ** 40)


@dataclass(frozen=True)
class AdmissibleInterval:
    """Open range for the trailing coefficient.

    ``lo``/``hi`` are outer rational bounds on the true algebraic endpoints
    (equal to them when ``lo_exact``/``hi_exact``); ``inner_lo``/``inner_hi``
    are the matching inner bounds.  ``point`` marks a certified collapse of
    the range to a single value, which is also reported as ``empty``.
    """

    degree: int
    lo: Fraction
    hi: Fraction
    inner_lo: Fraction
    inner_hi: Fraction
    empty: bool
    point: bool
    lo_exact: bool
    hi_exact: bool
    lo_attained_at: tuple
    hi_attained_at: tuple
    lower_root: AlgebraicReal = field(repr=False, compare=False)
    upper_root: AlgebraicReal = field(repr=False, compare=False)

    @property
    def diagnosis(self) -> Optional[str]:
        if self.point:
            return "point"
        if self.empty:
            return "empty"
        return None

    def contains(self, value) -> bool:
        """Exact membership of ``value`` in the open range."""
        if self.empty:
            return False
        return self.lower_root.compare_rational(value) < 0 < self.upper_root.compare_rational(value)


def _overlaps(root: AlgebraicReal, lo: Fraction, hi: Fraction) -> bool:
    if root.is_point:
        return lo <= root.lo <= hi
    return lo < root.hi and hi > root.lo


def _locate(alpha: AlgebraicReal, g: Poly, values: list) -> int:
    """Index of the root in ``values`` equal to ``g(alpha)``."""
    ruled_out = set()
    a = alpha
    while True:
        if a.is_point:
            v = g(a.lo)
            for j, root in enumerate(values):
                if root.compare_rational(v) == 0:
                    return j
            raise CertificationError("value is not a root of its image polynomial")
        lo, hi = interval_eval(g, a.lo, a.hi)
        cands = [j for j, root in enumerate(values) if j not in ruled_out and _overlaps(root, lo, hi)]
        if len(cands) == 1:
            return cands[0]
        if not cands:
            raise CertificationError("value enclosure misses every root of the image polynomial")
        for j in cands:
            root = values[j]
            if root.is_point:
                if a.sign_of(g - root.lo) == 0:
                    return j
                ruled_out.add(j)
        a = a.bisect()


def endpoint_sets(n: int) -> tuple[tuple, tuple]:
    """1-based root indices feeding the lower (sup) and upper (inf) endpoint."""
    lower = tuple(k for k in range(1, n) if (n - k) % 2 == 0)
    upper = tuple(k for k in range(1, n) if (n - k) % 2 == 1)
    return lower, upper


def admissible_interval(reduced: Poly, shifted_remainder: Poly, tol=DEFAULT_TOL) -> AdmissibleInterval:
    m = reduced.degree
    if m < 2:
        raise PreconditionError("reduced polynomial must have degree >= 2")
    if shifted_remainder.coeff(0) != 0:
        raise PreconditionError("shifted remainder must have zero constant term")
    tol = Fraction(tol)
    if tol <= 0:
        raise InvalidArgumentError("tolerance must be positive")
    iso = isolate_real_roots(reduced)
    if len(iso) != m:
        raise PreconditionError(f"reduced polynomial has {len(iso)} distinct real roots, needs {m}")
    alphas = iso.roots()
    n = m + 1
    image = image_polynomial(reduced, shifted_remainder)
    values = isolate_real_roots(image).roots()
    idx = [_locate(a, shifted_remainder, values) for a in alphas]

    lower_set, upper_set = endpoint_sets(n)
    sup_j = max(idx[k - 1] for k in lower_set)
    inf_j = min(idx[k - 1] for k in upper_set)
    lo_at = tuple(k for k in lower_set if idx[k - 1] == sup_j)
    hi_at = tuple(k for k in upper_set if idx[k - 1] == inf_j)

    lower, upper = values[sup_j], values[inf_j]
    lo_val, hi_val = lower.as_rational(), upper.as_rational()
    if lo_val is not None:
        lower = AlgebraicReal._trusted(lower.defining, lo_val, lo_val)
    else:
        lower = lower.refine(tol)
    if hi_val is not None:
        upper = AlgebraicReal._trusted(upper.defining, hi_val, hi_val)
    else:
        upper = upper.refine(tol)
    return AdmissibleInterval(
        degree=n,
        lo=lower.lo,
        hi=upper.hi,
        inner_lo=lower.hi,
        inner_hi=upper.lo,
        empty=sup_j >= inf_j,
        point=sup_j == inf_j,
        lo_exact=lo_val is not None,
        hi_exact=hi_val is not None,
        lo_attained_at=lo_at,
        hi_attained_at=hi_at,
        lower_root=lower,
        upper_root=upper,
    )


def choose_coefficient(interval: AdmissibleInterval, strategy: Union[str, Fraction, int] = "midpoint") -> Fraction:
    if interval.empty:
        raise NoAdmissibleChoiceError(f"admissible interval is {interval.diagnosis}; no coefficient can be chosen")
    if strategy == "midpoint":
        # the inner bounds sit strictly inside the true open range
        return (interval.inner_lo + interval.inner_hi) / 2
    if isinstance(strategy, str):
        raise InvalidArgumentError(f"unknown strategy {strategy!r}")
    value = Fraction(strategy)
    if not interval.contains(value):
        raise InvalidArgumentError(f"{value} is not strictly inside the admissible interval")
    return value


# -- the recursive builder ------------------------------------------------------

@dataclass(frozen=True)
class Stage:
    degree: int
    poly: Poly
    remainder: Poly
    shifted_remainder: Poly
    interval: AdmissibleInterval
    trailing: Fraction
    c_value: Fraction
    label: str
    given: bool
    sturm_count: int
    interlaced: bool


@dataclass(frozen=True)
class FamilyChainLedger:
    n: int
    c: tuple
    base: Poly
    stages: tuple
    final: Poly

    def final_coefficient(self, stage: Stage) -> Fraction:
        """Coefficient ``a_{n-i}`` of the final polynomial fixed at stage ``i``."""
        return self.final.coeff(self.n - stage.degree)


def stage_label(i: int) -> str:
    f = family_factor(i, 0)
    name = coeff_name(i - 2)
    return name if f == 1 else f"{f}{name}"


def build_all_real(
    n: int,
    c0,
    strategy: str = "midpoint",
    tol=DEFAULT_TOL,
    fixed: Optional[Mapping[int, Fraction]] = None,
) -> FamilyChainLedger:
    """Choose ``c_1 .. c_{n-2}`` so that every ``P_i`` (3 <= i <= n) has ``i`` distinct real roots.

    ``fixed`` maps a coefficient index ``k >= 1`` to a prescribed ``c_k``;
    it must fall strictly inside its stage's admissible interval.
    """
    if n < 3:
        raise InvalidArgumentError("construction needs n >= 3")
    c0 = Fraction(c0)
    if c0 >= 0:
        raise GateViolationError("leading family coefficient must be negative (c0 < 0)")
    fixed = dict(fixed or {})
    if 0 in fixed:
        raise InvalidArgumentError("c0 is the construction input; it cannot be fixed separately")
    for k in fixed:
        if not 1 <= k <= n - 2:
            raise InvalidArgumentError(f"coefficient index {k} is outside 1..{n - 2}")
    base = Poly([c0 / 3, 0, 1])
    prev = base
    c = [c0]
    stages = []
    for i in range(3, n + 1):
        shifted = X * prev - lift(prev, 0)
        interval = admissible_interval(prev, shifted, tol)
        if interval.empty:
            err = ConstructionFailedError(
                f"stage {i}: admissible interval for {stage_label(i)} is {interval.diagnosis}",
                stage=i,
                interval=interval,
            )
            err.completed = tuple(stages)
            raise err
        factor = family_factor(i, 0)
        given = (i - 2) in fixed
        choice = Fraction(fixed[i - 2]) * factor if given else strategy
        trailing = choose_coefficient(interval, choice)
        poly = lift(prev, trailing)
        count = count_distinct_real_roots(poly)
        if count != i:
            raise CertificationError(f"stage {i}: Sturm count {count}, expected {i}")
        interlaced = is_interlaced(isolate_real_roots(poly), isolate_real_roots(prev), strict=True)
        if not interlaced:
            raise CertificationError(f"stage {i}: roots of P_{i - 1} do not interlace those of P_{i}")
        c.append(trailing / factor)
        stages.append(
            Stage(
                degree=i,
                poly=poly,
                remainder=shifted - trailing,
                shifted_remainder=shifted,
                interval=interval,
                trailing=trailing,
                c_value=trailing / factor,
                label=stage_label(i),
                given=given,
                sturm_count=count,
                interlaced=interlaced,
            )
        )
        prev = poly
    final = prev
    if build_family(FamilySpec(n, tuple(c))) != final:
        raise CertificationError("ledger coefficients do not rebuild the final polynomial")
    return FamilyChainLedger(n, tuple(c), base, tuple(stages), final)


# -- multiplicities and the limit-case catalogue ---------------------------------

@dataclass(frozen=True)
class LimitCase:
    name: str
    degree: int
    description: str


@dataclass(frozen=True)
class MultiplicityProfile:
    poly: Poly
    entries: tuple  # (IntervalQ, multiplicity), increasing roots
    matches: tuple = ()

    @property
    def multiplicities(self) -> tuple:
        return tuple(m for _, m in self.entries)

    @property
    def real_degree(self) -> int:
        return sum(self.multiplicities)


def classify_multiplicities(p: Poly, width=Fraction(1, 2 ** 20)) -> MultiplicityProfile:
    """Real roots with multiplicities; rational roots come back as exact points."""
    if p.degree < 1:
        raise InvalidArgumentError("classification needs a non-constant polynomial")
    roots = []
    for factor, mult in squarefree_decompose(p):
        for a in isolate_real_roots(factor).roots():
            roots.append((a, mult))
    # factors are coprime, so no two roots coincide
    ordered = sorted(roots, key=cmp_to_key(lambda u, v: u[0].compare(v[0])))
    entries = []
    for a, mult in ordered:
        exact = a.as_rational()
        entries.append((IntervalQ.point(exact) if exact is not None else a.refine(width).interval, mult))
    matches = ()
    q = p / p.lc
    spec = family_parameters(q)
    if spec is not None and 4 <= spec.n <= 6:
        matches = tuple(limit_case_catalog(spec.n, spec.c))
    return MultiplicityProfile(p, tuple(entries), matches)


_CASES = {
    "deg4-triple-root": "triple root +-sqrt(-p/3): 4p^3+27q^2=0, r=-p^2/12",
    "deg4-two-double-roots": "two double roots +-sqrt(-p): q=0, r=p^2/4",
    "deg5-quadruple-root": "quadruple root: 4p^3+27q^2=0, r=-p^2/12, s=-pq/30",
    "deg5-triple-plus-double": "triple and double root: 8p^3+729q^2=0, r=4p^2/27, s=4pq/5",
    "deg5-two-double-roots": "two real double roots a, b solving the (ab, a+b) system",
    "deg6-multiplicity-five": "root of multiplicity five: 4p^3+27q^2=0, 4r=-p^2/3, s=-pq/30, t=p^3/648",
    "deg6-quadruple-plus-double": "quadruple and double root: 216q^2=-5p^3, 4r=5p^2/12, s=5pq/12, t=-25p^3/1296",
    "deg6-two-triple-roots": "two triple roots +-sqrt(-5p/3): q=0, 4r=5p^2/9, s=0, t=25p^3/648",
}


def _two_double_roots_deg5(p, q, r, s) -> bool:
    poly = build_family(FamilySpec(5, (p, q, r, s)))
    doubles = [f for f, m in squarefree_decompose(poly) if m == 2]
    if len(doubles) != 1 or doubles[0].degree != 2:
        return False
    # (x-a)(x-b) = x^2 - sigma x + pi
    sigma, pi = -doubles[0].coeff(1), doubles[0].coeff(0)
    if sigma * sigma - 4 * pi <= 0:
        return False
    w = pi - 2 * p / 3
    return (
        pi * pi - 8 * p * pi / 3 + 12 * r == 0
        and sigma ** 3 + 2 * p * sigma / 3 - 2 * q == 0
        and sigma * w == 3 * q
        and -2 * w ** 3 + 2 * p * w * w + 27 * q * q == 0
        and 20 * s == 2 * pi * pi * sigma
    )


def limit_case_catalog(n: int, c) -> list[LimitCase]:
    """Named multiple-root families whose exact coefficient conditions hold."""
    if not 4 <= n <= 6:
        raise InvalidArgumentError("the limit-case catalogue covers degrees 4 to 6")
    c = tuple(Fraction(v) for v in c)
    if len(c) != n - 1:
        raise InvalidArgumentError(f"degree {n} needs {n - 1} coefficients")
    p, q, r = c[0], c[1], c[2]
    found = []
    if p < 0:
        if n == 4:
            if 4 * p ** 3 + 27 * q ** 2 == 0 and r == -p ** 2 / 12:
                found.append("deg4-triple-root")
            if q == 0 and r == p ** 2 / 4:
                found.append("deg4-two-double-roots")
        elif n == 5:
            s = c[3]
            if 4 * p ** 3 + 27 * q ** 2 == 0 and r == -p ** 2 / 12 and s == -p * q / 30:
                found.append("deg5-quadruple-root")
            if 8 * p ** 3 + 729 * q ** 2 == 0 and r == 4 * p ** 2 / 27 and s == 4 * p * q / 5:
                found.append("deg5-triple-plus-double")
            if _two_double_roots_deg5(p, q, r, s):
                found.append("deg5-two-double-roots")
        else:
            s, t = c[3], c[4]
            if (4 * p ** 3 + 27 * q ** 2 == 0 and 4 * r == -p ** 2 / 3
                    and s == -p * q / 30 and t == p ** 3 / 648):
                found.append("deg6-multiplicity-five")
            if (216 * q ** 2 == -5 * p ** 3 and 4 * r == 5 * p ** 2 / 12
                    and s == 5 * p * q / 12 and t == -25 * p ** 3 / 1296):
                found.append("deg6-quadruple-plus-double")
            if q == 0 and 4 * r == 5 * p ** 2 / 9 and s == 0 and t == 25 * p ** 3 / 648:
                found.append("deg6-two-triple-roots")
    return [LimitCase(name, n, _CASES[name]) for name in found]


# -- the degree-5 emptiness inequality --------------------------------------------

@dataclass(frozen=True)
class EmptinessProbe:
    x_lo: Fraction
    x_hi: Fraction
    value_lo: Fraction
    value_hi: Fraction
    exact: bool
    satisfied: bool
    certified: bool


def emptiness_cubic(p, q, r) -> Poly:
    """Left side ``(6r/p - p) X (X^2 - 4r) + (9q^2/p + 2r) X^2 - 8r^2`` as a polynomial in ``X``."""
    a = 6 * r / p - p
    b = 9 * q * q / p + 2 * r
    return Poly([-8 * r * r, -4 * r * a, b, a])


def degree5_emptiness_probe(p, q, r, tol=DEFAULT_TOL) -> EmptinessProbe:
    """Evaluate the inequality at ``X`` = (smallest root) * (largest root) of ``x^4+2px^2+4qx+4r``."""
    p, q, r, tol = Fraction(p), Fraction(q), Fraction(r), Fraction(tol)
    if p >= 0:
        raise PreconditionError("the probe needs p < 0")
    quartic = Poly([4 * r, 4 * q, 2 * p, 0, 1])
    real = []
    for factor, mult in squarefree_decompose(quartic):
        real.extend(isolate_real_roots(factor).roots() * mult)
    if len(real) != 4:
        raise PreconditionError("x^4+2px^2+4qx+4r must have only real roots")
    real.sort(key=cmp_to_key(AlgebraicReal.compare))
    smallest, largest = real[0], real[-1]
    cubic = emptiness_cubic(p, q, r)
    lo_r, hi_r = smallest.as_rational(), largest.as_rational()
    if lo_r is not None and hi_r is not None:
        x = lo_r * hi_r
        v = cubic(x)
        return EmptinessProbe(x, x, v, v, True, v < 0, True)
    a, b = smallest, largest
    while True:
        prods = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
        xl, xh = min(prods), max(prods)
        vl, vh = interval_eval(cubic, xl, xh)
        if vh < 0 or vl > 0:
            return EmptinessProbe(xl, xh, vl, vh, False, vh < 0, True)
        if xh - xl <= tol:
            return EmptinessProbe(xl, xh, vl, vh, False, False, False)
        a = a.bisect() if a.width >= b.width else a
        b = b.bisect() if b.width >= a.width else b

