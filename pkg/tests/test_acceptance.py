"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (collected in ``RESULTS`` and printed in
the pytest terminal summary) before asserting.  Run the file directly to
print the lines without pytest.
"""

import itertools
import random
import time
from fractions import Fraction

from interlace.construct import (
    admissible_interval,
    build_all_real,
    classify_multiplicities,
    degree5_emptiness_probe,
    limit_case_catalog,
)
from interlace.errors import ConstructionFailedError
from interlace.family import FamilySpec, build_family, family_parameters, is_interlaced, lift, prop1_sign_condition
from interlace.polycore import Poly, X, discriminant, gcd
from interlace.realroots import count_distinct_real_roots, isolate_real_roots, sign_at_algebraic
from oracles import count_real_roots

RESULTS = []


def record(number, ok, detail):
    RESULTS.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def shifted(prev):
    return X * prev - lift(prev, 0)


def random_centred_roots(rng, k, spread=40, den=8):
    """``k`` distinct rationals summing to zero."""
    while True:
        roots = [Fraction(rng.randint(-spread, spread), rng.randint(1, den)) for _ in range(k - 1)]
        roots.append(-sum(roots))
        if len(set(roots)) == k:
            return sorted(roots)


def test_c1_degree3_closed_form():
    P2 = Poly([-1, 0, 1])  # p = -3
    iv = admissible_interval(P2, shifted(P2))
    exact = iv.lo_exact and iv.hi_exact and (iv.lo, iv.hi) == (-2, 2)
    sweep = {q: count_distinct_real_roots(Poly([q, -3, 0, 1])) for q in range(-3, 4)}
    sweep_ok = all((sweep[q] == 3) == (abs(q) < 2) for q in sweep)
    ok = exact and sweep_ok
    record(1, ok, f"exact interval ({iv.lo}, {iv.hi}); sweep counts {sweep}")
    assert ok


def test_c2_degree4_interval():
    tol = Fraction(1, 2 ** 30)
    P3 = Poly([0, -3, 0, 1])
    iv = admissible_interval(P3, shifted(P3), tol)
    within = abs(iv.lo - 0) <= tol and abs(iv.hi - 9) <= tol and not iv.empty
    upper = [c.name for c in limit_case_catalog(4, (-3, 0, Fraction(9, 4)))]
    lower = classify_multiplicities(lift(P3, 0))
    origin_double = any(e.lo == 0 and e.hi == 0 and m == 2 for e, m in lower.entries)
    ok = within and upper == ["deg4-two-double-roots"] and origin_double
    record(2, ok, f"(lo, hi) = ({iv.lo}, {iv.hi}) within 2^-30 of (0, 9); 4r=9 -> {upper}; "
                  f"4r=0 -> double root at 0: {origin_double}")
    assert ok


def _golden(n, c, roots, case):
    poly = build_family(FamilySpec(n, c))
    prof = classify_multiplicities(poly)
    names = [m.name for m in limit_case_catalog(n, c)]
    roots = [Fraction(r) for r in roots]
    reference = [(r, roots.count(r)) for r in sorted(set(roots))]
    got = [(e.lo, m) for e, m in prof.entries if e.is_point]
    return (poly == Poly.from_roots(roots) and got == reference
            and case in names and [m.name for m in prof.matches] == names)


def test_c3_golden_factorizations():
    F = Fraction
    cases = [
        ("a", 4, (-3, 2, F(-3, 4)), [1, 1, 1, -3], "deg4-triple-root"),
        ("b", 5, (F(-9, 2), -1, 3, F(18, 5)), [-2, -2, -2, 3, 3], "deg5-triple-plus-double"),
        ("c", 6, (-3, 2, F(-3, 4), F(1, 5), F(-1, 24)), [1] * 5 + [-5], "deg6-multiplicity-five"),
        ("d", 6, (F(-3, 5), 0, F(1, 20), 0, F(-1, 120)), [1, 1, 1, -1, -1, -1], "deg6-two-triple-roots"),
    ]
    status = {}
    for tag, n, c, roots, case in cases:
        status[tag] = _golden(n, c, roots, case)
    p, q = F(-3), F(2)
    extra = 4 * p ** 3 + 27 * q ** 2 == 0 and 729 * F(-1) ** 2 + 8 * F(-9, 2) ** 3 == 0
    ok = all(status.values()) and extra
    record(3, ok, f"exact identities {status}; 4p^3+27q^2=0 and 729q^2+8p^3=0 hold: {extra}")
    assert ok


def test_c4_builder():
    start = time.perf_counter()
    outcomes = {}
    all_ok = True
    for c0 in (-1, -3):
        for n in range(3, 10):
            try:
                ledger = build_all_real(n, c0)
            except ConstructionFailedError as err:
                outcomes[(n, c0)] = f"empty at stage {err.stage}"
                all_ok = False
                continue
            prev = ledger.base
            good = True
            for st in ledger.stages:
                good &= count_distinct_real_roots(st.poly) == st.degree
                good &= is_interlaced(st.poly, prev, strict=True)
                prev = st.poly
            outcomes[(n, c0)] = "ok" if good else "stage check failed"
            all_ok &= good
    elapsed = time.perf_counter() - start
    ok = all_ok and elapsed < 10
    failed = {k: v for k, v in outcomes.items() if v != "ok"}
    record(4, ok, f"{len(outcomes) - len(failed)}/{len(outcomes)} builds succeed in {elapsed:.2f}s"
                  + (f"; failures {failed}" if failed else ""))
    assert ok, failed


def _random_instances(rng, count):
    out = []
    while len(out) < count:
        n = rng.choice((5, 6))
        kind = rng.random()
        if kind < 0.5:
            coeffs = [Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(n)] + [Fraction(1)]
            p = Poly(coeffs)
        else:
            # products with repeated rational roots and quadratic factors
            p = Poly([1])
            while p.degree < n:
                if rng.random() < 0.3 and p.degree <= n - 2:
                    b, c = Fraction(rng.randint(-6, 6), rng.randint(1, 4)), Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                    p = p * Poly([c, b, 1])
                else:
                    r = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                    m = min(rng.randint(1, 3), n - p.degree)
                    p = p * (X - r) ** m
            p = p * Fraction(rng.randint(1, 5), rng.randint(1, 5))
        out.append(p)
    return out


def test_c5_sturm_vs_oracle():
    exhaustive = 0
    mismatches = []
    for d in range(1, 5):
        for cs in itertools.product(range(-2, 3), repeat=d):
            p = Poly(list(cs) + [1])
            exhaustive += 1
            if count_distinct_real_roots(p) != count_real_roots(list(p.coeffs)):
                mismatches.append(p)
    rng = random.Random(20261015)
    randoms = _random_instances(rng, 1000)
    for p in randoms:
        if count_distinct_real_roots(p) != count_real_roots(list(p.coeffs)):
            mismatches.append(p)
    ok = not mismatches
    record(5, ok, f"{exhaustive} exhaustive + {len(randoms)} random instances, "
                  f"{len(mismatches)} disagreements (100% agreement required)")
    assert ok, mismatches[:5]


def test_c6_sign_condition_equivalence():
    rng = random.Random(6)
    agree = total = true_count = 0
    while total < 500:
        n = rng.choice((4, 5, 6))
        roots = random_centred_roots(rng, n - 1)
        reduced = Poly.from_roots(roots)
        R0 = shifted(reduced)
        iv = admissible_interval(reduced, R0)
        if not iv.empty and rng.random() < 0.5:
            # sampling only; the equivalence below is checked by counting and interlacing
            t = Fraction(rng.randint(1, 999), 1000)
            a0 = iv.inner_lo + t * (iv.inner_hi - iv.inner_lo)
        else:
            vals = sorted(float(R0(r)) for r in roots)
            lo, hi = vals[0], vals[-1]
            a0 = Fraction(rng.uniform(lo - 0.2 * (hi - lo + 1), hi + 0.2 * (hi - lo + 1))).limit_denominator(1000)
        remainder = R0 - a0
        lhs = prop1_sign_condition(reduced, remainder)
        rhs = (remainder.degree == n - 2
               and count_distinct_real_roots(remainder) == n - 2
               and is_interlaced(reduced, remainder, strict=True))
        total += 1
        agree += lhs == rhs
        true_count += lhs
    ok = agree == total
    record(6, ok, f"{agree}/{total} agree ({true_count} interlaced, {total - true_count} not)")
    assert ok


def test_c7_discriminant_sign():
    rng = random.Random(7)
    agree = total = 0
    while total < 500:
        n = rng.choice((3, 4, 5, 6))
        crit = sorted(set(Fraction(rng.randint(-30, 30), rng.randint(1, 6)) for _ in range(n - 1)))
        if len(crit) != n - 1:
            continue
        dp = Poly.from_roots(crit) * n
        p = dp.antiderivative(Fraction(rng.randint(-200, 200), rng.randint(1, 7)))
        d = discriminant(p)
        if d == 0:
            continue
        iso = isolate_real_roots(dp)
        sign_prod = 1
        for iv in iso:
            sign_prod *= sign_at_algebraic(p, dp, iv)
        expected = (-1) ** (n * (n - 1) // 2) * sign_prod
        total += 1
        agree += ((d > 0) - (d < 0)) == expected
    ok = agree == total
    record(7, ok, f"{agree}/{total} square-free instances satisfy sign(D) = (-1)^(n(n-1)/2) sign(prod P(a_i))")
    assert ok


def _regime_samples(rng, predicate, count):
    out = []
    while len(out) < count:
        roots = random_centred_roots(rng, 4, spread=30, den=6)
        p, q, r = family_parameters(Poly.from_roots(roots)).c
        if p < 0 and predicate(p, q, r):
            out.append((p, q, r))
    return out


def test_c8_emptiness_anchor():
    F = Fraction
    p, q, r = F(-9, 2), F(-1), F(3)
    probe = degree5_emptiness_probe(p, q, r)
    anchor = probe.exact and probe.x_lo == probe.x_hi == 4 * p / 3 == -6 and probe.value_lo == probe.value_hi == 0
    rng = random.Random(8)
    neg = _regime_samples(rng, lambda p, q, r: r < 0, 50)
    low = _regime_samples(rng, lambda p, q, r: 0 < r <= p * p / 9, 50)
    neg_ok = sum(degree5_emptiness_probe(*s).satisfied for s in neg)
    low_ok = sum(degree5_emptiness_probe(*s).satisfied for s in low)
    ok = anchor and neg_ok == 50 and low_ok == 50
    record(8, ok, f"anchor X = {probe.x_lo}, value = {probe.value_lo} (exact); "
                  f"satisfied r<0: {neg_ok}/50, 0<r<=p^2/9: {low_ok}/50")
    assert ok


def test_c9_endpoint_degeneracy():
    P3 = Poly([0, -3, 0, 1])
    P4 = lift(P3, 9)
    g = gcd(P4, P3)
    prof = classify_multiplicities(P4)
    ok = g.degree >= 1 and sorted(prof.multiplicities) == [2, 2]
    record(9, ok, f"gcd(P_4, P_3) = {g}; profile {prof.multiplicities}")
    assert ok


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c") and callable(fn):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS))
