import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from interlace.errors import InvalidArgumentError, PreconditionError
from interlace.family import (
    FamilySpec,
    build_family,
    cascade_split,
    centroid,
    coeff_index,
    coeff_name,
    family_chain,
    family_parameters,
    is_interlaced,
    lift,
    prop1_sign_condition,
    remainder_chain,
)
from interlace.polycore import Poly, X, derivative, euclid_div
from interlace.realroots import count_distinct_real_roots

coef = st.fractions(min_value=-8, max_value=8, max_denominator=6)
specs = st.integers(2, 7).flatmap(lambda n: st.lists(coef, min_size=n - 1, max_size=n - 1).map(lambda c: FamilySpec(n, c)))


def test_low_degree_members():
    p, q, r = Fraction(-3), Fraction(1), Fraction(2)
    assert build_family(FamilySpec(2, (p,))) == X ** 2 + p / 3
    assert build_family(FamilySpec(3, (p, q))) == X ** 3 + p * X + q
    assert build_family(FamilySpec(4, (p, q, r))) == X ** 4 + 2 * p * X ** 2 + 4 * q * X + 4 * r


def test_quintic_shape():
    p, q, r, s = Fraction(1), Fraction(1), Fraction(3), Fraction(18, 5)
    assert build_family(FamilySpec(5, (p, q, r, s))) == Poly([72, 60, 10, Fraction(10, 3), 0, 1])


def test_spec_validation():
    with pytest.raises(InvalidArgumentError):
        FamilySpec(4, (1, 2))
    with pytest.raises(InvalidArgumentError):
        FamilySpec(1, ())


def test_coefficient_names():
    assert [coeff_name(k) for k in range(3)] == ["p", "q", "r"]
    assert coeff_index("s") == 3 and coeff_index("c9") == 9
    with pytest.raises(InvalidArgumentError):
        coeff_index("z")


def test_degree3_remainder():
    P3 = build_family(FamilySpec(3, (-3, 1)))
    step = cascade_split(P3)
    assert step.reduced == X ** 2 - 1
    assert step.remainder == Poly([-1, 2])  # 2x - 1
    assert step.shifted_remainder == Poly([0, 2])


def test_degree4_shifted_remainder():
    p, q = Fraction(-3), Fraction(0)
    P4 = build_family(FamilySpec(4, (p, q, 5)))
    step = cascade_split(P4)
    assert step.shifted_remainder == -p * X ** 2 - 3 * q * X


def test_recentred_split_is_euclidean_remainder():
    R = Poly([5, -2, 3, 7])
    step = cascade_split(R, centroid(R))
    assert step.remainder.degree <= R.degree - 2
    assert step.remainder == -euclid_div(R, derivative(R))[1]


def test_remainder_chain_depth():
    R = Poly([1, 2, -3, 4, 1, 1])
    steps = remainder_chain(R)
    assert [s.parent.degree for s in steps] == [5, 3]


def test_interlacing_examples():
    outer = X ** 2 - 1
    assert is_interlaced(outer, X - Fraction(1, 2))
    assert not is_interlaced(outer, X - 3)
    assert is_interlaced(outer, X - 1, strict=False)
    assert not is_interlaced(outer, X - 1, strict=True)
    assert not is_interlaced(outer, X ** 2 - 4)


def test_sign_condition_examples():
    reduced = X ** 2 - 1
    assert prop1_sign_condition(reduced, 2 * X - 1)
    assert not prop1_sign_condition(reduced, 2 * X - 5)
    assert not prop1_sign_condition(reduced, 2 * X - 2)
    with pytest.raises(PreconditionError):
        prop1_sign_condition(X ** 2 + 1, X)


@given(specs)
def test_family_invariants(spec):
    P = build_family(spec)
    assert P.lc == 1 and P.coeff(spec.n - 1) == 0
    assert family_parameters(P) == spec
    if spec.n >= 3:
        chain = family_chain(spec)
        for i, (lo, hi) in enumerate(zip(chain, chain[1:]), start=3):
            assert derivative(hi) / i == lo
            assert lift(lo, hi.coeff(0)) == hi


@given(st.lists(coef, min_size=3, max_size=8), st.none() | coef)
def test_cascade_reassembly(coeffs, center):
    parent = Poly(coeffs)
    if parent.degree < 3:
        return
    step = cascade_split(parent, center)
    shift = X if center is None else X - center
    assert shift * step.reduced - step.remainder == parent
    assert step.shifted_remainder.coeff(0) == 0
    assert step.remainder - step.shifted_remainder == Poly([step.remainder.coeff(0)])


@given(st.integers(4, 6), st.integers(0, 10 ** 6))
def test_sign_condition_equivalence(n, seed):
    rng = random.Random(seed)
    roots = set()
    while len(roots) < n - 2:
        roots.add(Fraction(rng.randint(-30, 30), rng.randint(1, 5)))
    roots = sorted(roots)
    roots.append(-sum(roots))
    if len(set(roots)) != n - 1:
        return
    reduced = Poly.from_roots(roots)
    remainder = X * reduced - lift(reduced, Fraction(rng.randint(-400, 400), rng.randint(1, 4)))
    lhs = prop1_sign_condition(reduced, remainder)
    rhs = count_distinct_real_roots(remainder) == n - 2 and is_interlaced(reduced, remainder)
    assert lhs == rhs
