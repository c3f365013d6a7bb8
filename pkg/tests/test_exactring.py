from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gctqft.exactring import (
    CyclotomicRing,
    common_level,
    cyclotomic_polynomial,
    euler_phi,
    from_json,
    lift,
    multiplicative_order,
    root_of_unity,
    to_json,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert euler_phi(36) == 12


@pytest.mark.parametrize("bad", [0, -3])
def test_bad_level(bad):
    with pytest.raises(ValueError):
        cyclotomic_polynomial(bad)


def test_fourth_roots():
    R = CyclotomicRing(4)
    i = R.zeta()
    assert i * i == -1
    assert (1 + i) * (1 - i) == 2
    assert str(1 + i) == "1 + z"


def test_third_roots_sum_to_zero():
    z = root_of_unity(3, 1)
    assert (1 + z + z * z).is_zero()


@pytest.mark.parametrize("N", range(1, 40))
def test_root_orders(N):
    for k in range(N):
        assert multiplicative_order(root_of_unity(N, k)) == N // gcd(N, k)


def test_non_root_has_no_order():
    assert multiplicative_order(CyclotomicRing(4).from_int(2)) is None
    with pytest.raises(ValueError):
        CyclotomicRing(4).from_int(2).unit_inverse()


def test_negative_roots_invert():
    # -zeta_3 has order 6 and is not itself a power of zeta_3
    u = -root_of_unity(3, 1)
    assert u * u.unit_inverse() == 1
    assert u ** -1 == u.unit_inverse()


def test_lift_into_larger_level():
    z3 = root_of_unity(3, 1)
    z = lift(z3, 12)
    assert z ** 3 == 1 and z != 1
    assert z == root_of_unity(12, 4)
    with pytest.raises(ValueError, match="does not divide"):
        lift(z3, 8)


def test_level_mismatch_is_an_error():
    with pytest.raises(ValueError, match="lift first"):
        root_of_unity(3, 1) + root_of_unity(4, 1)


def test_common_level():
    assert common_level(4, 6, 9) == 36


def test_json_round_trip():
    x = root_of_unity(8, 3) + 2
    assert from_json(to_json(x)) == x
    with pytest.raises(ValueError):
        from_json({"level": 8, "coeffs": [1, 2]})


def test_immutable():
    x = root_of_unity(5, 1)
    with pytest.raises(AttributeError):
        x.coeffs = (0,)


levels = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12, 15, 24])


@st.composite
def triples(draw):
    N = draw(levels)
    R = CyclotomicRing(N)
    coeffs = st.lists(st.integers(-20, 20), min_size=R.degree, max_size=R.degree)
    return tuple(R.element(draw(coeffs)) for _ in range(3))


@settings(max_examples=150, deadline=None)
@given(triples())
def test_ring_axioms(xyz):
    x, y, z = xyz
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0


@settings(max_examples=100, deadline=None)
@given(triples(), st.sampled_from([2, 3, 5]))
def test_lift_is_a_ring_map(xyz, factor):
    x, y, _ = xyz
    M = x.level * factor
    assert lift(x * y, M) == lift(x, M) * lift(y, M)
    assert lift(x + y, M) == lift(x, M) + lift(y, M)
