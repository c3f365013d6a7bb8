from __future__ import annotations

import itertools

import numpy as np
import pytest

from gctqft.abelian import FiniteAbelianGroup
from gctqft.exactring import CyclotomicRing, root_of_unity
from gctqft.groupcat import (
    CategoryPresentation,
    InvalidPresentation,
    alpha,
    check_all,
    check_balance,
    check_hexagons,
    check_order_conditions,
    check_pentagon,
    enumerate_presentations,
    from_exponents,
    is_symmetric,
    sigma_pair,
    twist,
)
from gctqft.groupcat.presentation import structure

Z2_I = from_exponents((2,), [1])  # sigma = zeta_4
Z2_MINUS = from_exponents((2,), [2])
Z2_ONE = from_exponents((2,), [0])


# --- order conditions -------------------------------------------------------


def test_order_conditions_examples():
    assert check_order_conditions(Z2_I)
    bad = from_exponents((3,), [3])  # sigma = -1 at level 6
    report = check_order_conditions(bad)
    assert not report and any("odd" in v for v in report.violations)
    for orders in [(2,), (3, 5), (2, 2, 4)]:
        assert check_order_conditions(from_exponents(orders, [0] * len(orders)))


def test_off_diagonal_order_condition():
    # Z/2 x Z/4: sigma_{1,0} must square to 1
    assert check_order_conditions(from_exponents((2, 4), [0, 0], {(1, 0): 4}))
    report = check_order_conditions(from_exponents((2, 4), [0, 0], {(1, 0): 2}))
    assert not report and report.violations == ["sigma_1,0^2 != 1"]


def test_level_must_hold_all_invariants():
    with pytest.raises(InvalidPresentation):
        CategoryPresentation(FiniteAbelianGroup((2,)), 2, (CyclotomicRing(2).one(),))
    with pytest.raises(InvalidPresentation):
        from_exponents((2, 2), [0, 0], {(0, 1): 1})


def test_invalid_presentation_rejected_by_structure_constants():
    bad = from_exponents((3,), [3])
    with pytest.raises(InvalidPresentation):
        alpha(bad, (1,), (1,), (1,))
    with pytest.raises(InvalidPresentation):
        sigma_pair(bad, (1,), (1,))


def enumerated_count(orders):
    # admissible sigma_i: 2n_i-th roots (n_i-th for odd n_i); sigma_ij: gcd(n_i, n_j)-th roots
    count = 1
    for n in orders:
        count *= n if n % 2 else 2 * n
    for i, j in itertools.combinations(range(len(orders)), 2):
        from math import gcd

        count *= gcd(orders[i], orders[j])
    return count


@pytest.mark.parametrize("orders", [(2,), (3,), (4,), (2, 2), (2, 3), (2, 4)])
def test_enumeration_is_complete_and_valid(orders):
    found = list(enumerate_presentations(orders))
    assert len(found) == enumerated_count(orders)
    assert len(set(found)) == len(found)
    assert all(check_order_conditions(p) for p in found)


def test_enumeration_at_larger_level_finds_nothing_new():
    small = set(enumerate_presentations((2,)))
    big = list(enumerate_presentations((2,), 8))
    assert len(big) == len(small) == 4


# --- closed forms -----------------------------------------------------------


def test_alpha_examples():
    g = (1,)
    assert alpha(Z2_I, g, g, g) == -1
    assert alpha(Z2_I, g, (0,), g) == 1
    p = from_exponents((3, 4), [8, 3], {(1, 0): 0})
    G = p.group
    for a, b, c in itertools.product(G.elements(), repeat=3):
        if all(b[i] + c[i] < n for i, n in enumerate(G.orders)):
            assert alpha(p, a, b, c) == 1
    trivial = from_exponents((2, 3), [0, 0])
    assert all(alpha(trivial, *t) == 1 for t in itertools.product(trivial.group.elements(), repeat=3))


def test_sigma_pair_examples():
    p = from_exponents((2, 4), [2, 3], {(1, 0): 4})
    assert sigma_pair(p, (1, 0), (1, 0)) == p.sigma_diag[0]
    assert sigma_pair(p, (0, 1), (0, 1)) == p.sigma_diag[1]
    for b in p.group.elements():
        assert sigma_pair(p, (0, 0), b) == 1
    z4 = from_exponents((4,), [1])
    assert sigma_pair(z4, (2,), (2,)) == -1
    # off-diagonal invariant appears only with the smaller index on the left
    assert sigma_pair(p, (1, 0), (0, 1)) == p.off(1, 0)
    assert sigma_pair(p, (0, 1), (1, 0)) == 1


@pytest.mark.parametrize("n", range(1, 13))
def test_twist_on_powers_is_quadratic(n):
    for p in enumerate_presentations((n,)):
        s = p.sigma_diag[0]
        for r in range(n):
            assert sigma_pair(p, (r,), (r,)) == s ** (r * r)


@pytest.mark.parametrize("orders", [(2,), (4,), (3,), (2, 2), (2, 6)])
def test_alpha_squares_to_one(orders):
    for p in enumerate_presentations(orders):
        S = structure(p)
        assert np.all((2 * S.alpha) % S.level == 0)


def test_tables_match_pointwise_closed_forms():
    p = from_exponents((2, 4), [6, 5], {(1, 0): 4})
    S = structure(p)
    G = p.group
    for a, b, c in itertools.product(G.elements(), repeat=3):
        assert S.value(S.alpha[G.index(a), G.index(b), G.index(c)]) == alpha(p, a, b, c)
    for a, b in itertools.product(G.elements(), repeat=2):
        assert S.value(S.sigma[G.index(a), G.index(b)]) == sigma_pair(p, a, b)


# --- coherence --------------------------------------------------------------


def naive_pentagon(p):
    G = p.group
    op = G.op
    for a, b, c, d in itertools.product(G.elements(), repeat=4):
        lhs = alpha(p, b, c, d) * alpha(p, a, op(b, c), d) * alpha(p, a, b, c)
        if lhs != alpha(p, op(a, b), c, d) * alpha(p, a, b, op(c, d)):
            return False
    return True


def naive_hexagons(p):
    G = p.group
    op = G.op
    A = lambda *t: alpha(p, *t)  # noqa: E731
    S = lambda *t: sigma_pair(p, *t)  # noqa: E731
    for a, b, c in itertools.product(G.elements(), repeat=3):
        if A(a, b, c) * A(b, c, a) * S(a, c) * S(a, b) != A(b, a, c) * S(a, op(b, c)):
            return False
        if A(a, b, c) * A(c, a, b) * S(op(a, b), c) != A(a, c, b) * S(a, c) * S(b, c):
            return False
    return True


@pytest.mark.parametrize("orders", [(2,), (3,), (2, 2)])
def test_checks_agree_with_naive_loops(orders):
    for p in enumerate_presentations(orders):
        assert bool(check_pentagon(p)) == naive_pentagon(p) is True
        assert bool(check_hexagons(p)) == naive_hexagons(p) is True


def test_coherence_examples():
    for p in (Z2_I, Z2_ONE, from_exponents((4,), [1])):
        assert all(check_all(p))


def test_mutated_alpha_fails_pentagon_with_witness():
    S = structure(Z2_I).flip_alpha((1,), (1,), (0,))
    r = check_pentagon(S)
    assert not r and r.witness is not None and len(r.witness) == 4


def test_mutated_sigma_fails_hexagon_with_witness():
    S = structure(Z2_I).flip_sigma((1,), (0,))
    r = check_hexagons(S)
    assert not r and r.witness is not None


def test_non_root_sigma_fails():
    R = CyclotomicRing(4)
    p = CategoryPresentation(FiniteAbelianGroup((2,)), 4, (R.from_int(2),))
    assert not check_order_conditions(p)
    assert not check_hexagons(p)


def test_balance_examples():
    assert check_balance(Z2_I)
    assert check_balance(from_exponents((4,), [1]))
    p = from_exponents((2, 4), [2, 3], {(1, 0): 4})
    for b in p.group.elements():
        e = (0, 0)
        assert sigma_pair(p, b, b) == sigma_pair(p, e, e) * sigma_pair(p, b, b) * sigma_pair(p, e, b) * sigma_pair(p, b, e)


def test_symmetric_examples():
    assert is_symmetric(Z2_MINUS)
    assert not is_symmetric(Z2_I)
    assert is_symmetric(Z2_ONE)


@pytest.mark.parametrize("orders", [(2,), (4,), (2, 2), (2, 4)])
def test_symmetric_iff_invariants_square_to_one(orders):
    for p in enumerate_presentations(orders):
        expected = all(s * s == 1 for s in p.sigma_diag) and all(v == 1 for v in p.sigma_off.values())
        assert is_symmetric(p) == expected


def test_character_rescaled_twist_still_balances():
    p = from_exponents((4,), [1])
    chi = [root_of_unity(8, 2)]  # order 4 character
    G = p.group
    for a, b in itertools.product(G.elements(), repeat=2):
        ab = G.op(a, b)
        assert twist(p, ab, chi) == twist(p, a, chi) * twist(p, b, chi) * sigma_pair(p, a, b) * sigma_pair(p, b, a)
    with pytest.raises(InvalidPresentation):
        twist(p, (1,), [root_of_unity(8, 1)])
