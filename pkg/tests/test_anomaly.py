from __future__ import annotations

import cmath

import pytest

from gctqft.exactring import multiplicative_order
from gctqft.groupcat import (
    anomaly_product_closed_form,
    enumerate_presentations,
    from_exponents,
    gauss_sums,
    normalizability_report,
)
from gctqft.groupcat.anomaly import admissible_order

Z2 = {name: from_exponents((2,), [k]) for name, k in [("one", 0), ("i", 1), ("minus", 2), ("minus_i", 3)]}


def test_gauss_sums_for_order_two():
    z = Z2["i"].ring.zeta()
    assert gauss_sums(Z2["one"]) == (2, 2)
    assert gauss_sums(Z2["minus"]) == (0, 0)
    assert gauss_sums(Z2["i"]) == (1 + z, 1 - z)


@pytest.mark.parametrize("args,value", [((2, 1), 4), ((2, 2), 0), ((2, 4), 2), ((3, 3), 3), ((4, 8), 4)])
def test_closed_form_values(args, value):
    assert anomaly_product_closed_form(*args) == value


@pytest.mark.parametrize("args", [(3, 2), (2, 8), (0, 1), (5, 10)])
def test_closed_form_rejects_inadmissible_orders(args):
    assert not admissible_order(*args)
    with pytest.raises(ValueError):
        anomaly_product_closed_form(*args)


def numeric_product(n, ell, k):
    # floating-point Gauss sums for sigma = exp(2 pi i k / ell)
    s = cmath.exp(2j * cmath.pi * k / ell)
    tau = sum(s ** (r * r) for r in range(n))
    tau_bar = sum(s ** (-r * r) for r in range(n))
    return tau * tau_bar


@pytest.mark.parametrize("n", range(1, 13))
def test_closed_form_against_exact_and_numeric_sums(n):
    for p in enumerate_presentations((n,), 2 * n):
        ell = multiplicative_order(p.sigma_diag[0])
        tau, tau_bar = gauss_sums(p)
        expected = anomaly_product_closed_form(n, ell)
        assert tau * tau_bar == expected
        k = p.ring.root_exponent(p.sigma_diag[0]) * ell // p.level
        assert abs(numeric_product(n, ell, k) - expected) < 1e-9


def test_report_verdicts():
    assert normalizability_report(Z2["minus"]).verdict().startswith("NOT normalizable")
    one = normalizability_report(Z2["one"])
    assert one.normalizable and one.extension == "R[1/2]" and one.anomalous is False
    assert one.verdict() == "normalizable over R[1/2], anomaly-free"
    i = normalizability_report(Z2["i"])
    assert i.extension == "R[1/√2]" and i.anomalous
    assert i.verdict() == "normalizable over R[1/√2], anomalous (tau != tau_bar)"


def test_report_json_is_plain():
    js = normalizability_report(Z2["minus_i"]).to_json()
    assert js["normalizable"] and js["anomalous"] and js["extension"] == "R[1/√2]"
    assert js["product"] == {"level": 4, "coeffs": [2, 0]}


def test_noncyclic_product_is_product_of_factors():
    # Gauss sums are multiplicative over orthogonal summands
    p = from_exponents((2, 3), [3, 4])
    a = from_exponents((2,), [3], level=12)
    b = from_exponents((3,), [4], level=12)
    ta, _ = gauss_sums(a)
    tb, _ = gauss_sums(b)
    assert gauss_sums(p)[0] == ta * tb
