"""The nine acceptance criteria, one test each.

Each test records a PASS/FAIL line that is printed in the pytest summary.
Run this file directly for the same lines without pytest.
"""

from __future__ import annotations

import itertools
from math import prod

import numpy as np
import pytest

from gctqft.abelian import FiniteAbelianGroup
from gctqft.barcohomology import (
    B2Cochain3,
    B2Cochain4,
    b2_coboundary,
    bar_boundary,
    boundary_of_chain,
    class_coordinates,
    classify_braided,
    classify_symmetric,
    cochain_coboundary_exponents,
    is_b2_4cocycle,
)
from gctqft.corpus import complexes, load_complexes, load_gluings
from gctqft.exactring import CyclotomicRing, multiplicative_order
from gctqft.groupcat import (
    anomaly_product_closed_form,
    check_all,
    check_balance,
    check_order_conditions,
    enumerate_presentations,
    from_exponents,
    gauss_sums,
    normalizability_report,
)
from gctqft.groupcat.coherence import CheckResult, hexagon_tables, pentagon_table
from gctqft.groupcat.presentation import structure
from gctqft.tqft import (
    BordismData,
    check_composition_criterion,
    compose_check,
    corner_algebra,
    glue_compare,
    induced_hom,
    induced_hom_explicit,
    trimodule_product,
)

try:
    from conftest import ACCEPTANCE
except ImportError:  # run as a script
    ACCEPTANCE = {}

GROUPS = [(2,), (3,), (4,), (2, 2)]


def record(k: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[k] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}")
    assert ok, detail


def order_tuples(bound: int) -> list[tuple[int, ...]]:
    """Nondecreasing tuples of cyclic orders >= 2 with product <= bound, plus the trivial group."""
    out = [(1,)]

    def grow(prefix, lo):
        for n in range(lo, bound + 1):
            t = prefix + (n,)
            if prod(t) > bound:
                break
            out.append(t)
            grow(t, n)

    grow((), 2)
    return out


# 1 -------------------------------------------------------------------------


def test_criterion_1_order_two_anomaly_table():
    R = CyclotomicRing(4)
    i = R.zeta()
    table = [
        (0, (2, 2), 4, "normalizable over R[1/2], anomaly-free"),
        (2, (0, 0), 0, "NOT normalizable: tau * tau_bar = 0, no extended 3-manifold theory"),
        (1, (1 + i, 1 - i), 2, "normalizable over R[1/√2], anomalous (tau != tau_bar)"),
    ]
    bad = []
    for k, sums, product, verdict in table:
        p = from_exponents((2,), [k])
        tau, tau_bar = gauss_sums(p)
        rep = normalizability_report(p)
        if (tau, tau_bar) != sums or rep.product != product or rep.verdict() != verdict:
            bad.append((k, str(tau), str(tau_bar), rep.verdict()))
    record(1, not bad, "Z/2 Gauss sums, products 4/0/2 and verdicts exact" if not bad else f"mismatch {bad}")


# 2 -------------------------------------------------------------------------


def test_criterion_2_closed_form_against_enumeration():
    checked, bad = 0, []
    for n in range(1, 13):
        for p in enumerate_presentations((n,), 2 * n):
            ell = multiplicative_order(p.sigma_diag[0])
            tau, tau_bar = gauss_sums(p)
            expected = n * n // ell if ell % 2 else (2 * n * n // ell if ell % 4 == 0 else 0)
            if tau * tau_bar != expected or anomaly_product_closed_form(n, ell) != expected:
                bad.append((n, ell))
            checked += 1
    record(2, not bad, f"{checked} cyclic presentations with n <= 12 match" if not bad else f"mismatch at {bad}")


# 3 -------------------------------------------------------------------------

MUTATIONS = [
    ((2,), [1], {}, "alpha", ((1,), (1,), (0,))),
    ((2,), [1], {}, "sigma", ((1,), (0,))),
    ((3,), [0], {}, "alpha", ((1,), (1,), (1,))),
    ((4,), [1], {}, "sigma", ((1,), (2,))),
    ((2, 2), [1, 2], {(1, 0): 2}, "alpha", ((1, 0), (0, 1), (1, 1))),
    ((2, 2), [0, 0], {(1, 0): 2}, "sigma", ((1, 1), (1, 0))),
    ((3,), [2], {}, "sigma", ((2,), (2,))),
]


def test_criterion_3_coherence_suite():
    groups = order_tuples(16)
    total, bad = 0, []
    pentagon_seen: dict[bytes, bool] = {}
    for orders in groups:
        for p in enumerate_presentations(orders):
            assert check_order_conditions(p)
            S = structure(p)
            # alpha depends on the diagonal invariants only; reuse pentagon verdicts per alpha table
            key = bytes(str(orders), "ascii") + S.alpha.tobytes()
            if key not in pentagon_seen:
                pentagon_seen[key] = bool(pentagon_table(S).all())
            first, second = hexagon_tables(S)
            if not (pentagon_seen[key] and first.all() and second.all() and check_balance(S)):
                bad.append(p)
            total += 1
    has_off = any(len(t) > 1 for t in groups)
    failures = []
    for orders, diag, off, kind, at in MUTATIONS:
        S = structure(from_exponents(orders, diag, off))
        M = S.flip_alpha(*at) if kind == "alpha" else S.flip_sigma(*at)
        broken = [r for r in check_all(M) if not r]
        if broken and all(isinstance(r, CheckResult) and r.witness is not None for r in broken):
            failures.append(broken[0])
    ok = not bad and has_off and len(failures) >= 5
    detail = (
        f"{total} valid presentations over {len(groups)} groups pass; "
        f"{len(failures)} mutations fail, e.g. {failures[0] if failures else None}"
    )
    record(3, ok, detail if ok else f"{len(bad)} valid presentations fail; {len(failures)} mutations caught")


# 4 -------------------------------------------------------------------------


def test_criterion_4_classification_counts():
    Z2, Z3 = FiniteAbelianGroup((2,)), FiniteAbelianGroup((3,))
    counts = (len(classify_braided(Z2, 4)), len(classify_symmetric(Z2, 4)), len(classify_braided(Z3, 3)))
    distinct = True
    for orders, level in [((2,), 4), ((3,), 3), ((4,), 8), ((2, 2), 4)]:
        G = FiniteAbelianGroup(orders)
        ps = list(enumerate_presentations(orders, level)) if level % (2 * max(orders)) == 0 else [
            p for p in enumerate_presentations(orders, 2 * level) if all(e % 2 == 0 for e in p.exponents()[0])
        ]
        coords = {class_coordinates(G, level, _at(p, level)) for p in ps}
        distinct &= len(coords) == len(ps)
    ok = counts == (4, 2, 3) and distinct
    record(4, ok, f"braided Z/2 = {counts[0]}, symmetric Z/2 = {counts[1]}, braided Z/3 = {counts[2]}; "
           f"presentations land in distinct classes: {distinct}")


def _at(p, level):
    """The presentation's cocycle with values read at the classification level."""
    c = B2Cochain4.from_presentation(p)
    if c.level == level:
        return c
    R = CyclotomicRing(level)
    src = CyclotomicRing(c.level)
    step = c.level // level
    conv = np.vectorize(lambda u: R.zeta(src.root_exponent(u) // step), otypes=[object])
    return B2Cochain4(c.group, level, conv(c.alpha), conv(c.sigma))


# 5 -------------------------------------------------------------------------


def test_criterion_5_oracle_equivalence():
    bordisms, comparisons, bad = 0, 0, []
    for c in load_complexes():
        for spec in c.bordisms:
            bordisms += 1
            for n in (0, 1):
                for orders in GROUPS:
                    b = c.bordism(spec, n, orders)
                    if induced_hom(b) != induced_hom_explicit(b):
                        bad.append((c.name, spec["name"], n, orders))
                    comparisons += 1
    ok = not bad and bordisms >= 20
    record(5, ok, f"{bordisms} bordisms, {comparisons} exact comparisons agree" if ok else f"disagree: {bad}")


# 6 -------------------------------------------------------------------------


def test_criterion_6_reconstruction():
    interval = next(c.complex for c in complexes() if c.name == "interval")
    groups = order_tuples(12)
    corner_ok = all(corner_algebra(interval, 1, orders).is_pointwise() for orders in groups)
    product_ok = True
    for orders in groups:
        T = trimodule_product(orders)
        product_ok &= T.is_group_law() and T.commuting_is_trivial()
    ok = corner_ok and product_ok
    record(6, ok, f"corner algebra pointwise and R[g]R[h] = R[gh] with trivial commuting map for {len(groups)} groups")


# 7 -------------------------------------------------------------------------


def test_criterion_7_composition():
    held, bad = 0, []
    for c in load_complexes():
        X = c.complex
        N = X.named
        for s in c.compositions:
            for n in (0, 1):
                for orders in GROUPS:
                    first = BordismData(N(s["X1"]), N(s["Y0"]), N(s["Y1"]), n, orders)
                    second = BordismData(N(s["X2"]), N(s["Y1"]), N(s["Y2"]), n, orders)
                    glued = BordismData(N(s["X1"]) | N(s["X2"]), N(s["Y0"]), N(s["Y2"]), n, orders)
                    r = compose_check(first, second, glued)
                    if r.joint_criterion or r.criterion_first or r.criterion_second:
                        held += 1
                        if not r.equal:
                            bad.append((c.name, s["name"], n, orders))
    C = next(c.complex for c in complexes() if c.name == "circle")
    engineered = not check_composition_criterion(C, (C.full(), C.empty(), C.empty()), 0, (2,))
    first = BordismData(C.full(), C.empty(), C.full(), 0, (2,))
    second = BordismData(C.full(), C.full(), C.empty(), 0, (2,))
    r = compose_check(first, second, BordismData(C.full(), C.empty(), C.empty(), 0, (2,)))
    says_so = "criterion FAILS" in r.verdict()
    ok = not bad and held > 0 and engineered and says_so
    record(7, ok, f"{held} criterion-holding compositions equal the glued map; S1 in S1: '{r.verdict()}'")


# 8 -------------------------------------------------------------------------


def test_criterion_8_modularity_dichotomy():
    complex_case, bad, failing = 0, [], None
    for obj, d in load_gluings():
        for orders in GROUPS:
            r = glue_compare(d, orders)
            if d.piece.dim <= d.n:  # pieces are n-complexes with (n-1)-dimensional corners
                complex_case += 1
                if not r.iso:
                    bad.append((obj["name"], orders))
            if obj["name"] == "interval-to-circle-n0" and orders == (2,):
                failing = r
    ok = not bad and complex_case > 0 and failing is not None and not failing.iso and failing.defect > 0
    record(8, ok, f"{complex_case} complex gluings are isomorphisms; interval->circle at n=0 is not "
           f"(defect {failing.defect if failing else '?'})")


# 9 -------------------------------------------------------------------------


def test_criterion_9_bar_complex_laws():
    groups = order_tuples(6)
    dd_ok = True
    for orders in groups:
        G = FiniteAbelianGroup(orders)
        for n in (2, 3, 4, 5):
            for t in itertools.product(G.elements(), repeat=n):
                if boundary_of_chain(G, bar_boundary(G, t)):
                    dd_ok = False
        # coboundary twice on every basis 1- and 2-cochain
        for n in (1, 2):
            for cell in itertools.product(G.elements(), repeat=n):
                once = cochain_coboundary_exponents(G, {cell: 1}, n, 1 << 20)
                twice = cochain_coboundary_exponents(G, once, n + 1, 1 << 20)
                if any(twice.values()):
                    dd_ok = False
    rng = np.random.default_rng(2024)
    cocycles = 0
    for k in range(1000):
        G = FiniteAbelianGroup(groups[k % len(groups)])
        level = int(rng.choice([2, 4, 6, 12]))
        if is_b2_4cocycle(b2_coboundary(B2Cochain3.random(G, level, rng))):
            cocycles += 1
    ok = dd_ok and cocycles == 1000
    record(9, ok, f"boundary and coboundary square to zero for {len(groups)} groups of order <= 6; "
           f"{cocycles}/1000 random coboundaries are 4-cocycles")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
