from __future__ import annotations

import itertools
import random

import pytest

from gctqft.abelian import FiniteAbelianGroup
from gctqft.cellular import (
    ComplexError,
    CWComplex,
    HomologyPresentation,
    connecting,
    exact_at,
    image_order,
    inclusion_induced,
    injective,
    map_by_inclusion,
    relabel,
    relative_homology,
    surjective,
)
from gctqft.corpus import complexes

CORPUS = {c.complex.name: c.complex for c in complexes()}
GROUPS = [(2,), (3,), (4,), (2, 2)]


def G(*orders):
    return FiniteAbelianGroup(orders)


def test_rejects_nonzero_double_boundary():
    with pytest.raises(ComplexError, match="boundary of boundary"):
        CWComplex({0: ["p", "q"], 1: ["e"], 2: ["f"]}, {1: [[-1], [1]], 2: [[1]]})


def test_rejects_bad_shapes_and_names():
    with pytest.raises(ComplexError):
        CWComplex({0: ["p"], 1: ["e"]}, {1: [[0, 0]]})
    with pytest.raises(ComplexError):
        CWComplex({0: ["p", "p"]})


def test_rejects_non_closed_subcomplex():
    with pytest.raises(ComplexError):
        CWComplex({0: ["s", "e"], 1: ["i"]}, {1: [[-1], [1]]}, {"bad": ["i", "s"]})


def test_closure_adds_faces():
    X = CORPUS["circle-two-arcs"]
    assert X.closure(["u"]).cells == frozenset({"p", "q", "u"})
    # a loop has zero cellular boundary, so nothing below it is forced in
    D = CORPUS["disk"]
    assert D.closure(["f"]).cells == frozenset({"c", "f"})


@pytest.mark.parametrize("orders", GROUPS)
def test_basic_homology_examples(orders):
    g = G(*orders)
    I = CORPUS["interval"]
    H = relative_homology(I, I.named("dI"), 1, g)
    assert H.order == g.order
    pt = CORPUS["point"]
    assert relative_homology(pt, None, 0, g).order == g.order
    assert relative_homology(pt, None, 1, g).order == 1
    c3 = CORPUS["c3"]
    H = relative_homology(c3, c3.named("ends"), 1, g)
    assert H.order == g.order**2


def test_c3_homology_is_triples_multiplying_to_one():
    g = G(3)
    c3 = CORPUS["c3"]
    H = relative_homology(c3, c3.named("ends"), 1, g)
    triples = set()
    for x in H.elements():
        chain = H.lift(x)
        assert H.is_cycle(chain)
        triples.add(tuple(int(chain[H._pos[k], 0]) for k in ("k1", "k2", "k3")))
    assert triples == {t for t in itertools.product(range(3), repeat=3) if sum(t) % 3 == 0}


def test_generators_are_cycles_and_coordinates_invert_lift():
    X = CORPUS["torus"]
    H = relative_homology(X, None, 1, G(2, 4))
    assert H.order == 4 * 16
    for x in H.elements():
        assert H.coordinates(H.lift(x)) == x
    for gen in H.generators:
        assert H.is_cycle(gen)


def test_chain_from_rejects_foreign_cells():
    I = CORPUS["interval"]
    H = relative_homology(I, I.named("dI"), 1, G(5))
    assert H.coordinates(H.chain_from({"i": [2]})) in {(2,), (3,)}
    with pytest.raises(ComplexError):
        H.chain_from({"zz": [1]})


@pytest.mark.parametrize("orders", GROUPS)
def test_torus(orders):
    g = G(*orders)
    T = CORPUS["torus"]
    assert relative_homology(T, None, 1, g).group.order == g.order**2
    assert relative_homology(T, None, 2, g).order == g.order


def test_torus_top_class_relative_to_wedge():
    T = CORPUS["torus"]
    f = inclusion_induced(T, T, T.named("wedge"), 2, G(2))
    assert image_order(f) == 2


@pytest.mark.parametrize("orders", GROUPS)
def test_inclusion_examples(orders):
    g = G(*orders)
    D = CORPUS["disk"]
    ident = inclusion_induced(D, D, None, 2, g)
    assert all(ident(x) == x for x in ident.source.elements())
    to_disk = inclusion_induced(D, D.named("S1"), None, 1, g)
    assert image_order(to_disk) == 1
    C = CORPUS["circle-two-arcs"]
    arc = HomologyPresentation(C.named("upper"), C.named("pts"), 1, g)
    circle_rel_points = HomologyPresentation(C.full(), C.named("pts"), 1, g)
    f = map_by_inclusion(arc, circle_rel_points)
    assert injective(f) and f.source.order == g.order and f.target.order == g.order**2
    with pytest.raises(ComplexError):
        map_by_inclusion(arc, HomologyPresentation(C.full(), C.subcomplex(["p"]), 1, g))


@pytest.mark.parametrize("orders", GROUPS)
def test_connecting_examples(orders):
    g = G(*orders)
    D = CORPUS["disk"]
    d = connecting(D, D.named("S1"), None, 2, g)
    assert surjective(d) and injective(d)
    I = CORPUS["interval"]
    d = connecting(I, I.named("dI"), None, 1, g)
    target = d.target
    for x in d.source.elements():
        chain = d.target.lift(d(x))
        s, e = chain[target._pos["s"]], chain[target._pos["e"]]
        # the boundary of x * i is x*e - x*s
        assert tuple(int(v) for v in (s + e) % g.orders) == (0,) * g.rank
        assert tuple(int(v) for v in e) == tuple(int(v) for v in d.source.lift(x)[0])
    S = CORPUS["sphere"]
    top_to_point = connecting(S, S.named("equator"), S.subcomplex(["p"]), 2, g)
    closed = map_by_inclusion(HomologyPresentation(S, None, 2, g), HomologyPresentation(S, S.named("equator"), 2, g))
    assert image_order(closed) == g.order
    assert image_order(top_to_point.compose(closed)) == 1
    with pytest.raises(ComplexError):
        closed.compose(top_to_point)


def test_image_order_extremes():
    g = G(6)
    C = CORPUS["circle"]
    ident = inclusion_induced(C, C, None, 1, g)
    assert image_order(ident) == 6 and surjective(ident)
    D = CORPUS["disk"]
    zero = map_by_inclusion(HomologyPresentation(D, None, 2, g), HomologyPresentation(D, D.named("S1"), 2, g))
    assert image_order(zero) == 1 and zero.target.order == 6 and not surjective(zero)


def test_nesting_is_checked():
    D = CORPUS["disk"]
    with pytest.raises(ComplexError):
        inclusion_induced(D.named("S1"), D.full(), None, 1, G(2))
    with pytest.raises(ComplexError):
        connecting(D.named("S1"), D.full(), None, 1, G(2))


@pytest.mark.parametrize("orders", GROUPS)
def test_disk_sequence_is_exact(orders):
    g = G(*orders)
    D = CORPUS["disk"]
    S1 = D.named("S1")
    a = map_by_inclusion(HomologyPresentation(D, None, 2, g), HomologyPresentation(D, S1, 2, g))
    b = connecting(D, S1, None, 2, g)  # H2(D,S1) -> H1(S1)
    c = inclusion_induced(D, S1, None, 1, g)  # H1(S1) -> H1(D)
    d = map_by_inclusion(HomologyPresentation(D, None, 1, g), HomologyPresentation(D, S1, 1, g))
    assert exact_at(a, b) and exact_at(b, c) and exact_at(c, d)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_cell_order_does_not_matter(name):
    X = CORPUS[name]
    rng = random.Random(name)
    perm = {d: rng.sample(range(len(X.cells(d))), len(X.cells(d))) for d in range(X.dim + 1)}
    Y = relabel(X, perm)
    for orders in [(2,), (6,), (2, 2)]:
        for n in range(X.dim + 1):
            for sub in ["empty", *X.subcomplexes]:
                a = relative_homology(X, X.named(sub), n, G(*orders)).group
                b = relative_homology(Y, Y.named(sub), n, G(*orders)).group
                assert sorted(a.orders) == sorted(b.orders)


def test_json_round_trip():
    for X in CORPUS.values():
        Y = CWComplex.from_json(X.to_json())
        assert Y.to_json() == X.to_json()


def test_named_defaults():
    X = CORPUS["interval"]
    assert X.named("all").cells == X.full().cells
    assert X.named("empty").cells == frozenset()
    with pytest.raises(ComplexError):
        X.named("nowhere")


def test_empty_complex_has_trivial_homology():
    E = CWComplex({})
    assert relative_homology(E, None, 0, G(3)).order == 1
