"""The H_n field theory: state spaces R[H_n(Y,W;G)] and maps counting relative cycles.

A bordism is a complex X (or a subcomplex of a larger one) with two
subcomplexes Y0, Y1 whose cell-wise intersection is the corner W.  With
that literal intersection the relative chains of (Y0 u Y1, W) split as a
direct sum, so boundaries of classes in H_{n+1}(X, Y0 u Y1) decompose into
their Y0 and Y1 parts by restricting to cells.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .abelian import FiniteAbelianGroup
from .cellular import (
    ComplexError,
    CWComplex,
    HomologyMap,
    HomologyPresentation,
    Subcomplex,
    _as_group,
    _as_space,
    image_order,
    injective,
    map_by_boundary,
    map_by_inclusion,
    surjective,
)
from .exactring import CyclotomicRing, RingElement


# --- state spaces and maps ------------------------------------------------


@dataclass
class StateSpace:
    """Free module on the classes of H_n(Y, W; G).

    The zero class is a basis element like any other, so the empty boundary
    has a rank-1 state space.
    """

    homology: HomologyPresentation
    level: int

    @property
    def basis(self) -> list[tuple[int, ...]]:
        return self.homology.elements()

    @property
    def rank(self) -> int:
        return self.homology.order

    def index(self, y: Sequence[int]) -> int:
        return self.homology.group.index(y)


def state_space(Y, W: Subcomplex | None, n: int, G, level: int = 4) -> StateSpace:
    return StateSpace(HomologyPresentation(Y, W, n, G), level)


@dataclass
class InducedMap:
    """Matrix of non-negative counts indexed (target basis, source basis)."""

    source: StateSpace
    target: StateSpace
    counts: np.ndarray

    @property
    def level(self) -> int:
        return self.source.level

    @property
    def matrix(self) -> list[list[RingElement]]:
        ring = CyclotomicRing(self.level)
        return [[ring.from_int(int(v)) for v in row] for row in self.counts]

    def __eq__(self, other) -> bool:
        if not isinstance(other, InducedMap):
            return NotImplemented
        return self.counts.shape == other.counts.shape and bool((self.counts == other.counts).all())

    def to_json(self) -> dict:
        from .exactring import to_json

        return {
            "source_basis": [list(y) for y in self.source.basis],
            "target_basis": [list(y) for y in self.target.basis],
            "matrix": [[to_json(v) for v in row] for row in self.matrix],
        }


@dataclass
class BordismData:
    X: Subcomplex
    Y0: Subcomplex
    Y1: Subcomplex
    n: int
    G: FiniteAbelianGroup
    level: int = 4
    name: str = ""
    W: Subcomplex = field(init=False)

    def __post_init__(self):
        self.X = _as_space(self.X)
        self.G = _as_group(self.G)
        parent = self.X.parent
        for label, Y in (("Y0", self.Y0), ("Y1", self.Y1)):
            if Y.parent is not parent:
                raise ComplexError(f"{label} belongs to a different complex")
            if not Y.cells <= self.X.cells:
                raise ComplexError(f"{label} is not contained in X")
        self.W = Subcomplex(parent, self.Y0.cells & self.Y1.cells, "W")

    @classmethod
    def from_names(cls, X: CWComplex, space: str, y0: str, y1: str, n: int, G, level: int = 4, name: str = ""):
        return cls(X.named(space), X.named(y0), X.named(y1), n, G, level, name)

    def source(self) -> StateSpace:
        return state_space(self.Y0, self.W, self.n, self.G, self.level)

    def target(self) -> StateSpace:
        return state_space(self.Y1, self.W, self.n, self.G, self.level)


def _cycle_space(b: BordismData) -> HomologyPresentation:
    return HomologyPresentation(b.X, b.Y0 | b.Y1, b.n + 1, b.G)


def induced_hom(b: BordismData) -> InducedMap:
    """Z_X(y) = sum of d1 x over classes x with d0 x = -y."""
    src, tgt = b.source(), b.target()
    H = _cycle_space(b)
    d0 = map_by_boundary(H, src.homology)
    d1 = map_by_boundary(H, tgt.homology)
    sg = src.homology.group
    counts = np.zeros((tgt.rank, src.rank), dtype=np.int64)
    for x in H.elements():
        y = sg.inverse(d0(x))
        counts[tgt.index(d1(x)), src.index(y)] += 1
    return InducedMap(src, tgt, counts)


def induced_hom_explicit(b: BordismData) -> InducedMap:
    """Z_X(y) = k * sum of y1 with i(y1) = i(y), k the image order of H_{n+1}(X,W) in H_{n+1}(X, Y0 u Y1)."""
    src, tgt = b.source(), b.target()
    k = image_order(map_by_inclusion(HomologyPresentation(b.X, b.W, b.n + 1, b.G), _cycle_space(b)))
    HX = HomologyPresentation(b.X, b.W, b.n, b.G)
    i0 = map_by_inclusion(src.homology, HX)
    i1 = map_by_inclusion(tgt.homology, HX)
    images1: dict[tuple, list[int]] = {}
    for j, y1 in enumerate(tgt.basis):
        images1.setdefault(i1(y1), []).append(j)
    counts = np.zeros((tgt.rank, src.rank), dtype=np.int64)
    for col, y in enumerate(src.basis):
        for row in images1.get(i0(y), []):
            counts[row, col] = k
    return InducedMap(src, tgt, counts)


# --- composition ------------------------------------------------------------


@dataclass
class CompositionReport:
    criterion_first: bool
    criterion_second: bool
    joint_criterion: bool
    defect: int
    composite: InducedMap
    glued: InducedMap
    equal: bool
    equal_up_to_defect: bool

    def verdict(self) -> str:
        if self.joint_criterion:
            state = "criterion holds"
        else:
            state = f"criterion FAILS (boundary not onto, cokernel order {self.defect})"
        match = "glued map equals composite" if self.equal else (
            f"glued map = {self.defect} x composite" if self.equal_up_to_defect else "glued map differs"
        )
        return f"{state}; {match}"

    def to_json(self) -> dict:
        return {
            "criterion_first": self.criterion_first,
            "criterion_second": self.criterion_second,
            "joint_criterion": self.joint_criterion,
            "defect": self.defect,
            "equal": self.equal,
            "equal_up_to_defect": self.equal_up_to_defect,
            "verdict": self.verdict(),
        }


def _face_boundary(X: Subcomplex, face: Subcomplex, other: Subcomplex, W: Subcomplex, n: int, G) -> HomologyMap:
    src = HomologyPresentation(X, face | other, n + 2, G)
    dst = HomologyPresentation(face, W, n + 1, G)
    return map_by_boundary(src, dst)


def check_composition_criterion(X, split: tuple[Subcomplex, Subcomplex, Subcomplex], n: int, G) -> bool:
    """Boundary H_{n+2}(X, Y1 u Y2) -> H_{n+1}(Y1, W) is onto, for the gluing face Y1."""
    Y1, Y2, W = split
    return surjective(_face_boundary(_as_space(X), Y1, Y2, W, n, _as_group(G)))


def compose_check(first: BordismData, second: BordismData, glued: BordismData) -> CompositionReport:
    """Compare Z(glued) with Z(second) Z(first).

    The glued map always equals d * Z(second) Z(first), where d is the order
    of the cokernel of the joint boundary onto H_{n+1}(Y1, W); the
    composition criterion is d == 1.
    """
    n, G = first.n, first.G
    Y1 = first.Y1
    if second.Y0.cells != Y1.cells:
        raise ComplexError("second bordism must start where the first ends")
    if first.X.parent is not second.X.parent or glued.X.parent is not first.X.parent:
        raise ComplexError("composable bordisms must live in one ambient complex")
    if (first.X.cells & second.X.cells) != Y1.cells:
        raise ComplexError("the two pieces must meet exactly in the middle face")
    W = first.W
    m1 = _face_boundary(first.X, Y1, first.Y0, W, n, G)
    m2 = _face_boundary(second.X, Y1, second.Y1, W, n, G)
    joint = m1.image() | m2.image()
    tg = m1.target.group
    # close the union of the two images under addition
    span = {tg.identity()}
    frontier = list(span)
    gens = list(joint)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                s = tg.op(a, g)
                if s not in span:
                    span.add(s)
                    nxt.append(s)
        frontier = nxt
    defect = m1.target.order // len(span)
    z1, z2, zg = induced_hom(first), induced_hom(second), induced_hom(glued)
    comp = InducedMap(z1.source, z2.target, z2.counts @ z1.counts)
    equal = comp == zg
    return CompositionReport(
        surjective(m1), surjective(m2), defect == 1, defect, comp, zg, equal,
        bool((zg.counts == defect * comp.counts).all()),
    )


# --- tensor products --------------------------------------------------------


def transfer_chain(chain: np.ndarray, src: HomologyPresentation, dst: HomologyPresentation) -> np.ndarray:
    out = dst.zero_chain()
    for i, c in enumerate(src.cells):
        j = dst._pos.get(c)
        if j is not None:
            out[j] = chain[i]
    return out


def split_basis(whole: StateSpace, parts: Sequence[StateSpace]) -> list[tuple[int, ...]]:
    """For each basis class of a disjoint union, the indices of its restrictions to the parts."""
    out = []
    for y in whole.basis:
        chain = whole.homology.lift(y)
        out.append(tuple(p.index(p.homology.coordinates(transfer_chain(chain, whole.homology, p.homology))) for p in parts))
    return out


# --- gluing along corners -------------------------------------------------


@dataclass
class CellMap:
    """A cellular map given on cells: each cell goes to +/- one cell of the same dimension."""

    source: CWComplex
    target: CWComplex
    images: dict[str, tuple[str, int]]

    @classmethod
    def parse(cls, source: CWComplex, target: CWComplex, raw: Mapping) -> "CellMap":
        images = {}
        for c, v in raw.items():
            if isinstance(v, str):
                images[c] = (v, 1)
            else:
                images[c] = (str(v[0]), int(v[1]))
        cm = cls(source, target, images)
        cm.validate()
        return cm

    def validate(self) -> None:
        for c in self.source.all_cells():
            if c not in self.images:
                raise ComplexError(f"cell map is missing {c!r}")
            t, s = self.images[c]
            if t not in self.target:
                raise ComplexError(f"cell map sends {c!r} to unknown cell {t!r}")
            if s not in (1, -1):
                raise ComplexError(f"cell map sign for {c!r} must be +1 or -1")
            if self.target.dimension_of(t) != self.source.dimension_of(c):
                raise ComplexError(f"cell map changes the dimension of {c!r}")
        # chain map: boundary then map == map then boundary
        for c in self.source.all_cells():
            lhs: dict[str, int] = {}
            for face, k in self.source.boundary_of(c).items():
                t, s = self.images[face]
                lhs[t] = lhs.get(t, 0) + s * k
            t, s = self.images[c]
            rhs = {f: s * k for f, k in self.target.boundary_of(t).items()}
            if {k: v for k, v in lhs.items() if v} != rhs:
                raise ComplexError(f"cell map is not a chain map at {c!r}")

    def image_cells(self, sub: Subcomplex) -> frozenset:
        return frozenset(self.images[c][0] for c in sub.cells)

    def bijective_on(self, cells: frozenset, onto: frozenset) -> bool:
        imgs = [self.images[c][0] for c in cells]
        return len(set(imgs)) == len(imgs) and set(imgs) == set(onto)


def map_by_cells(src: HomologyPresentation, dst: HomologyPresentation, q: CellMap) -> HomologyMap:
    cols = []
    for g in src.generators:
        chain = dst.zero_chain()
        for i, c in enumerate(src.cells):
            t, s = q.images[c]
            j = dst._pos.get(t)
            if j is not None:
                chain[j] += s * g[i]
        cols.append(dst.coordinates(chain))
    return HomologyMap(src, dst, cols)


@dataclass
class GluingDatum:
    """A piece Y with corner copies W1, W2 and free boundary V, and the glued complex.

    ``q`` sends cells of Y to cells of the glued complex, identifying W1 and
    W2 with the glued corner Wg and V with Vg, and is one-to-one elsewhere.
    """

    piece: CWComplex
    W1: Subcomplex
    W2: Subcomplex
    V: Subcomplex
    glued: CWComplex
    Wg: Subcomplex
    Vg: Subcomplex
    q: CellMap
    n: int
    name: str = ""

    def __post_init__(self):
        if not (self.W1.cells & self.W2.cells) <= self.V.cells:
            raise ComplexError("the two corner copies may only meet inside V")
        q = self.q
        if not q.bijective_on(self.W1.cells, self.Wg.cells) or not q.bijective_on(self.W2.cells, self.Wg.cells):
            raise ComplexError("each corner copy must map bijectively onto the glued corner")
        if not q.image_cells(self.V) <= self.Vg.cells:
            raise ComplexError("V must map into the glued V")
        rest = frozenset(self.piece.all_cells()) - self.W1.cells - self.W2.cells - self.V.cells
        glued_rest = frozenset(self.glued.all_cells()) - self.Wg.cells - self.Vg.cells
        if not q.bijective_on(rest, glued_rest):
            raise ComplexError("outside the corners and V the gluing must be one-to-one and onto")

    @classmethod
    def from_json(cls, obj: Mapping) -> "GluingDatum":
        try:
            piece = CWComplex.from_json(obj["piece"])
            glued = CWComplex.from_json(obj["glued"])
            names = obj.get("subcomplexes", {})
            W1 = piece.named(names.get("W1", "W1"))
            W2 = piece.named(names.get("W2", "W2"))
            V = piece.named(names.get("V", "V"))
            Wg = glued.named(names.get("W", "W"))
            Vg = glued.named(names.get("Vg", "V"))
            q = CellMap.parse(piece, glued, obj["map"])
            n = int(obj["n"])
        except KeyError as exc:
            raise ComplexError(f"gluing datum is missing {exc}") from None
        return cls(piece, W1, W2, V, glued, Wg, Vg, q, n, obj.get("name", ""))

    def to_json(self) -> dict:
        return {
            "format": "gctqft/1",
            "kind": "gluing",
            "name": self.name,
            "n": self.n,
            "piece": self.piece.to_json(),
            "glued": self.glued.to_json(),
            "map": {c: [t, s] for c, (t, s) in self.q.images.items()},
        }


@dataclass
class GlueReport:
    algebraic_rank: int
    geometric_rank: int
    survivors: list[tuple[int, ...]]
    kernel_order: int
    iso: bool
    criterion: bool

    @property
    def defect(self) -> int:
        return self.geometric_rank - self.algebraic_rank

    def to_json(self) -> dict:
        return {
            "algebraic_rank": self.algebraic_rank,
            "geometric_rank": self.geometric_rank,
            "kernel_order": self.kernel_order,
            "defect": self.defect,
            "iso": self.iso,
            "criterion": self.criterion,
        }


def check_modularity_criterion(d: GluingDatum, G) -> bool:
    """Boundary H_{n+1}(glued, V u W) -> H_n(V u W, V) is onto."""
    G = _as_group(G)
    src = HomologyPresentation(d.glued, d.Wg | d.Vg, d.n + 1, G)
    dst = HomologyPresentation(d.Wg | d.Vg, d.Vg, d.n, G)
    return surjective(map_by_boundary(src, dst))


def glue_compare(d: GluingDatum, G) -> GlueReport:
    """Coequalizer of the two corner actions against the state space of the glued complex."""
    G = _as_group(G)
    n = d.n
    Hy = HomologyPresentation(d.piece, d.W1 | d.W2 | d.V, n, G)
    cornerg = HomologyPresentation(d.Wg, d.Wg & d.Vg, n - 1, G) if n >= 1 else None
    # algebraic side: y survives when its two corner labels cancel in the glued corner
    if cornerg is not None:
        b1 = map_by_boundary(Hy, HomologyPresentation(d.W1, d.W1 & d.V, n - 1, G))
        b2 = map_by_boundary(Hy, HomologyPresentation(d.W2, d.W2 & d.V, n - 1, G))
        q1 = map_by_cells(b1.target, cornerg, d.q)
        q2 = map_by_cells(b2.target, cornerg, d.q)
        cg = cornerg.group
        survivors = [y for y in Hy.elements() if cg.op(q1(b1(y)), q2(b2(y))) == cg.identity()]
    else:
        survivors = list(Hy.elements())
    # geometric side and the comparison j: H_n(glued, V) -> H_n(glued, V u W) = H_n(Y, W1 u W2 u V)
    Hg = HomologyPresentation(d.glued, d.Vg, n, G)
    Hgw = HomologyPresentation(d.glued, d.Wg | d.Vg, n, G)
    j = map_by_inclusion(Hg, Hgw)
    # excision: relative cells of the piece and of the glued pair correspond through q
    back = {}
    for c in Hy.cells:
        t, s = d.q.images[c]
        back[t] = (c, s)
    exc = _excision(Hgw, Hy, back)
    image = {exc(j(x)) for x in Hg.elements()}
    iso = injective(j) and image == set(survivors)
    return GlueReport(
        len(survivors),
        Hg.order,
        survivors,
        Hg.order // image_order(j),
        iso,
        check_modularity_criterion(d, G),
    )


def _excision(src: HomologyPresentation, dst: HomologyPresentation, back: dict) -> HomologyMap:
    cols = []
    for g in src.generators:
        chain = dst.zero_chain()
        for i, c in enumerate(src.cells):
            t, s = back[c]
            chain[dst._pos[t]] += s * g[i]
        cols.append(dst.coordinates(chain))
    return HomologyMap(src, dst, cols)


# --- corner algebra and the category product --------------------------------


def triangle_bordism(points: Sequence[str]) -> CWComplex:
    """For each corner point, a triangle whose two lower edges are merged into the top edge.

    Per point p: vertices p0, pm, p1; edges a (p0->pm), b (pm->p1), t (p0->p1);
    face f with boundary a + b - t.  Y0 = a u b, Y1 = t u {pm}; they meet in
    the three vertices.
    """
    cells: dict[int, list[str]] = {0: [], 1: [], 2: []}
    for p in points:
        cells[0] += [f"{p}0", f"{p}m", f"{p}1"]
        cells[1] += [f"{p}a", f"{p}b", f"{p}t"]
        cells[2] += [f"{p}f"]
    v = {c: i for i, c in enumerate(cells[0])}
    e = {c: i for i, c in enumerate(cells[1])}
    d1 = [[0] * len(cells[1]) for _ in cells[0]]
    d2 = [[0] * len(cells[2]) for _ in cells[1]]
    for k, p in enumerate(points):
        for edge, (s, t) in (("a", ("0", "m")), ("b", ("m", "1")), ("t", ("0", "1"))):
            d1[v[p + t]][e[p + edge]] += 1
            d1[v[p + s]][e[p + edge]] -= 1
        d2[e[p + "a"]][k] = 1
        d2[e[p + "b"]][k] = 1
        d2[e[p + "t"]][k] = -1
    y0 = [c for p in points for c in (f"{p}a", f"{p}b", f"{p}0", f"{p}m", f"{p}1")]
    y1 = [c for p in points for c in (f"{p}t", f"{p}0", f"{p}m", f"{p}1")]
    return CWComplex(cells, {1: d1, 2: d2}, {"Y0": y0, "Y1": y1}, name="corner-product")


def corner_points(WI: CWComplex) -> list[str]:
    """Points of W from an explicit W x I made of disjoint intervals."""
    if WI.dim > 1:
        raise ComplexError("corner algebras are implemented for 0-dimensional corners only")
    ends = {}
    for e in WI.cells(1):
        bd = WI.boundary_of(e)
        if sorted(bd.values()) != [-1, 1]:
            raise ComplexError(f"{e!r} is not an interval edge")
        for vtx in bd:
            if vtx in ends:
                raise ComplexError("W x I must be a disjoint union of single-edge intervals")
            ends[vtx] = e
    if set(ends) != set(WI.cells(0)):
        raise ComplexError("every vertex of W x I must lie on exactly one interval")
    return list(WI.cells(1))


@dataclass
class CornerAlgebra:
    base: StateSpace
    product: np.ndarray  # product[k, i, j]: coefficient of basis k in e_i e_j

    def is_pointwise(self) -> bool:
        r = self.base.rank
        expect = np.zeros((r, r, r), dtype=np.int64)
        for i in range(r):
            expect[i, i, i] = 1
        return bool((self.product == expect).all())

    def is_associative(self) -> bool:
        # (e_i e_j) e_k vs e_i (e_j e_k)
        left = np.einsum("mij,lmk->lijk", self.product, self.product)
        right = np.einsum("mjk,lim->lijk", self.product, self.product)
        return bool((left == right).all())

    def is_commutative(self) -> bool:
        return bool((self.product == self.product.transpose(0, 2, 1)).all())


def corner_algebra(WI: CWComplex, n: int, G, level: int = 4) -> CornerAlgebra:
    """Multiplication on Z(W x I, W x dI) read off from the triangle bordism."""
    if n != 1:
        raise ComplexError("the corner algebra of a 0-dimensional corner needs n = 1")
    G = _as_group(G)
    points = corner_points(WI)
    T = triangle_bordism(points)
    b = BordismData(T.full(), T.named("Y0"), T.named("Y1"), n, G, level)
    Z = induced_hom(b)
    base = b.target()
    # source classes are pairs (lower-left, lower-right); identify each edge with the base copy
    left = [f"{p}a" for p in points]
    right = [f"{p}b" for p in points]
    top = [f"{p}t" for p in points]
    r = base.rank
    product = np.zeros((r, r, r), dtype=np.int64)
    src = b.source()
    for col, y in enumerate(src.basis):
        chain = src.homology.lift(y)
        vals = {c: chain[i] for i, c in enumerate(src.homology.cells)}
        i = base.index(base.homology.coordinates(base.homology.chain_from({t: vals[a] for t, a in zip(top, left)})))
        j = base.index(base.homology.coordinates(base.homology.chain_from({t: vals[c] for t, c in zip(top, right)})))
        product[:, i, j] += Z.counts[:, col]
    return CornerAlgebra(base, product)


def cone_on_three_points() -> CWComplex:
    """c(3): center v, ends e1..e3, edges k_i from e_i to v."""
    cells = {0: ["v", "e1", "e2", "e3"], 1: ["k1", "k2", "k3"]}
    d1 = [[1, 1, 1], [-1, 0, 0], [0, -1, 0], [0, 0, -1]]
    return CWComplex(cells, {1: d1}, {"ends": ["e1", "e2", "e3"], "e1": ["e1"], "e2": ["e2"], "e3": ["e3"]}, name="c3")


@dataclass
class TrimoduleProduct:
    group: FiniteAbelianGroup
    table: dict[tuple[tuple, tuple], list[tuple[tuple, int]]]
    commuting: dict[tuple[tuple, tuple], int]

    def is_group_law(self) -> bool:
        G = self.group
        return all(out == [(G.op(g, h), 1)] for (g, h), out in self.table.items())

    def commuting_is_trivial(self) -> bool:
        return all(v == 1 for v in self.commuting.values())


def trimodule_product(G, level: int = 4) -> TrimoduleProduct:
    """R[g] x R[h] from the state space of c(3) with its three end actions.

    Ends 1 and 2 act through the inverse of G; tensoring picks the classes
    whose converted labels are g and h, and the label at end 3 names the
    output simple.  The swap of the first two legs supplies the commuting map.
    """
    G = _as_group(G)
    c3 = cone_on_three_points()
    H = HomologyPresentation(c3, c3.named("ends"), 1, G)
    labels = [map_by_boundary(H, HomologyPresentation(c3.named(f"e{i}"), None, 0, G)) for i in (1, 2, 3)]
    ends_to_G = []
    for lab in labels:
        # H_0 of a point is G itself; read its class as a G-element
        pt = lab.target
        ends_to_G.append({x: tuple(int(v) for v in pt.lift(x)[0]) for x in pt.elements()})

    def label(y, i):
        return ends_to_G[i][labels[i](y)]

    swap = CellMap(c3, c3, {"v": ("v", 1), "e1": ("e2", 1), "e2": ("e1", 1), "e3": ("e3", 1),
                            "k1": ("k2", 1), "k2": ("k1", 1), "k3": ("k3", 1)})
    swap.validate()
    sw = map_by_cells(H, H, swap)
    conv = {}
    by_inputs: dict[tuple, list] = {}
    for y in H.elements():
        lab = (G.inverse(label(y, 0)), G.inverse(label(y, 1)), label(y, 2))
        conv[y] = lab
        by_inputs.setdefault(lab[:2], []).append(y)
    table = {}
    commuting = {}
    for g in G.elements():
        for h in G.elements():
            found = by_inputs.get((g, h), [])
            table[(g, h)] = sorted((conv[y][2], 1) for y in found)
            # the swapped class must be the unique class for (h, g), with the same output
            back = by_inputs.get((h, g), [])
            ok = len(found) == 1 and back == [sw(found[0])] and conv[back[0]][2] == conv[found[0]][2]
            commuting[(g, h)] = 1 if ok else 0
    return TrimoduleProduct(G, table, commuting)
