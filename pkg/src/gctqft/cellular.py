"""Finite CW complexes as integer chain data, and their homology with finite coefficients.

Homology of a pair with coefficients in G = Z/n_1 x ... x Z/n_k is
computed one cyclic factor at a time on the relative chain group and the
results are concatenated.  A relative chain with coefficients in G is an
integer array of shape (cells, k) whose column i is read mod n_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .abelian import FiniteAbelianGroup, ModQuotient, matmul


class ComplexError(ValueError):
    pass


class CWComplex:
    """Named cells per dimension with integer boundary matrices.

    ``boundary[d]`` has one row per (d-1)-cell and one column per d-cell.
    Construction rejects data with a nonzero composite boundary.
    """

    def __init__(
        self,
        cells: Mapping[int, Sequence[str]],
        boundary: Mapping[int, Sequence[Sequence[int]]] | None = None,
        subcomplexes: Mapping[str, Iterable[str]] | None = None,
        name: str = "",
    ):
        self.name = name
        top = max((d for d, cs in cells.items() if cs), default=-1)
        self._cells: list[tuple[str, ...]] = [tuple(cells.get(d, ())) for d in range(top + 1)]
        self._where: dict[str, tuple[int, int]] = {}
        for d, cs in enumerate(self._cells):
            for i, c in enumerate(cs):
                if c in self._where:
                    raise ComplexError(f"duplicate cell name {c!r}")
                self._where[c] = (d, i)
        boundary = boundary or {}
        self._bd: dict[int, list[list[int]]] = {}
        for d in range(1, top + 1):
            rows, cols = len(self._cells[d - 1]), len(self._cells[d])
            mat = boundary.get(d)
            if mat is None:
                mat = [[0] * cols for _ in range(rows)]
            mat = [[int(v) for v in row] for row in mat]
            if len(mat) != rows or any(len(r) != cols for r in mat):
                raise ComplexError(
                    f"boundary matrix in dimension {d} must be {rows} x {cols}"
                )
            self._bd[d] = mat
        for d in range(2, top + 1):
            prod = matmul(self._bd[d - 1], self._bd[d], len(self._cells[d - 1]))
            if any(any(row) for row in prod):
                raise ComplexError(f"boundary of boundary is nonzero in dimension {d}")
        self.subcomplexes: dict[str, Subcomplex] = {}
        for sub_name, sub_cells in (subcomplexes or {}).items():
            self.subcomplexes[sub_name] = self.subcomplex(sub_cells, name=sub_name)

    # structure -----------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self._cells) - 1

    def cells(self, d: int) -> tuple[str, ...]:
        if 0 <= d < len(self._cells):
            return self._cells[d]
        return ()

    def all_cells(self) -> list[str]:
        return [c for cs in self._cells for c in cs]

    def dimension_of(self, cell: str) -> int:
        try:
            return self._where[cell][0]
        except KeyError:
            raise ComplexError(f"unknown cell {cell!r}") from None

    def boundary_matrix(self, d: int) -> list[list[int]]:
        if d in self._bd:
            return self._bd[d]
        return [[0] * len(self.cells(d)) for _ in self.cells(d - 1)]

    def boundary_of(self, cell: str) -> dict[str, int]:
        d, j = self._where[cell]
        if d == 0:
            return {}
        mat = self._bd[d]
        return {face: mat[i][j] for i, face in enumerate(self._cells[d - 1]) if mat[i][j]}

    def __contains__(self, cell: str) -> bool:
        return cell in self._where

    def __repr__(self) -> str:
        counts = [len(cs) for cs in self._cells]
        label = f" {self.name!r}" if self.name else ""
        return f"CWComplex{label}(cells per dim {counts})"

    # subcomplexes ----------------------------------------------------------

    def subcomplex(self, cells: Iterable[str] | Mapping, name: str = "") -> "Subcomplex":
        if isinstance(cells, Mapping):
            cells = [c for cs in cells.values() for c in cs]
        return Subcomplex(self, frozenset(cells), name)

    def closure(self, cells: Iterable[str], name: str = "") -> "Subcomplex":
        """Smallest subcomplex containing the given cells."""
        out = set()
        stack = list(cells)
        while stack:
            c = stack.pop()
            if c in out:
                continue
            if c not in self:
                raise ComplexError(f"unknown cell {c!r}")
            out.add(c)
            stack.extend(self.boundary_of(c))
        return Subcomplex(self, frozenset(out), name)

    def full(self) -> "Subcomplex":
        return Subcomplex(self, frozenset(self._where), "all")

    def empty(self) -> "Subcomplex":
        return Subcomplex(self, frozenset(), "empty")

    def named(self, name: str) -> "Subcomplex":
        """A named subcomplex; ``all``/``X`` and ``empty``/``0`` are always defined."""
        if name in self.subcomplexes:
            return self.subcomplexes[name]
        if name in ("all", "X", self.name) and name:
            return self.full()
        if name in ("empty", "0", "none"):
            return self.empty()
        raise ComplexError(f"no subcomplex named {name!r}; known: {sorted(self.subcomplexes)}")

    # serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        out = {
            "format": "gctqft/1",
            "cells": {str(d): list(cs) for d, cs in enumerate(self._cells)},
            "boundary": {str(d): self._bd[d] for d in sorted(self._bd)},
            "subcomplexes": {
                k: {str(d): list(cs) for d, cs in v.by_dimension().items()}
                for k, v in self.subcomplexes.items()
            },
        }
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> "CWComplex":
        try:
            cells = {int(d): list(cs) for d, cs in obj["cells"].items()}
            boundary = {int(d): m for d, m in obj.get("boundary", {}).items()}
            subs = {}
            for k, v in obj.get("subcomplexes", {}).items():
                subs[k] = [c for cs in v.values() for c in cs] if isinstance(v, Mapping) else list(v)
        except (KeyError, AttributeError, TypeError, ValueError) as exc:
            raise ComplexError(f"malformed complex JSON: {exc}") from exc
        return cls(cells, boundary, subs, name=obj.get("name", ""))


@dataclass(frozen=True)
class Subcomplex:
    parent: CWComplex = field(compare=False, hash=False)
    cells: frozenset
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for c in self.cells:
            if c not in self.parent:
                raise ComplexError(f"cell {c!r} is not in the complex")
        for c in self.cells:
            for face in self.parent.boundary_of(c):
                if face not in self.cells:
                    label = f" {self.name!r}" if self.name else ""
                    raise ComplexError(
                        f"subcomplex{label} is not closed: {face!r} lies in the boundary of {c!r}"
                    )

    def cells_in(self, d: int) -> list[str]:
        return [c for c in self.parent.cells(d) if c in self.cells]

    def by_dimension(self) -> dict[int, list[str]]:
        return {d: self.cells_in(d) for d in range(self.parent.dim + 1) if self.cells_in(d)}

    def __or__(self, other: "Subcomplex") -> "Subcomplex":
        self._same_parent(other)
        return Subcomplex(self.parent, self.cells | other.cells, f"{self.name}+{other.name}")

    def __and__(self, other: "Subcomplex") -> "Subcomplex":
        self._same_parent(other)
        return Subcomplex(self.parent, self.cells & other.cells, f"{self.name}&{other.name}")

    def __le__(self, other: "Subcomplex") -> bool:
        return self.cells <= other.cells

    def _same_parent(self, other: "Subcomplex") -> None:
        if self.parent is not other.parent:
            raise ComplexError("subcomplexes of different complexes")

    def __repr__(self) -> str:
        return f"Subcomplex({self.name or sorted(self.cells)})"


def _as_space(X) -> Subcomplex:
    if isinstance(X, CWComplex):
        return X.full()
    if isinstance(X, Subcomplex):
        return X
    raise TypeError(f"expected a CWComplex or Subcomplex, got {type(X).__name__}")


def _as_group(G) -> FiniteAbelianGroup:
    if isinstance(G, FiniteAbelianGroup):
        return G
    if isinstance(G, int):
        return FiniteAbelianGroup((G,))
    return FiniteAbelianGroup(tuple(G))


class HomologyPresentation:
    """H_n(Y, A; G) with explicit cycle representatives.

    ``group`` lists the cyclic orders of factor 0 first, then factor 1, and
    so on.  ``generators[j]`` is a relative chain (cells x rank(G) array)
    representing the j-th cyclic generator.
    """

    def __init__(self, space, rel: Subcomplex | None, n: int, G):
        Y = _as_space(space)
        parent = Y.parent
        if rel is None:
            rel = parent.empty()
        if rel.parent is not parent:
            raise ComplexError("pair members belong to different complexes")
        if not rel.cells <= Y.cells:
            raise ComplexError(f"{rel!r} is not contained in {Y!r}")
        self.space, self.rel, self.n = Y, rel, n
        self.coeffs = _as_group(G)
        self.complex = parent

        def rel_cells(d):
            return [c for c in Y.cells_in(d) if c not in rel.cells] if d >= 0 else []

        self.cells = rel_cells(n)
        below, above = rel_cells(n - 1), rel_cells(n + 1)
        self._pos = {c: i for i, c in enumerate(self.cells)}
        K = _block(parent, n, below, self.cells)
        I = _block(parent, n + 1, self.cells, above)
        self._factors: list[ModQuotient] = []
        orders: list[int] = []
        self._slots: list[tuple[int, int]] = []  # (factor, position within factor)
        for f, m in enumerate(self.coeffs.orders):
            Q = ModQuotient(K, I, len(self.cells), m, r=len(below), s=len(above))
            self._factors.append(Q)
            for k, inv in enumerate(Q.invariants):
                orders.append(inv)
                self._slots.append((f, k))
        self.group = FiniteAbelianGroup(tuple(orders))
        self.generators = [self._gen_chain(j) for j in range(len(orders))]

    def _gen_chain(self, j: int) -> np.ndarray:
        f, k = self._slots[j]
        chain = np.zeros((len(self.cells), self.coeffs.rank), dtype=np.int64)
        chain[:, f] = self._factors[f].generators[k]
        return chain

    @property
    def order(self) -> int:
        return self.group.order

    def elements(self) -> list[tuple[int, ...]]:
        return self.group.elements()

    def zero_chain(self) -> np.ndarray:
        return np.zeros((len(self.cells), self.coeffs.rank), dtype=np.int64)

    def chain_from(self, values: Mapping[str, Sequence[int]]) -> np.ndarray:
        """Relative chain from {cell name: G-element}; cells of the subspace are dropped."""
        chain = self.zero_chain()
        for c, g in values.items():
            if c in self._pos:
                chain[self._pos[c]] = g
            elif c not in self.rel.cells:
                raise ComplexError(f"cell {c!r} is not an {self.n}-cell of the pair")
        return chain

    def is_cycle(self, chain: np.ndarray) -> bool:
        return all(Q.is_cycle([int(v) for v in chain[:, f]]) for f, Q in enumerate(self._factors))

    def coordinates(self, chain: np.ndarray) -> tuple[int, ...]:
        """Homology class of a relative cycle."""
        out: list[int] = []
        for f, Q in enumerate(self._factors):
            col = [int(v) % Q.m for v in chain[:, f]] if len(self.cells) else []
            out.extend(Q.coordinates(col))
        return tuple(out)

    def lift(self, x: Sequence[int]) -> np.ndarray:
        chain = self.zero_chain()
        for j, e in enumerate(x):
            if e:
                chain += e * self.generators[j]
        for f, m in enumerate(self.coeffs.orders):
            chain[:, f] %= m
        return chain

    def describe(self) -> str:
        return f"H_{self.n}({self.space.name or 'Y'}, {self.rel.name or '0'}; {self.coeffs}) = {self.group}"

    def __repr__(self) -> str:
        return f"HomologyPresentation({self.describe()})"


def _block(X: CWComplex, d: int, rows: list[str], cols: list[str]) -> list[list[int]]:
    """Entries of the boundary d-matrix for the given row and column cells."""
    if d < 1 or not rows or not cols:
        return [[0] * len(cols) for _ in rows]
    full = X.boundary_matrix(d)
    ri = {c: i for i, c in enumerate(X.cells(d - 1))}
    ci = {c: i for i, c in enumerate(X.cells(d))}
    return [[full[ri[r]][ci[c]] for c in cols] for r in rows]


def relative_homology(X, A: Subcomplex | None, n: int, G) -> HomologyPresentation:
    return HomologyPresentation(X, A, n, G)


@dataclass
class HomologyMap:
    """Homomorphism given by the target coordinates of each source generator."""

    source: HomologyPresentation
    target: HomologyPresentation
    columns: list[tuple[int, ...]]

    @property
    def matrix(self) -> list[list[int]]:
        rows = self.target.group.rank
        return [[col[i] for col in self.columns] for i in range(rows)]

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        orders = self.target.group.orders
        out = [0] * len(orders)
        for e, col in zip(x, self.columns):
            if e:
                for i in range(len(orders)):
                    out[i] += e * col[i]
        return tuple(v % n for v, n in zip(out, orders))

    def image(self) -> set[tuple[int, ...]]:
        return {self(x) for x in self.source.elements()}

    def kernel(self) -> list[tuple[int, ...]]:
        zero = self.target.group.identity()
        return [x for x in self.source.elements() if self(x) == zero]

    def compose(self, first: "HomologyMap") -> "HomologyMap":
        """self after first."""
        if _pair_key(first.target) != _pair_key(self.source):
            raise ComplexError(f"cannot compose: {first.target.describe()} is not {self.source.describe()}")
        return HomologyMap(first.source, self.target, [self(c) for c in first.columns])


def _pair_key(H: HomologyPresentation) -> tuple:
    return (id(H.complex), H.space.cells, H.rel.cells, H.n, H.coeffs.orders)


def _chain_transfer(chain: np.ndarray, src: HomologyPresentation, dst: HomologyPresentation) -> np.ndarray:
    values = {c: chain[i] for i, c in enumerate(src.cells)}
    out = dst.zero_chain()
    for c, g in values.items():
        if c in dst._pos:
            out[dst._pos[c]] = g
    return out


def map_by_inclusion(src: HomologyPresentation, dst: HomologyPresentation) -> HomologyMap:
    """Map induced by the inclusion of pairs src <= dst (cells of dst's subspace are dropped)."""
    if src.complex is not dst.complex or src.n != dst.n or src.coeffs != dst.coeffs:
        raise ComplexError("inclusion needs the same complex, degree and coefficients")
    if not (src.space.cells <= dst.space.cells and src.rel.cells <= dst.rel.cells):
        raise ComplexError(f"pair ({src.space!r}, {src.rel!r}) is not inside ({dst.space!r}, {dst.rel!r})")
    cols = [dst.coordinates(_chain_transfer(g, src, dst)) for g in src.generators]
    return HomologyMap(src, dst, cols)


def map_by_boundary(src: HomologyPresentation, dst: HomologyPresentation) -> HomologyMap:
    """Boundary of each source representative, restricted to the cells of the target pair.

    The target space must lie in the source's subspace.  When the subspace
    splits as a union meeting in the target's subspace, the restriction is
    the projection onto that summand.
    """
    if src.complex is not dst.complex or dst.n != src.n - 1 or src.coeffs != dst.coeffs:
        raise ComplexError("boundary map needs the same complex, consecutive degrees and coefficients")
    if not dst.space.cells <= src.rel.cells:
        raise ComplexError(f"{dst.space!r} is not inside the subspace {src.rel!r}")
    X = src.complex
    rows = dst.cells
    B = np.array(_block(X, src.n, rows, src.cells), dtype=np.int64).reshape(len(rows), len(src.cells))
    cols = []
    for g in src.generators:
        image = B @ g if len(src.cells) else dst.zero_chain()
        cols.append(dst.coordinates(image))
    return HomologyMap(src, dst, cols)


def inclusion_induced(X, A, B, n: int, G) -> HomologyMap:
    """H_n(A, B) -> H_n(X, B) for B <= A <= X."""
    X = _as_space(X)
    A = _as_space(A)
    if B is None:
        B = X.parent.empty()
    if not (B.cells <= A.cells <= X.cells):
        raise ComplexError("inclusion needs B <= A <= X")
    return map_by_inclusion(HomologyPresentation(A, B, n, G), HomologyPresentation(X, B, n, G))


def connecting(X, A, B, k: int, G) -> HomologyMap:
    """H_k(X, A) -> H_{k-1}(A, B) for B <= A <= X."""
    X = _as_space(X)
    A = _as_space(A)
    if B is None:
        B = X.parent.empty()
    if not (B.cells <= A.cells <= X.cells):
        raise ComplexError("connecting map needs B <= A <= X")
    return map_by_boundary(HomologyPresentation(X, A, k, G), HomologyPresentation(A, B, k - 1, G))


def image_order(f: HomologyMap) -> int:
    return len(f.image())


def surjective(f: HomologyMap) -> bool:
    return image_order(f) == f.target.order


def injective(f: HomologyMap) -> bool:
    return image_order(f) == f.source.order


def exact_at(f: HomologyMap, g: HomologyMap) -> bool:
    """image(f) == kernel(g) for composable f then g."""
    return f.image() == set(g.kernel())


def relabel(X: CWComplex, perm: Mapping[int, Sequence[int]]) -> CWComplex:
    """The same complex with cells reordered: perm[d] lists old indices in new order."""
    cells = {}
    for d in range(X.dim + 1):
        order = list(perm.get(d, range(len(X.cells(d)))))
        cells[d] = [X.cells(d)[i] for i in order]
    bd = {}
    for d in range(1, X.dim + 1):
        ro = list(perm.get(d - 1, range(len(X.cells(d - 1)))))
        co = list(perm.get(d, range(len(X.cells(d)))))
        full = X.boundary_matrix(d)
        bd[d] = [[full[r][c] for c in co] for r in ro]
    subs = {k: sorted(v.cells) for k, v in X.subcomplexes.items()}
    return CWComplex(cells, bd, subs, name=X.name)
