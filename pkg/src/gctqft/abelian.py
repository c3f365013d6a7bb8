"""Finite abelian groups and exact integer linear algebra.

Matrices are plain lists of integer rows.  Everything here is exact; the
Smith normal form uses Python integers throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterable, Sequence

Matrix = list[list[int]]


class GroupMismatch(ValueError):
    pass


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups Z/n_1 x ... x Z/n_k.

    Elements are tuples of exponents with 0 <= exps[i] < n_i.  Enumeration is
    lexicographic with the first coordinate most significant.
    """

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(n) for n in self.orders)
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic orders must be >= 1, got {orders}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls((n,))

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        return prod(self.orders)

    def __len__(self) -> int:
        return self.order

    def __str__(self) -> str:
        parts = [f"Z/{n}" for n in self.orders if n > 1]
        return " x ".join(parts) if parts else "0"

    def identity(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def element(self, exps: Iterable[int]) -> tuple[int, ...]:
        exps = tuple(exps)
        if len(exps) != self.rank:
            raise GroupMismatch(f"element {exps} does not belong to {self}")
        return tuple(e % n for e, n in zip(exps, self.orders))

    def generator(self, i: int) -> tuple[int, ...]:
        return self.element(1 if j == i else 0 for j in range(self.rank))

    def op(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        if len(a) != self.rank or len(b) != self.rank:
            raise GroupMismatch(f"elements {a}, {b} do not belong to {self}")
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def inverse(self, a: Sequence[int]) -> tuple[int, ...]:
        if len(a) != self.rank:
            raise GroupMismatch(f"element {a} does not belong to {self}")
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def scale(self, k: int, a: Sequence[int]) -> tuple[int, ...]:
        return tuple((k * x) % n for x, n in zip(a, self.orders))

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(n) for n in self.orders)))

    enumerate = elements

    def index(self, a: Sequence[int]) -> int:
        idx = 0
        for x, n in zip(a, self.orders):
            idx = idx * n + (x % n)
        return idx

    def element_order(self, a: Sequence[int]) -> int:
        out = 1
        for x, n in zip(a, self.orders):
            k = n // gcd(x % n, n)
            out = out * k // gcd(out, k)
        return out

    def exponent(self) -> int:
        out = 1
        for n in self.orders:
            out = out * n // gcd(out, n)
        return out

    def to_json(self) -> dict:
        return {"orders": list(self.orders)}

    @classmethod
    def from_json(cls, obj) -> "FiniteAbelianGroup":
        if isinstance(obj, dict):
            obj = obj["orders"]
        return cls(tuple(int(n) for n in obj))


# --- integer matrices -------------------------------------------------------


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    if inner is None:
        inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append(acc)
    return out


def matvec(a: Matrix, v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v) if x) for row in a]


def transpose(a: Matrix, rows: int | None = None, cols: int | None = None) -> Matrix:
    if rows is None:
        rows = len(a)
    if cols is None:
        cols = len(a[0]) if a else 0
    return [[a[i][j] for i in range(rows)] for j in range(cols)]


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


@dataclass
class SmithDecomposition:
    """U * A * V == D with U, V unimodular and the diagonal of D a divisor chain.

    ``U_inv`` and ``V_inv`` are the exact inverses, kept because the homology
    engine needs both directions of the change of basis.
    """

    U: Matrix
    D: Matrix
    V: Matrix
    U_inv: Matrix
    V_inv: Matrix
    rows: int
    cols: int

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(self.rows, self.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def smith_normal_form(A: Matrix, rows: int | None = None, cols: int | None = None) -> SmithDecomposition:
    """Smith normal form with deterministic pivoting.

    The pivot at each stage is the nonzero entry of smallest absolute value in
    the remaining block, ties broken by row-major position.  Diagonal entries
    come out non-negative.
    """
    if rows is None:
        rows = len(A)
    if cols is None:
        cols = len(A[0]) if rows else 0
    M = [list(map(int, r)) for r in A]
    U, U_inv = identity(rows), identity(rows)
    V, V_inv = identity(cols), identity(cols)

    def swap_rows(i, j):
        if i != j:
            M[i], M[j] = M[j], M[i]
            U[i], U[j] = U[j], U[i]
            for r in U_inv:
                r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        if i != j:
            for r in M:
                r[i], r[j] = r[j], r[i]
            for r in V:
                r[i], r[j] = r[j], r[i]
            V_inv[i], V_inv[j] = V_inv[j], V_inv[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q == 0:
            return
        Md, Ms = M[dst], M[src]
        for k in range(cols):
            if Ms[k]:
                Md[k] += q * Ms[k]
        Ud, Us = U[dst], U[src]
        for k in range(rows):
            if Us[k]:
                Ud[k] += q * Us[k]
        for r in U_inv:
            if r[dst]:
                r[src] -= q * r[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        if q == 0:
            return
        for r in M:
            if r[src]:
                r[dst] += q * r[src]
        for r in V:
            if r[src]:
                r[dst] += q * r[src]
        Vd, Vs = V_inv[dst], V_inv[src]
        for k in range(cols):
            if Vd[k]:
                Vs[k] -= q * Vd[k]

    def negate_row(i):
        M[i] = [-x for x in M[i]]
        U[i] = [-x for x in U[i]]
        for r in U_inv:
            r[i] = -r[i]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            Mi = M[i]
            for j in range(t, cols):
                x = Mi[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, rows):
                x = M[i][t]
                if x:
                    add_row(i, t, -(x // p))
                    if M[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                x = M[t][j]
                if x:
                    add_col(j, t, -(x // p))
                    if M[t][j]:
                        dirty = True
            if dirty:
                # a smaller remainder appeared in the pivot row/column
                best = (abs(M[t][t]), t, t)
                for i in range(t + 1, rows):
                    if M[i][t] and abs(M[i][t]) < best[0]:
                        best = (abs(M[i][t]), i, t)
                for j in range(t + 1, cols):
                    if M[t][j] and abs(M[t][j]) < best[0]:
                        best = (abs(M[t][j]), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            # divisibility of the remaining block
            bad = None
            for i in range(t + 1, rows):
                Mi = M[i]
                for j in range(t + 1, cols):
                    if Mi[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if M[t][t] < 0:
            negate_row(t)
        t += 1
    return SmithDecomposition(U, M, V, U_inv, V_inv, rows, cols)


@dataclass
class Cokernel:
    """coker(A: Z^cols -> Z^rows) presented as Z/d_1 x ... x Z/d_s x Z^free_rank.

    ``generators`` are integer vectors in Z^rows, one per invariant factor
    (torsion first, then free), and ``coordinates`` maps a vector of Z^rows to
    its class.
    """

    torsion: tuple[int, ...]
    free_rank: int
    generators: list[list[int]]
    _U: Matrix = field(repr=False)
    _start: int = field(repr=False)

    @property
    def group(self) -> FiniteAbelianGroup:
        if self.free_rank:
            raise ValueError("cokernel is infinite")
        return FiniteAbelianGroup(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        return prod(self.torsion) if self.is_finite else None

    def coordinates(self, v: Sequence[int]) -> tuple[int, ...]:
        w = matvec(self._U, v)
        tors = [w[self._start + i] % d for i, d in enumerate(self.torsion)]
        free = w[self._start + len(self.torsion):]
        return tuple(tors + free)


def cokernel(A: Matrix, rows: int | None = None, cols: int | None = None) -> Cokernel:
    if rows is None:
        rows = len(A)
    if cols is None:
        cols = len(A[0]) if rows else 0
    snf = smith_normal_form(A, rows, cols)
    diag = snf.diagonal + [0] * (rows - min(rows, cols))
    start = sum(1 for d in diag if d == 1)
    torsion = tuple(d for d in diag if d > 1)
    free_rank = sum(1 for d in diag if d == 0)
    gens = [[snf.U_inv[r][i] for r in range(rows)] for i in range(start, rows)]
    return Cokernel(torsion, free_rank, gens, snf.U, start)


class ModQuotient:
    """The group ker(K mod m) / im(I mod m) inside (Z/m)^c.

    K is an r x c integer matrix and I a c x s integer matrix with K*I = 0 mod m.
    Works through lattices in Z^c containing m*Z^c, so composite m needs no
    special treatment.

    ``invariants`` lists the cyclic orders (all > 1), ``generators`` holds one
    representative vector (entries in [0, m)) per invariant, and
    ``coordinates`` sends a cycle to its exponent tuple.
    """

    def __init__(self, K: Matrix, I: Matrix, c: int, m: int, r: int | None = None, s: int | None = None):
        self.m = m
        self.c = c
        if r is None:
            r = len(K)
        if s is None:
            s = len(I[0]) if I and c else 0
        self._K = K
        self._r = r
        if c == 0:
            self.invariants = ()
            self.generators = []
            self._P = []
            self._scale = []
            self._Vinv = []
            self._start = 0
            return
        # lattice of cycles: V * diag(e)
        if r:
            snfK = smith_normal_form(K, r, c)
            diag = snfK.diagonal
            Vz, Vinv = snfK.V, snfK.V_inv
        else:
            diag, Vz, Vinv = [], identity(c), identity(c)
        scale = []
        for i in range(c):
            d = diag[i] if i < len(diag) else 0
            scale.append(m // gcd(d, m) if d else 1)
        # boundaries plus m*Z^c, written in cycle-lattice coordinates
        gens = [[I[i][j] for i in range(c)] for j in range(s)] + [
            [m if i == j else 0 for i in range(c)] for j in range(c)
        ]
        coord_cols = []
        for g in gens:
            w = matvec(Vinv, g)
            col = []
            for i in range(c):
                q, rem = divmod(w[i], scale[i])
                if rem:
                    raise ArithmeticError("boundary is not a cycle mod m")
                col.append(q)
            coord_cols.append(col)
        Mcoord = transpose(coord_cols, len(coord_cols), c)
        snfM = smith_normal_form(Mcoord, c, len(coord_cols))
        d = snfM.diagonal
        start = sum(1 for x in d if x == 1)
        self.invariants = tuple(d[start:])
        if any(x == 0 for x in self.invariants):
            raise ArithmeticError("quotient unexpectedly infinite")
        self._P = snfM.U
        self._scale = scale
        self._Vinv = Vinv
        self._start = start
        self.generators = []
        for k in range(start, c):
            w = [snfM.U_inv[i][k] * scale[i] for i in range(c)]
            x = matvec(Vz, w)
            self.generators.append([v % m for v in x])

    @property
    def order(self) -> int:
        return prod(self.invariants)

    def is_cycle(self, x: Sequence[int]) -> bool:
        if not self._r:
            return True
        return all(v % self.m == 0 for v in matvec(self._K, x))

    def coordinates(self, x: Sequence[int]) -> tuple[int, ...]:
        if self.c == 0:
            return ()
        w = matvec(self._Vinv, x)
        y = []
        for i in range(self.c):
            q, rem = divmod(w[i], self._scale[i])
            if rem:
                raise ValueError("vector is not a cycle mod m")
            y.append(q)
        z = matvec(self._P, y)
        return tuple(z[self._start + k] % f for k, f in enumerate(self.invariants))

    def lift(self, exps: Sequence[int]) -> list[int]:
        out = [0] * self.c
        for e, g in zip(exps, self.generators):
            if e:
                for i in range(self.c):
                    out[i] += e * g[i]
        return [v % self.m for v in out]
