"""Exhaustive pentagon, hexagon and balance checks on tabulated structure constants.

All identities are written without inverses so they can be evaluated on
exponent tables (addition mod N) and on ring-element tables alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from operator import mul

import numpy as np

from ..abelian import FiniteAbelianGroup
from .presentation import CategoryPresentation, Structure, multiplication_table, structure


@dataclass
class CheckResult:
    name: str
    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return f"{self.name}: ok"
        return f"{self.name}: FAILED at {self.witness}"


def as_structure(x) -> Structure:
    if isinstance(x, Structure):
        return x
    if isinstance(x, CategoryPresentation):
        return structure(x)
    raise TypeError(f"expected a CategoryPresentation or Structure, got {type(x).__name__}")


_obj_eq = np.vectorize(lambda x, y: x == y, otypes=[bool])


def _agree(S: Structure, lhs, rhs) -> np.ndarray:
    if S.exponent:
        return (lhs - rhs) % S.level == 0
    return _obj_eq(lhs, rhs)


def _result(S: Structure, name: str, ok: np.ndarray) -> CheckResult:
    if ok.all():
        return CheckResult(name, True)
    elems = S.group.elements()
    idx = tuple(int(i) for i in np.argwhere(~ok)[0])
    return CheckResult(name, False, tuple(elems[i] for i in idx))


@lru_cache(maxsize=32)
def _plan(orders: tuple[int, ...]) -> dict[str, tuple[np.ndarray, ...]]:
    """Flat positions into the alpha / sigma tables for every term of every identity."""
    M = multiplication_table(FiniteAbelianGroup(orders))
    g = len(M)

    def grids(k):
        return np.meshgrid(*([np.arange(g)] * k), indexing="ij")

    def A(x, y, z):
        return ((x * g + y) * g + z).ravel()

    def s(x, y):
        return (x * g + y).ravel()

    a, b, c, d = grids(4)
    pent = (A(b, c, d), A(a, M[b, c], d), A(a, b, c), A(M[a, b], c, d), A(a, b, M[c, d]))
    a, b, c = grids(3)
    hex1 = (A(a, b, c), A(b, c, a), s(a, c), s(a, b), A(b, a, c), s(a, M[b, c]))
    hex2 = (A(a, b, c), A(c, a, b), s(M[a, b], c), A(a, c, b), s(a, c), s(b, c))
    a, b = grids(2)
    ab = M[a, b]
    bal = (s(ab, ab), s(a, a), s(b, b), s(a, b), s(b, a))
    return {"pentagon": pent, "hexagon1": hex1, "hexagon2": hex2, "balance": bal}


def _side(S: Structure, *values):
    if S.exponent:
        return sum(values) % S.level
    return reduce(mul, values)


def pentagon_table(S: Structure) -> np.ndarray:
    """Boolean array over G^4: alpha(b,c,d) alpha(a,bc,d) alpha(a,b,c) == alpha(ab,c,d) alpha(a,b,cd)."""
    g = S.group.order
    A = S.alpha.ravel()
    p = _plan(S.group.orders)["pentagon"]
    ok = _agree(S, _side(S, A[p[0]], A[p[1]], A[p[2]]), _side(S, A[p[3]], A[p[4]]))
    return ok.reshape((g,) * 4)


def hexagon_tables(S: Structure) -> tuple[np.ndarray, np.ndarray]:
    """Boolean arrays over G^3 for the two hexagon identities.

    first:  alpha(a,b,c) alpha(b,c,a) s(a,c) s(a,b) == alpha(b,a,c) s(a,bc)
    second: alpha(a,b,c) alpha(c,a,b) s(ab,c)       == alpha(a,c,b) s(a,c) s(b,c)
    """
    g = S.group.order
    A, s = S.alpha.ravel(), S.sigma.ravel()
    plan = _plan(S.group.orders)
    h = plan["hexagon1"]
    first = _agree(S, _side(S, A[h[0]], A[h[1]], s[h[2]], s[h[3]]), _side(S, A[h[4]], s[h[5]]))
    h = plan["hexagon2"]
    second = _agree(S, _side(S, A[h[0]], A[h[1]], s[h[2]]), _side(S, A[h[3]], s[h[4]], s[h[5]]))
    return first.reshape((g,) * 3), second.reshape((g,) * 3)


def check_pentagon(p) -> CheckResult:
    S = as_structure(p)
    return _result(S, "pentagon", pentagon_table(S))


def check_hexagon_first(p) -> CheckResult:
    S = as_structure(p)
    return _result(S, "hexagon (sigma)", hexagon_tables(S)[0])


def check_hexagon_second(p) -> CheckResult:
    S = as_structure(p)
    return _result(S, "hexagon (sigma inverse)", hexagon_tables(S)[1])


def check_hexagons(p) -> CheckResult:
    S = as_structure(p)
    first, second = hexagon_tables(S)
    r = _result(S, "hexagon (sigma)", first)
    if not r:
        return r
    r = _result(S, "hexagon (sigma inverse)", second)
    if not r:
        return r
    return CheckResult("hexagons", True)


def check_balance(p) -> CheckResult:
    """sigma(ab,ab) == sigma(a,a) sigma(b,b) sigma(a,b) sigma(b,a) for all pairs."""
    S = as_structure(p)
    g = S.group.order
    s = S.sigma.ravel()
    q = _plan(S.group.orders)["balance"]
    ok = _agree(S, s[q[0]], _side(S, s[q[1]], s[q[2]], s[q[3]], s[q[4]]))
    return _result(S, "balance", ok.reshape(g, g))


def check_all(p) -> list[CheckResult]:
    S = as_structure(p)
    first, second = hexagon_tables(S)
    return [
        _result(S, "pentagon", pentagon_table(S)),
        _result(S, "hexagon (sigma)", first),
        _result(S, "hexagon (sigma inverse)", second),
        check_balance(S),
    ]
