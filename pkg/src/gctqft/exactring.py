"""Exact arithmetic in cyclotomic integer rings Z[zeta_N].

Elements are stored as integer coefficient tuples of length phi(N) in the
power basis 1, zeta, ..., zeta^(phi(N)-1), always reduced modulo the N-th
cyclotomic polynomial.  Reduced form is canonical, so equality and hashing
are coefficient-wise.

>>> R = CyclotomicRing(4)
>>> i = R.zeta()
>>> i * i == R.one() * -1
True
>>> (R.one() + i) * (R.one() - i)
RingElement(4, (2, 0))
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; den monic
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            quot[k - dn] = c
            for j in range(dn + 1):
                num[k - dn + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("division is not exact")
    return quot


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    # x^n - 1 divided by Phi_d for every proper divisor d of n
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, list(_cyclotomic(d)))
    return tuple(poly)


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclotomic level must be a positive integer, got {n!r}")
    return _cyclotomic(n)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class CyclotomicRing:
    """The ring Z[zeta_N].  Instances are cached, one per level."""

    _instances: dict[int, "CyclotomicRing"] = {}

    def __new__(cls, level: int):
        ring = cls._instances.get(level)
        if ring is None:
            modulus = cyclotomic_polynomial(level)
            ring = super().__new__(cls)
            ring.level = level
            ring.modulus = modulus
            ring.degree = len(modulus) - 1
            ring._reduction = ring._build_reduction()
            ring._root_table = None
            cls._instances[level] = ring
        return ring

    def __getnewargs__(self):
        return (self.level,)

    def __repr__(self) -> str:
        return f"CyclotomicRing({self.level})"

    def _build_reduction(self) -> list[tuple[int, ...]]:
        # rows[k] = x^(deg + k) mod Phi_N, for k < deg - 1 (enough for products)
        deg = self.degree
        rows = []
        cur = [-c for c in self.modulus[:deg]]  # x^deg
        for _ in range(max(deg - 1, 0)):
            rows.append(tuple(cur))
            # multiply by x
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(deg):
                    cur[j] -= top * self.modulus[j]
        return rows

    def reduce(self, coeffs) -> tuple[int, ...]:
        """Reduce an arbitrary-length coefficient sequence modulo Phi_N."""
        deg = self.degree
        coeffs = list(coeffs)
        if len(coeffs) <= deg:
            return tuple(coeffs) + (0,) * (deg - len(coeffs))
        # generic long division for long inputs
        mod = self.modulus
        for k in range(len(coeffs) - 1, deg - 1, -1):
            c = coeffs[k]
            if c:
                coeffs[k] = 0
                for j in range(deg):
                    coeffs[k - deg + j] -= c * mod[j]
        return tuple(coeffs[:deg])

    def element(self, coeffs) -> "RingElement":
        return RingElement(self, self.reduce(coeffs))

    def from_int(self, n: int) -> "RingElement":
        return RingElement(self, (n,) + (0,) * (self.degree - 1))

    def zero(self) -> "RingElement":
        return self.from_int(0)

    def one(self) -> "RingElement":
        return self.from_int(1)

    def zeta(self, k: int = 1) -> "RingElement":
        """zeta_N^k, with k taken mod N."""
        k %= self.level
        if k < self.degree:
            coeffs = [0] * self.degree
            coeffs[k] = 1
            return RingElement(self, tuple(coeffs))
        return self.element([0] * k + [1])

    def root_exponent(self, u: "RingElement") -> int | None:
        """k with zeta^k == u, or None if u is not a power of zeta_N."""
        if self._root_table is None:
            self._root_table = {self.zeta(k).coeffs: k for k in range(self.level)}
        return self._root_table.get(u.coeffs)


class RingElement:
    """Immutable element of Z[zeta_N]."""

    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, ring: CyclotomicRing, coeffs: tuple[int, ...]):
        if len(coeffs) != ring.degree:
            raise ValueError(
                f"expected {ring.degree} coefficients for level {ring.level}, got {len(coeffs)}"
            )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def __reduce__(self):
        return (RingElement, (self.ring, self.coeffs))

    @property
    def level(self) -> int:
        return self.ring.level

    def __repr__(self) -> str:
        return f"RingElement({self.level}, {self.coeffs})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise ValueError(
                    f"ring level mismatch: {self.level} vs {other.level}; lift first"
                )
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == self.ring.from_int(other).coeffs
        if isinstance(other, RingElement):
            return self.ring is other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.ring.level, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        deg = len(a)
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:deg]
        for k, row in enumerate(self.ring._reduction):
            c = prod[deg + k]
            if c:
                for j in range(deg):
                    out[j] += c * row[j]
        return RingElement(self.ring, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            return self.unit_inverse() ** (-k)
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def unit_inverse(self) -> "RingElement":
        """Inverse of a root of unity.  Other units are not supported."""
        k = self.ring.root_exponent(self)
        if k is not None:
            return self.ring.zeta(-k)
        neg = self.ring.root_exponent(-self)
        if neg is not None:
            return -self.ring.zeta(-neg)
        raise ValueError(f"{self} is not a root of unity; only roots of unity are inverted")


def ring(level: int) -> CyclotomicRing:
    return CyclotomicRing(level)


def root_of_unity(level: int, k: int) -> RingElement:
    return CyclotomicRing(level).zeta(k)


def multiplicative_order(u: RingElement) -> int | None:
    """Smallest l >= 1 with u^l == 1, or None when u is not a root of unity.

    Roots of unity in Z[zeta_N] have order dividing lcm(2, N), so the search
    stops at 2N.
    """
    bound = 2 * u.level
    power = u
    for ell in range(1, bound + 1):
        if power == 1:
            return ell
        power = power * u
    return None


def lift(a: RingElement, level: int) -> RingElement:
    """Image of a under zeta_N -> zeta_M^(M/N)."""
    n = a.level
    if level % n:
        raise ValueError(f"cannot lift level {n} into level {level}: {n} does not divide {level}")
    target = CyclotomicRing(level)
    if level == n:
        return a
    step = level // n
    coeffs = [0] * (step * (len(a.coeffs) - 1) + 1)
    for k, c in enumerate(a.coeffs):
        coeffs[k * step] = c
    return target.element(coeffs)


def common_level(*levels: int) -> int:
    out = 1
    for n in levels:
        out = out * n // gcd(out, n)
    return out


def to_json(a: RingElement) -> dict:
    return {"level": a.level, "coeffs": list(a.coeffs)}


def from_json(obj: dict) -> RingElement:
    try:
        level = int(obj["level"])
        coeffs = [int(c) for c in obj["coeffs"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed ring element {obj!r}") from exc
    r = CyclotomicRing(level)
    if len(coeffs) != r.degree:
        raise ValueError(
            f"ring element at level {level} needs {r.degree} coefficients, got {len(coeffs)}"
        )
    return RingElement(r, tuple(coeffs))
