"""Numerical presentations of braided group-categories and their structure constants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Mapping, Sequence

import numpy as np

from ..abelian import FiniteAbelianGroup
from ..exactring import CyclotomicRing, RingElement, lift


class InvalidPresentation(ValueError):
    pass


def minimal_level(orders: Sequence[int]) -> int:
    """lcm of 2*n_i, the smallest level that holds every admissible invariant."""
    out = 2
    for n in orders:
        out = out * (2 * n) // gcd(out, 2 * n)
    return out


@dataclass(frozen=True, eq=False)
class CategoryPresentation:
    """Invariants sigma_i (one per cyclic generator) and sigma_{i,j} for i > j.

    Generator indices are 0-based.  ``sigma_off`` is keyed by (i, j) with
    i > j; missing pairs mean sigma_{i,j} = 1.
    """

    group: FiniteAbelianGroup
    level: int
    sigma_diag: tuple[RingElement, ...]
    sigma_off: Mapping[tuple[int, int], RingElement] = field(default_factory=dict)

    def __post_init__(self):
        group = self.group
        if not isinstance(group, FiniteAbelianGroup):
            group = FiniteAbelianGroup(tuple(group))
            object.__setattr__(self, "group", group)
        if self.level % minimal_level(group.orders):
            raise InvalidPresentation(
                f"level {self.level} is not a multiple of lcm(2n_i) = {minimal_level(group.orders)}"
            )
        if len(self.sigma_diag) != group.rank:
            raise InvalidPresentation(
                f"need {group.rank} diagonal invariants, got {len(self.sigma_diag)}"
            )
        diag = tuple(self._at_level(s) for s in self.sigma_diag)
        off = {}
        for key, val in dict(self.sigma_off).items():
            i, j = key
            if not (0 <= j < i < group.rank):
                raise InvalidPresentation(f"off-diagonal key {key} must satisfy 0 <= j < i < {group.rank}")
            off[(i, j)] = self._at_level(val)
        object.__setattr__(self, "sigma_diag", diag)
        object.__setattr__(self, "sigma_off", dict(sorted(off.items())))

    def _at_level(self, x) -> RingElement:
        if isinstance(x, int):
            return self.ring.from_int(x)
        if x.level == self.level:
            return x
        return lift(x, self.level)

    @property
    def ring(self) -> CyclotomicRing:
        return CyclotomicRing(self.level)

    def off(self, i: int, j: int) -> RingElement:
        return self.sigma_off.get((i, j), self.ring.one())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CategoryPresentation):
            return NotImplemented
        return (
            self.group == other.group
            and self.level == other.level
            and self.sigma_diag == other.sigma_diag
            and self._nontrivial_off() == other._nontrivial_off()
        )

    def __hash__(self) -> int:
        return hash((self.group, self.level, self.sigma_diag, tuple(self._nontrivial_off().items())))

    def _nontrivial_off(self) -> dict:
        return {k: v for k, v in self.sigma_off.items() if v != 1}

    def __repr__(self) -> str:
        diag = ", ".join(str(s) for s in self.sigma_diag)
        off = ", ".join(f"{k}: {v}" for k, v in self._nontrivial_off().items())
        return f"CategoryPresentation({self.group}, level={self.level}, diag=[{diag}], off={{{off}}})"

    # exponent view -------------------------------------------------------

    def exponents(self) -> tuple[list[int], dict[tuple[int, int], int]] | None:
        """Exponents k with invariant == zeta_N^k, or None if some invariant is not of that form."""
        ring = self.ring
        diag = [ring.root_exponent(s) for s in self.sigma_diag]
        off = {k: ring.root_exponent(v) for k, v in self.sigma_off.items()}
        if any(e is None for e in diag) or any(e is None for e in off.values()):
            return None
        return diag, off


def from_exponents(
    orders: Sequence[int],
    diag: Sequence[int],
    off: Mapping[tuple[int, int], int] | None = None,
    level: int | None = None,
) -> CategoryPresentation:
    """Presentation with sigma_i = zeta_N^diag[i] and sigma_{i,j} = zeta_N^off[i,j]."""
    if level is None:
        level = minimal_level(orders)
    ring = CyclotomicRing(level)
    return CategoryPresentation(
        FiniteAbelianGroup(tuple(orders)),
        level,
        tuple(ring.zeta(e) for e in diag),
        {k: ring.zeta(e) for k, e in (off or {}).items()},
    )


@dataclass
class OrderReport:
    valid: bool
    violations: list[str]

    def __bool__(self) -> bool:
        return self.valid


def check_order_conditions(p: CategoryPresentation) -> OrderReport:
    violations = []
    orders = p.group.orders
    for i, (s, n) in enumerate(zip(p.sigma_diag, orders)):
        if s ** (2 * n) != 1:
            violations.append(f"sigma_{i}^{2 * n} != 1")
        if n % 2 and s ** n != 1:
            violations.append(f"sigma_{i}^{n} != 1 (n_{i} = {n} is odd)")
    for (i, j), s in p.sigma_off.items():
        for k in (i, j):
            if s ** orders[k] != 1:
                violations.append(f"sigma_{i},{j}^{orders[k]} != 1")
    return OrderReport(not violations, violations)


def _require_valid(p: CategoryPresentation) -> None:
    report = check_order_conditions(p)
    if not report:
        raise InvalidPresentation("; ".join(report.violations))


def alpha_unchecked(p: CategoryPresentation, a, b, c) -> RingElement:
    out = p.ring.one()
    for i, n in enumerate(p.group.orders):
        if b[i] % n + c[i] % n >= n:
            out = out * p.sigma_diag[i] ** (n * (a[i] % n))
    return out


def sigma_pair_unchecked(p: CategoryPresentation, a, b) -> RingElement:
    out = p.ring.one()
    orders = p.group.orders
    for i in range(len(orders)):
        ai = a[i] % orders[i]
        if not ai:
            continue
        for j in range(i, len(orders)):
            bj = b[j] % orders[j]
            if not bj:
                continue
            s = p.sigma_diag[i] if i == j else p.off(j, i)
            out = out * s ** (ai * bj)
    return out


def alpha(p: CategoryPresentation, a, b, c) -> RingElement:
    """Associator (ab)c -> a(bc): product over i of sigma_i^(n_i a_i) when b_i + c_i overflows."""
    _require_valid(p)
    return alpha_unchecked(p, a, b, c)


def sigma_pair(p: CategoryPresentation, a, b) -> RingElement:
    """Braiding ab -> ba: product over i <= j of sigma_{i,j}^(a_i b_j)."""
    _require_valid(p)
    return sigma_pair_unchecked(p, a, b)


def twist(p: CategoryPresentation, a, character: Sequence[RingElement] | None = None) -> RingElement:
    """Balancing twist sigma(a, a), optionally rescaled by a character G -> units.

    ``character`` gives the image of each generator; it must satisfy chi_i^(n_i) = 1.
    """
    t = sigma_pair(p, a, a)
    if character is not None:
        for i, (chi, n) in enumerate(zip(character, p.group.orders)):
            chi = p._at_level(chi)
            if chi ** n != 1:
                raise InvalidPresentation(f"character value on generator {i} has order not dividing {n}")
            t = t * chi ** (a[i] % n)
    return t


def is_symmetric(p: CategoryPresentation) -> bool:
    elems = p.group.elements()
    for a in elems:
        for b in elems:
            if sigma_pair_unchecked(p, a, b) * sigma_pair_unchecked(p, b, a) != 1:
                return False
    return True


def enumerate_presentations(orders: Sequence[int], level: int | None = None) -> Iterator[CategoryPresentation]:
    """Every presentation over Z[zeta_N] that satisfies the order conditions.

    Invariants range over the N-th roots of unity, which contain every admissible
    value once N is a multiple of lcm(2 n_i).
    """
    if level is None:
        level = minimal_level(orders)
    k = len(orders)
    diag_choices = []
    for n in orders:
        need = n if n % 2 else 2 * n
        diag_choices.append([e for e in range(level) if (e * need) % level == 0])
    pairs = [(i, j) for i in range(k) for j in range(i)]
    off_choices = []
    for i, j in pairs:
        g = gcd(orders[i], orders[j])
        off_choices.append([e for e in range(level) if (e * g) % level == 0])
    for diag in itertools.product(*diag_choices):
        for offs in itertools.product(*off_choices):
            yield from_exponents(orders, diag, dict(zip(pairs, offs)), level)


# --- structure tables -----------------------------------------------------


@dataclass
class Structure:
    """alpha on G^3 and sigma on G^2 as arrays indexed by element enumeration order.

    With ``exponent=True`` the arrays hold integers k standing for zeta_N^k;
    otherwise they are object arrays of RingElement.  Both are exact.
    """

    group: FiniteAbelianGroup
    level: int
    alpha: np.ndarray
    sigma: np.ndarray
    exponent: bool

    def copy(self) -> "Structure":
        return Structure(self.group, self.level, self.alpha.copy(), self.sigma.copy(), self.exponent)

    def value(self, x) -> RingElement:
        if self.exponent:
            return CyclotomicRing(self.level).zeta(int(x))
        return x

    def to_elements(self) -> "Structure":
        if not self.exponent:
            return self
        ring = CyclotomicRing(self.level)
        conv = np.vectorize(lambda e: ring.zeta(int(e)), otypes=[object])
        return Structure(self.group, self.level, conv(self.alpha), conv(self.sigma), False)

    def flip_alpha(self, a, b, c) -> "Structure":
        """Copy with alpha(a, b, c) multiplied by -1."""
        out = self.copy()
        idx = (self.group.index(a), self.group.index(b), self.group.index(c))
        if out.exponent:
            out.alpha[idx] = (out.alpha[idx] + self.level // 2) % self.level
        else:
            out.alpha[idx] = -out.alpha[idx]
        return out

    def flip_sigma(self, a, b) -> "Structure":
        out = self.copy()
        idx = (self.group.index(a), self.group.index(b))
        if out.exponent:
            out.sigma[idx] = (out.sigma[idx] + self.level // 2) % self.level
        else:
            out.sigma[idx] = -out.sigma[idx]
        return out


def element_array(group: FiniteAbelianGroup) -> np.ndarray:
    elems = group.elements()
    return np.array(elems, dtype=np.int64).reshape(len(elems), group.rank)


def multiplication_table(group: FiniteAbelianGroup) -> np.ndarray:
    E = element_array(group)
    orders = np.array(group.orders, dtype=np.int64)
    S = (E[:, None, :] + E[None, :, :]) % orders
    radix = np.ones(group.rank, dtype=np.int64)
    for i in range(group.rank - 2, -1, -1):
        radix[i] = radix[i + 1] * group.orders[i + 1]
    return (S * radix).sum(axis=-1)


def structure(p: CategoryPresentation) -> Structure:
    """Tabulate the closed-form alpha and sigma (no order-condition check)."""
    group, N = p.group, p.level
    E = element_array(group)
    g = len(E)
    orders = group.orders
    exps = p.exponents()
    if exps is not None:
        diag, off = exps
        alpha_t = np.zeros((g, g, g), dtype=np.int64)
        sigma_t = np.zeros((g, g), dtype=np.int64)
        for i, n in enumerate(orders):
            a_i = E[:, i]
            over = (a_i[:, None] + a_i[None, :]) >= n  # indexed by (b, c)
            alpha_t += (n * diag[i] * a_i)[:, None, None] * over[None, :, :]
            sigma_t += diag[i] * np.outer(a_i, a_i)
            for j in range(i + 1, len(orders)):
                t = off.get((j, i), 0)
                if t:
                    sigma_t += t * np.outer(a_i, E[:, j])
        return Structure(group, N, alpha_t % N, sigma_t % N, True)
    elems = group.elements()
    alpha_t = np.empty((g, g, g), dtype=object)
    sigma_t = np.empty((g, g), dtype=object)
    for x, a in enumerate(elems):
        for y, b in enumerate(elems):
            sigma_t[x, y] = sigma_pair_unchecked(p, a, b)
            for z, c in enumerate(elems):
                alpha_t[x, y, z] = alpha_unchecked(p, a, b, c)
    return Structure(group, N, alpha_t, sigma_t, False)
