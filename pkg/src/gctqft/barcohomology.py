"""Bar-construction cochains for finite abelian groups and classification of braided structures.

Cells of B_G in degree n are n-tuples of group elements.  Cochains take
values in the roots of unity of Z[zeta_N]; 4-cochains on the double bar
construction are pairs (alpha on G^3, sigma on G^2), 3-cochains are
functions mu on G^2.

Classification works in exponent space: a root of unity zeta_N^k is the
integer k mod N, the coherence identities become linear equations over
Z/N, and the classes are the finite group ker / im computed by Smith
normal form.  Only normalized cochains (value 1 whenever an argument is the
identity) are used; they compute the same cohomology.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .abelian import FiniteAbelianGroup, ModQuotient
from .exactring import CyclotomicRing, RingElement, common_level
from .groupcat.coherence import CheckResult, check_hexagons, check_pentagon
from .groupcat.presentation import (
    CategoryPresentation,
    Structure,
    enumerate_presentations,
    minimal_level,
    multiplication_table,
    structure,
)

DEFAULT_MAX_ENUM = 10**7


class EnumerationTooLarge(RuntimeError):
    pass


def max_enum() -> int:
    raw = os.environ.get("GCTQFT_MAX_ENUM")
    if raw is None:
        return DEFAULT_MAX_ENUM
    try:
        return int(float(raw))
    except ValueError as exc:
        raise ValueError(f"GCTQFT_MAX_ENUM must be an integer, got {raw!r}") from exc


# --- chains ---------------------------------------------------------------


def bar_boundary(group: FiniteAbelianGroup, t: Sequence[Sequence[int]]) -> Counter:
    """Alternating sum of faces of the cell t; face i multiplies entries i and i+1."""
    n = len(t)
    if n < 1:
        raise ValueError("bar cells of dimension 0 have no boundary")
    t = tuple(group.element(x) for x in t)
    out: Counter = Counter()
    out[t[1:]] += 1
    for i in range(1, n):
        face = t[: i - 1] + (group.op(t[i - 1], t[i]),) + t[i + 1 :]
        out[face] += (-1) ** i
    out[t[:-1]] += (-1) ** n
    return Counter({k: v for k, v in out.items() if v})


def boundary_of_chain(group: FiniteAbelianGroup, chain: Counter) -> Counter:
    out: Counter = Counter()
    for cell, coeff in chain.items():
        if len(cell) == 0:
            continue
        for face, c in bar_boundary(group, cell).items():
            out[face] += coeff * c
    return Counter({k: v for k, v in out.items() if v})


# --- cochains -------------------------------------------------------------


def _unit_table(group: FiniteAbelianGroup, arity: int, f: Callable) -> np.ndarray:
    g = group.order
    table = np.empty((g,) * arity, dtype=object)
    elems = group.elements()
    for idx in itertools.product(range(g), repeat=arity):
        table[idx] = f(*(elems[i] for i in idx))
    return table


@dataclass
class BarCochain3:
    """alpha on G^3 as an object array indexed by element enumeration order."""

    group: FiniteAbelianGroup
    level: int
    values: np.ndarray

    @classmethod
    def from_function(cls, group, level, f) -> "BarCochain3":
        return cls(group, level, _unit_table(group, 3, f))

    @classmethod
    def constant_one(cls, group, level) -> "BarCochain3":
        one = CyclotomicRing(level).one()
        return cls.from_function(group, level, lambda a, b, c: one)

    def __call__(self, a, b, c) -> RingElement:
        gi = self.group.index
        return self.values[gi(a), gi(b), gi(c)]


@dataclass
class B2Cochain3:
    group: FiniteAbelianGroup
    level: int
    mu: np.ndarray

    @classmethod
    def from_function(cls, group, level, f) -> "B2Cochain3":
        return cls(group, level, _unit_table(group, 2, f))

    @classmethod
    def random(cls, group, level, rng: np.random.Generator) -> "B2Cochain3":
        ring = CyclotomicRing(level)
        exps = rng.integers(0, level, size=(group.order,) * 2)
        mu = np.empty(exps.shape, dtype=object)
        for idx, e in np.ndenumerate(exps):
            mu[idx] = ring.zeta(int(e))
        return cls(group, level, mu)

    def __call__(self, a, b) -> RingElement:
        return self.mu[self.group.index(a), self.group.index(b)]


@dataclass
class B2Cochain4:
    group: FiniteAbelianGroup
    level: int
    alpha: np.ndarray
    sigma: np.ndarray

    @classmethod
    def from_presentation(cls, p: CategoryPresentation) -> "B2Cochain4":
        S = structure(p).to_elements()
        return cls(S.group, S.level, S.alpha, S.sigma)

    def as_structure(self) -> Structure:
        return Structure(self.group, self.level, self.alpha, self.sigma, False)

    def flip_sigma(self, a, b) -> "B2Cochain4":
        s = self.as_structure().flip_sigma(a, b)
        return B2Cochain4(self.group, self.level, s.alpha, s.sigma)

    def flip_alpha(self, a, b, c) -> "B2Cochain4":
        s = self.as_structure().flip_alpha(a, b, c)
        return B2Cochain4(self.group, self.level, s.alpha, s.sigma)


def _dummy_sigma(group: FiniteAbelianGroup, level: int) -> np.ndarray:
    one = CyclotomicRing(level).one()
    return _unit_table(group, 2, lambda a, b: one)


def _exponent_table(level: int, values: np.ndarray) -> np.ndarray | None:
    """Integer exponents of an array of N-th roots of unity, or None if some entry is not one."""
    ring = CyclotomicRing(level)
    out = np.empty(values.shape, dtype=np.int64)
    for idx, u in np.ndenumerate(values):
        e = ring.root_exponent(u)
        if e is None:
            return None
        out[idx] = e
    return out


def _as_structure(group, level, alpha: np.ndarray, sigma: np.ndarray) -> Structure:
    a, s = _exponent_table(level, alpha), _exponent_table(level, sigma)
    if a is None or s is None:
        return Structure(group, level, alpha, sigma, False)
    return Structure(group, level, a, s, True)


def is_3cocycle(alpha: BarCochain3) -> CheckResult:
    S = _as_structure(alpha.group, alpha.level, alpha.values, _dummy_sigma(alpha.group, alpha.level))
    r = check_pentagon(S)
    return CheckResult("3-cocycle", r.ok, r.witness)


def is_b2_4cocycle(c: B2Cochain4) -> CheckResult:
    S = _as_structure(c.group, c.level, c.alpha, c.sigma)
    for r in (check_pentagon(S), check_hexagons(S)):
        if not r:
            return r
    return CheckResult("4-cocycle", True)


def coboundary_of_2cochain(mu: B2Cochain3) -> BarCochain3:
    """(d mu)(a,b,c) = mu(b,c) mu(ab,c)^-1 mu(a,bc) mu(a,b)^-1."""
    group = mu.group
    g = group.order
    M = multiplication_table(group)
    m = mu.mu
    inv = np.vectorize(lambda u: u.unit_inverse(), otypes=[object])(m)
    out = np.empty((g, g, g), dtype=object)
    for a, b, c in itertools.product(range(g), repeat=3):
        out[a, b, c] = m[b, c] * inv[M[a, b], c] * m[a, M[b, c]] * inv[a, b]
    return BarCochain3(group, mu.level, out)


def b2_coboundary(mu: B2Cochain3) -> B2Cochain4:
    """alpha part as for B_G; sigma(a,b) = mu(a,b) mu(b,a)^-1."""
    alpha = coboundary_of_2cochain(mu).values
    m = mu.mu
    g = mu.group.order
    sigma = np.empty((g, g), dtype=object)
    for a, b in itertools.product(range(g), repeat=2):
        sigma[a, b] = m[a, b] * m[b, a].unit_inverse()
    return B2Cochain4(mu.group, mu.level, alpha, sigma)


def cochain_coboundary_exponents(group: FiniteAbelianGroup, f: dict, n: int, level: int) -> dict:
    """Generic coboundary of an n-cochain given as {n-tuple: exponent}; result on (n+1)-tuples."""
    out = {}
    for t in itertools.product(group.elements(), repeat=n + 1):
        out[t] = sum(c * f.get(face, 0) for face, c in bar_boundary(group, t).items()) % level
    return out


# --- classification -------------------------------------------------------


@dataclass
class ClassRecord:
    coordinates: tuple[int, ...]
    cochain: B2Cochain4
    presentation: CategoryPresentation

    def symmetric(self) -> bool:
        s = self.cochain.sigma
        return all(s[a, b] * s[b, a] == 1 for a in range(s.shape[0]) for b in range(s.shape[0]))


@dataclass
class Classification:
    group: FiniteAbelianGroup
    level: int
    mode: str
    invariants: tuple[int, ...]
    classes: list[ClassRecord]

    def __len__(self) -> int:
        return len(self.classes)


class _Layout:
    """Column indices of normalized alpha and sigma unknowns."""

    def __init__(self, group: FiniteAbelianGroup):
        self.group = group
        g = group.order
        self.g = g
        self.ident = group.index(group.identity())
        nz = [i for i in range(g) if i != self.ident]
        self.alpha_col = {}
        self.sigma_col = {}
        col = 0
        for t in itertools.product(nz, repeat=3):
            self.alpha_col[t] = col
            col += 1
        for t in itertools.product(nz, repeat=2):
            self.sigma_col[t] = col
            col += 1
        self.cols = col
        self.mu_col = {t: k for k, t in enumerate(itertools.product(nz, repeat=2))}

    def add(self, row: dict, family: dict, key, coeff: int) -> None:
        k = family.get(key)
        if k is not None:
            row[k] = row.get(k, 0) + coeff


def _equations(L: _Layout, M: np.ndarray) -> list[dict]:
    rows = []
    g = L.g
    A, S = L.alpha_col, L.sigma_col
    for a, b, c, d in itertools.product(range(g), repeat=4):
        row: dict = {}
        for key in ((b, c, d), (a, M[b, c], d), (a, b, c)):
            L.add(row, A, key, 1)
        for key in ((M[a, b], c, d), (a, b, M[c, d])):
            L.add(row, A, key, -1)
        rows.append(row)
    for a, b, c in itertools.product(range(g), repeat=3):
        row = {}
        L.add(row, A, (a, b, c), 1)
        L.add(row, A, (b, c, a), 1)
        L.add(row, S, (a, c), 1)
        L.add(row, S, (a, b), 1)
        L.add(row, A, (b, a, c), -1)
        L.add(row, S, (a, M[b, c]), -1)
        rows.append(row)
        row = {}
        L.add(row, A, (a, b, c), 1)
        L.add(row, A, (c, a, b), 1)
        L.add(row, S, (M[a, b], c), 1)
        L.add(row, A, (a, c, b), -1)
        L.add(row, S, (a, c), -1)
        L.add(row, S, (b, c), -1)
        rows.append(row)
    return [r for r in rows if any(r.values())]


def _coboundary_columns(L: _Layout, M: np.ndarray) -> list[list[int]]:
    cols = []
    for (x, y) in L.mu_col:
        v = [0] * L.cols
        # mu = indicator of (x, y); d mu on alpha and sigma cells
        for (a, b, c), k in L.alpha_col.items():
            e = 0
            e += (b, c) == (x, y)
            e -= (M[a, b], c) == (x, y)
            e += (a, M[b, c]) == (x, y)
            e -= (a, b) == (x, y)
            v[k] = e
        for (a, b), k in L.sigma_col.items():
            v[k] = ((a, b) == (x, y)) - ((b, a) == (x, y))
        cols.append(v)
    return cols


def _class_record(group, level, L: _Layout, exps: Sequence[int]) -> ClassRecord:
    ring = CyclotomicRing(level)
    g = group.order
    alpha = np.empty((g, g, g), dtype=object)
    sigma = np.empty((g, g), dtype=object)
    for idx in itertools.product(range(g), repeat=3):
        k = L.alpha_col.get(idx)
        alpha[idx] = ring.zeta(exps[k] if k is not None else 0)
    for idx in itertools.product(range(g), repeat=2):
        k = L.sigma_col.get(idx)
        sigma[idx] = ring.zeta(exps[k] if k is not None else 0)
    cochain = B2Cochain4(group, level, alpha, sigma)
    return ClassRecord((), cochain, presentation_of_cocycle(cochain))


def presentation_of_cocycle(c: B2Cochain4) -> CategoryPresentation:
    """Read off sigma_i = sigma(g_i, g_i) and sigma_{i,j} = sigma(g_i,g_j) sigma(g_j,g_i).

    Both are unchanged by coboundaries.  The presentation lives at the
    smallest level containing both the cochain's level and lcm(2 n_i).
    """
    group = c.group
    level = common_level(c.level, minimal_level(group.orders))
    ring = CyclotomicRing(level)
    step = level // c.level
    idx = [group.index(group.generator(i)) for i in range(group.rank)]

    def up(u: RingElement) -> RingElement:
        return ring.zeta(step * CyclotomicRing(c.level).root_exponent(u))

    diag = tuple(up(c.sigma[k, k]) for k in idx)
    off = {}
    for i in range(group.rank):
        for j in range(i):
            off[(i, j)] = up(c.sigma[idx[i], idx[j]] * c.sigma[idx[j], idx[i]])
    return CategoryPresentation(group, level, diag, off)


def full_mode_cost(group: FiniteAbelianGroup) -> int:
    """Rough operation count of the Smith normal form behind full classification."""
    g = group.order
    cols = (g - 1) ** 3 + (g - 1) ** 2
    rows = g**4 + 2 * g**3
    return rows * cols * cols


def _check_group(group) -> FiniteAbelianGroup:
    if not isinstance(group, FiniteAbelianGroup):
        group = FiniteAbelianGroup(tuple(group))
    return group


def _classify_full(group: FiniteAbelianGroup, level: int) -> Classification:
    cost = full_mode_cost(group)
    bound = max_enum()
    if cost > bound:
        raise EnumerationTooLarge(
            f"full classification for {group} needs about {cost:.2e} operations, "
            f"over the bound {bound:.0e} (set GCTQFT_MAX_ENUM or use presentation mode)"
        )
    L = _Layout(group)
    M = multiplication_table(group)
    if L.cols == 0:
        rec = _class_record(group, level, L, [])
        return Classification(group, level, "full", (), [rec])
    eqs = _equations(L, M)
    K = [[row.get(k, 0) for k in range(L.cols)] for row in eqs]
    B = _coboundary_columns(L, M)
    I = [[B[j][i] for j in range(len(B))] for i in range(L.cols)]
    H = ModQuotient(K, I, L.cols, level, r=len(K), s=len(B))
    classes = []
    for coords in itertools.product(*(range(f) for f in H.invariants)):
        rec = _class_record(group, level, L, H.lift(coords))
        rec.coordinates = coords
        classes.append(rec)
    return Classification(group, level, "full", H.invariants, classes)


def _classify_presentations(group: FiniteAbelianGroup, level: int) -> Classification:
    big = common_level(level, minimal_level(group.orders))
    step = big // level
    seen = {}
    for p in enumerate_presentations(group.orders, big):
        exps = p.exponents()
        diag, off = exps
        if any(e % step for e in diag) or any(e % step for e in off.values()):
            continue
        key = (tuple(diag), tuple(sorted(off.items())))
        if key in seen:
            continue
        # the cocycle itself is written at the presentation's level
        seen[key] = ClassRecord(key, B2Cochain4.from_presentation(p), p)
    classes = list(seen.values())
    return Classification(group, level, "presentation", (), classes)


def classify_braided(group, level: int, mode: str = "full") -> Classification:
    """One representative per equivalence class of braided structures with values in mu_N."""
    group = _check_group(group)
    if level < 1:
        raise ValueError("level must be positive")
    if mode == "full":
        return _classify_full(group, level)
    if mode == "presentation":
        return _classify_presentations(group, level)
    raise ValueError(f"unknown classification mode {mode!r}")


def classify_symmetric(group, level: int, mode: str = "full") -> Classification:
    """Braided classes whose braiding squares to the identity: sigma(a,b) sigma(b,a) = 1."""
    full = classify_braided(group, level, mode)
    classes = [c for c in full.classes if c.symmetric()]
    return Classification(full.group, full.level, full.mode, full.invariants, classes)


def class_coordinates(group, level: int, cochain: B2Cochain4) -> tuple[int, ...]:
    """Coordinates in the full-mode quotient of a normalized 4-cocycle with values in mu_N."""
    group = _check_group(group)
    L = _Layout(group)
    M = multiplication_table(group)
    eqs = _equations(L, M)
    K = [[row.get(k, 0) for k in range(L.cols)] for row in eqs]
    B = _coboundary_columns(L, M)
    I = [[B[j][i] for j in range(len(B))] for i in range(L.cols)]
    H = ModQuotient(K, I, L.cols, level, r=len(K), s=len(B))
    ring = CyclotomicRing(cochain.level)
    if cochain.level % level and level % cochain.level:
        raise ValueError("cochain level and classification level are incompatible")
    x = [0] * L.cols
    for idx, k in L.alpha_col.items():
        x[k] = _exp_at(ring, cochain.alpha[idx], level)
    for idx, k in L.sigma_col.items():
        x[k] = _exp_at(ring, cochain.sigma[idx], level)
    return H.coordinates(x)


def _exp_at(ring: CyclotomicRing, u: RingElement, level: int) -> int:
    e = ring.root_exponent(u)
    if e is None:
        raise ValueError(f"{u} is not a root of unity")
    # zeta_M^e as a power of zeta_level
    num = e * level
    if num % ring.level:
        raise ValueError(f"{u} is not a {level}-th root of unity")
    return num // ring.level
