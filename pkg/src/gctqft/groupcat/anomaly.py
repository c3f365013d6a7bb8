"""Gauss sums of the twist and the normalization they force on 4-dimensional theories."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from ..exactring import RingElement
from .presentation import CategoryPresentation, _require_valid, sigma_pair_unchecked


def gauss_sums(p: CategoryPresentation) -> tuple[RingElement, RingElement]:
    """(sum of sigma(g,g), sum of sigma(g,g)^-1) over the group."""
    _require_valid(p)
    tau = p.ring.zero()
    tau_bar = p.ring.zero()
    for g in p.group.elements():
        s = sigma_pair_unchecked(p, g, g)
        tau = tau + s
        tau_bar = tau_bar + s.unit_inverse()
    return tau, tau_bar


def admissible_order(n: int, ell: int) -> bool:
    if n < 1 or ell < 1:
        return False
    if n % 2:
        return n % ell == 0
    return (2 * n) % ell == 0


def anomaly_product_closed_form(n: int, ell: int) -> int:
    """tau * tau_bar for a cyclic group of order n whose generator twist has order ell."""
    if not admissible_order(n, ell):
        raise ValueError(f"order {ell} is not admissible for a cyclic group of order {n}")
    if ell % 2:
        return n * n // ell
    if ell % 4 == 0:
        return 2 * n * n // ell
    return 0


def as_integer(x: RingElement) -> int | None:
    if any(x.coeffs[1:]):
        return None
    return x.coeffs[0]


@dataclass
class NormalizabilityReport:
    tau: RingElement
    tau_bar: RingElement
    product: RingElement
    normalizable: bool
    extension: str | None
    anomalous: bool | None

    def verdict(self) -> str:
        if not self.normalizable:
            return "NOT normalizable: tau * tau_bar = 0, no extended 3-manifold theory"
        kind = "anomalous (tau != tau_bar)" if self.anomalous else "anomaly-free"
        return f"normalizable over {self.extension}, {kind}"

    def to_json(self) -> dict:
        from ..exactring import to_json

        return {
            "tau": to_json(self.tau),
            "tau_bar": to_json(self.tau_bar),
            "product": to_json(self.product),
            "normalizable": self.normalizable,
            "extension": self.extension,
            "anomalous": self.anomalous,
            "verdict": self.verdict(),
        }


def _extension(product: RingElement) -> str:
    m = as_integer(product)
    if m is None or m < 0:
        return f"R[1/sqrt({product})]"
    r = isqrt(m)
    if r * r != m:
        return f"R[1/√{m}]"
    return "R" if r == 1 else f"R[1/{r}]"


def normalizability_report(p: CategoryPresentation) -> NormalizabilityReport:
    """Whether r with r^2 tau tau_bar = 1 can exist, and what must be adjoined for it.

    Membership of the square root in Z[zeta_N] is not decided; the extension
    is stated symbolically.
    """
    tau, tau_bar = gauss_sums(p)
    product = tau * tau_bar
    if product.is_zero():
        return NormalizabilityReport(tau, tau_bar, product, False, None, None)
    return NormalizabilityReport(tau, tau_bar, product, True, _extension(product), tau != tau_bar)
