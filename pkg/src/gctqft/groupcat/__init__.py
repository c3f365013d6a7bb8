"""Braided group-categories given by numerical presentations."""

from .anomaly import (
    NormalizabilityReport,
    admissible_order,
    anomaly_product_closed_form,
    gauss_sums,
    normalizability_report,
)
from .coherence import (
    CheckResult,
    check_all,
    check_balance,
    check_hexagon_first,
    check_hexagon_second,
    check_hexagons,
    check_pentagon,
)
from .presentation import (
    CategoryPresentation,
    InvalidPresentation,
    OrderReport,
    Structure,
    alpha,
    check_order_conditions,
    enumerate_presentations,
    from_exponents,
    is_symmetric,
    minimal_level,
    multiplication_table,
    sigma_pair,
    structure,
    twist,
)
from .words import all_reductions, letters, reduce_word

__all__ = [name for name in dir() if not name.startswith("_")]
