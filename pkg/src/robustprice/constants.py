"""Constants and defaults for robustprice."""

from __future__ import annotations

from fractions import Fraction

# Oracle limits
DEFAULT_D_CAP: int = 12
DEFAULT_COUPLING_BUDGET: int = 10**7

# Number of pricings search_maxmin may evaluate
DEFAULT_SEARCH_BUDGET: int = 200_000

# Irrational grid points are rounded down to this denominator
DEFAULT_PRECISION: int = 10**6

# Working precision (decimal digits) for mpmath evaluations
MP_DPS: int = 40

# Floats in reports are advisory only
FLOAT_DIGITS: int = 4

NULL_ITEM_NAME: str = "<no purchase>"
NOT_OFFERED_TOKEN: str = "inf"

HALF: Fraction = Fraction(1, 2)

# Labels carried by PricingReport
ROBUST_LABEL: str = "robust"
SEARCH_LABEL: str = "best-on-grid"

LOG_PREFIX: str = "[robustprice]"
