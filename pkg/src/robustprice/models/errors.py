"""Exception hierarchy for robustprice."""

from __future__ import annotations

from fractions import Fraction


class RobustPriceError(Exception):
    """Base class for every error raised by the library."""


class ValidationError(RobustPriceError):
    """Input violates a domain invariant."""


class ProbSumMismatch(ValidationError):
    """Probabilities of a marginal do not sum to exactly 1."""

    def __init__(self, total: Fraction) -> None:
        super().__init__(f"probabilities sum to {total}, expected 1")
        self.total = total


class NegativeValue(ValidationError):
    """A support value is negative."""

    def __init__(self, value: Fraction) -> None:
        super().__init__(f"negative value {value}")
        self.value = value


class NegativeProb(ValidationError):
    """A probability is negative."""

    def __init__(self, prob: Fraction) -> None:
        super().__init__(f"negative probability {prob}")
        self.prob = prob


class NegativePrice(ValidationError):
    """A finite price is negative."""

    def __init__(self, item: int, price: Fraction) -> None:
        super().__init__(f"item {item} has negative price {price}")
        self.item = item
        self.price = price


class EmptyInstance(ValidationError):
    """An instance needs at least one item."""

    def __init__(self) -> None:
        super().__init__("instance has no items")


class DuplicateItemName(ValidationError):
    def __init__(self, name: str) -> None:
        super().__init__(f"duplicate item name {name!r}")
        self.name = name


class PricingMismatch(ValidationError):
    """Pricing length differs from the instance item count."""

    def __init__(self, expected: int, got: int) -> None:
        super().__init__(f"pricing has {got} entries, instance has {expected} items")
        self.expected = expected
        self.got = got


class QOutOfRange(RobustPriceError, ValueError):
    """A quantile lies outside its admissible range."""

    def __init__(self, q: object, bounds: str = "[0, 1]") -> None:
        super().__init__(f"quantile {q} outside {bounds}")
        self.q = q


class IncompatibleCoupling(RobustPriceError):
    """Coupling masses do not reproduce the marginals."""


class RootNotFound(RobustPriceError):
    """No chain is rooted at the requested utility."""


class BudgetExceeded(RobustPriceError):
    """Enumeration would exceed its configured budget."""

    def __init__(self, required: int, limit: int, what: str = "couplings") -> None:
        super().__init__(f"{what}: {required} required, budget is {limit}")
        self.required = required
        self.limit = limit


class DTooLarge(BudgetExceeded):
    """Common denominator of the probabilities is above the oracle cap."""

    def __init__(self, d: int, cap: int) -> None:
        super().__init__(d, cap, what="multiset size d")


class NotPerfectSquare(RobustPriceError):
    def __init__(self, n: int) -> None:
        super().__init__(f"vertex count {n} is not a perfect square")
        self.n = n


class InvalidRange(RobustPriceError):
    """Bad interval or grid size for a discretizer."""


class InvalidParams(RobustPriceError):
    """Bad distribution parameters for a discretizer."""


class ParseError(RobustPriceError):
    """Input file could not be decoded."""

    def __init__(self, message: str, location: str = "") -> None:
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
