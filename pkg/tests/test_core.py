"""Tests for robustprice.core."""

from fractions import Fraction
from itertools import permutations

import pytest

from robustprice.constants import NULL_ITEM_NAME
from robustprice.core import (
    Candidate,
    augment_with_null,
    cdf,
    dominates,
    processing_order,
    purchase_order,
    quantile,
    survival,
    to_price,
    to_rational,
    validate_marginal,
)
from robustprice.core.rational import format_price, format_rational
from robustprice.models import (
    NOT_OFFERED,
    Instance,
    Marginal,
    NegativeProb,
    NegativeValue,
    Pricing,
    PricingMismatch,
    ProbSumMismatch,
    QOutOfRange,
    TieBreakRule,
)

F = Fraction
HPF = TieBreakRule.HIGHER_PRICE_FIRST
LPF = TieBreakRule.LOWER_PRICE_FIRST


def uniform(*values):
    return Marginal.of([(v, F(1, len(values))) for v in values])


class TestValidateMarginal:
    """Test cases for marginal validation."""

    def test_valid_marginal(self):
        """Test that a canonical marginal passes unchanged."""
        m = validate_marginal(Marginal(((F(1), F(1, 2)), (F(2), F(1, 2)))))
        assert m.support == ((1, F(1, 2)), (2, F(1, 2)))

    def test_sum_mismatch(self):
        """Test that 1/2 + 1/3 is rejected with the total attached."""
        with pytest.raises(ProbSumMismatch) as info:
            Marginal.of([(1, F(1, 2)), (2, F(1, 3))])
        assert info.value.total == F(5, 6)

    def test_duplicates_merge(self):
        """Test that duplicate values are merged before the sum check."""
        m = Marginal.of([(2, F(1, 4)), (2, F(1, 4)), (3, F(1, 2))])
        assert m.support == ((2, F(1, 2)), (3, F(1, 2)))

    def test_zero_mass_dropped_and_sorted(self):
        """Test that zero-probability entries vanish and values get sorted."""
        m = Marginal.of([(5, F(1, 2)), (9, 0), (1, F(1, 2))])
        assert m.values == (1, 5)

    def test_negative_value(self):
        """Test that negative values are rejected."""
        with pytest.raises(NegativeValue):
            Marginal.of([(-1, 1)])

    def test_negative_prob(self):
        """Test that negative probabilities are rejected."""
        with pytest.raises(NegativeProb):
            Marginal.of([(1, F(3, 2)), (2, F(-1, 2))])

    def test_decimal_strings_are_exact(self):
        """Test that decimal inputs become exact rationals."""
        m = Marginal.of([("0.1", "0.3"), ("1/3", "0.7")])
        assert m.values == (F(1, 10), F(1, 3))
        assert m.probs == (F(3, 10), F(7, 10))


class TestQuantileAndCdf:
    """Test cases for quantile, cdf and survival."""

    def test_quantile_median(self):
        """Test the median of uniform {1,2,3,4}."""
        assert quantile(uniform(1, 2, 3, 4), F(1, 2)) == 2

    def test_quantile_top(self):
        """Test that q = 1 returns the top value."""
        assert quantile(uniform(1, 2, 3, 4), 1) == 4

    def test_quantile_zero(self):
        """Test that q = 0 returns the smallest value."""
        assert quantile(uniform(1, 2, 3, 4), 0) == 1

    def test_quantile_uneven(self):
        """Test min v with F(v) >= q on an uneven marginal."""
        assert quantile(Marginal.of([(1, F(1, 3)), (5, F(2, 3))]), F(1, 2)) == 5

    def test_quantile_out_of_range(self):
        """Test that q outside [0, 1] raises."""
        with pytest.raises(QOutOfRange):
            quantile(uniform(1, 2), F(3, 2))
        with pytest.raises(ValueError):
            quantile(uniform(1, 2), -1)

    def test_cdf(self):
        """Test cdf at, below and between support values."""
        m = uniform(1, 2, 3, 4)
        assert cdf(m, 2) == F(1, 2)
        assert cdf(m, 0) == 0
        assert cdf(Marginal.of([(1, F(1, 3)), (5, F(2, 3))]), 3) == F(1, 3)

    def test_survival(self):
        """Test Pr[value >= x]."""
        assert survival(uniform(1, 2, 3, 4), 3) == F(1, 2)

    def test_quantile_cdf_consistency(self):
        """Test cdf(quantile(q)) >= q and quantile(cdf(v)) <= v."""
        m = Marginal.of([(0, F(1, 6)), (2, F(1, 3)), (7, F(1, 4)), (9, F(1, 4))])
        for k in range(13):
            q = F(k, 12)
            assert cdf(m, quantile(m, q)) >= q
        for v in m.values:
            assert quantile(m, cdf(m, v)) <= v


class TestRational:
    """Test cases for rational parsing and formatting."""

    def test_to_rational_variants(self):
        """Test ints, strings, floats and Fractions."""
        assert to_rational(3) == 3
        assert to_rational("2/6") == F(1, 3)
        assert to_rational(0.1) == F(1, 10)
        assert to_rational(F(5, 2)) == F(5, 2)

    def test_to_rational_rejects_bool(self):
        """Test that booleans are not silently read as 0/1."""
        with pytest.raises(TypeError):
            to_rational(True)

    def test_to_price_infinity(self):
        """Test every spelling of an infinite price."""
        for raw in ("inf", "INF", "infinity", None, float("inf"), NOT_OFFERED):
            assert to_price(raw) is NOT_OFFERED
        assert to_price("3/2") == F(3, 2)

    def test_formatting(self):
        """Test num/den formatting and the inf token."""
        assert format_rational(F(3, 2)) == "3/2"
        assert format_rational(F(4)) == "4"
        assert format_price(NOT_OFFERED) == "inf"


class TestAugmentWithNull:
    """Test cases for the working instance."""

    def test_both_offered(self, two_item):
        """Test that two offered items plus null make three."""
        work = augment_with_null(two_item, Pricing.of([1, 2]))
        assert len(work) == 3
        assert work.items[-1].name == NULL_ITEM_NAME
        assert work.items[-1].price == 0
        assert work.origin == (0, 1, 2)

    def test_not_offered_removed(self, two_item):
        """Test that a NotOffered item leaves the working copy."""
        work = augment_with_null(two_item, Pricing.of([1, "inf"]))
        assert work.origin == (0, 2)
        assert work.pricing.prices == (1, 0)

    def test_nothing_offered(self, two_item):
        """Test that only the null item remains."""
        work = augment_with_null(two_item, Pricing.none(2))
        assert len(work) == 1
        assert work.instance[0].marginal.support == ((0, 1),)

    def test_length_mismatch(self, two_item):
        """Test that a short pricing raises."""
        with pytest.raises(PricingMismatch):
            augment_with_null(two_item, Pricing.of([1]))


class TestDominates:
    """Test cases for the buyer's choice order."""

    def test_strict_utility(self):
        """Test that a higher utility wins under either rule."""
        a, b = Candidate(1, F(2), F(1)), Candidate(2, F(0), F(2))
        assert dominates(a, b, HPF)
        assert dominates(a, b, LPF)

    def test_tie_to_higher_price(self):
        """Test that HigherPriceFirst breaks a tie toward the dearer item."""
        a, b = Candidate(2, F(0), F(2)), Candidate(1, F(0), F(1))
        assert dominates(a, b, HPF)
        assert not dominates(a, b, LPF)

    def test_null_loses_at_zero_under_hpf(self):
        """Test that a real item beats the null item at utility 0."""
        null, real = Candidate(5, F(0), F(0)), Candidate(1, F(0), F(1))
        assert not dominates(null, real, HPF)
        assert dominates(null, real, LPF)

    def test_equal_price_tie_to_lower_index(self):
        """Test that equal prices fall back to the lower index."""
        a, b = Candidate(0, F(1), F(3)), Candidate(1, F(1), F(3))
        assert dominates(a, b, HPF)
        assert dominates(a, b, LPF)

    def test_strict_total_order(self):
        """Test antisymmetry and transitivity on a small exhaustive set."""
        cands = [
            Candidate(i, F(u), F(p)) for i, (u, p) in enumerate(
                [(0, 0), (0, 1), (1, 1), (0, 2), (1, 0), (1, 2)]
            )
        ]
        for rule in TieBreakRule:
            for a, b in permutations(cands, 2):
                assert dominates(a, b, rule) != dominates(b, a, rule)
            for a, b, c in permutations(cands, 3):
                if dominates(a, b, rule) and dominates(b, c, rule):
                    assert dominates(a, c, rule)

    def test_rules_agree_on_strict_utilities(self):
        """Test that the rules only differ on equal utilities."""
        a, b = Candidate(0, F(3), F(9)), Candidate(1, F(2), F(0))
        assert dominates(a, b, HPF) == dominates(a, b, LPF)


class TestPurchaseOrder:
    """Test cases for the processing order."""

    def test_null_first_then_price(self, two_item):
        """Test null first, then ascending price."""
        assert purchase_order(two_item, Pricing.of([2, 1]), HPF) == (2, 1, 0)

    def test_equal_prices_disfavored_first(self):
        """Test that the item losing the tie is processed first."""
        inst = Instance.from_marginals([uniform(1, 2)] * 3)
        p = Pricing.of([1, 1, "inf"])
        assert purchase_order(inst, p, HPF) == (3, 1, 0)
        assert purchase_order(inst, p, LPF) == (3, 1, 0)

    def test_null_before_free_item(self):
        """Test that the null item precedes an item priced 0."""
        inst = Instance.from_marginals([uniform(1, 2)])
        assert purchase_order(inst, Pricing.of([0]), LPF) == (1, 0)

    def test_processing_positions(self, two_item):
        """Test that positions index the working instance."""
        work = augment_with_null(two_item, Pricing.of([2, 1]))
        assert processing_order(work, HPF) == (2, 1, 0)
