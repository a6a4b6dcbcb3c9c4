from fractions import Fraction

import pytest

from rsc.analysis import (
    achievable_region,
    instantaneous_rate,
    loss_upper_bound,
    message_wise_rate,
    ptp_capacity,
    region_csv,
    relay_capacity,
)


# ---------------------------------------------------------------------------
# Point-to-point and relay capacity
# ---------------------------------------------------------------------------

def test_ptp_capacity_values():
    assert ptp_capacity(3, 1) == Fraction(3, 4)
    assert ptp_capacity(5, 2) == Fraction(2, 3)
    assert ptp_capacity(1, 2) == 0
    assert ptp_capacity(0, 0) == 1


def test_relay_capacity_values():
    assert relay_capacity(3, 1, 1) == Fraction(2, 3)
    assert relay_capacity(11, 3, 3) == Fraction(2, 3)
    assert relay_capacity(4, 2, 3) == 0


def test_relay_capacity_closed_form():
    for T in range(0, 15):
        for n1 in range(0, 6):
            for n2 in range(0, 6):
                got = relay_capacity(T, n1, n2)
                if T < n1 + n2:
                    assert got == 0
                else:
                    assert got == Fraction(T - n1 - n2 + 1, T - min(n1, n2) + 1)


def test_relay_capacity_symmetric():
    for T in range(0, 13):
        for n1 in range(0, 5):
            for n2 in range(0, 5):
                assert relay_capacity(T, n1, n2) == relay_capacity(T, n2, n1)


# ---------------------------------------------------------------------------
# Message-wise rate and split search
# ---------------------------------------------------------------------------

def test_message_wise_rate_values():
    rate, t1, t2 = message_wise_rate(3, 1, 1)
    assert rate == Fraction(1, 2)
    # several splits tie at 1/2; the search prefers the smallest delays,
    # whose hop codes correct the most patterns
    assert (t1, t2) == (1, 1)
    rate, t1, t2 = message_wise_rate(11, 2, 2)
    assert rate == Fraction(2, 3)
    assert (t1, t2) == (5, 5)


def test_message_wise_split_is_valid_and_optimal():
    for T in range(0, 13):
        for n1 in range(0, 4):
            for n2 in range(0, 4):
                rate, t1, t2 = message_wise_rate(T, n1, n2)
                assert t1 + t2 <= T
                assert rate == min(ptp_capacity(t1, n1), ptp_capacity(t2, n2))
                brute = max(
                    (min(ptp_capacity(a, n1), ptp_capacity(T - a - b, n2))
                     for a in range(T + 1) for b in range(T - a + 1)),
                    default=Fraction(0),
                )
                assert rate == brute


def test_message_wise_equals_relay_capacity_at_tight_delay():
    for n1 in range(0, 4):
        for n2 in range(0, 4):
            T = n1 + n2
            assert message_wise_rate(T, n1, n2)[0] == relay_capacity(T, n1, n2)


def test_suboptimal_iff_slack_delay_symmetric_budgets():
    # strict gap exactly when T > 2N for equal per-hop budgets N >= 1
    for T in range(0, 21):
        for n in range(1, 6):
            if 2 * n > T:
                continue
            gap = message_wise_rate(T, n, n)[0] < relay_capacity(T, n, n)
            assert gap == (T > 2 * n)


def test_asymmetric_budgets_can_close_the_gap_despite_slack():
    # The strict-gap-iff-slack rule breaks for unequal budgets: the
    # coarse grid of point-to-point rates can line up exactly.  At
    # (4,1,2) the split (1,3) gives min{1/2, 2/4} = 1/2, the capacity.
    for T, n1, n2 in [(4, 1, 2), (4, 2, 1), (5, 1, 3), (6, 3, 1), (7, 2, 4)]:
        assert T > n1 + n2
        assert message_wise_rate(T, n1, n2)[0] == relay_capacity(T, n1, n2)


def test_boundary_zero_budget_hops_close_the_gap():
    # with N1 = 0 the split (0, T) matches the relay capacity even for
    # T > N1 + N2, so the strict-gap claim needs both budgets positive
    assert message_wise_rate(5, 0, 2)[0] == relay_capacity(5, 0, 2)
    assert message_wise_rate(7, 3, 0)[0] == relay_capacity(7, 3, 0)


def test_message_wise_never_exceeds_relay_capacity():
    for T in range(0, 21):
        for n1 in range(0, 4):
            for n2 in range(0, 4):
                assert message_wise_rate(T, n1, n2)[0] <= relay_capacity(T, n1, n2)


# ---------------------------------------------------------------------------
# Instantaneous forwarding
# ---------------------------------------------------------------------------

def test_instantaneous_rate_values():
    assert instantaneous_rate(11, 2, 2) == Fraction(2, 3)
    assert instantaneous_rate(3, 1, 1) == Fraction(1, 2)  # composed budget 2
    assert instantaneous_rate(2, 1, 1) == Fraction(1, 3)


# ---------------------------------------------------------------------------
# Achievable regions
# ---------------------------------------------------------------------------

def test_region_counts_at_delay_11():
    two_thirds = Fraction(2, 3)
    assert len(achievable_region(11, two_thirds, "symbol")) == 18
    assert len(achievable_region(11, two_thirds, "message")) == 15
    region_if = achievable_region(11, two_thirds, "if")
    assert len(region_if) == 15
    assert set(region_if) == {(a, b) for a in range(5) for b in range(5) if a + b <= 4}


def test_region_includes_zero_components():
    region = achievable_region(11, Fraction(2, 3), "symbol")
    assert (0, 4) in region and (4, 0) in region


def test_region_message_subset_of_symbol():
    for threshold in (Fraction(1, 2), Fraction(2, 3), Fraction(3, 4)):
        for T in (5, 8, 11):
            msg = set(achievable_region(T, threshold, "message"))
            sym = set(achievable_region(T, threshold, "symbol"))
            assert msg <= sym


def test_region_empty_above_rate_one():
    assert achievable_region(11, Fraction(3, 2), "symbol") == []


def test_region_rejects_nonpositive_threshold():
    with pytest.raises(ValueError):
        achievable_region(5, Fraction(0), "symbol")


def test_region_csv_shape():
    text = region_csv(11, Fraction(2, 3), "if")
    lines = text.strip().splitlines()
    assert lines[0] == "n1,n2,rate_num,rate_den"
    assert len(lines) == 16
    assert lines[1] == "0,0,1,1"  # (0,0) forwards at rate 12/12


# ---------------------------------------------------------------------------
# Loss-probability bound
# ---------------------------------------------------------------------------

def test_bound_zero_at_zero_probabilities():
    assert loss_upper_bound(11, 3, 3, 0.0, 0.0) == 0.0


def test_bound_clamps_at_certain_erasure():
    assert loss_upper_bound(11, 3, 3, 1.0, 1.0) == 1.0


def test_bound_pinned_value():
    # independently computed by exact rational binomial-tail summation:
    # sum_{l=4}^{14} C(14,l) (1/10)^l (9/10)^{14-l}
    #   + sum_{l=4}^{9} C(9,l) (1/10)^l (9/10)^{9-l}
    # = 2623200915493 / 50000000000000
    assert loss_upper_bound(11, 3, 3, 0.1, 0.1) == pytest.approx(0.05246401830986, rel=1e-12)


def test_bound_monotone_in_both_probabilities():
    grid = [0.0, 0.05, 0.1, 0.2, 0.4]
    for i in range(len(grid) - 1):
        for b in grid:
            assert loss_upper_bound(9, 2, 2, grid[i], b) <= loss_upper_bound(9, 2, 2, grid[i + 1], b)
            assert loss_upper_bound(9, 2, 2, b, grid[i]) <= loss_upper_bound(9, 2, 2, b, grid[i + 1])


def test_bound_rejects_bad_inputs():
    with pytest.raises(ValueError):
        loss_upper_bound(11, 3, 3, 1.5, 0.0)
    with pytest.raises(ValueError):
        loss_upper_bound(3, 2, 2, 0.1, 0.1)
