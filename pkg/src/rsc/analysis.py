"""Exact rate formulas, optimal splits, achievable regions, loss bound.

All rates are exact fractions.Fraction values; floating point appears
only in the loss-probability bound.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, fsum

SCHEME_KINDS = ("symbol", "message", "if")


def ptp_capacity(T: int, N: int) -> Fraction:
    """Max rate of a delay-T point-to-point stream correcting N erasures:
    (T-N+1)/(T+1) when T >= N, else 0."""
    if T < 0 or N < 0:
        raise ValueError("T and N must be non-negative")
    if T < N:
        return Fraction(0)
    return Fraction(T - N + 1, T + 1)


def relay_capacity(T: int, N1: int, N2: int) -> Fraction:
    """Max end-to-end rate of the two-hop relay with delay T:
    min of the per-hop capacities at delays T-N2 and T-N1."""
    if T < 0 or N1 < 0 or N2 < 0:
        raise ValueError("T, N1, N2 must be non-negative")
    if T < N1 + N2:
        return Fraction(0)
    return min(ptp_capacity(T - N2, N1), ptp_capacity(T - N1, N2))


def message_wise_rate(T: int, N1: int, N2: int) -> tuple[Fraction, int, int]:
    """Best rate over all per-hop delay splits T1 + T2 <= T.

    Returns (rate, T1, T2) for the lexicographically smallest (T1, T2)
    attaining the maximum; smaller delays give tighter per-hop codes
    that correct strictly more patterns at the same rate.
    """
    if T < 0 or N1 < 0 or N2 < 0:
        raise ValueError("T, N1, N2 must be non-negative")
    best = (Fraction(0), 0, 0)
    for t1 in range(T + 1):
        c1 = ptp_capacity(t1, N1)
        if c1 <= best[0]:
            continue  # rate cannot exceed c1 for this or a larger tie
        for t2 in range(T - t1 + 1):
            rate = min(c1, ptp_capacity(t2, N2))
            if rate > best[0]:
                best = (rate, t1, t2)
    return best


def instantaneous_rate(T: int, N1: int, N2: int) -> Fraction:
    """Rate of instantaneous forwarding: one point-to-point code over the
    composed channel that erases when either hop erases."""
    return ptp_capacity(T, N1 + N2)


def scheme_rate(kind: str, T: int, N1: int, N2: int) -> Fraction:
    if kind == "symbol":
        return relay_capacity(T, N1, N2)
    if kind == "message":
        return message_wise_rate(T, N1, N2)[0]
    if kind == "if":
        return instantaneous_rate(T, N1, N2)
    raise ValueError(f"unknown scheme kind {kind!r}; expected one of {SCHEME_KINDS}")


def achievable_region(T: int, threshold: Fraction, kind: str) -> list[tuple[int, int]]:
    """All pairs (N1, N2), zero components included, whose scheme rate
    meets the threshold.  Sorted for stable CSV output."""
    threshold = Fraction(threshold)
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    region = [
        (n1, n2)
        for n1 in range(T + 1)
        for n2 in range(T + 1)
        if scheme_rate(kind, T, n1, n2) >= threshold
    ]
    return sorted(region)


def _binomial_tail(count_above: int, trials: int, p: float) -> float:
    """P(Binomial(trials, p) > count_above) by direct summation."""
    return fsum(
        comb(trials, j) * p ** j * (1.0 - p) ** (trials - j)
        for j in range(count_above + 1, trials + 1)
    )


def loss_upper_bound(T: int, N1: int, N2: int, alpha: float, beta: float) -> float:
    """Analytic bound on the symbol-wise scheme's message loss probability
    under i.i.d. erasures with per-hop probabilities alpha and beta.

    A message survives when its k first-hop diagonals (jointly spanning
    2T-N1-2N2+1 slots) see at most N1 erasures and its single second-hop
    diagonal (T-N1+1 slots) sees at most N2.  The union bound over the
    two binomial tail events decays as alpha^(N1+1) + beta^(N2+1); the
    sum is clamped to 1 for reporting.
    """
    if not (0.0 <= alpha <= 1.0 and 0.0 <= beta <= 1.0):
        raise ValueError("alpha and beta must be probabilities in [0, 1]")
    if T < N1 + N2:
        raise ValueError("need T >= N1 + N2")
    first = _binomial_tail(N1, 2 * T - N1 - 2 * N2 + 1, alpha)
    second = _binomial_tail(N2, T - N1 + 1, beta)
    return min(1.0, first + second)


def region_csv(T: int, threshold: Fraction, kind: str) -> str:
    """CSV document `n1,n2,rate_num,rate_den` for the achievable region."""
    lines = ["n1,n2,rate_num,rate_den"]
    for n1, n2 in achievable_region(T, threshold, kind):
        rate = scheme_rate(kind, T, n1, n2)
        lines.append(f"{n1},{n2},{rate.numerator},{rate.denominator}")
    return "\n".join(lines) + "\n"
