"""Tour of the exact rate formulas.

Prints the end-to-end capacity of the two-hop relay channel, the best
message-wise decode-forward rate with its delay split, and the
instantaneous-forwarding rate, then reproduces the achievable-region
counts at delay 11 and rate threshold 2/3.
"""

from fractions import Fraction

from rsc import (
    achievable_region,
    instantaneous_rate,
    message_wise_rate,
    relay_capacity,
)

print("rates for selected (T, N1, N2):")
for T, n1, n2 in [(3, 1, 1), (5, 2, 1), (11, 3, 3), (11, 2, 2), (2, 1, 1)]:
    c = relay_capacity(T, n1, n2)
    rmsg, t1, t2 = message_wise_rate(T, n1, n2)
    cif = instantaneous_rate(T, n1, n2)
    print(f"  T={T:>2} N1={n1} N2={n2}:  C={str(c):>5}  "
          f"Rmsg={str(rmsg):>5} at ({t1},{t2})  Cif={str(cif):>5}")

print()
print("message-wise decode-forward gives up rate exactly when the delay")
print("budget has slack beyond N1+N2 (equal budgets):")
for T in range(2, 8):
    c = relay_capacity(T, 1, 1)
    r = message_wise_rate(T, 1, 1)[0]
    marker = "  <- strict gap" if r < c else ""
    print(f"  T={T}: symbol-wise {str(c):>5}, message-wise {str(r):>5}{marker}")

print()
print("achievable (N1, N2) pairs at T=11 with rate >= 2/3:")
for kind in ("symbol", "message", "if"):
    region = achievable_region(11, Fraction(2, 3), kind)
    print(f"  {kind:>7}: {len(region):>2} pairs, max N1+N2 = "
          f"{max(a + b for a, b in region)}")
