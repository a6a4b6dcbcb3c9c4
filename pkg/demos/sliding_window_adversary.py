"""Adversarial sliding-window testing.

The bounded-count erasure model and the sliding-window model (at most
N erasures per hop in any T+1 consecutive slots) admit the same rates:
the construction only ever needs per-hop windows of n and m slots,
which the T+1 budget implies.  This demo hammers a scheme with window-
packed adversarial timelines and with the worst-case periodic pattern.
"""

from rsc import (
    ErasureTimeline,
    build_symbol_wise_df,
    periodic_burst_pattern,
    sample_window_adversary,
    verify_sliding_window,
)
from rsc.harness import verify_pair

scheme = build_symbol_wise_df(5, 2, 1)
print(f"scheme {scheme.scheme_id}: n={scheme.n}, m={scheme.m}")

report = verify_sliding_window(scheme, horizon=44, trials=2000, seed=1)
print(f"window-budget adversary, {report.patterns_tested} trials: "
      f"{'PASS' if report.passed else 'FAIL'}")

sample = sample_window_adversary(window=6, N=2, horizon=44, seed=3)
print("one sampled hop-1 timeline:", sample.to_string())

# worst-case periodic pattern on the first hop: a clear run of k slots
# then an N1-burst, repeating every n slots; its clear fraction equals
# the first hop's operating rate and it is still corrected
pattern = periodic_burst_pattern(scheme.n, scheme.N1, 10 * scheme.n)
losses = verify_pair(scheme, pattern, ErasureTimeline.clear(pattern.horizon))
print("periodic worst case:", pattern.to_string()[:20], "...",
      "losses:", losses or "none")
