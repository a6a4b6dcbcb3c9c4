"""Low-latency streaming erasure codes for two-hop relay channels.

Library layout:

* galois       -- finite fields, MDS generators, linear solving
* block_codes  -- systematic block codes with per-symbol deadlines
* streaming    -- diagonal interleaving into streaming codes
* relay        -- symbol-wise / message-wise decode-forward, forwarding
* erasures     -- erasure timelines: enumeration, bursts, sampling
* analysis     -- exact rate formulas, regions, loss bound
* harness      -- deterministic verification and Monte Carlo
* cli          -- `rsc` command-line front end
"""

from .analysis import (
    achievable_region,
    instantaneous_rate,
    loss_upper_bound,
    message_wise_rate,
    ptp_capacity,
    relay_capacity,
)
from .block_codes import (
    BlockCode,
    check_block_achievability,
    decode_block,
    encode_block,
    new_mds_block_code,
)
from .erasures import (
    ErasureTimeline,
    burst_pattern,
    enumerate_patterns,
    periodic_burst_pattern,
    periodic_pattern,
    sample_iid,
    sample_window_adversary,
    sliding_window_valid,
)
from .galois import (
    BinaryField,
    DEFAULT_FIELD,
    GeneratorMatrix,
    PrimeField,
    SingularMatrixError,
    field_of_order,
    make_mds_generator,
    solve_linear,
    verify_mds,
)
from .harness import (
    SimulationReport,
    VerificationReport,
    monte_carlo,
    periodic_separation_test,
    verify_deterministic,
    verify_pair,
    verify_sliding_window,
)
from .relay import (
    RelayScheme,
    RelaySession,
    build_instantaneous_forwarding,
    build_message_wise_df,
    build_symbol_wise_df,
    run_relay,
    transcript_csv,
)
from .streaming import (
    StreamingDecoder,
    StreamingEncoder,
    check_streaming_achievability,
)

__version__ = "1.0.0"
