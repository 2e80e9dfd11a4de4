"""Reachability toolkit for planar vector addition systems with states
and linear path schemes: exact cone geometry, certified path-shortening
operations, scheme splitting, complete simple-scheme decisions, and a
capped general decider, with seeded property fuzzing throughout.
"""

from .core import (
    Configuration,
    Lps,
    PlaneVector,
    Run,
    SchemePath,
    Slps,
    Vass,
    Word,
    ZERO,
    effect,
    instantiate,
    path_length,
    run,
    slps_of,
    word_norm,
)
from .cones import (
    ZeroCombination,
    cone_contains,
    cone_contains_zero,
    excluding_vector,
    outermost_pair,
    rotate_ccw,
    rotate_cw,
    separating_vector,
    set_norm,
    zero_combination,
)
from .decide import (
    REACHABLE,
    UNREACHABLE,
    UNREACHABLE_WITHIN_CAP,
    Verdict,
    brute_force_oracle,
    decide_bounded_witness,
    decide_capped_bfs,
    default_cap,
    witness_violation,
)
from .errors import (
    BudgetExceededError,
    CapacityError,
    InternalDefectError,
    ParseError,
    PreconditionError,
    VasskitError,
)
from .instances import Instance, load_instance, parse_instance, serialize_instance
from .schemes import (
    SlpsFamily,
    SlpsMember,
    WitnessResult,
    check_loop_lemma,
    loop_normalize,
    norm_bound,
    norm_bound_value,
    origin_exponents,
    origin_word,
    shortest_zero_witness,
    slps_reach,
    split_lps,
)
from .shortening import (
    AwayOtherResult,
    Shortening,
    ShorteningFamily,
    cut_by_vector,
    cycles_repeated_at_least,
    drift_lower_bound,
    shorten_away_both,
    shorten_away_other,
    shorten_close_away,
    shorten_far,
    shorten_one_visit,
    shortening_violation,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
