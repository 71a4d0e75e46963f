"""Exact short products from truncated multipliers."""

from .arith import digit_count, exactness_condition, floor_div_rem, mod_distance, msd
from .errors import DomainError, InconclusiveScan, SearchCapExceeded
from .extrema import (
    ExtremumRun,
    decode,
    find_extrema_with_offset,
    find_min_max,
    gaps,
)
from .multipliers import (
    pi_multiplier,
    pow5_multiplier,
    truncate_rational,
    truncate_to_digits,
)
from .oracle import oracle_exact, oracle_extrema, oracle_range
from .rangefinder import (
    DigitBand,
    RangeQuery,
    ValidityRange,
    band,
    find_range,
    lower_bound,
)

__all__ = [
    "DigitBand",
    "DomainError",
    "ExtremumRun",
    "InconclusiveScan",
    "RangeQuery",
    "SearchCapExceeded",
    "ValidityRange",
    "band",
    "decode",
    "digit_count",
    "exactness_condition",
    "find_extrema_with_offset",
    "find_min_max",
    "find_range",
    "floor_div_rem",
    "gaps",
    "lower_bound",
    "mod_distance",
    "msd",
    "oracle_exact",
    "oracle_extrema",
    "oracle_range",
    "pi_multiplier",
    "pow5_multiplier",
    "truncate_rational",
    "truncate_to_digits",
]
