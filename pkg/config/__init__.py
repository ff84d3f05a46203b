from .settings import (
    INCLUSION_BUDGET,
    ENUMERATION_MAX_HEIGHT,
    REDUCE_AFTER_GATE,
    CHECK_WITNESS,
    LOG_LEVEL,
    LOG_FORMAT,
    DEFAULT_BENCHMARK_SEED,
    BV_SINGLE_PATTERN,
    FERMIONIC_ANGLE
)

__all__ = [
    "INCLUSION_BUDGET",
    "ENUMERATION_MAX_HEIGHT",
    "REDUCE_AFTER_GATE",
    "CHECK_WITNESS",
    "LOG_LEVEL",
    "LOG_FORMAT",
    "DEFAULT_BENCHMARK_SEED",
    "BV_SINGLE_PATTERN",
    "FERMIONIC_ANGLE"
]
