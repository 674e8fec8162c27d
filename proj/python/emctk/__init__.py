"""Exact search and verification toolkit for maximum k-uniform set families
with bounded matching number."""

from ._core import (
    CapError,
    Family,
    binomial,
    construct_A,
    construct_B,
    count_M,
    count_M_prime,
    count_partitions,
    drop_ratio_check,
    dumps,
    emc_check,
    enumerate_optima,
    enumerate_partitions,
    epsilon_formulas,
    export_lp,
    is_left_compressed,
    kleitman_check,
    kleitman_extremal,
    left_compress,
    loads,
    random_family,
    shift,
    solve,
    stab_upper_bound,
    star,
    supersat_lower_bound,
    verify_double_count,
    verify_shiftdeg,
)

__version__ = "0.1.0"

__all__ = [
    "CapError",
    "Family",
    "binomial",
    "construct_A",
    "construct_B",
    "count_M",
    "count_M_prime",
    "count_partitions",
    "drop_ratio_check",
    "dumps",
    "emc_check",
    "enumerate_optima",
    "enumerate_partitions",
    "epsilon_formulas",
    "export_lp",
    "is_left_compressed",
    "kleitman_check",
    "kleitman_extremal",
    "left_compress",
    "loads",
    "random_family",
    "shift",
    "solve",
    "stab_upper_bound",
    "star",
    "supersat_lower_bound",
    "verify_double_count",
    "verify_shiftdeg",
]
