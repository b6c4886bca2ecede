"""Exact divisibility checks for binomial-coefficient products."""

from binomdiv._core import (
    __version__,
    catalan,
    catalan_order,
    digit_sum,
    digits,
    f_search,
    fractional_part_sum_identity,
    is_power_of_two,
    is_prime,
    nu_binomial,
    nu_factorial,
    nu_integer,
    odd_part,
    primes_up_to,
    ratio_canonical,
    ratio_is_integer,
    ratio_mod,
    ratio_nu,
    ratio_parity,
    ratio_profile,
    ratio_value,
    run_cli,
    seq_Q,
    seq_S,
    seq_s,
    seq_t,
    seq_value,
)

__all__ = [
    "__version__",
    "catalan",
    "catalan_order",
    "digit_sum",
    "digits",
    "f_search",
    "fractional_part_sum_identity",
    "is_power_of_two",
    "is_prime",
    "nu_binomial",
    "nu_factorial",
    "nu_integer",
    "odd_part",
    "primes_up_to",
    "ratio_canonical",
    "ratio_is_integer",
    "ratio_mod",
    "ratio_nu",
    "ratio_parity",
    "ratio_profile",
    "ratio_value",
    "run_cli",
    "seq_Q",
    "seq_S",
    "seq_s",
    "seq_t",
    "seq_value",
]
