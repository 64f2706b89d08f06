"""Exact arithmetic checks of the alternating difference identity

    sum_{i=0..n} (-1)^i C(n, i) (x - i)^n = n!

and the congruences that lead from it to Wilson's theorem.

Integers are Python ints, rationals are fractions.Fraction, polynomials are
lists of Fraction coefficients in ascending order of power.
"""

from ._core import (
    backward_difference,
    binomial,
    binomial_row_mod,
    derivative_collapse_check,
    eval_difference_sum,
    eval_lower_power_sum,
    factorial,
    factorial_mod,
    fermat_check,
    identity_at_zero_mod,
    mod_pow,
    power_sum_mod,
    run_cli,
    symbolic_difference_poly,
    symbolic_lower_power_poly,
    trial_division,
    verify_corollary2,
    verify_theorem1,
    wilson_test,
)

__all__ = [
    "backward_difference",
    "binomial",
    "binomial_row_mod",
    "derivative_collapse_check",
    "eval_difference_sum",
    "eval_lower_power_sum",
    "factorial",
    "factorial_mod",
    "fermat_check",
    "identity_at_zero_mod",
    "mod_pow",
    "power_sum_mod",
    "run_cli",
    "symbolic_difference_poly",
    "symbolic_lower_power_poly",
    "trial_division",
    "verify_corollary2",
    "verify_theorem1",
    "wilson_test",
]
