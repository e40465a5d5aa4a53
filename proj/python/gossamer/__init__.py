"""Exact gossamer-number arithmetic: infinitesimals, Riemann sums at infinity,
discrete sums and smoothed step functions."""

from ._gossamer import (
    DivisionByZero,
    DomainError,
    GossamerError,
    GossamerNumber,
    InfinitePartPresent,
    ParseError,
    Polynomial,
    SmoothedFunction,
    StepFunction,
    ZeroMagnitude,
    antiderivative,
    area_delta,
    asymptotic_sim,
    bernoulli_number,
    bounded_series_sum,
    conjecture_probe,
    definite_integral,
    definite_to_sum_pipeline,
    derivative,
    divergent_integral_via_sum,
    faulhaber,
    ftc_inverse_check,
    indefinite_sum,
    infinitely_close,
    integrability_check,
    inverse,
    much_less,
    omega,
    order_swap_demo,
    riemann_limit,
    run_suite,
    smooth,
    suite_names,
    sum_ftc,
    sum_interval_bruteforce,
    trapezoid_discontinuity_budget,
    uniform_riemann_sum,
)

w = omega()

__all__ = [name for name in dir() if not name.startswith("_")]
