"""Spectra with an adjustable frequency-bin interval (dense sampling factor alpha)."""

import json as _json

from ._alspec import (
    DenseFactor,
    IncompatibleAlpha,
    Plan,
    UnsupportedSize,
    aliased_reconstruct,
    alpha_fft,
    analytic_sine_spectrum,
    bench_report_json,
    bin_frequency,
    make_dense_factor,
    naive_forward,
    naive_inverse,
    orthogonality_kernel,
    parse_dense_factor,
    plan,
    standard_fft,
    validate_pair,
    zero_pad,
)


def bench_report(ns, alphas, methods=("alpha_fft", "zeropad_fft"), reps=3):
    """Run a benchmark grid and return the report as a dict."""
    return _json.loads(bench_report_json(list(ns), [str(a) for a in alphas], list(methods), reps))


__all__ = [
    "DenseFactor",
    "IncompatibleAlpha",
    "Plan",
    "UnsupportedSize",
    "aliased_reconstruct",
    "alpha_fft",
    "analytic_sine_spectrum",
    "bench_report",
    "bin_frequency",
    "make_dense_factor",
    "naive_forward",
    "naive_inverse",
    "orthogonality_kernel",
    "parse_dense_factor",
    "plan",
    "standard_fft",
    "validate_pair",
    "zero_pad",
]
