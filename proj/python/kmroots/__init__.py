"""Root multiplicities and Dyck path bounds for rank-2 hyperbolic Kac-Moody algebras.

Weights are passed as two integers (c0, c1), the coefficients of alpha_0 and
alpha_1. Large results come back as Python ints with no loss of precision.
"""

import json

from ._core import (
    KmrootsError,
    bound,
    bound_paths,
    dyck_count,
    kostant_count,
    littelmann_valid,
    multiplicity,
    root_class,
    word_to_runs,
)
from . import _core


def estimate(c0, c1, *, samples, r=3, theorem=2, seed=0, threads=0):
    """Monte Carlo estimate of a bound, as the same dict the CLI prints."""
    return json.loads(_core.estimate_json(c0, c1, r, theorem, samples, seed, threads))


def validate(word, r=3):
    """Run lengths, weight and every predicate for one binary word."""
    return json.loads(_core.validate_json(word, r))


__all__ = [
    "KmrootsError",
    "bound",
    "bound_paths",
    "dyck_count",
    "estimate",
    "kostant_count",
    "littelmann_valid",
    "multiplicity",
    "root_class",
    "validate",
    "word_to_runs",
]
