"""Exact fibre computations for shallow ReLU network parameters.

Parameters are built from the same JSON schema the ``relu-fiber`` CLI reads.
Structured results come back as plain dicts. Neuron indices passed to
functions are zero-based; indices inside returned dicts are one-based, as on
the CLI.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    Parameter,
    RelufibreError,
    absorb_zero_row,
    arrangement_svg,
    collapse_pair,
    exact_equal_1d,
    flip,
    flip_subsets,
    ominus,
    orbit_sample,
    project,
    zero_factor_rank,
)

__all__ = [
    "Parameter", "RelufibreError", "parameter", "minimal_form", "zero_factor_rank",
    "zero_factor_reduce", "project", "ominus", "act", "stabilizer", "stabilizer_rows",
    "same_orbit", "equivalent", "flip", "flip_subsets", "collapse_pair", "absorb_zero_row",
    "genericity_certificate", "verdict", "orbit_sample", "evaluate", "activation_pattern",
    "exact_equal_1d", "equal_on_samples", "arrangement_svg",
]


def _rat(x):
    return str(x) if not isinstance(x, str) else x


def parameter(data):
    """Builds a Parameter from a dict or a JSON string."""
    if isinstance(data, dict):
        data = json.dumps(data)
    return Parameter.from_json(data)


def _maybe(text):
    return None if text is None else json.loads(text)


def minimal_form(theta):
    return json.loads(_core.minimal_form(theta))


def zero_factor_reduce(theta):
    return json.loads(_core.zero_factor_reduce(theta))


def act(g, theta):
    return _core.act(json.dumps(g), theta)


def stabilizer(theta):
    return json.loads(_core.stabilizer(theta))


def stabilizer_rows(theta):
    return json.loads(_core.stabilizer_rows(theta))


def same_orbit(theta1, theta2):
    return _maybe(_core.same_orbit(theta1, theta2))


def equivalent(theta1, theta2):
    return json.loads(_core.equivalent(theta1, theta2))


def genericity_certificate(theta, width_cap=12):
    """None when certified, otherwise the violated condition."""
    return _maybe(_core.genericity_certificate(theta, width_cap))


def verdict(theta):
    return json.loads(_core.verdict(theta))


def evaluate(theta, x):
    return [Fraction(y) for y in _core.eval(theta, [_rat(v) for v in x])]


def activation_pattern(theta, x):
    return _core.activation_pattern(theta, [_rat(v) for v in x])


def equal_on_samples(theta1, theta2, count, seed):
    return json.loads(_core.equal_on_samples(theta1, theta2, count, seed))
