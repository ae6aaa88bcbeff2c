"""Quantum codes from Castle and weak Castle curves."""

import json

from . import _core
from ._core import (
    DEFAULT_BUDGET,
    Curve,
    Field,
    InputError,
    LinearCode,
    QuantumError,
    Semigroup,
    Sequence,
    UnsupportedFieldError,
    targets,
)

__all__ = [
    "DEFAULT_BUDGET",
    "Curve",
    "Field",
    "InputError",
    "LinearCode",
    "QuantumError",
    "Semigroup",
    "Sequence",
    "UnsupportedFieldError",
    "targets",
    "curve",
    "report",
    "construction",
    "css_self_orthogonal",
    "css_hermitian",
    "css_nested",
    "gv",
    "reproduce",
]


def curve(spec):
    """Curve from a curve-file dict (or its JSON text)."""
    if not isinstance(spec, str):
        spec = json.dumps(spec)
    return Curve.from_json(spec)


def report(c, m, budget=0):
    return json.loads(c.report(m, budget))


def construction(seq, which, i, budget=DEFAULT_BUDGET):
    row = seq.construction(which, i, budget)
    return None if row is None else json.loads(row)


def css_self_orthogonal(code, budget=DEFAULT_BUDGET):
    return json.loads(_core.css_self_orthogonal(code, budget))


def css_hermitian(code, budget=DEFAULT_BUDGET):
    return json.loads(_core.css_hermitian(code, budget))


def css_nested(c1, c2, budget=DEFAULT_BUDGET):
    return json.loads(_core.css_nested(c1, c2, budget))


def gv(n, k, d, q):
    """GV check; lhs and rhs stay decimal strings since they overflow floats."""
    return json.loads(_core.gv(n, k, d, q))


def reproduce(target, budget=DEFAULT_BUDGET):
    return json.loads(_core.reproduce(target, budget))
