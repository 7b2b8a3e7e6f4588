"""Groebner bases, p-bases and shortest linear recurrences over Z_{p^r}."""

import json

from ._core import (
    EnumerationTooLarge,
    IterationLimitExceeded,
    ParseError,
    Ring,
    ZprError,
    run_cli,
)
from . import _core

__all__ = [
    "EnumerationTooLarge",
    "IterationLimitExceeded",
    "ParseError",
    "Ring",
    "ZprError",
    "groebner_basis",
    "p_basis",
    "shortest_lrr",
    "run_cli",
]


def groebner_basis(ring, generators, order="top"):
    """Minimal Groebner basis of the rows, e.g. ["[1, 8x^5+2x]", "[0, x^6]"]."""
    return json.loads(_core.gb_json(ring, list(generators), order))


def p_basis(ring, generators, order="top"):
    return json.loads(_core.pbasis_json(ring, list(generators), order))


def shortest_lrr(ring, sequence, monic_only=True, verify=False):
    """Shortest recurrence, its parametrization and the enumerated solutions."""
    return json.loads(_core.lrr_json(ring, list(sequence), monic_only, verify))
