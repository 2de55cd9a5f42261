"""Exact computations in the inverse semigroup B_Z^F."""

import json

from ._bzf import (
    Element,
    EpSet,
    Error,
    Family,
    Semigroup,
    exists_shift_subset,
    green,
    inverse,
    is_idempotent,
    is_omega_closed,
    natural_leq,
    to_brandt,
)
from ._bzf import execute as _execute

__all__ = [
    "Element",
    "EpSet",
    "Error",
    "Family",
    "Semigroup",
    "exists_shift_subset",
    "green",
    "inverse",
    "is_idempotent",
    "is_omega_closed",
    "natural_leq",
    "run",
    "to_brandt",
]


def run(command, **options):
    """Run a CLI command string; returns (parsed JSON, exit code)."""
    text, code = _execute(command, **options)
    return json.loads(text), code
