"""Triangulations of cyclic polytopes."""

from ._cyclone import (
    CapacityError,
    CycloneError,
    canonical,
    check,
    count,
    enumerate,
    gkz,
    poset_summary,
    ratios,
    root,
)

__all__ = [
    "CapacityError",
    "CycloneError",
    "canonical",
    "check",
    "count",
    "enumerate",
    "gkz",
    "poset_summary",
    "ratios",
    "root",
]
