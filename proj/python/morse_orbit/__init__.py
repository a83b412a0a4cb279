"""Morse matchings on orbit spaces of p-subgroup complexes."""

from ._morse_orbit import (
    Error,
    Group,
    analyze,
    export_dot,
    fusion_compare,
    homology,
    smith_normal_form,
)

__all__ = [
    "Error",
    "Group",
    "analyze",
    "export_dot",
    "fusion_compare",
    "homology",
    "smith_normal_form",
]
