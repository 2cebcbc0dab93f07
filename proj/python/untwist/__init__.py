"""Obstructions to unknotting a knot by a single full twist."""

from ._untwist import (
    CalibrationError,
    DatasetError,
    JumpPointError,
    Knot,
    analyze,
    candidates,
    enumerate_forms,
    find_knot,
    lens_d,
    lens_spectrum,
    load_dataset,
    m_q,
    mirror,
    reproduce_table,
    torsion_v,
    torus_knot,
    torus_signature,
)

__all__ = [
    "CalibrationError",
    "DatasetError",
    "JumpPointError",
    "Knot",
    "analyze",
    "candidates",
    "enumerate_forms",
    "find_knot",
    "lens_d",
    "lens_spectrum",
    "load_dataset",
    "m_q",
    "mirror",
    "reproduce_table",
    "torsion_v",
    "torus_knot",
    "torus_signature",
]
