"""fusion-forge: exact fusion ring modeling, verification, and classification.

The package models fusion rings over the integers, certifies their numeric
invariants exactly (Frobenius-Perron dimensions, formal codegrees, character
data), searches their basis symmetries, and runs a classification search for
rings admitting a fixed-point-free automorphism of prime order with integer
formal codegrees.
"""

from fusion_forge.ring import (
    FusionRing,
    StructureError,
    ValidationReport,
    multiplication_matrices,
    multiplication_matrix,
    ring_from_json,
    ring_to_json,
    validate,
)

__all__ = [
    "FusionRing",
    "StructureError",
    "ValidationReport",
    "multiplication_matrices",
    "multiplication_matrix",
    "ring_from_json",
    "ring_to_json",
    "validate",
]

__version__ = "0.1.0"
