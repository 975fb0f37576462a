"""Counting and enumerating (support) tau-tilting modules over Nakayama algebras."""

from .algebra import (
    AlgebraSpec,
    Indec,
    InvalidAlgebraError,
    Shape,
    make_linear_kupisch,
    make_uniform,
)
from .counting import CountEngine, InconsistencyError

__all__ = [
    "AlgebraSpec",
    "CountEngine",
    "Indec",
    "InconsistencyError",
    "InvalidAlgebraError",
    "Shape",
    "make_linear_kupisch",
    "make_uniform",
]
