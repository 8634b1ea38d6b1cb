"""Generalized Gorenstein properties of semi-standard graded affine semigroup rings."""

from .errors import SemigroupError
from .families import family_snk, fixture_catalog
from .report import classify_semigroup
from .semigroup import build_semigroup, member

__all__ = [
    "SemigroupError",
    "build_semigroup",
    "classify_semigroup",
    "family_snk",
    "fixture_catalog",
    "member",
]
