"""Exact verification of a free-field realization of twisted toroidal Lie algebras."""

from __future__ import annotations

from .lattice import AlgebraType, Family
from .realization import Realization, Variant, realization
from .relations import Report, verify_all

__all__ = ["AlgebraType", "Family", "Realization", "Report", "Variant", "realization", "verify_all"]
__version__ = "0.1.0"
