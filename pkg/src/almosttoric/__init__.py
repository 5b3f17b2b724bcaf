"""Exact Newton polygons and implicit equations for almost-toric hypersurfaces."""

from .errors import InconsistencyError, InputError, NotHypersurfaceError, VerificationError
from .formats import load_instance
from .implicitize import ImplicitPolynomial, implicitize, interpolate, verify_vanishing
from .pluecker import ToricInput, build_pluecker, validate_input
from .polygon import Classification, NewtonPolygon, newton_polygon
from .valuation import build_valuation

__all__ = [
    "Classification",
    "ImplicitPolynomial",
    "InconsistencyError",
    "InputError",
    "NewtonPolygon",
    "NotHypersurfaceError",
    "ToricInput",
    "VerificationError",
    "build_pluecker",
    "build_valuation",
    "implicitize",
    "interpolate",
    "load_instance",
    "newton_polygon",
    "validate_input",
    "verify_vanishing",
]
