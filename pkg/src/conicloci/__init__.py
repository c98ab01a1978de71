"""Exact verification of clean intersections for conic loci in linear sections of Gr(2,5)."""

from .exactmath import RatMatrix, Rational
from .groebner import GroebnerBasis, Ideal, buchberger, eliminate, ideal_equal, is_unit
from .poly import CHART_RING, MonomialOrder, Polynomial, Ring, parse

__version__ = "0.1.0"
