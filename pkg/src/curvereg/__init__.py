"""Castelnuovo–Mumford regularity, Betti tables and secant lines of projective curves."""

from .polyring import GF32003, QQ, Field, MonomialOrder, Polynomial, Ring
from .ideals import Ideal, eliminate, ideal_intersect, ideal_quotient, ideal_sum, saturate
from .invariants import dim_deg, hilbert_function, hilbert_polynomial, hilbert_series, saturation_degree
from .resolution import BettiTable, betti_numbers, min_free_resolution, regularity
from .geometry import LinearSubspace, secant_degree, span, xi
from .curves import Curve, giaimo_curve, twisted_config

__version__ = "0.1.0"
