"""Shared constructors for the standard tower F_q -> A = F_q[t] -> F.

Element classes compare parents by identity, so code that wants elements
of "the" field F_q(t) must go through these cached factories.
"""

from functools import lru_cache

from .ff import GF
from .poly import PolyRing
from .ratfunc import FractionField


@lru_cache(maxsize=None)
def poly_ring_A(q):
    """A = F_q[t]."""
    return PolyRing(GF(q), "t")


@lru_cache(maxsize=None)
def rational_function_field(q):
    """F = F_q(t)."""
    return FractionField(poly_ring_A(q))


@lru_cache(maxsize=None)
def x_ring_over_A(q):
    """A[x], for minimal polynomials."""
    return PolyRing(poly_ring_A(q), "x")


@lru_cache(maxsize=None)
def x_ring_over_F(q):
    """F[x], for quotient-field moduli."""
    return PolyRing(rational_function_field(q), "x")
