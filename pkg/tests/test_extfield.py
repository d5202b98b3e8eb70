"""Quotient fields and the irreducibility / rational-root machinery."""

import random

import pytest

from drinfeld import QuotientField
from drinfeld.base import rational_function_field, x_ring_over_A, x_ring_over_F
from drinfeld.errors import IrreducibilityUncertain, RootExtractionFailure
from drinfeld.extfield import irreducible_over_F, rational_roots


def _L(q, build):
    F = rational_function_field(q)
    Fx = x_ring_over_F(q)
    return F, QuotientField(F, build(F, Fx))


def test_quotient_field_arithmetic():
    F, L = _L(2, lambda F, Fx: Fx.gen() ** 2 + Fx.gen() + Fx.constant(F.t))
    x = L.gen()
    assert x * x + x + L.t == L.zero
    rng = random.Random(101)
    for _ in range(20):
        a = L.random_element(rng, 2, nonzero=True)
        assert a * a.inverse() == L.one
        b = L.random_element(rng, 2)
        assert (a + b) * (a + b) == a * a + a * b + b * a + b * b


def test_quotient_field_rejects_reducible():
    F = rational_function_field(2)
    Fx = x_ring_over_F(2)
    with pytest.raises(ValueError):
        QuotientField(F, Fx.gen() ** 2 + Fx.constant(F.t**2))


def test_quotient_field_qth_root_unsupported():
    F, L = _L(2, lambda F, Fx: Fx.gen() ** 2 + Fx.gen() + Fx.constant(F.t))
    with pytest.raises(RootExtractionFailure):
        L.gen().qth_root()


def test_rational_roots():
    F = rational_function_field(2)
    Ax = x_ring_over_A(2)
    A = Ax.base
    t = A.gen()
    x = Ax.gen()
    f = (Ax.monomial(t, 1) - Ax.one) * (x - Ax.constant(t + A.one))
    roots = set(rational_roots(f, F))
    assert roots == {F.one / F.t, F.from_poly(t + A.one)}
    assert rational_roots(x**2 + Ax.constant(t), F) == []


def test_irreducibility_certificates():
    F = rational_function_field(2)
    Ax = x_ring_over_A(2)
    A = Ax.base
    t = A.gen()
    x = Ax.gen()
    # linear in x
    assert irreducible_over_F(x - Ax.constant(t))
    # degree <= 3 without rational roots
    assert irreducible_over_F(x**2 + Ax.monomial(t, 1) + Ax.constant(t))
    assert not irreducible_over_F((x - Ax.constant(t)) * (x - Ax.one))
    # linear in t with coprime t-coefficients (Gauss certificate)
    assert irreducible_over_F(x**7 + x - Ax.constant(t))
    # Eisenstein at the prime t
    assert irreducible_over_F(x**5 - Ax.constant(t))
    # content not 1 is rejected
    assert not irreducible_over_F(Ax.monomial(t, 1) + Ax.constant(t))


def test_irreducibility_uncertain():
    Ax = x_ring_over_A(2)
    A = Ax.base
    t = A.gen()
    x = Ax.gen()
    # degree 4 in x, quadratic in t, neither Gauss nor Eisenstein applies
    f = x**4 + Ax.constant(t**2) * x + Ax.constant(t**2 + A.one)
    with pytest.raises(IrreducibilityUncertain):
        irreducible_over_F(f)
