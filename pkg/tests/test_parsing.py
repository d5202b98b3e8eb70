"""Round-trips between the text syntax and elements of each ring."""

import random

import pytest

from drinfeld import GF, QuotientField, parse_element, parse_skew, skew_ring
from drinfeld.base import poly_ring_A, rational_function_field, x_ring_over_F
from drinfeld.parsing import ParseError


def test_parse_poly():
    A = poly_ring_A(3)
    t = A.gen()
    assert parse_element("t^3+2*t+1", A) == t**3 + 2 * t + A.one
    assert parse_element("0", A).is_zero
    assert parse_element("-t", A) == -t


def test_parse_ratfunc():
    F = rational_function_field(2)
    t = F.t
    assert parse_element("(t+1)/(t^2+t+1)", F) == (t + 1) / (t**2 + t + 1)


def test_parse_gf4():
    k = GF(4)
    u = k.generator_u()
    assert parse_element("u^2+1", k) == u * u + k.one


def test_parse_errors():
    A = poly_ring_A(2)
    with pytest.raises(ParseError):
        parse_element("t +", A)
    with pytest.raises(ParseError):
        parse_element("y", A)
    with pytest.raises(ParseError):
        parse_element("t^(2)", A)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_ratfunc_roundtrip(q):
    F = rational_function_field(q)
    rng = random.Random(41)
    for _ in range(50):
        x = F.random_element(rng, 3)
        assert parse_element(repr(x), F) == x


@pytest.mark.parametrize("q", [2, 3])
def test_skew_roundtrip(q):
    F = rational_function_field(q)
    S = skew_ring(F, q)
    rng = random.Random(42)
    for _ in range(40):
        coeffs = [F.random_element(rng, 2) for _ in range(rng.randrange(1, 4))]
        f = S(coeffs)
        assert parse_skew(repr(f), S) == f


def test_quotient_field_roundtrip():
    F = rational_function_field(2)
    Fx = x_ring_over_F(2)
    mod = Fx.gen() ** 2 + Fx.gen() + Fx.constant(F.t)
    L = QuotientField(F, mod)
    rng = random.Random(43)
    for _ in range(20):
        x = L.random_element(rng, 2)
        assert parse_element(repr(x), L) == x
