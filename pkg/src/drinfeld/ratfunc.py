"""Rational function fields F = Frac(k[t]) in canonical form.

Every element is stored with coprime numerator and denominator and a
monic denominator, so structural equality is mathematical equality.
"""

from .poly import Poly, poly_gcd


class RatFunc:
    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        # internal: assumes canonical form; use field() to construct
        self.field = field
        self.num = num
        self.den = den

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    @property
    def is_polynomial(self):
        return self.den.degree == 0

    def __eq__(self, other):
        return (
            isinstance(other, RatFunc)
            and self.field is other.field
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((id(self.field), self.num, self.den))

    def __add__(self, other):
        other = self.field(other)
        return self.field.make(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den)

    def __sub__(self, other):
        return self + (-self.field(other))

    def __rsub__(self, other):
        return self.field(other) + (-self)

    def __mul__(self, other):
        other = self.field(other)
        if self.is_zero or other.is_zero:
            return self.field.zero
        # cross-cancel first: both fractions are already reduced, so only
        # num/den pairs across the factors can share divisors
        a, b = self.num, self.den
        c, d = other.num, other.den
        g1 = poly_gcd(a, d)
        if g1.degree > 0:
            a, d = a.exact_div(g1), d.exact_div(g1)
        g2 = poly_gcd(c, b)
        if g2.degree > 0:
            c, b = c.exact_div(g2), b.exact_div(g2)
        num, den = a * c, b * d
        if not den.is_monic:
            lead = den.lead
            num = num.scale(self.field.base_field.one / lead)
            den = den.monic()
        return RatFunc(self.field, num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self.field(other).inverse()

    def __rtruediv__(self, other):
        return self.field(other) / self

    def exact_div(self, other):
        return self / other

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        num, den = self.den, self.num
        if not den.is_monic:
            lead = den.lead
            num = num.scale(self.field.base_field.one / lead)
            den = den.monic()
        return RatFunc(self.field, num, den)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return self.field.one
        if self.is_zero:
            return self
        # num and den are coprime, so their powers are too: no gcd needed
        return RatFunc(self.field, self.num**n, self.den**n)

    def qth_root(self):
        """q-th root in F, or None if the element is not a q-th power."""
        q = self.field.q
        rn = self.num.qth_root(q)
        rd = self.den.qth_root(q)
        if rn is None or rd is None:
            return None
        return self.field.make(rn, rd)

    def deg_infinity(self):
        """deg(x) = deg num - deg den; the valuation data at infinity."""
        if self.is_zero:
            raise ValueError("zero has no degree at infinity")
        return int(self.num.degree) - int(self.den.degree)

    def __repr__(self):
        from .parsing import format_ratfunc

        return format_ratfunc(self)


class FractionField:
    """Fraction field of a univariate polynomial ring over a field."""

    def __init__(self, polyring):
        self.ring = polyring
        self.base_field = polyring.base
        self.characteristic = polyring.characteristic
        self.zero = RatFunc(self, polyring.zero, polyring.one)
        self.one = RatFunc(self, polyring.one, polyring.one)
        self.var = polyring.var

    @property
    def q(self):
        return self.base_field.q

    def gen(self):
        return RatFunc(self, self.ring.gen(), self.ring.one)

    @property
    def t(self):
        return self.gen()

    def make(self, num, den):
        """Canonicalize num/den: reduce and make the denominator monic."""
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            return self.zero
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        if not den.is_monic:
            lead = den.lead
            num = num.scale(self.base_field.one / lead)
            den = den.monic()
        return RatFunc(self, num, den)

    def __call__(self, value):
        if isinstance(value, RatFunc) and value.field is self:
            return value
        if isinstance(value, Poly) and value.ring is self.ring:
            return RatFunc(self, value, self.ring.one)
        if isinstance(value, int):
            return RatFunc(self, self.ring(value), self.ring.one)
        # base field element
        return RatFunc(self, self.ring(value), self.ring.one)

    def from_poly(self, p):
        return RatFunc(self, p, self.ring.one)

    def random_element(self, rng, max_degree=3, nonzero=False):
        while True:
            num = self.ring.random_element(rng, max_degree)
            den = self.ring.random_element(rng, max_degree, nonzero=True)
            x = self.make(num, den)
            if not (nonzero and x.is_zero):
                return x

    def __eq__(self, other):
        return isinstance(other, FractionField) and self.ring == other.ring

    def __hash__(self):
        return hash(("FractionField", self.ring))

    def __repr__(self):
        return f"Frac({self.ring!r})"
