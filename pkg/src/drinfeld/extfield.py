"""Quotient-ring field extensions L = F[x]/(m) and irreducibility
certificates for polynomials over F = F_q(t).

Polynomials over A = F_q[t] in the variable x are represented in the
nested ring A[x] = PolyRing(PolyRing(F_q, 't'), 'x').
"""

from .errors import IrreducibilityUncertain, RootExtractionFailure
from .factor import factor
from .poly import Poly, PolyRing, poly_gcd, poly_xgcd


class ExtElem:
    """Element of F[x]/(m), stored as the reduced representative."""

    __slots__ = ("field", "poly")

    def __init__(self, field, poly):
        self.field = field
        self.poly = poly

    @property
    def is_zero(self):
        return self.poly.is_zero

    def __bool__(self):
        return not self.poly.is_zero

    def __eq__(self, other):
        return (
            isinstance(other, ExtElem)
            and self.field is other.field
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((id(self.field), self.poly))

    def __add__(self, other):
        other = self.field(other)
        return ExtElem(self.field, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return ExtElem(self.field, -self.poly)

    def __sub__(self, other):
        return self + (-self.field(other))

    def __rsub__(self, other):
        return self.field(other) + (-self)

    def __mul__(self, other):
        other = self.field(other)
        return ExtElem(self.field, (self.poly * other.poly) % self.field.modulus)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("zero has no inverse")
        g, u, _ = poly_xgcd(self.poly, self.field.modulus)
        if g.degree != 0:
            raise ArithmeticError("modulus is not irreducible")  # cannot happen
        return ExtElem(self.field, u % self.field.modulus)

    def __truediv__(self, other):
        return self * self.field(other).inverse()

    def __rtruediv__(self, other):
        return self.field(other) / self

    def exact_div(self, other):
        return self / other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def qth_root(self):
        # Root extraction in F[x]/(m) is Frobenius-semilinear algebra we
        # never need; callers treat None as "no root available".
        raise RootExtractionFailure(
            "q-th roots are not implemented for quotient-field elements"
        )

    def __repr__(self):
        from .parsing import format_poly

        return format_poly(self.poly)


class QuotientField:
    """F[x]/(m) for monic irreducible m over F.

    Pass certified=True to skip the irreducibility certificate (used when
    the caller constructed m so that irreducibility is known)."""

    def __init__(self, F, modulus, certified=False):
        if not modulus.is_monic:
            raise ValueError("modulus must be monic")
        if modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        self.F = F
        self.xring = modulus.ring
        self.modulus = modulus
        self.degree = int(modulus.degree)
        self.characteristic = F.characteristic
        if not certified and not irreducible_over_F(to_A_x(modulus)):
            raise ValueError("modulus is reducible over F")
        self.zero = ExtElem(self, self.xring.zero)
        self.one = ExtElem(self, self.xring.one)

    @property
    def q(self):
        return self.F.q

    def gen(self):
        return ExtElem(self, self.xring.gen() % self.modulus)

    @property
    def t(self):
        return self(self.F.t)

    def __call__(self, value):
        if isinstance(value, ExtElem) and value.field is self:
            return value
        if isinstance(value, Poly) and value.ring is self.xring:
            return ExtElem(self, value % self.modulus)
        # int, base-field element, or rational function
        return ExtElem(self, self.xring(self.F(value)))

    def random_element(self, rng, max_degree=2, nonzero=False):
        while True:
            coeffs = [
                self.F.random_element(rng, max_degree) for _ in range(self.degree)
            ]
            x = ExtElem(self, self.xring.from_coeffs(coeffs))
            if not (nonzero and x.is_zero):
                return x

    def __repr__(self):
        return f"F[x]/({self.modulus!r})"


# ---------------------------------------------------------------------------
# Irreducibility over F for polynomials with A-coefficients


def A_x_ring(A):
    return PolyRing(A, "x")


def to_A_x(fx_over_F):
    """Clear denominators of a polynomial in F[x], returning a primitive
    polynomial in A[x] with the same roots."""
    F = fx_over_F.ring.base
    A = F.ring
    den = A.one
    for c in fx_over_F.coeffs:
        den = den * c.den.exact_div(poly_gcd(den, c.den)) if not c.is_zero else den
    coeffs = []
    for c in fx_over_F.coeffs:
        scaled = c * F.from_poly(den)
        assert scaled.is_polynomial
        coeffs.append(scaled.num.scale(F.base_field.one / scaled.den.constant))
    f = PolyRing(A, "x").from_coeffs(coeffs)
    return _primitive(f)


def _primitive(f):
    g = None
    for c in f.coeffs:
        if c.is_zero:
            continue
        g = c.monic() if g is None else poly_gcd(g, c)
    if g is None or g.degree == 0:
        return f
    return f.map_coeffs(lambda c: c.exact_div(g), f.ring)


def _content_is_one(f):
    g = None
    for c in f.coeffs:
        if c.is_zero:
            continue
        g = c.monic() if g is None else poly_gcd(g, c)
    return g is not None and g.degree == 0


def _swap_to_t_outer(f):
    """View f in A[x] as a polynomial in t with F_q[x]-coefficients."""
    A = f.ring.base
    Fq = A.base
    xring = PolyRing(Fq, "x")
    tring = PolyRing(xring, "t")
    max_t = max((len(c.coeffs) for c in f.coeffs if not c.is_zero), default=0)
    rows = []
    for k in range(max_t):
        rows.append(xring.from_coeffs([c.coeff(k) for c in f.coeffs]))
    return tring.from_coeffs(rows)

def _monic_divisors(a, seed=0):
    """All monic divisors of nonzero a in A."""
    _, facs = factor(a, seed=seed)
    divisors = [a.ring.one]
    for p, mult in facs:
        new = []
        for d in divisors:
            cur = d
            for _ in range(mult + 1):
                new.append(cur)
                cur = cur * p
        divisors = new
    return divisors


def rational_roots(f_in_Ax, F):
    """All roots in F of a nonzero polynomial in A[x], found by the
    rational root test (divisors of the constant and leading terms)."""
    f = _primitive(f_in_Ax)
    roots = []
    if f.constant.is_zero:
        roots.append(F.zero)
        while f.constant.is_zero:
            f = f.ring.from_coeffs(f.coeffs[1:])
        if f.degree == 0:
            return roots
    lead = f.lead
    const = f.constant
    units = [u for u in F.base_field.elements() if not u.is_zero]
    seen = set()
    for a in _monic_divisors(const):
        for b in _monic_divisors(lead):
            for u in units:
                cand = F.make(a.scale(u), b)
                if cand in seen:
                    continue
                seen.add(cand)
                val = f.eval_with(lambda c: F.from_poly(c), cand)
                if val.is_zero:
                    roots.append(cand)
    return roots


def irreducible_over_F(f_in_Ax):
    """Certified irreducibility of a primitive polynomial in A[x] over F.

    Certificates, in order: linear in x; degree <= 3 with no rational
    root; linear in t with coprime t-coefficients (Gauss); Eisenstein at
    a prime of A.  Raises IrreducibilityUncertain when none applies.
    """
    f = f_in_Ax
    if f.degree < 1:
        return False
    if not _content_is_one(f):
        return False
    if f.degree == 1:
        return True
    A = f.ring.base
    F_roots_decidable = f.degree <= 3
    if F_roots_decidable:
        from .base import rational_function_field

        F = rational_function_field(A.base.q)
        return not rational_roots(f, F)
    swapped = _swap_to_t_outer(f)
    if swapped.degree == 1:
        c0, c1 = swapped.coeff(0), swapped.coeff(1)
        if poly_gcd(c0, c1).degree == 0:
            return True
    if _eisenstein(f):
        return True
    raise IrreducibilityUncertain(
        "no applicable irreducibility certificate for this polynomial"
    )


def _eisenstein(f):
    const = f.constant
    if const.is_zero:
        return False
    _, facs = factor(const)
    for P, mult in facs:
        if mult >= 2:
            continue
        if divmod(f.lead, P)[1].is_zero:
            continue
        if all(divmod(f.coeff(i), P)[1].is_zero for i in range(int(f.degree))):
            return True
    return False
