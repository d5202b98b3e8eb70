"""Dense univariate polynomials over an arbitrary coefficient ring.

The same class serves F_q[t], F_q[t][s], F[x] and every other tower that
shows up: a PolyRing wraps any base ring whose elements implement the
arithmetic dunders plus ``exact_div`` and ``is_zero``.  Nesting PolyRings
gives multivariate polynomial rings in recursive (dense) representation.

Division helpers:

* ``divmod`` performs ordinary division, dividing by the leading
  coefficient via ``exact_div`` at each step; over a field this is
  classical polynomial division, over a domain it succeeds exactly when
  each step is exact.
* ``pseudo_divmod`` is fraction-free pseudo-division.
* ``resultant`` runs the subresultant polynomial remainder sequence, so
  resultants over nested polynomial rings never leave the ring.
"""

import array
import sys

from .ff import FFElem, GaloisField

NEG_INF = float("-inf")


def _ARRAY_TYPECODE(bits):
    """Fixed-width typecode for packed Kronecker digits, or None when the
    digits are too wide (or the platform is big-endian)."""
    if sys.byteorder != "little":
        return None
    if bits <= 16:
        return "H"
    if bits <= 32:
        return "I"
    if bits <= 64:
        return "Q"
    return None

# dense polynomials over a prime field switch to integer-coded fast paths
# above this total size (Kronecker substitution / raw int arithmetic)
_FAST_SIZE = 16


def _prime_field(ring):
    base = ring.base
    if isinstance(base, GaloisField) and base.e == 1:
        return base
    return None


class Poly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        # coeffs: low-degree first, trailing zeros trimmed by the ring
        self.ring = ring
        self.coeffs = coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self):
        return self.coeffs[0] if self.coeffs else self.ring.base.zero

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.base.zero

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.lead == self.ring.base.one

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ring is other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __add__(self, other):
        other = self.ring(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self.ring.from_coeffs(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self.ring(other))

    def __rsub__(self, other):
        return self.ring(other) + (-self)

    def __mul__(self, other):
        other = self.ring(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.ring.zero
        if len(a) + len(b) > _FAST_SIZE:
            base = _prime_field(self.ring)
            if base is not None:
                return self._mul_kronecker(other, base)
        zero = self.ring.base.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero:
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return self.ring.from_coeffs(out)

    def _mul_kronecker(self, other, base):
        """Multiply over a prime field by packing coefficients into one
        big integer per operand; digit width is chosen so column sums
        cannot overflow into the next digit."""
        p = base.p
        a = [c.code for c in self.coeffs]
        b = [c.code for c in other.coeffs]
        bits = (min(len(a), len(b)) * (p - 1) * (p - 1)).bit_length() + 1
        typecode = _ARRAY_TYPECODE(bits)
        if typecode is None:
            return self._mul_kronecker_slow(a, b, bits, base)
        width = {"H": 2, "I": 4, "Q": 8}[typecode]
        packed_a = int.from_bytes(array.array(typecode, a).tobytes(), "little")
        packed_b = int.from_bytes(array.array(typecode, b).tobytes(), "little")
        prod = packed_a * packed_b
        n = len(a) + len(b) - 1
        digits = array.array(typecode, prod.to_bytes(n * width, "little"))
        return self.ring.from_coeffs([FFElem(base, d % p) for d in digits])

    def _mul_kronecker_slow(self, a, b, bits, base):
        p = base.p
        packed_a = 0
        for c in reversed(a):
            packed_a = (packed_a << bits) | c
        packed_b = 0
        for c in reversed(b):
            packed_b = (packed_b << bits) | c
        prod = packed_a * packed_b
        mask = (1 << bits) - 1
        out = []
        while prod:
            out.append(FFElem(base, (prod & mask) % p))
            prod >>= bits
        return self.ring.from_coeffs(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other):
        """Division where each step divides leading coefficients with
        exact_div; raises if a step is not exact in the base ring."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        ring = self.ring
        if len(self.coeffs) + len(other.coeffs) > _FAST_SIZE:
            base = _prime_field(ring)
            if base is not None:
                return self._divmod_prime(other, base)
        rem = list(self.coeffs)
        dv = other.degree
        lead = other.lead
        quot = [ring.base.zero] * max(len(rem) - dv, 0)
        while len(rem) - 1 >= dv and rem:
            c = rem[-1].exact_div(lead)
            shift = len(rem) - 1 - dv
            quot[shift] = c
            for j, bc in enumerate(other.coeffs):
                rem[shift + j] = rem[shift + j] - c * bc
            while rem and rem[-1].is_zero:
                rem.pop()
        return ring.from_coeffs(quot), ring.from_coeffs(rem)

    def _divmod_prime(self, other, base):
        """Schoolbook division on raw integer coefficient codes; division
        is always exact since the base is a field."""
        p = base.p
        rem = [c.code for c in self.coeffs]
        den = [c.code for c in other.coeffs]
        dv = len(den) - 1
        inv = pow(den[-1], p - 2, p)
        quot = [0] * max(len(rem) - dv, 0)
        while len(rem) - 1 >= dv and rem:
            c = (rem[-1] * inv) % p
            shift = len(rem) - 1 - dv
            quot[shift] = c
            if c:
                for j, bc in enumerate(den):
                    rem[shift + j] = (rem[shift + j] - c * bc) % p
            while rem and not rem[-1]:
                rem.pop()
        ring = self.ring
        return (
            ring.from_coeffs([FFElem(base, v) for v in quot]),
            ring.from_coeffs([FFElem(base, v) for v in rem]),
        )

    def __truediv__(self, other):
        """Division by a unit (degree-0) divisor, or exact polynomial
        division; raises when the quotient would leave the ring."""
        if isinstance(other, Poly) and other.ring is self.ring:
            if other.is_zero:
                raise ZeroDivisionError("polynomial division by zero")
            if other.degree == 0:
                return self.scale(self.ring.base.one / other.constant)
            return self.exact_div(other)
        return NotImplemented

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("exact_div: division is not exact")
        return q

    def pseudo_divmod(self, other):
        """Fraction-free division: lc(other)^(deg a - deg b + 1) * a = q*b + r."""
        if other.is_zero:
            raise ZeroDivisionError("pseudo-division by zero")
        ring = self.ring
        if self.degree < other.degree:
            return ring.zero, self
        d = other.lead
        rem = self
        quot = ring.zero
        steps = int(self.degree - other.degree) + 1
        while not rem.is_zero and rem.degree >= other.degree:
            shift = int(rem.degree - other.degree)
            term = ring.monomial(rem.lead, shift)
            quot = quot * ring(d) + term
            rem = rem * ring(d) - term * other
            steps -= 1
        k = steps
        if k > 0:
            dk = ring(d**k)
            quot = quot * dk
            rem = rem * dk
        return quot, rem

    def scale(self, c):
        """Multiply by a base-ring element."""
        if c.is_zero:
            return self.ring.zero
        return Poly(self.ring, tuple(a * c for a in self.coeffs))

    def shift(self, k):
        """Multiply by var^k."""
        if not self.coeffs:
            return self
        return Poly(self.ring, (self.ring.base.zero,) * k + self.coeffs)

    def monic(self):
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        if self.is_monic:
            return self
        inv = self.ring.base.one.exact_div(self.lead)
        return self.scale(inv)

    def derivative(self):
        base = self.ring.base
        out = []
        for i in range(1, len(self.coeffs)):
            c = base.zero
            for _ in range(i):
                c = c + self.coeffs[i]
            out.append(c)
        return self.ring.from_coeffs(out)

    def __call__(self, x):
        """Evaluate; x may live in any ring containing the coefficients
        (coefficients must be coercible via x's arithmetic)."""
        if not self.coeffs:
            return x - x  # zero of x's ring
        result = None
        for c in reversed(self.coeffs):
            result = c if result is None else result * x + c
        return result

    def eval_with(self, embed, x):
        """Evaluate at x, mapping each coefficient through embed first."""
        result = None
        for c in reversed(self.coeffs):
            ec = embed(c)
            result = ec if result is None else result * x + ec
        return result

    def map_coeffs(self, func, ring):
        return ring.from_coeffs([func(c) for c in self.coeffs])

    def qth_root(self, q):
        """Return g with g^q == self, or None if there is none.

        Uses the additive Frobenius: g^q has support only on exponents
        divisible by q and coefficients the q-th powers.
        """
        if self.is_zero:
            return self
        # q is a power of the characteristic; invert the q-power Frobenius
        # on coefficients by iterating the p-th root
        p = self.ring.characteristic
        steps = 0
        qq = q
        while qq > 1:
            qq //= p
            steps += 1
        out = []
        for i, c in enumerate(self.coeffs):
            if i % q == 0:
                root = c
                if not c.is_zero:
                    for _ in range(steps):
                        root = root.pth_root()
                if root is None:
                    return None
                out.append(root)
            elif not c.is_zero:
                return None
        cand = self.ring.from_coeffs(out)
        if cand**q == self:
            return cand
        return None

    def __repr__(self):
        from .parsing import format_poly

        return format_poly(self)


class PolyRing:
    """Univariate polynomials over ``base`` in the variable ``var``."""

    def __init__(self, base, var):
        self.base = base
        self.var = var
        self.zero = Poly(self, ())
        self.one = Poly(self, (base.one,))
        self.characteristic = base.characteristic

    def gen(self):
        return Poly(self, (self.base.zero, self.base.one))

    def from_coeffs(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        return Poly(self, tuple(coeffs))

    def monomial(self, c, k):
        if c.is_zero:
            return self.zero
        return Poly(self, (self.base.zero,) * k + (c,))

    def constant(self, c):
        return self.from_coeffs([c])

    def __call__(self, value):
        if isinstance(value, Poly) and value.ring is self:
            return value
        if isinstance(value, int):
            return self.constant(self.base(value))
        # base-ring element
        return self.constant(self.base(value))

    def random_element(self, rng, max_degree, nonzero=False, monic=False):
        while True:
            d = rng.randint(0, max_degree)
            coeffs = [self.base.random_element(rng) for _ in range(d + 1)]
            if monic:
                coeffs[-1] = self.base.one
            p = self.from_coeffs(coeffs)
            if not (nonzero and p.is_zero):
                return p

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.base == other.base
            and self.var == other.var
        )

    def __hash__(self):
        return hash(("PolyRing", self.base, self.var))

    def __repr__(self):
        return f"{self.base!r}[{self.var}]"


def poly_gcd(a, b):
    """Monic gcd over a field base."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def poly_xgcd(a, b):
    """Extended gcd over a field base: returns (g, u, v) with u*a + v*b = g."""
    ring = a.ring
    r0, r1 = a, b
    s0, s1 = ring.one, ring.zero
    t0, t1 = ring.zero, ring.one
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    inv = ring.base.one.exact_div(r0.lead)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def content(f):
    """Gcd of the coefficients (for Poly whose base is itself a PolyRing
    over a field); returns a monic base element, or base zero for f = 0."""
    base = f.ring.base
    g = base.zero
    for c in f.coeffs:
        g = poly_gcd(g, c) if not g.is_zero else (c.monic() if not c.is_zero else g)
    return g


def primitive_part(f):
    c = content(f)
    if c.is_zero:
        return f
    return f.map_coeffs(lambda a: a.exact_div(c), f.ring)


def resultant(f, g):
    """Resultant via the subresultant PRS; valid over any integral domain
    whose elements support exact_div.

    Sign convention: res(f, g) = lc(f)^deg(g) * prod g(alpha) over the
    roots alpha of f (in a splitting extension), so that
    res(f, g) = (-1)^(deg f * deg g) res(g, f).
    """
    ring = f.ring
    base = ring.base
    if f.is_zero and g.is_zero:
        raise ValueError("resultant of two zero polynomials")
    if f.is_zero or g.is_zero:
        if (f if g.is_zero else g).degree == 0:
            return base.one
        return base.zero
    if f.degree == 0:
        return f.constant ** int(g.degree)
    if g.degree == 0:
        return g.constant ** int(f.degree)
    sign = 1
    if f.degree < g.degree:
        if (int(f.degree) * int(g.degree)) % 2 == 1:
            sign = -sign
        f, g = g, f
    h = base.one
    s = base.one
    while True:
        delta = int(f.degree - g.degree)
        if (int(f.degree) % 2 == 1) and (int(g.degree) % 2 == 1):
            sign = -sign
        _, r = f.pseudo_divmod(g)
        if r.is_zero:
            return base.zero
        # divide remainder by s * h^delta
        divisor = s * h**delta
        r = r.map_coeffs(lambda c: c.exact_div(divisor), ring)
        f, g = g, r
        s = f.lead
        if delta > 0:
            h = (s**delta).exact_div(h ** (delta - 1))
        if g.degree == 0:
            delta = int(f.degree)
            res = (g.constant**delta).exact_div(h ** (delta - 1)) if delta > 0 else h
            if sign < 0:
                res = -res
            return res
