"""Twisted polynomial rings R{tau} with tau c = c^q tau.

A skew polynomial sum a_i tau^i acts as the additive polynomial
sum a_i X^(q^i); multiplication is composition.  Right division works
over any coefficient field (only inversion and Frobenius powers of
coefficients are needed); left division additionally requires q^m-th
roots and reports failure when one does not exist.
"""

from .errors import RootExtractionFailure


class SkewPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs

    @property
    def coeff_field(self):
        return self.ring.coeff_field

    @property
    def tau_degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.coeff_field.zero

    @property
    def constant(self):
        return self.coeff(0)

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero skew polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, SkewPoly)
            and self.ring is other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self.ring(out)

    def __neg__(self):
        return SkewPoly(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Composition: (ab)_k = sum_{i+j=k} a_i * b_j^(q^i)."""
        if self.is_zero or other.is_zero:
            return self.ring.zero
        ring = self.ring
        zero = self.coeff_field.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ai in enumerate(self.coeffs):
            if ai.is_zero:
                continue
            qi = ring.q**i
            for j, bj in enumerate(other.coeffs):
                if not bj.is_zero:
                    out[i + j] = out[i + j] + ai * bj**qi
        return ring(out)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a skew polynomial")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def right_divmod(self, b):
        """(quot, rem) with self = quot * b + rem, tau-deg rem < tau-deg b.

        Always succeeds: the elimination step needs only division by a
        Frobenius power of lc(b), never a root extraction.
        """
        if b.is_zero:
            raise ZeroDivisionError("skew division by zero")
        ring = self.ring
        rem = list(self.coeffs)
        db = len(b.coeffs) - 1
        quot = [self.coeff_field.zero] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            k = len(rem) - 1 - db
            c = rem[-1].exact_div(b.lead ** (ring.q**k))
            quot[k] = c
            for j, bj in enumerate(b.coeffs):
                rem[k + j] = rem[k + j] - c * bj ** (ring.q**k)
            while rem and rem[-1].is_zero:
                rem.pop()
        return ring(quot), ring(rem)

    def left_divmod(self, b):
        """(quot, rem) with self = b * quot + rem.

        Each step needs a q^m-th root of a coefficient quotient; raises
        RootExtractionFailure when the root does not exist in the
        coefficient field.
        """
        if b.is_zero:
            raise ZeroDivisionError("skew division by zero")
        ring = self.ring
        rem = list(self.coeffs)
        db = len(b.coeffs) - 1
        quot = [self.coeff_field.zero] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            k = len(rem) - 1 - db
            target = rem[-1].exact_div(b.lead)
            c = target
            for _ in range(db):
                root = c.qth_root()
                if root is None:
                    raise RootExtractionFailure(
                        "coefficient has no q-th root in the coefficient field"
                    )
                c = root
            # here c^(q^db) == target must hold; verify (roots may not exist)
            if c ** (ring.q**db) != target:
                raise RootExtractionFailure(
                    "coefficient has no q^m-th root in the coefficient field"
                )
            quot[k] = c
            piece = b * ring.monomial(c, k)
            rem = list((ring(rem) - piece).coeffs)
        return ring(quot), ring(rem)

    def evaluate(self, x):
        """Value of the additive polynomial sum a_i x^(q^i)."""
        total = None
        q = self.ring.q
        for i, c in enumerate(self.coeffs):
            term = c * x ** (q**i)
            total = term if total is None else total + term
        if total is None:
            return x - x
        return total

    def __repr__(self):
        from .parsing import format_skew

        return format_skew(self)


_RING_CACHE = {}


def skew_ring(coeff_field, q):
    """Shared SkewPolyRing instance for a given coefficient field."""
    key = (id(coeff_field), q)
    if key not in _RING_CACHE:
        _RING_CACHE[key] = SkewPolyRing(coeff_field, q)
    return _RING_CACHE[key]


class SkewPolyRing:
    """R{tau} over a coefficient field R containing F_q."""

    def __init__(self, coeff_field, q):
        self.coeff_field = coeff_field
        self.q = q
        self.zero = SkewPoly(self, ())
        self.one = SkewPoly(self, (coeff_field.one,))

    def __call__(self, coeffs):
        if isinstance(coeffs, SkewPoly):
            return coeffs
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        return SkewPoly(self, tuple(coeffs))

    def tau(self):
        return SkewPoly(self, (self.coeff_field.zero, self.coeff_field.one))

    def monomial(self, c, k):
        if c.is_zero:
            return self.zero
        return SkewPoly(self, (self.coeff_field.zero,) * k + (c,))

    def constant(self, c):
        return self((c,))

    def __eq__(self, other):
        return (
            isinstance(other, SkewPolyRing)
            and self.coeff_field == other.coeff_field
            and self.q == other.q
        )

    def __hash__(self):
        return hash(("SkewPolyRing", id(self.coeff_field), self.q))

    def __repr__(self):
        return f"{self.coeff_field!r}{{tau}}"
