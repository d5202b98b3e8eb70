"""Finite fields F_q with q = p^e.

Elements are encoded as integers in [0, q): the base-p digits of the code
are the coordinates with respect to the power basis 1, u, ..., u^(e-1),
where u is a root of a fixed monic irreducible modulus of degree e over
F_p.  The modulus is the one whose non-leading coefficient vector, read as
a base-p integer, is smallest; this makes field construction deterministic.

Multiplication and inversion tables are precomputed, so the fields are
meant for small q (desk scale).
"""

from functools import lru_cache


def is_prime(n):
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def factor_prime_power(q):
    """Return (p, e) with q = p^e, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if is_prime(p):
            e, m = 0, q
            while m % p == 0:
                m //= p
                e += 1
            if m == 1:
                return p, e
            if e > 0:
                break
    raise ValueError(f"{q} is not a prime power")


def _poly_mul_mod_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        if c:
            shift = len(a) - 1 - dm
            for j in range(dm + 1):
                a[shift + j] = (a[shift + j] - c * m[j]) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _smallest_irreducible(p, e):
    """Monic irreducible of degree e over F_p with the smallest
    non-leading coefficient vector (as a base-p integer)."""
    for code in range(p**e):
        coeffs = []
        c = code
        for _ in range(e):
            coeffs.append(c % p)
            c //= p
        m = coeffs + [1]
        if _is_irreducible_mod_p(m, p):
            return m
    raise AssertionError("no irreducible found")  # cannot happen


def _is_irreducible_mod_p(m, p):
    e = len(m) - 1
    if e == 1:
        return True
    if m[0] == 0:
        return False
    # Trial division by every monic polynomial of degree <= e/2; the
    # degrees in play here are tiny, so this is fast enough.
    for dcode in range(p, p ** ((e // 2) + 1)):
        div = []
        c = dcode
        while c:
            div.append(c % p)
            c //= p
        if div[-1] != 1 or len(div) < 2:
            continue
        if not _poly_rem(m, div, p):
            return False
    return True


def _poly_rem(a, b, p):
    """Remainder of a by monic-leading b over F_p (b need not be monic)."""
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = (a[-1] * inv_lead) % p
        if c:
            shift = len(a) - 1 - db
            for j in range(db + 1):
                a[shift + j] = (a[shift + j] - c * b[j]) % p
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


class FFElem:
    """Element of a small finite field; immutable."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code

    @property
    def is_zero(self):
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        return (
            isinstance(other, FFElem)
            and self.field is other.field
            and self.code == other.code
        )

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __add__(self, other):
        f = self.field
        return FFElem(f, f.add_table[self.code][other.code])

    def __neg__(self):
        f = self.field
        return FFElem(f, f.neg_table[self.code])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        return FFElem(f, f.mul_table[self.code][other.code])

    def __truediv__(self, other):
        f = self.field
        if other.code == 0:
            raise ZeroDivisionError("division by zero in F_q")
        return FFElem(f, f.mul_table[self.code][f.inv_table[other.code]])

    def exact_div(self, other):
        return self / other

    def inverse(self):
        f = self.field
        if self.code == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FFElem(f, f.inv_table[self.code])

    def __pow__(self, n):
        f = self.field
        if n < 0:
            return self.inverse() ** (-n)
        if self.code == 0:
            return f.one if n == 0 else f.zero
        # the multiplicative group has order q - 1
        n %= f.q - 1
        result, base = f.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def pth_root(self):
        """Unique p-th root (Frobenius is bijective on F_q)."""
        return self ** (self.field.p ** (self.field.e - 1))

    def qth_root(self):
        """q-th root; the q-power Frobenius fixes F_q pointwise."""
        return self

    def coords(self):
        """Coordinates over the prime field, low degree first."""
        c, out = self.code, []
        for _ in range(self.field.e):
            out.append(c % self.field.p)
            c //= self.field.p
        return out

    def __repr__(self):
        from .parsing import format_ff

        return format_ff(self)


class GaloisField:
    """The field F_q, q = p^e, with precomputed operation tables."""

    def __init__(self, q):
        self.q = q
        self.p, self.e = factor_prime_power(q)
        self.modulus = _smallest_irreducible(self.p, self.e)
        self.characteristic = self.p
        self._build_tables()
        self.zero = FFElem(self, 0)
        self.one = FFElem(self, 1)

    def _decode(self, code):
        c, out = code, []
        for _ in range(self.e):
            out.append(c % self.p)
            c //= self.p
        while out and out[-1] == 0:
            out.pop()
        return out

    def _encode(self, coeffs):
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + (c % self.p)
        return code

    def _build_tables(self):
        p, q = self.p, self.q
        self.add_table = [
            [
                self._encode(
                    [
                        (x + y) % p
                        for x, y in zip(
                            self._decode(a) + [0] * self.e,
                            self._decode(b) + [0] * self.e,
                        )
                    ]
                )
                for b in range(q)
            ]
            for a in range(q)
        ]
        self.neg_table = [
            self._encode([(-x) % p for x in self._decode(a)] + [0]) for a in range(q)
        ]
        self.mul_table = []
        for a in range(q):
            row = []
            for b in range(q):
                prod = _poly_mul_mod_p(
                    self._decode(a) or [0], self._decode(b) or [0], p
                )
                row.append(self._encode(_poly_mod(prod, self.modulus, p) + [0]))
            self.mul_table.append(row)
        self.inv_table = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul_table[a][b] == 1:
                    self.inv_table[a] = b
                    break

    def __call__(self, value):
        """Coerce an integer (reduced mod p) or an element of this field."""
        if isinstance(value, FFElem):
            if value.field is not self:
                raise ValueError("element of a different field")
            return value
        return FFElem(self, value % self.p)

    def element_from_code(self, code):
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for F_{self.q}")
        return FFElem(self, code)

    def elements(self):
        return [FFElem(self, c) for c in range(self.q)]

    def random_element(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return FFElem(self, rng.randrange(lo, self.q))

    def generator_u(self):
        """The class of u (power-basis generator); only for e > 1."""
        if self.e == 1:
            raise ValueError("prime field has no extension generator")
        return FFElem(self, self.p)

    def __eq__(self, other):
        return isinstance(other, GaloisField) and other.q == self.q

    def __hash__(self):
        return hash(("GaloisField", self.q))

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def GF(q):
    """Shared F_q instance (tables are built once per q)."""
    return GaloisField(q)
