"""Text syntax for field elements, polynomials and skew polynomials.

The grammar is the usual one: `t^3+2*t+1`, `(t+1)/(t^2+t+1)`,
`u^2+1` for F_{p^e} elements, `x`-polynomials for quotient-field
elements and `T` for the twist in skew polynomials.  Printing and
parsing round-trip: parse(print(v)) == v.
"""

import re

TOKEN = re.compile(r"\s*(\d+|[A-Za-z_]\w*|\^|\+|\-|\*|/|\(|\))")


class ParseError(ValueError):
    pass


def tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"bad token at {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, ring, variables):
        self.tokens = tokens
        self.i = 0
        self.ring = ring
        self.vars = variables

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input at {self.peek()!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.next()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                value = value / rhs
        return value

    def factor(self):
        if self.peek() == "-":
            self.next()
            return -self.factor()
        value = self.atom()
        if self.peek() == "^":
            self.next()
            tok = self.next()
            if tok is None or not tok.isdigit():
                raise ParseError("exponent must be a nonnegative integer")
            value = value ** int(tok)
        return value

    def atom(self):
        tok = self.next()
        if tok is None:
            raise ParseError("unexpected end of input")
        if tok.isdigit():
            return self.ring(int(tok))
        if tok == "(":
            value = self.expr()
            if self.next() != ")":
                raise ParseError("missing closing parenthesis")
            return value
        if tok in self.vars:
            return self.vars[tok]
        raise ParseError(f"unknown symbol {tok!r}")


def parse_in_ring(text, ring, variables):
    return _Parser(tokenize(text), ring, variables).parse()


def standard_vars(ring):
    """Variable bindings for the standard tower rings."""
    from .extfield import QuotientField
    from .ff import GaloisField
    from .poly import PolyRing
    from .ratfunc import FractionField

    out = {}
    if isinstance(ring, GaloisField):
        if ring.e > 1:
            out["u"] = ring.generator_u()
        return out
    if isinstance(ring, PolyRing):
        out.update({k: ring(v) for k, v in standard_vars(ring.base).items()})
        out[ring.var] = ring.gen()
        return out
    if isinstance(ring, FractionField):
        out.update({k: ring(v) for k, v in standard_vars(ring.ring).items()})
        return out
    if isinstance(ring, QuotientField):
        out.update({k: ring(v) for k, v in standard_vars(ring.F).items()})
        out["x"] = ring.gen()
        return out
    raise TypeError(f"no standard variables for {ring!r}")


def parse_element(text, ring):
    """Parse an element of F_q, A, F, or a quotient field L."""
    return parse_in_ring(text, ring, standard_vars(ring))


def parse_skew(text, skew_ring):
    """Parse `c0*T^0 + c1*T^1 + ...` into a SkewPoly.

    The text is evaluated in the commutative ring R[T] and the
    coefficient list is reinterpreted; this is faithful because the
    printed form keeps all coefficients to the left of T-powers.
    """
    from .poly import PolyRing

    R = skew_ring.coeff_field
    commutative = PolyRing(R, "T")
    variables = standard_vars(R)
    variables = {k: commutative(v) for k, v in variables.items()}
    variables["T"] = commutative.gen()
    value = parse_in_ring(text, commutative, variables)
    return skew_ring(list(value.coeffs))


# ---------------------------------------------------------------------------
# Formatting


def format_ff(elem):
    field = elem.field
    if field.e == 1:
        return str(elem.code)
    coords = elem.coords()
    terms = []
    for k in range(field.e - 1, -1, -1):
        c = coords[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            terms.append(f"{head}u" + (f"^{k}" if k > 1 else ""))
    return "+".join(terms) if terms else "0"


def _needs_parens(s):
    return any(op in s for op in "+-/") or "*" in s


def format_poly(poly):
    if poly.is_zero:
        return "0"
    var = poly.ring.var
    one = poly.ring.base.one
    terms = []
    for k in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[k]
        if c.is_zero:
            continue
        cs = repr(c)
        if k == 0:
            terms.append(f"({cs})" if _needs_parens(cs) else cs)
            continue
        mono = var if k == 1 else f"{var}^{k}"
        if c == one:
            terms.append(mono)
        elif _needs_parens(cs):
            terms.append(f"({cs})*{mono}")
        else:
            terms.append(f"{cs}*{mono}")
    return "+".join(terms)


def format_ratfunc(x):
    if x.is_zero:
        return "0"
    num = format_poly(x.num)
    if x.den.degree == 0:
        return num
    den = format_poly(x.den)
    return f"({num})/({den})"


def format_skew(f):
    if f.is_zero:
        return "0"
    one = f.coeff_field.one
    terms = []
    for k, c in enumerate(f.coeffs):
        if c.is_zero:
            continue
        mono = f"T^{k}"
        if c == one:
            terms.append(mono)
        else:
            cs = repr(c)
            head = f"({cs})" if _needs_parens(cs) else cs
            terms.append(f"{head}*{mono}")
    return " + ".join(terms)
