"""Factorization of univariate polynomials over F_q.

Distinct-degree splitting followed by Cantor-Zassenhaus equal-degree
splitting.  The equal-degree stage draws random elements from an explicit
seed, so runs are reproducible; degree <= 3 inputs are handled by
deterministic trial division over the enumerated irreducibles.
"""

import random

from .poly import poly_gcd


def _powmod(a, n, m):
    """a^n mod m."""
    ring = a.ring
    result = ring.one
    a = a % m
    while n:
        if n & 1:
            result = (result * a) % m
        a = (a * a) % m
        n >>= 1
    return result


def squarefree_decomposition(f):
    """List of (squarefree monic factor, multiplicity) with product f.

    Standard characteristic-p routine: strips gcd(f, f') and recurses on
    p-th powers when the derivative vanishes.
    """
    p = f.ring.characteristic
    out = {}

    def accumulate(g, mult):
        if g.degree == 0:
            return
        d = g.derivative()
        if d.is_zero:
            root = g.qth_root(p)  # g is a polynomial in t^p
            accumulate(root, mult * p)
            return
        w = poly_gcd(g, d)
        sqf = g.exact_div(w)
        m = 1
        while sqf.degree > 0:
            y = poly_gcd(sqf, w)
            piece = sqf.exact_div(y)
            if piece.degree > 0:
                out[piece] = out.get(piece, 0) + m * mult
            sqf = y
            w = w.exact_div(y)
            m += 1
        if w.degree > 0:
            # leftover factors have multiplicity divisible by p, so w is a
            # p-th power; the recursion takes the root and scales by p
            accumulate(w, mult)

    accumulate(f.monic(), 1)
    return sorted(out.items(), key=lambda kv: (int(kv[0].degree), _lex_key(kv[0])))


def _lex_key(f):
    return tuple(c.code for c in f.coeffs)


def distinct_degree_split(f):
    """For squarefree monic f, list of (product of irreducible factors of
    degree d, d)."""
    ring = f.ring
    q = ring.base.q
    x = ring.gen()
    out = []
    h = x
    g = f
    d = 0
    while g.degree > 0:
        d += 1
        if 2 * d > g.degree:
            out.append((g, int(g.degree)))
            break
        h = _powmod(h, q, g)
        factor_d = poly_gcd(h - x, g)
        if factor_d.degree > 0:
            out.append((factor_d, d))
            g = g.exact_div(factor_d)
            h = h % g
    return out


def equal_degree_split(f, d, rng):
    """Cantor-Zassenhaus split of a squarefree monic f whose irreducible
    factors all have degree d."""
    ring = f.ring
    q = ring.base.q
    n = int(f.degree)
    if n == d:
        return [f]
    while True:
        a = ring.random_element(rng, n - 1)
        if a.is_zero:
            continue
        g = poly_gcd(a, f)
        if 0 < g.degree < n:
            pieces = [g, f.exact_div(g)]
        else:
            if q % 2 == 1:
                b = _powmod(a, (q**d - 1) // 2, f)
                g = poly_gcd(b - ring.one, f)
            else:
                # characteristic 2: use the trace map sum a^(2^i)
                e = ring.base.e
                b = ring.zero
                c = a
                for _ in range(d * e):
                    b = (b + c) % f
                    c = (c * c) % f
                g = poly_gcd(b, f)
            if not (0 < g.degree < n):
                continue
            pieces = [g, f.exact_div(g)]
        out = []
        for piece in pieces:
            out.extend(equal_degree_split(piece.monic(), d, rng))
        return out


def factor(f, seed=0):
    """Factor nonzero f over F_q into monic irreducibles.

    Returns (unit, [(irreducible, multiplicity), ...]) with the factors
    sorted by degree then lexicographically; unit * prod == f.
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    unit = f.lead
    if f.degree == 0:
        return unit, []
    monic = f.monic()
    if monic.degree <= 3:
        return unit, _factor_trial(monic)
    rng = random.Random(seed)
    out = {}
    for sqf, mult in squarefree_decomposition(monic):
        for block, d in distinct_degree_split(sqf):
            for irr in equal_degree_split(block, d, rng):
                out[irr] = out.get(irr, 0) + mult
    return unit, sorted(out.items(), key=lambda kv: (int(kv[0].degree), _lex_key(kv[0])))


def _factor_trial(f):
    out = []
    bound = int(f.degree)
    for p in enumerate_irreducibles(f.ring, bound):
        mult = 0
        while True:
            q, r = divmod(f, p)
            if r.is_zero:
                f = q
                mult += 1
            else:
                break
        if mult:
            out.append((p, mult))
        if f.degree == 0:
            break
    return out


def monic_polys_of_degree(ring, d):
    """All monic degree-d polynomials in a fixed lexicographic order
    (low-degree coefficient codes vary fastest)."""
    base = ring.base
    q = base.q
    out = []
    for code in range(q**d):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(base.element_from_code(c % q))
            c //= q
        coeffs.append(base.one)
        out.append(ring.from_coeffs(coeffs))
    return out


def enumerate_irreducibles(ring, d):
    """Ordered list of all monic irreducibles of degree <= d over F_q."""
    if d < 1:
        raise ValueError("degree bound must be >= 1")
    found = []
    for k in range(1, d + 1):
        for f in monic_polys_of_degree(ring, k):
            if all(not divmod(f, p)[1].is_zero for p in found if 2 * int(p.degree) <= k):
                found.append(f)
    return found


def is_irreducible(f):
    """Irreducibility over F_q by trial division (desk-scale degrees)."""
    if f.degree < 1:
        return False
    half = int(f.degree) // 2
    if half == 0:
        return True
    for p in enumerate_irreducibles(f.ring, half):
        if divmod(f, p)[1].is_zero:
            return False
    return True
