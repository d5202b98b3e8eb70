"""Lattices in F_infinity^r: reduction, covolume calculus, indices,
the containment sandwich, and the rank 2 j-size model."""

import random
from fractions import Fraction

import pytest

from drinfeld import (
    LatticeBasis,
    analytic_isogeny_check,
    covolume,
    gekeler_j_log,
    is_reduced,
    log_index,
    parse_element,
    reduce,
)
from drinfeld.base import rational_function_field
from drinfeld.lattice import (
    det,
    random_containment_instance,
    random_lattice,
    random_reduced_lattice,
    smith_invariant_factors,
)


def _basis(q, rows):
    F = rational_function_field(q)
    parsed = [[parse_element(e, F) for e in row] for row in rows]
    return LatticeBasis.from_rows(F, parsed)


def test_reduce_diagonal():
    red = reduce(_basis(2, [["t", "0"], ["0", "1"]]))
    assert red.minima_logs == [Fraction(1), Fraction(0)]
    assert red.log_covolume == 1
    assert red.is_reduced


def test_reduce_cancelling_columns():
    # columns (t, 1) and (t+1, 1): det = -1, so both minima drop to 0
    red = reduce(_basis(2, [["t", "t+1"], ["1", "1"]]))
    assert red.minima_logs == [Fraction(0), Fraction(0)]
    assert red.log_covolume == 0


def test_reduce_invariance_under_unimodular():
    F = rational_function_field(2)
    rng = random.Random(81)
    for _ in range(20):
        L = random_lattice(F, 3, rng)
        red = reduce(L)
        # elementary unimodular move: add t * (col 0) to col 1
        cols = [list(c) for c in L.columns]
        cols[1] = [a + F.t * b for a, b in zip(cols[1], cols[0])]
        red2 = reduce(LatticeBasis(F, cols))
        assert red.minima_logs == red2.minima_logs


def test_singular_rejected():
    with pytest.raises(ValueError):
        _basis(2, [["t", "t"], ["1", "1"]])


@pytest.mark.parametrize("r", [2, 3, 4])
def test_covolume_calculus(r):
    F = rational_function_field(2)
    rng = random.Random(82)
    for _ in range(20):
        L = random_lattice(F, r, rng)
        base = covolume(L).log_value
        assert base == Fraction(det(F, L.columns).deg_infinity())
        # scalar action: log D(cL) = r log|c| + log D(L)
        c = F.random_element(rng, 2, nonzero=True)
        assert covolume(L.scaled(c)).log_value == base + r * c.deg_infinity()
        # GL_r action via another lattice as the transform
        G = random_lattice(F, r, rng)
        cols = []
        for gcol in G.columns:
            vec = [F.zero] * r
            for j, coeff in enumerate(gcol):
                for i in range(r):
                    vec[i] = vec[i] + L.columns[j][i] * coeff
            cols.append(vec)
        moved = LatticeBasis(F, cols)
        assert (
            covolume(moved).log_value
            == base + Fraction(det(F, G.columns).deg_infinity())
        )


def test_is_reduced_cases():
    assert is_reduced(_basis(2, [["1", "0"], ["0", "1"]]))
    assert not is_reduced(_basis(2, [["t", "0"], ["0", "t"]]))
    assert is_reduced(_basis(2, [["t", "0"], ["0", "1"]]))


def test_log_index_examples():
    A2 = _basis(2, [["1", "0"], ["0", "1"]])
    scaled = _basis(2, [["t", "0"], ["0", "t"]])
    assert log_index(scaled, A2) == 2
    assert log_index(A2, A2) == 0
    sub = _basis(2, [["t", "0"], ["1", "t+1"]])
    assert log_index(sub, A2) == 2


def test_log_index_requires_containment():
    A2 = _basis(2, [["1", "0"], ["0", "1"]])
    frac = _basis(2, [["1/t", "0"], ["0", "1"]])
    with pytest.raises(ValueError):
        log_index(frac, A2)


def test_smith_invariant_factors():
    F = rational_function_field(2)
    A = F.ring
    t = A.gen()
    cols = [[t, A.zero], [A.one, t + A.one]]
    facs = smith_invariant_factors(cols)
    assert len(facs) == 2
    assert divmod(facs[1], facs[0])[1].is_zero
    prod = facs[0] * facs[1]
    assert int(prod.degree) == 2


def test_index_matches_covolume_ratio():
    F = rational_function_field(3)
    rng = random.Random(83)
    for _ in range(15):
        sup = random_lattice(F, 2, rng)
        A = F.ring
        while True:
            C = [[A.random_element(rng, 1) for _ in range(2)] for _ in range(2)]
            if not det(F, [[F.from_poly(p) for p in col] for col in C]).is_zero:
                break
        cols = []
        for ccol in C:
            vec = [F.zero] * 2
            for j, coeff in enumerate(ccol):
                for i in range(2):
                    vec[i] = vec[i] + sup.columns[j][i] * F.from_poly(coeff)
            cols.append(vec)
        sub = LatticeBasis(F, cols)
        assert (
            log_index(sub, sup)
            == covolume(sub).log_value - covolume(sup).log_value
        )


def test_analytic_check_trivial():
    A2 = _basis(2, [["1", "0"], ["0", "1"]])
    F = A2.field
    rep = analytic_isogeny_check(A2, A2, F.one)
    assert rep["ok"]
    assert rep["log_deg_f"] == 0
    assert rep["covolume_difference"] == 0

    rep = analytic_isogeny_check(A2, A2, F.t)
    assert rep["ok"]
    assert rep["log_deg_f"] == 2
    assert -rep["log_deg_fhat"] <= 0 <= rep["log_deg_f"]


@pytest.mark.parametrize("r", [2, 3])
def test_analytic_check_random(r):
    F = rational_function_field(2)
    rng = random.Random(84)
    for _ in range(12):
        lam, lam2, alpha = random_containment_instance(F, r, rng)
        rep = analytic_isogeny_check(lam, lam2, alpha)
        assert rep["ok"], rep


def test_random_reduced_lattice_is_reduced():
    F = rational_function_field(3)
    rng = random.Random(85)
    for _ in range(10):
        assert is_reduced(random_reduced_lattice(F, 3, rng))


def test_gekeler_model_values():
    assert gekeler_j_log(2, 1) == 4
    assert gekeler_j_log(2, 0) == 2
    assert gekeler_j_log(2, Fraction(3, 2)) == 6
    assert gekeler_j_log(3, 2) == 27
    with pytest.raises(ValueError):
        gekeler_j_log(2, -1)


def test_gekeler_model_shape():
    """q^d <= max(model/q, 1), monotone, convex on a rational grid."""
    q = 2
    grid = [Fraction(k, 4) for k in range(0, 21)]
    vals = [gekeler_j_log(q, d) for d in grid]
    for d, v in zip(grid, vals):
        # exact comparison: q^(a/b) <= M iff q^a <= M^b
        m = max(Fraction(v, q), Fraction(1))
        assert Fraction(q) ** d.numerator <= m**d.denominator
    for a, b in zip(vals, vals[1:]):
        assert b >= a
    for a, b, c in zip(vals, vals[1:], vals[2:]):
        assert c - b >= b - a
