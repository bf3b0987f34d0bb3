import random
from fractions import Fraction

import pytest

from nicomachus.identities import (
    CATALOG, CoeffVector, brute_terms, build_terms, catalog_verify, closed_sum, cubic_pair_report,
    discriminant_report, double_equation_checks, expected_row_minors, factor_F, matrix_M, matrix_report,
    solve_cubic_pair, sqrt11_vector, symbolic_discriminant, tri, verify_theorem1,
)
from nicomachus.poly import MPoly, det

m = MPoly.var("m")
x = MPoly.var("x")


@pytest.mark.parametrize("parity", ["odd", "even"])
def test_three_term_identity_report_passes(parity):
    rep = verify_theorem1(parity)
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("parity", ["odd", "even"])
def test_expanded_terms_match_brute_force(parity):
    t = build_terms(parity)
    rng = random.Random(1)
    for mv in range(2, 61):
        xv = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        L, R, XP = brute_terms(parity, mv, xv)
        vals = {"m": mv, "x": xv}
        assert t.L.evaluate(vals) == L
        assert t.R.evaluate(vals) == R
        assert t.XP.evaluate(vals) == XP
        assert L - R == XP


def test_x_zero_is_nicomachus():
    # at x = 0 the odd L is 1^3 + 2^3 + ... + (2m+1)^3
    t = build_terms("odd")
    for mv in range(0, 15):
        cubes = sum(k**3 for k in range(1, 2 * mv + 2))
        assert t.L.evaluate({"m": mv, "x": 0}) == cubes
        assert t.R.evaluate({"m": mv, "x": 0}) == cubes


@pytest.mark.parametrize("parity", ["odd", "even"])
def test_P_has_positive_integer_coefficients(parity):
    P = build_terms(parity).P
    for mv in range(3, 41):
        coeffs = P.substitute("m", mv).coefficients("x")
        values = [c.constant_value() for c in coeffs]
        assert len(values) == 3
        assert all(Fraction(v).denominator == 1 and v > 0 for v in values), (mv, values)


def test_R_is_perfect_square_of_linear_form():
    t = build_terms("odd")
    assert t.R == (tri(2 * m + 1) + (1 + tri(m)) * x) ** 2
    assert t.R.degree("x") == 2


def test_matrix_reports_pass():
    assert matrix_report("mx").ok
    assert matrix_report("xm").ok


def test_matrix_M_row_minors_direct():
    M = matrix_M("odd")
    for i, want in enumerate(expected_row_minors()):
        assert det(M.drop_row(i)) == want
    assert det(M.drop_row(2)) + det(M.drop_row(3)) == 0


def test_first_minor_closed_form():
    want = Fraction(1, 4) * (1 + m) * (2 + m + m**2) * (4 + 8 * m + m**2 + 19 * m**3 + 29 * m**4 + 11 * m**5)
    assert det(matrix_M("odd").drop_row(0)) == want
    assert det(matrix_M("odd").drop_row(2)) == (1 + m) ** 3 * (2 + m) * (1 + 2 * m) ** 2 * (-1 - 2 * m + m**2)


def test_closed_sum_against_brute_force():
    rng = random.Random(4)
    for _ in range(20):
        v = [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(6)]
        S = closed_sum(CoeffVector(*v))
        a, b, c, d, e, f = v
        for mv in range(0, 12):
            brute = sum((a + b * k + c * k * k) * (d + e * k + f * k * k) for k in range(1, mv + 1))
            assert S.evaluate({"m": mv}) == brute


def test_discriminant_report_passes():
    rep = discriminant_report()
    assert rep.ok, rep.failures()
    assert rep.get("disc.term-count.discriminant").actual == "1114"


def test_F_vanishes_on_sqrt11_vector():
    assert factor_F(sqrt11_vector()) == 0
    assert factor_F(CoeffVector(1, 0, 0, 1, 0, 0)) == 30


def test_discriminant_against_sympy_at_random_points():
    sympy = pytest.importorskip("sympy")
    D = symbolic_discriminant()
    ms = sympy.Symbol("m")
    k = sympy.Symbol("k")
    rng = random.Random(8)
    compared = 0
    for _ in range(4):
        v = [rng.choice([-5, -3, -2, -1, 1, 2, 4]) for _ in range(6)]
        a, b, c, d, e, f = v
        S = sympy.summation((a + b * k + c * k**2) * (d + e * k + f * k**2), (k, 1, ms))
        poly = sympy.Poly(sympy.expand(S), ms)
        if poly.degree() < 2:
            continue
        theirs = sympy.discriminant(poly)
        ours = D.evaluate(dict(zip("abcdef", v)))
        # same convention: (-1)^(n(n-1)/2) Res(p, p') / lc(p); only differs if the degree dropped
        if poly.degree() == 5:
            assert ours == Fraction(str(theirs))
            compared += 1
    assert compared > 0


def test_cubic_pair():
    pair = solve_cubic_pair()
    assert str(pair.A3) == "m^3 + 2/3*m^2 - 1/2*m + 3/5"
    assert str(pair.B3) == "m^3 - 1/3*m - 1/10"
    assert len(pair.kernel) >= 1
    assert cubic_pair_report().ok


def test_double_equation():
    assert double_equation_checks().ok


@pytest.mark.parametrize("ident", sorted(CATALOG))
def test_catalog_entry(ident):
    rep = catalog_verify(ident)
    assert rep.ok, rep.failures()


def test_catalog_unknown_id():
    with pytest.raises(KeyError):
        catalog_verify("no-such-identity")
