from fractions import Fraction

import pytest

from nicomachus.sequences import (
    PRESETS, U_DENOM, U_NUMER, alpha, alpha_all, alpha_report, alpha_via_u, congruence_preset, congruence_scan,
    power_series, remark6_construct, theorem4_brute, u_closed, u_recurrence, u_recurrence_states, u_report,
    u_series, verify_sqrt11_limit, verify_theorem4,
)
from nicomachus.cfrac import cf_rational

FIRST_U = [1, 901, 359101, 142921801]


def test_u_first_values():
    assert u_series(4) == FIRST_U
    assert [u_closed(k) for k in range(1, 5)] == FIRST_U
    assert [u_recurrence(k).u for k in range(1, 5)] == FIRST_U


def test_u_series_matches_sympy_expansion():
    sympy = pytest.importorskip("sympy")
    X = sympy.Symbol("x")
    num = sum(c * X**i for i, c in enumerate(U_NUMER))
    den = sum(c * X**i for i, c in enumerate(U_DENOM))
    ser = sympy.series(num / den, X, 0, 25).removeO()
    theirs = [int(ser.coeff(X, i)) for i in range(25)]
    assert u_series(25) == theirs


def test_u_series_linear_recurrence():
    u = u_series(30)
    for i in range(3, 30):
        assert u[i] == 399 * u[i - 1] - 399 * u[i - 2] + u[i - 3]


def test_three_methods_agree_to_60():
    series = u_series(60)
    states = u_recurrence_states(60)
    for k in range(1, 61):
        assert series[k - 1] == u_closed(k) == states[k - 1].u


def test_recurrence_states_record_square_roots():
    st = u_recurrence_states(3)
    assert [(s.u, s.s) for s in st] == [(1, 15), (901, 5985), (359101, st[2].s)]
    for s in u_recurrence_states(200):
        assert s.s * s.s == (3 + 2 * s.u) * (23 + 22 * s.u)
        assert s.u % 900 == 1


def test_u_invalid_index():
    with pytest.raises(ValueError):
        u_closed(0)


def test_alpha_values():
    assert alpha(1).value == 1
    assert alpha(2).value == Fraction(22, 19)
    assert alpha(3).value == Fraction(439, 379)
    assert alpha_via_u(u_recurrence(2)) == Fraction(22, 19)
    for method in ("convergent", "recurrence", "via_u"):
        assert alpha(5, method).value == alpha(5).value


def test_alpha_continued_fraction_pattern():
    for k in range(1, 41):
        v = alpha_all(k).value
        assert cf_rational(v).quotients == [1] + [6, 3] * (k - 1)
        assert v < Fraction(58, 50)


def test_alpha_report():
    assert alpha_report(40).ok


def test_u_report_methods():
    for method in ("series", "closed", "recurrence", "all"):
        assert u_report(12, method).ok


def test_sqrt11_family_brute_force_value():
    lhs, rhs = theorem4_brute(1, 3)
    assert lhs == rhs == 61


def test_sqrt11_family_symbolic():
    rep = verify_theorem4(10)
    assert rep.ok, rep.failures()


def test_sqrt11_limit():
    rep = verify_sqrt11_limit()
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_congruence_presets(name):
    rep = congruence_preset(name, 200)
    assert rep.ok, rep.failures()


def test_mod253_preset_first_coefficient():
    numer, denom, _ = PRESETS["remark6"]
    assert power_series(numer, denom, 2)[1] == 254


def test_congruence_scan_reports_violations():
    # u_2 = 901 = 5 mod 7
    rep = congruence_scan(U_NUMER, U_DENOM, 7, 20)
    check = rep.get("cong.all-residues-one")
    assert check.status == "fail"
    assert check.payload["violations"][0] == [2, 5]


def test_construction_works_for_any_admissible_modulus():
    for mod in (124, 125, 600, 1001):
        assert remark6_construct(mod, 60)[2].ok


def test_power_series_zero_constant_term():
    with pytest.raises(ValueError):
        power_series((1,), (0, 1), 5)


def test_mod_m_construction():
    numer, denom, rep = remark6_construct(253)
    assert numer == (1, 130, 1)
    assert rep.ok
    _, _, small = remark6_construct(124, 30)
    assert small.get("construct.numerator").actual == "1 + 1*x + x^2"
    with pytest.raises(ValueError):
        remark6_construct(123)
