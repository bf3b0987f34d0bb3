"""The integer sequence u_k, the convergents alpha_k of (-1+sqrt 11)/2, and
power-series congruence scans.

Indexing is 1-based throughout: ``u_1 = 1`` is the constant term of the
generating function, ``u_2 = 901`` the coefficient of ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .exact import Surd, factorize, isqrt
from .identities import CoeffVector, closed_sum, tri
from .poly import MPoly, discriminant
from .report import Check, Report, check_equal, check_true, timed

x = MPoly.var("x")
m = MPoly.var("m")
jv = MPoly.var("j")

U_NUMER = (1, 502, 1)
U_DENOM = (1, -399, 399, -1)  # (1 - x)(1 - 398x + x^2)

PRESETS = {
    "prop3": ((1, 502, 1), (1, -399, 399, -1), 900),
    "remark6": ((1, 130, 1), (1, -124, 124, -1), 253),
}


class SequenceInvariantError(AssertionError):
    """A definitional route produced a value that breaks a proven invariant."""


@dataclass(frozen=True)
class SeqState:
    k: int
    u: int
    s: int  # s*s == (3 + 2u)(23 + 22u)


@dataclass(frozen=True)
class AlphaValue:
    k: int
    value: Fraction


def power_series(numer: Sequence[int], denom: Sequence[int], count: int) -> list:
    """First ``count`` coefficients of numer/denom (coefficient lists, constant first)."""
    if not denom or denom[0] == 0:
        raise ValueError("denominator must have a nonzero constant term")
    d0 = denom[0]
    out: list = []
    for i in range(count):
        acc = numer[i] if i < len(numer) else 0
        for k in range(1, min(i, len(denom) - 1) + 1):
            acc -= denom[k] * out[i - k]
        if isinstance(acc, int) and acc % d0 == 0:
            out.append(acc // d0)
        else:
            out.append(Fraction(acc, 1) / d0)
    return out


def u_series(count: int) -> list[int]:
    if count < 1:
        raise ValueError("count must be >= 1")
    return power_series(U_NUMER, U_DENOM, count)


def u_closed(k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    s = Surd.sqrt(11)
    e = 2 * k - 1
    val = 5 * (10 - 3 * s) ** e + 5 * (10 + 3 * s) ** e - 56
    if val.surd != 0 or val.rational.denominator != 1 or val.rational.numerator % 44:
        raise SequenceInvariantError(f"closed form not an integer multiple of 44 at k={k}: {val}")
    return val.rational.numerator // 44


def u_recurrence_states(k: int) -> list[SeqState]:
    """States 1..k of the square-root recurrence, certifying each square."""
    if k < 1:
        raise ValueError("k must be >= 1")
    states = []
    u = 1
    for i in range(1, k + 1):
        s, exact = isqrt((3 + 2 * u) * (23 + 22 * u))
        if not exact:
            raise SequenceInvariantError(f"(3+2u)(23+22u) is not a square at k={i}, u={u}")
        states.append(SeqState(i, u, s))
        u = 252 + 199 * u + 30 * s
    return states


def u_recurrence(k: int) -> SeqState:
    return u_recurrence_states(k)[-1]


def alpha_convergent(k: int) -> Fraction:
    quotients = [1] + [6, 3] * (k - 1)
    val = Fraction(quotients[-1])
    for a in reversed(quotients[:-1]):
        val = a + 1 / val
    return val


def alpha_recurrence_values(k: int) -> list[Fraction]:
    vals = [Fraction(1)]
    while len(vals) < k:
        a = vals[-1]
        vals.append((15 + 7 * a) / (13 + 6 * a))
    return vals


def alpha_via_u(state: SeqState) -> Fraction:
    # sqrt(11 - 10/(3+2u)) = s/(3+2u) exactly
    return (Fraction(state.s, 3 + 2 * state.u) - 1) / 2


Method = Literal["convergent", "recurrence", "via_u"]


def alpha(k: int, method: Method = "convergent") -> AlphaValue:
    if k < 1:
        raise ValueError("k must be >= 1")
    if method == "convergent":
        v = alpha_convergent(k)
    elif method == "recurrence":
        v = alpha_recurrence_values(k)[-1]
    elif method == "via_u":
        v = alpha_via_u(u_recurrence(k))
    else:
        raise ValueError(f"unknown alpha method {method!r}")
    return AlphaValue(k, v)


def alpha_all(k: int) -> AlphaValue:
    vals = {meth: alpha(k, meth).value for meth in ("convergent", "recurrence", "via_u")}
    if len(set(vals.values())) != 1:
        raise SequenceInvariantError(f"alpha methods disagree at k={k}: {vals}")
    return AlphaValue(k, vals["convergent"])


# ---------------------------------------------------------------------------
# reports


def u_report(k: int, method: str = "all") -> Report:
    rep = Report("seq u", {"k": k, "method": method})
    with timed(rep):
        series = u_series(k) if method in ("series", "all") else None
        closed = [u_closed(i) for i in range(1, k + 1)] if method in ("closed", "all") else None
        states = u_recurrence_states(k) if method in ("recurrence", "all") else None
        rec = [s.u for s in states] if states else None
        values = next(v for v in (series, closed, rec) if v is not None)
        rep.add(Check("u.values", "info", "", ",".join(map(str, values)), "computed",
                      payload={"values": [str(v) for v in values], "indexBase": 1}))
        if method == "all":
            rep.add(check_true("u.series-equals-closed", series == closed, provenance="cross-method"))
            rep.add(check_true("u.series-equals-recurrence", series == rec, provenance="cross-method"))
        known = [1, 901, 359101, 142921801]
        n = min(k, 4)
        rep.add(check_equal("u.first-values", ",".join(map(str, known[:n])),
                            ",".join(map(str, values[:n])), "series"))
        bad = [i + 1 for i, v in enumerate(values) if v % 900 != 1]
        rep.add(check_equal("u.mod-900", "[]", str(bad), "computed"))
        if states:
            rep.add(check_true("u.somos-squares", all(s.s * s.s == (3 + 2 * s.u) * (23 + 22 * s.u)
                                                      for s in states), provenance="isqrt"))
        rep.add(Check("u.indexing", "info", "u_k = coefficient of x^(k-1)", "u_1=1, u_2=901", "convention"))
    return rep


def alpha_report(k: int) -> Report:
    from .cfrac import cf_quadratic, cf_rational

    rep = Report("seq alpha", {"k": k, "method": "all"})
    with timed(rep):
        conv = [alpha_convergent(i) for i in range(1, k + 1)]
        rec = alpha_recurrence_values(k)
        via = [alpha_via_u(s) for s in u_recurrence_states(k)]
        rep.add(check_true("alpha.convergent-equals-recurrence", conv == rec, provenance="cross-method"))
        rep.add(check_true("alpha.convergent-equals-via-u", conv == via, provenance="cross-method"))
        bad = []
        for i, a in enumerate(conv, start=1):
            if cf_rational(a).quotients != [1] + [6, 3] * (i - 1):
                bad.append(i)
        rep.add(check_equal("alpha.cf-pattern", "[]", str(bad), "cf_rational"))
        inc = all(a < b for a, b in zip(conv, conv[1:]))
        rep.add(check_true("alpha.increasing", inc, provenance="exact-comparison"))
        rep.add(check_true("alpha.bounded-58/50", all(a < Fraction(58, 50) for a in conv),
                           provenance="exact-comparison"))
        limit = cf_quadratic(Surd(Fraction(-1, 2), Fraction(1, 2), 11))
        rep.add(check_equal("alpha.limit-cf", "[1; period (6, 3)]",
                            f"[{limit.quotients[0]}; period {tuple(limit.quotients[limit.period[0]:])}]",
                            "cf_quadratic"))
        rep.add(Check("alpha.value", "info", "", str(conv[-1]), "computed"))
    return rep


def summand_line(u: int) -> MPoly:
    d = 3 + 2 * u
    return (
        -1 + jv + Fraction(8 + 7 * u, d) * jv**2 - Fraction(13 + 12 * u, d) * jv**3
        + Fraction(5 * (1 + u), d) * jv**4
    )


def theorem4_rhs(u: int) -> MPoly:
    t = tri(m - 1)
    return t * (Fraction(1, 3 * (3 + 2 * u)) * (1 + m) * (2 - 3 * m**2) + (3 + 2 * m) * t)


def theorem4_vector(a: Fraction) -> CoeffVector:
    b, c = a, -(1 + a)
    return CoeffVector(1, b, c, -1, -c, -b)


def theorem4_brute(k: int, mv: int) -> tuple[Fraction, Fraction]:
    st = u_recurrence(k)
    a = alpha_via_u(st)
    v = theorem4_vector(a)
    lhs = sum((v.a + v.b * i + v.c * i * i) * (v.d + v.e * i + v.f * i * i) for i in range(1, mv + 1))
    rhs = theorem4_rhs(st.u).evaluate({"m": mv})
    return Fraction(lhs), Fraction(rhs)


def verify_theorem4(k: int) -> Report:
    rep = Report("verify thm4", {"k": k})
    with timed(rep):
        for i in range(1, k + 1):
            st = u_recurrence(i)
            a = alpha_all(i).value
            v = theorem4_vector(a)
            S = closed_sum(v)
            rep.add(check_equal(f"thm4.k{i:03d}.closed-form", "0", str(S - theorem4_rhs(st.u)), "symbolic"))
            summand = (v.a + v.b * jv + v.c * jv**2) * (v.d + v.e * jv + v.f * jv**2)
            rep.add(check_equal(f"thm4.k{i:03d}.summand", "0", str(summand - summand_line(st.u)), "symbolic"))
        lhs, rhs = theorem4_brute(1, 3)
        rep.add(check_equal("thm4.brute-k1-m3", "61 = 61", f"{lhs} = {rhs}", "brute-force"))
    return rep


def verify_sqrt11_limit(kmax: int = 30) -> Report:
    from .identities import sqrt11_vector

    rep = Report("verify sqrt11")
    with timed(rep):
        S = closed_sum(sqrt11_vector())
        rep.add(check_equal("sqrt11.two-m-plus-3-form", "0", str(S - (2 * m + 3) * tri(m - 1) ** 2), "symbolic"))
        b = (Surd.sqrt(11) - 1) / 2
        c = (-Surd.sqrt(11) - 1) / 2
        summand = (1 + b * jv + c * jv**2) * (-1 - c * jv - b * jv**2)
        from .poly import sum_over

        S2 = sum_over(summand, "j", 1, m)
        rep.add(check_equal("sqrt11.eq-over-2m-plus-3", "0", str(S2 - (2 * m + 3) * tri(m - 1) ** 2), "symbolic"))
        at3 = S.evaluate({"m": 3})
        rep.add(check_equal("sqrt11.at-m3", "81", str(at3.rational if isinstance(at3, Surd) else at3),
                            "surd-arithmetic"))
        # the k-dependent part of the right side is T_{m-1}(1+m)(2-3m^2) / (3(3+2u_k))
        corrections = [theorem4_rhs(st.u) - (3 + 2 * m) * tri(m - 1) ** 2 for st in u_recurrence_states(kmax)]
        scaled = [c * (3 * (3 + 2 * st.u)) for c, st in zip(corrections, u_recurrence_states(kmax))]
        numer = tri(m - 1) * (1 + m) * (2 - 3 * m**2)
        rep.add(check_true("sqrt11.correction-numerator-k-free", all(s == numer for s in scaled),
                           provenance="symbolic"))
        dens = [3 * (3 + 2 * st.u) for st in u_recurrence_states(kmax)]
        rep.add(check_true("sqrt11.denominator-increasing", all(a < b for a, b in zip(dens, dens[1:])),
                           provenance="exact-comparison"))
    return rep


def _residue(c, modulus: int) -> int:
    if isinstance(c, int):
        return c % modulus
    c = Fraction(c)
    return (c.numerator * pow(c.denominator, -1, modulus)) % modulus


def congruence_scan(numer: Sequence[int], denom: Sequence[int], modulus: int, count: int,
                    command: str = "cong scan", params: dict | None = None) -> Report:
    rep = Report(command, params or {"modulus": modulus, "count": count})
    with timed(rep):
        coeffs = power_series(numer, denom, count)
        residues = [_residue(c, modulus) for c in coeffs]
        bad = [(i, r) for i, r in enumerate(residues, start=1) if r != 1 % modulus]
        rep.add(Check(
            "cong.all-residues-one",
            "pass" if not bad else "fail",
            f"{count} coefficients = 1 mod {modulus}",
            f"{count - len(bad)} of {count}",
            "power-series",
            payload={"violations": [[i, r] for i, r in bad], "indexBase": 1},
        ))
    return rep


def _factor_str(n: int) -> str:
    if n in (0, 1, -1):
        return str(n)
    fs = factorize(n)
    body = "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(fs.items()))
    return ("-" if n < 0 else "") + body


def _disc_int(coeffs: Sequence[int]) -> int:
    return discriminant(MPoly.from_coeffs("x", list(coeffs)), "x").constant_value()


def congruence_preset(name: str, count: int) -> Report:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}")
    numer, denom, modulus = PRESETS[name]
    rep = congruence_scan(numer, denom, modulus, count, params={"preset": name, "count": count})
    expected = {
        "prop3": [((1, -398, 1), 158400, "2^6*3^2*5^2*11"), ((1, 502, 1), 252000, "2^5*3^2*5^3*7")],
        "remark6": [((1, -123, 1), 15125, "5^3*11^2"), ((1, 130, 1), 16896, "2^9*3*11")],
    }[name]
    for coeffs, val, fac in expected:
        d = _disc_int(coeffs)
        label = f"cong.disc.{coeffs[1]:+d}"
        rep.add(check_equal(label, f"{val} = {fac}", f"{d} = {_factor_str(d)}", "discriminant"))
    if name == "prop3":
        A = (2 * 3 * 5) ** 2
        rep.add(check_equal("cong.disc-over-900.-398", A * 2**4 * 11, _disc_int((1, -398, 1)), "discriminant"))
        rep.add(check_equal("cong.disc-over-900.+502", A * 2**3 * 5 * 7, _disc_int((1, 502, 1)), "discriminant"))
    return rep


def remark6_construct(mod: int, count: int = 200) -> tuple[tuple[int, ...], tuple[int, ...], Report]:
    """Numerator/denominator of f(m,x) + 1/(1-x) and its congruence scan mod ``mod``."""
    if mod <= 123:
        raise ValueError("m must exceed 123")
    numer = (1, mod - 123, 1)
    denom = (1, -124, 124, -1)
    rep = congruence_scan(numer, denom, mod, count, command="cong construct",
                          params={"m": mod, "count": count})
    # f(m,x) + 1/(1-x) must reproduce the stated numerator exactly
    fm = [mod * c for c in power_series((0, 1), (1, -124, 124, -1), count)]
    geo = [1] * count
    direct = power_series(numer, denom, count)
    rep.add(check_true("construct.sum-of-parts", [a + b for a, b in zip(fm, geo)] == direct,
                       provenance="power-series"))
    rep.add(Check("construct.numerator", "info", "", f"1 + {mod - 123}*x + x^2", "construction"))
    for coeffs in ((1, -123, 1), numer):
        d = _disc_int(coeffs)
        rep.add(Check(f"construct.disc.{coeffs[1]:+d}", "info", "", f"{d} = {_factor_str(d)}",
                      "discriminant"))
    return numer, denom, rep
