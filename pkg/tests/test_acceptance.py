"""Acceptance gate: one test per criterion, each recording a single PASS/FAIL line."""

import time
from contextlib import contextmanager
from fractions import Fraction

import conftest
from nicomachus import cfrac, identities, sequences
from nicomachus.exact import Surd, isqrt
from nicomachus.poly import det


def _record(number: int, ok: bool, text: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)


@contextmanager
def criterion(number: int, text: str, limit: float | None = None):
    t0 = time.perf_counter()
    outcome = {"ok": False}
    try:
        yield outcome
    finally:
        elapsed = time.perf_counter() - t0
        within = limit is None or elapsed < limit
        ok = outcome["ok"] and within
        suffix = f" ({elapsed:.2f} s" + (f", limit {limit:g} s)" if limit else ")")
        _record(number, ok, text + suffix)
    assert outcome["ok"], f"criterion {number} failed"
    assert within, f"criterion {number} exceeded {limit} s ({elapsed:.2f} s)"


def test_criterion_01_three_term_identity():
    identities.build_terms.cache_clear()
    with criterion(1, "L - R - XP is the zero polynomial for both parities", 1.0) as out:
        zero = all((t.L - t.R - t.XP).is_zero() for t in map(identities.build_terms, ("odd", "even")))
        reports = [identities.verify_theorem1(p) for p in ("odd", "even")]
        out["ok"] = zero and all(r.ok for r in reports)


def test_criterion_02_matrix_proof():
    with criterion(2, "matrix products, correction matrix and the four row-removed minors", 1.0) as out:
        Mo, Me = identities.matrix_M("odd"), identities.matrix_M("even")
        C = identities.correction_matrix()
        w = [1, -1, -1]
        ok = [str(v) for v in Mo.apply(w)] == ["0", "0", "-1", "1"]
        ok &= all(v.is_zero() for v in C.apply(w))
        ok &= (Me - Mo) == C
        minors = [det(Mo.drop_row(i)) for i in range(4)]
        ok &= minors == identities.expected_row_minors()
        ok &= (minors[2] + minors[3]).is_zero()
        ok &= Mo == identities.expected_matrix_odd()
        out["ok"] = bool(ok) and identities.matrix_report("mx").ok


def test_criterion_03_leading_coefficients():
    with criterion(3, "m^4 coefficients factor as stated; x^3 coefficients are (1+T^2, 0, 1+T^2)") as out:
        checks = identities.leading_coefficient_checks("odd") + identities.leading_coefficient_checks("even")
        wanted = [c for c in checks if ".m4-coeff." in c.name and c.name.startswith("odd")]
        wanted += [c for c in checks if ".x3-coeff." in c.name]
        out["ok"] = len(wanted) == 9 and all(c.status == "pass" for c in wanted)


def test_criterion_04_discriminant():
    with criterion(4, "F divides D exactly; D has 1114 terms under a stated normalization") as out:
        rep = identities.discriminant_report()
        counts = {c.name: c.actual for c in rep.checks if c.name.startswith("disc.term-count.")}
        print("term counts:", counts)
        out["ok"] = (
            rep.get("disc.F-divides-D.remainder").status == "pass"
            and rep.get("disc.quotient-times-F").status == "pass"
            and "1114" in counts.values()
        )


def test_criterion_05_sequences():
    with criterion(5, "u_k by three methods for k <= 60; squares and mod 900 for k <= 200", 5.0) as out:
        series = sequences.u_series(200)
        ok = series[:4] == [1, 901, 359101, 142921801]
        states = sequences.u_recurrence_states(200)
        ok &= all(series[k - 1] == sequences.u_closed(k) == states[k - 1].u for k in range(1, 61))
        ok &= all(s.u == series[s.k - 1] for s in states)
        ok &= all(isqrt((3 + 2 * u) * (23 + 22 * u))[1] and u % 900 == 1 for u in series)
        out["ok"] = bool(ok)


def test_criterion_06_alpha():
    with criterion(6, "alpha_k three-way agreement for k <= 40, [1; (6,3)^(k-1)], limit [1; period (6,3)]") as out:
        conv = [sequences.alpha_convergent(k) for k in range(1, 41)]
        ok = conv == sequences.alpha_recurrence_values(40)
        ok &= conv == [sequences.alpha_via_u(s) for s in sequences.u_recurrence_states(40)]
        ok &= all(cfrac.cf_rational(a).quotients == [1] + [6, 3] * k for k, a in enumerate(conv))
        lim = cfrac.cf_quadratic(Surd(Fraction(-1, 2), Fraction(1, 2), 11))
        ok &= lim.quotients == [1, 6, 3] and lim.period == (1, 2)
        out["ok"] = bool(ok)


def test_criterion_07_sqrt11_family():
    with criterion(7, "sum identities for k <= 10, brute force 61 at (k=1, m=3), limit over Q(sqrt 11)", 5.0) as out:
        rep = sequences.verify_theorem4(10)
        lhs, rhs = sequences.theorem4_brute(1, 3)
        lim = sequences.verify_sqrt11_limit()
        out["ok"] = rep.ok and lhs == rhs == 61 and lim.ok


def test_criterion_08_engine_soundness():
    with criterion(8, "R term: cf_algebraic equals cf_rational; determinant identity; first quotient 4") as out:
        ok = True
        for n in (1, 2, 3):
            mv = cfrac.sample_m(n)
            for term in ("L", "R", "XP"):
                r, cf = cfrac.negated_root_expansion(term, "odd", n, 12)
                ok &= cfrac.convergent_determinants_ok(cf)
                ok &= cf.quotients[0] == 4
                if term == "R":
                    rat = cfrac.cf_rational(-cfrac.rational_root_R("odd", mv))
                    full = cfrac.cf_algebraic(r, len(rat.quotients) + 1)
                    ok &= full.quotients == rat.quotients and full.terminated
        out["ok"] = bool(ok)


def test_criterion_09_conjecture_harness():
    with criterion(9, "n = 1..3 expansions with prefix comparison; n = 3 ratios within 1%", 120.0) as out:
        ok = True
        for n in (1, 2, 3):
            rep = cfrac.conjecture_report(n, 8)
            ok &= rep.ok
            for term in ("L", "R", "XP"):
                exp = rep.get(f"n{n}.{term}.expansion").payload
                ok &= exp["terminated"] or len(exp["quotients"]) >= 8
                ok &= any(c.name.startswith(f"n{n}.{term}.conjecture.") for c in rep.checks)
            if n == 3:
                ok &= all(rep.get(f"n3.{t}.ratio").status == "pass" for t in ("L", "R", "XP"))
        out["ok"] = bool(ok)


def test_criterion_10_catalog():
    with criterion(10, "every catalog identity passes", 30.0) as out:
        rep = identities.catalog_verify("all")
        ids = {c.name.split(".")[0] for c in rep.checks}
        out["ok"] = rep.ok and set(identities.CATALOG) <= ids


def test_criterion_11_congruences():
    with criterion(11, "prop3 mod 900 and remark6 mod 253 for 200 coefficients; four discriminants") as out:
        a = sequences.congruence_preset("prop3", 200)
        b = sequences.congruence_preset("remark6", 200)
        discs = [sequences._disc_int(c) for c in ((1, -398, 1), (1, 502, 1), (1, -123, 1), (1, 130, 1))]
        want = [900 * 2**4 * 11, 900 * 2**3 * 5 * 7, 5**3 * 11**2, 2**9 * 3 * 11]
        out["ok"] = a.ok and b.ok and discs == want == [158400, 252000, 15125, 16896]


def test_criterion_12_cubic_pair():
    with criterion(12, "cubic pair makes the 7m^3(1+m)^3 identity exact; nonzero homogeneous solutions") as out:
        pair = identities.solve_cubic_pair()
        ok = pair is not None and identities._cubic_pair_residual(pair.A3, pair.B3).is_zero()
        ok = ok and len(pair.kernel) >= 1 and any(not (a.is_zero() and b.is_zero()) for a, b in pair.kernel)
        out["ok"] = bool(ok) and identities.cubic_pair_report().ok
