"""The three-term Nicomachean identity, its matrix proof, the factor F of the
power-sum discriminant, and a catalog of related classical identities."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Literal

from .exact import Surd, factorize
from .poly import MPoly, PolyMatrix, det, discriminant, faulhaber, sum_over
from .report import Check, Report, check_equal, check_true, timed

Parity = Literal["odd", "even"]

m = MPoly.var("m")
x = MPoly.var("x")
j = MPoly.var("j")

SQRT11 = Surd.sqrt(11)
HALF = Fraction(1, 2)


def tri(n) -> MPoly:
    """Triangular number n(n+1)/2 for a polynomial (or integer) argument."""
    n = n if isinstance(n, MPoly) else MPoly.const(n)
    return faulhaber(1).substitute("m", n)


# ---------------------------------------------------------------------------
# the three terms


@dataclass(frozen=True)
class TermTriple:
    """``L``, ``R`` and ``XP = x*P - x^2 + x^3`` as polynomials in (m, x)."""

    L: MPoly
    R: MPoly
    XP: MPoly
    P: MPoly
    parity: Parity

    @property
    def xP(self) -> MPoly:
        return x * self.P


def _p_odd() -> MPoly:
    summand = (4 * j + 1 + j * x) * ((j + 1) * (j - 2) + j**2 * x)
    return sum_over(summand, "j", 0, m)


@functools.lru_cache(maxsize=None)
def build_terms(parity: Parity) -> TermTriple:
    """Expanded terms; for odd parity these are the (m+1)-indexed forms."""
    odd_cubes = (2 * j - 1) ** 3
    p_odd = _p_odd()
    if parity == "odd":
        L = (
            sum_over(odd_cubes, "j", 1, m + 1)
            + x**3
            + sum_over(((2 * j - 2) + (j - 1) * x) ** 3, "j", 2, m + 1)
        )
        R = (tri(2 * m + 1) + (1 + tri(m)) * x) ** 2
        P = p_odd
    elif parity == "even":
        L = sum_over(odd_cubes, "j", 1, m) + x**3 + sum_over((2 * j + j * x) ** 3, "j", 1, m)
        R = (tri(2 * m) + (1 + tri(m)) * x) ** 2
        P = p_odd.substitute("m", -m - 1)
    else:
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    XP = x * P - x**2 + x**3
    return TermTriple(L, R, XP, P, parity)


def brute_terms(parity: Parity, mv: int, xv) -> tuple:
    """Direct summation of the defining sums at integer ``mv`` and rational ``xv``."""
    xv = Fraction(xv)

    def T(n):
        return Fraction(n * (n + 1), 2)

    def p_odd(M):
        return sum((4 * i + 1 + i * xv) * ((i + 1) * (i - 2) + i * i * xv) for i in range(M + 1))

    if parity == "odd":
        M = mv + 1
        L = sum((2 * i - 1) ** 3 for i in range(1, M + 1)) + xv**3
        L += sum(((2 * i - 2) + (i - 1) * xv) ** 3 for i in range(2, M + 1))
        R = (T(2 * mv + 1) + (1 + T(mv)) * xv) ** 2
        P = p_odd(mv)
    else:
        L = sum((2 * i - 1) ** 3 for i in range(1, mv + 1)) + xv**3
        L += sum((2 * i + i * xv) ** 3 for i in range(1, mv + 1))
        R = (T(2 * mv) + (1 + T(mv)) * xv) ** 2
        # P_{m,e} is defined through the expanded P_{m,o}; no direct sum exists
        P = build_terms("even").P.evaluate({"m": mv, "x": xv})
    return L, R, xv * P - xv**2 + xv**3


def leading_coefficient_checks(parity: Parity = "odd") -> list[Check]:
    t = build_terms(parity)
    checks = []
    x3 = [c.coeff("x", 3) for c in (t.L, t.R, t.XP)]
    tm2 = tri(m) ** 2
    for name, got, want in zip(("L", "R", "XP"), x3, (1 + tm2, MPoly.const(0), 1 + tm2)):
        checks.append(check_equal(f"{parity}.x3-coeff.{name}", want, got, "symbolic"))
    m4 = [c.coeff("m", 4) for c in (t.L, t.R, t.XP)]
    if parity == "odd":
        wants = (
            HALF * HALF * (x + 4) * ((x + 1) ** 2 + 3),
            HALF * HALF * (x + 4) ** 2,
            HALF * HALF * x * (x + 1) * (x + 4),
        )
        for name, got, want in zip(("L", "R", "XP"), m4, wants):
            checks.append(check_equal(f"odd.m4-coeff.{name}", want, got, "symbolic"))
    else:
        for name, got in zip(("L", "R", "XP"), m4):
            checks.append(Check(f"even.m4-coeff.{name}", "info", "", str(got), "computed"))
    # R is the square of a polynomial linear in x
    for name, poly, xdeg in zip(("L", "R", "XP"), (t.L, t.R, t.XP), (3, 2, 3)):
        degs = (poly.degree("m"), poly.degree("x"))
        checks.append(check_equal(f"{parity}.degrees.{name}", (4, xdeg), degs, "symbolic"))
    checks.append(check_true(f"{parity}.XP-constant-in-x-zero", t.XP.coeff("x", 0).is_zero(),
                             provenance="symbolic"))
    checks.append(check_equal(f"{parity}.P-leading-x-coeff", tm2, t.P.coeff("x", 2), "symbolic"))
    return checks


def verify_theorem1(parity: Parity) -> Report:
    rep = Report("verify thm1", {"parity": parity})
    with timed(rep):
        t = build_terms(parity)
        diff = t.L - t.R - t.XP
        rep.add(check_equal(f"{parity}.L-R-XP", "0", str(diff), "symbolic"))
        at0 = (t.L - t.R).compose({"x": 0})
        rep.add(check_equal(f"{parity}.nicomachus-at-x0", "0", str(at0), "symbolic"))
        L, R, XP = brute_terms(parity, 5, 7)
        rep.add(check_equal(f"{parity}.brute-m5-x7", 0, L - R - XP, "brute-force"))
        rep.extend(leading_coefficient_checks(parity))
    return rep


# ---------------------------------------------------------------------------
# matrix proof


def _coeff_matrix(columns: list[MPoly], var: str, size: int) -> PolyMatrix:
    return PolyMatrix([[c.coeff(var, i) for c in columns] for i in range(size)])


def matrix_M(parity: Parity) -> PolyMatrix:
    """4x3 matrix whose columns are the x-coefficients of L, R and x*P."""
    t = build_terms(parity)
    return _coeff_matrix([t.L, t.R, t.xP], "x", 4)


def expected_matrix_odd() -> PolyMatrix:
    T = tri(m)
    return PolyMatrix(
        [
            [tri(2 * m + 1) ** 2, (1 + m) ** 2 * (1 + 2 * m) ** 2, 0],
            [12 * T**2, (1 + m) * (1 + 2 * m) * (2 + m + m**2), (1 + m) * (2 + m) * (-1 - 2 * m + m**2)],
            [6 * T**2, HALF * HALF * (2 + m + m**2) ** 2, HALF * HALF * m * (1 + m) * (-4 + 5 * m + 5 * m**2)],
            [1 + T**2, 0, T**2],
        ]
    )


def correction_matrix() -> PolyMatrix:
    J = -((2 * m + 1) ** 3)
    K = (2 * m + 1) * (2 + m + m**2)
    z = MPoly.const(0)
    return PolyMatrix([[J, J, z], [z, -K, K], [z, z, z], [z, z, z]])


def expected_row_minors() -> list[MPoly]:
    """Determinants after deleting row 1, 2, 3, 4 of the odd matrix."""
    q = (1 + m) ** 3 * (2 + m) * (1 + 2 * m) ** 2 * (-1 - 2 * m + m**2)
    return [
        HALF * HALF * (1 + m) * (2 + m + m**2) * (4 + 8 * m + m**2 + 19 * m**3 + 29 * m**4 + 11 * m**5),
        HALF * m * (1 + m) ** 3 * (1 + 2 * m) ** 2 * (-2 + 3 * m + 3 * m**2),
        q,
        -q,
    ]


def _vector_str(v: list[MPoly]) -> str:
    return "[" + ", ".join(str(e) for e in v) + "]"


def matrix_checks() -> list[Check]:
    checks = []
    Mo, Me = matrix_M("odd"), matrix_M("even")
    C = correction_matrix()
    w = [1, -1, -1]
    checks.append(check_true("mx.odd-matrix-verbatim", Mo == expected_matrix_odd(), provenance="symbolic"))
    checks.append(check_equal("mx.odd-times-w", "[0, 0, -1, 1]", _vector_str(Mo.apply(w)), "symbolic"))
    checks.append(check_equal("mx.correction-times-w", "[0, 0, 0, 0]", _vector_str(C.apply(w)), "symbolic"))
    checks.append(check_true("mx.even-minus-odd-is-correction", (Me - Mo) == C, provenance="symbolic"))
    checks.append(check_equal("mx.even-times-w", "[0, 0, -1, 1]", _vector_str(Me.apply(w)), "symbolic"))
    minors = [det(Mo.drop_row(i)) for i in range(4)]
    for i, (got, want) in enumerate(zip(minors, expected_row_minors()), start=1):
        checks.append(check_equal(f"mx.minor-without-row{i}", want, got, "symbolic"))
    checks.append(check_equal("mx.minor3-plus-minor4", "0", str(minors[2] + minors[3]), "symbolic"))
    for i in range(4):
        checks.append(Check(f"mx.even-minor-without-row{i + 1}", "info", "",
                            str(det(Me.drop_row(i))), "computed"))
    return checks


def xm_matrix() -> PolyMatrix:
    """3x5 matrix: rows L, R, x*P (odd) by their coefficients of m^0..m^4."""
    t = build_terms("odd")
    return PolyMatrix([[c.coeff("m", i) for i in range(5)] for c in (t.L, t.R, t.xP)])

def xm_variant_checks() -> list[Check]:
    X = xm_matrix()
    checks = []
    prod = X.left_apply([1, -1, -1])
    target = -(x**2) + x**3
    checks.append(check_equal("xm.w-times-matrix", _vector_str([target, *[MPoly.const(0)] * 4]),
                              _vector_str(prod), "symbolic"))
    rep = (1 + x) * (1 - x + x**2) - (1 + x) ** 2 - (-2 * x)
    checks.append(check_equal("xm.representation", target, rep, "symbolic"))
    col0 = [X[i, 0] for i in range(3)]
    checks.append(check_equal("xm.m0-column", _vector_str([(1 + x) * (1 - x + x**2), (1 + x) ** 2, -2 * x]),
                              _vector_str(col0), "symbolic"))
    d = det(X.drop_cols([2, 3]))
    want = HALF * HALF * x**3 * (-1 + x) * (4 + x) * (34 + 24 * x + 9 * x**2 + x**3)
    checks.append(check_equal("xm.det-without-cols-3-4", want, d, "symbolic"))
    at1 = target.evaluate({"x": 1})
    checks.append(check_equal("xm.target-at-x1", 0, at1, "symbolic"))
    return checks


def matrix_report(variant: str = "mx") -> Report:
    rep = Report("verify matrix", {"variant": variant})
    with timed(rep):
        if variant == "mx":
            rep.extend(matrix_checks())
            rep.extend(leading_coefficient_checks("odd"))
        elif variant == "xm":
            rep.extend(xm_variant_checks())
        else:
            raise ValueError(f"unknown matrix variant {variant!r}")
    return rep


# ---------------------------------------------------------------------------
# sums of the form sum (a+bj+cj^2)(d+ej+fj^2)


@dataclass(frozen=True)
class CoeffVector:
    a: object
    b: object
    c: object
    d: object
    e: object
    f: object

    @classmethod
    def symbolic(cls) -> "CoeffVector":
        return cls(*(MPoly.var(s) for s in "abcdef"))

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.e, self.f)


def closed_sum(c: CoeffVector) -> MPoly:
    """Closed form in m of sum_{j=1}^m (a+bj+cj^2)(d+ej+fj^2)."""
    summand = (c.a + c.b * j + c.c * j**2) * (c.d + c.e * j + c.f * j**2)
    if not isinstance(summand, MPoly):
        summand = MPoly.const(summand)
    return sum_over(summand, "j", 1, m)


def factor_F(c: CoeffVector):
    a, b, cc, d, e, f = c.as_tuple()
    return 5 * a * (6 * d + 3 * e + f) + 5 * b * (3 * d + e) + cc * (5 * d - f)


def sqrt11_vector() -> CoeffVector:
    a = 1
    b = (SQRT11 - 1) / 2
    c = (-SQRT11 - 1) / 2
    return CoeffVector(a, b, c, -a, -c, -b)


@functools.lru_cache(maxsize=None)
def symbolic_discriminant() -> MPoly:
    return discriminant(closed_sum(CoeffVector.symbolic()), "m")


def discriminant_report() -> Report:
    rep = Report("disc report")
    with timed(rep):
        S = closed_sum(CoeffVector.symbolic())
        D = symbolic_discriminant()
        lc = S.leading_coeff("m")
        d = S.degree("m")
        res = D * lc * (-1 if (d * (d - 1) // 2) % 2 else 1)
        _, prim = D.primitive()
        reduced = discriminant(S.exact_div(m), "m")
        counts = {
            "discriminant": D.term_count,
            "resultant": res.term_count,
            "primitive": prim.term_count,
            "discriminant-of-S-over-m": reduced.term_count,
        }
        for name, n in counts.items():
            rep.add(Check(f"disc.term-count.{name}", "info", "1114", str(n), "computed"))
        matching = sorted(k for k, n in counts.items() if n == 1114)
        rep.add(check_true("disc.term-count-1114", bool(matching), "some normalization has 1114 terms",
                           ",".join(matching) or "none", "computed"))
        F = factor_F(CoeffVector.symbolic())
        q, r = D.divmod(F)
        rep.add(check_equal("disc.F-divides-D.remainder", "0", str(r), "symbolic"))
        rep.add(Check("disc.quotient-term-count", "info", "", str(q.term_count), "computed"))
        rep.add(check_true("disc.quotient-times-F", q * F == D, provenance="symbolic"))
        spec = D.evaluate({"a": 0, "b": 0, "c": 1, "d": 0, "e": 1, "f": 0})
        rep.add(check_equal("disc.nicomachean-specialization", 0, spec, "symbolic"))
        rep.add(check_equal("disc.F-nicomachean", 0, factor_F(CoeffVector(0, 0, 1, 0, 1, 0)), "symbolic"))
        rep.add(check_equal("disc.F-sqrt11", 0, factor_F(sqrt11_vector()), "symbolic"))
        rep.add(check_equal("disc.F-unit", 30, factor_F(CoeffVector(1, 0, 0, 1, 0, 0)), "symbolic"))
        rep.add(check_equal("disc.degree-m", 5, d, "symbolic"))
    return rep


def example_F_instance() -> list[Check]:
    b, c = MPoly.var("b"), MPoly.var("c")
    S = closed_sum(CoeffVector(0, b, c, 1, -3, 5))
    want = HALF * HALF * m**2 * (1 + m) * (b - c + (5 * b + 3 * c) * m + 4 * c * m**2)
    return [
        check_equal("F-example.closed-sum", want, S, "symbolic"),
        check_equal("F-example.F", 0, factor_F(CoeffVector(0, b, c, 1, -3, 5)), "symbolic"),
    ]


# ---------------------------------------------------------------------------
# auxiliary polynomial identities


def double_equation_checks() -> Report:
    rep = Report("verify double-equation")
    with timed(rep):
        lhs = 12 * tri(m) ** 2
        first = (1 + m) * (1 + 2 * m) * (2 + m + m**2) + (1 + m) * (2 + m) * (-1 - 2 * m + m**2)
        second = m * (1 + 2 * m) * (2 + m + m**2) + (-1 + m) * m * (2 + 4 * m + m**2)
        rep.add(check_equal("double.first", "0", str(lhs - first), "symbolic"))
        rep.add(check_equal("double.second", "0", str(lhs - second), "symbolic"))
        at3 = [p.evaluate({"m": 3}) for p in (lhs, first, second)]
        rep.add(check_equal("double.at-m3", "432, 432, 432", ", ".join(map(str, at3)), "brute-force"))
    return rep


def _rref_solve(A: list[list[Fraction]], b: list[Fraction]):
    """Solve A x = b over Q. Returns (particular or None, nullspace basis)."""
    rows, cols = len(A), len(A[0])
    M = [list(map(Fraction, r)) + [Fraction(v)] for r, v in zip(A, b)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [vi - f * vr for vi, vr in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(all(v == 0 for v in M[i][:cols]) and M[i][cols] != 0 for i in range(rows)):
        return None, []
    x0 = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x0[c] = M[i][cols]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -M[i][fc]
        basis.append(v)
    return x0, basis


@dataclass(frozen=True)
class CubicPair:
    A3: MPoly
    B3: MPoly
    kernel: list[tuple[MPoly, MPoly]]


def _cubic_pair_residual(A3: MPoly, B3: MPoly) -> MPoly:
    return (
        7 * m**3 * (1 + m) ** 3
        - (1 + m) * (1 + 2 * m) * (1 + 3 * m) * A3
        - (1 + m) * (2 + m) * (3 + m) * B3
    )


def solve_cubic_pair() -> CubicPair | None:
    """Monic rational cubics A3, B3 with 7m^3(1+m)^3 = (1+m)(1+2m)(1+3m)A3 + (1+m)(2+m)(3+m)B3."""
    U = (1 + m) * (1 + 2 * m) * (1 + 3 * m)
    V = (1 + m) * (2 + m) * (3 + m)
    rhs = 7 * m**3 * (1 + m) ** 3 - U * m**3 - V * m**3
    # unknowns: a0 a1 a2 b0 b1 b2
    basis = [U * m**i for i in range(3)] + [V * m**i for i in range(3)]
    deg = 7
    A = [[Fraction(p.coeff("m", k).constant_value() if p.coeff("m", k) else 0) for p in basis]
         for k in range(deg)]
    b = [Fraction(rhs.coeff("m", k).constant_value() if rhs.coeff("m", k) else 0) for k in range(deg)]
    sol, kernel = _rref_solve(A, b)
    if sol is None:
        return None

    def cubics(v, monic=True):
        lead = m**3 if monic else 0
        return (lead + MPoly.from_coeffs("m", v[:3]), lead + MPoly.from_coeffs("m", v[3:]))

    kern = [(MPoly.from_coeffs("m", v[:3]), MPoly.from_coeffs("m", v[3:])) for v in kernel]
    A3, B3 = cubics(sol)
    return CubicPair(A3, B3, kern)


def cubic_pair_report() -> Report:
    rep = Report("verify cubic-pair")
    with timed(rep):
        pair = solve_cubic_pair()
        if pair is None:
            rep.add(Check("cubic.feasible", "fail", "solvable", "infeasible", "linear-algebra"))
            return rep
        rep.add(check_equal("cubic.identity", "0", str(_cubic_pair_residual(pair.A3, pair.B3)), "symbolic"))
        rep.add(Check("cubic.A3", "info", "", str(pair.A3), "linear-algebra"))
        rep.add(Check("cubic.B3", "info", "", str(pair.B3), "linear-algebra"))
        rep.add(check_true("cubic.kernel-nonempty", len(pair.kernel) >= 1, ">= 1", str(len(pair.kernel)),
                           "linear-algebra"))
        for i, (ka, kb) in enumerate(pair.kernel):
            r = _cubic_pair_residual(pair.A3 + ka, pair.B3 + kb)
            rep.add(check_equal(f"cubic.shifted-solution-{i}", "0", str(r), "symbolic"))
            rep.add(check_true(f"cubic.shifted-monic-{i}",
                               (pair.A3 + ka).coeff("m", 3) == 1 and (pair.B3 + kb).coeff("m", 3) == 1,
                               provenance="symbolic"))
    return rep


# ---------------------------------------------------------------------------
# catalog


def qint(k: int, q: MPoly | None = None, step: int = 1) -> MPoly:
    """(1 - q^(step*k)) / (1 - q^step) as a polynomial in q."""
    q = q if q is not None else MPoly.var("q")
    return sum((q ** (step * i) for i in range(k)), MPoly.const(0))


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def tau(n: int) -> int:
    out = 1
    for e in factorize(n).values():
        out *= e + 1
    return out


def _cat_nicomachus(bound):
    return [check_equal("nicomachus.symbolic", tri(m) ** 2, sum_over(j**3, "j", 1, m), "symbolic")]


def _cat_a_family(bound):
    a = MPoly.var("a")
    lhs = sum_over((1 + a * j) * (1 + 2 * j + a * j**2), "j", 0, m - 1)
    rhs = sum_over(1 + a * j, "j", 0, m - 1) ** 2
    odd = sum_over(1 + 2 * j, "j", 0, m - 1)
    return [
        check_equal("a-family.symbolic", rhs, lhs, "symbolic"),
        check_equal("a-family.odd-sum-a0", m**2, odd, "symbolic"),
    ]


def _cat_liouville(bound):
    bound = bound or 5000
    bad = []
    for n in range(1, bound + 1):
        ts = [tau(d) for d in divisors(n)]
        if sum(t**3 for t in ts) != sum(ts) ** 2:
            bad.append(n)
    ts12 = [tau(d) for d in divisors(12)]
    return [
        check_equal("liouville.brute-force", "[]", str(bad[:10]), "brute-force"),
        check_equal("liouville.n12", "324 = 324", f"{sum(t**3 for t in ts12)} = {sum(ts12) ** 2}", "brute-force"),
    ]


def _cat_genfp(bound):
    n_bound = bound or 30
    bad = []
    for r in range(0, 5):
        for n in range(1, n_bound + 1):
            lhs = sum(Fraction((2 * k + r) * comb(k + r, r + 1) ** 2, r + 2) for k in range(1, n + 1))
            rhs = Fraction(n * comb(n + 1 + r, r + 1), r + 2) ** 2
            if lhs != rhs:
                bad.append((r, n))
    return [check_equal("genfp.exact", "[]", str(bad[:10]), "brute-force")]


def _cat_warnaar(bound):
    bound = bound or 12
    q = MPoly.var("q")
    bad = []
    for n in range(1, bound + 1):
        lhs = sum((q ** (2 * n - 2 * k) * qint(k, q, 2) * qint(k, q) ** 2 for k in range(1, n + 1)),
                  MPoly.const(0))
        rhs = (qint(n, q) * qint(n + 1, q)) ** 2
        if lhs * (1 + q) ** 2 != rhs:
            bad.append(n)
    return [check_equal("warnaar.q-polynomial", "[]", str(bad), "symbolic")]


def _cat_cigler(bound):
    bound = bound or 12
    q = MPoly.var("q")
    bad = []
    for n in range(1, bound + 1):
        top = comb(n + 1, 2)
        lhs = sum((q ** (top - comb(k + 1, 2)) * qint(k, q) * qint(k * k, q) for k in range(1, n + 1)),
                  MPoly.const(0))
        if lhs != qint(top, q) ** 2:
            bad.append(n)
    return [check_equal("cigler.q-polynomial", "[]", str(bad), "symbolic")]


def _cat_pythagorean(bound):
    lhs = (2 * m - 1) ** 2 + (2 * m * (m - 1)) ** 2
    rhs = (m**2 + (m - 1) ** 2) ** 2
    return [check_equal("pythagorean.symbolic", rhs, lhs, "symbolic")]


def _cat_b1(bound):
    b = MPoly.var("b")
    lhs = sum_over((1 - b * j) * (1 - 2 * j + b * j**2), "j", 1, m)
    rhs = -HALF * HALF * m**2 * (b - 2 + b * m) ** 2
    return [check_equal("b-multizero-1.symbolic", rhs, lhs, "symbolic")]


def _cat_b2(bound):
    b = MPoly.var("b")
    lhs = sum_over((1 - b * j) * (1 + (b - 2) * j) * (1 + b * (b - 2) * j), "j", 1, m)
    rhs = -HALF * HALF * m**2 * ((b - 1) ** 2 + 1 + m * ((b - 1) ** 2 - 1)) ** 2
    return [check_equal("b-multizero-2.symbolic", rhs, lhs, "symbolic")]


def _cat_sqrt11(bound):
    S = closed_sum(sqrt11_vector())
    want = (2 * m + 3) * tri(m - 1) ** 2
    b = (SQRT11 - 1) / 2
    c = (-SQRT11 - 1) / 2
    at3 = sum((1 + b * k + c * k * k) * (-1 - c * k - b * k * k) for k in range(1, 4))
    return [
        check_equal("sqrt11-limit.symbolic", want, S, "symbolic"),
        check_equal("sqrt11-limit.at-m3", 81, at3, "brute-force"),
    ]


def remark2_difference(n: int, pos: int) -> MPoly:
    """Sum of cubes minus square of the sum for 1..n with ``pos`` replaced by x."""
    vals = [x if i == pos else MPoly.const(i) for i in range(1, n + 1)]
    s = sum(vals, MPoly.const(0))
    return sum((v**3 for v in vals), MPoly.const(0)) - s**2


def _cat_remark2(bound):
    bound = bound or 20
    target = -(x**2) + x**3
    bad = []
    for n in range(1, bound + 1):
        for pos in range(1, n + 1):
            d = remark2_difference(n, pos)
            rest = d - d.coeff("x", 0) - d.coeff("x", 1) * x
            if rest != target:
                bad.append((n, pos))
    literal = -remark2_difference(3, 2)
    literal_rest = literal - literal.coeff("x", 0) - literal.coeff("x", 1) * x
    return [
        check_equal("remark2-x3.cubes-minus-square", "[]", str(bad[:10]), "symbolic"),
        Check("remark2-x3.square-minus-cubes", "info", str(target), str(literal_rest), "symbolic"),
    ]


CATALOG: dict[str, Callable[[int | None], list[Check]]] = {
    "nicomachus": _cat_nicomachus,
    "a-family": _cat_a_family,
    "liouville": _cat_liouville,
    "genfp": _cat_genfp,
    "warnaar": _cat_warnaar,
    "cigler": _cat_cigler,
    "pythagorean": _cat_pythagorean,
    "b-multizero-1": _cat_b1,
    "b-multizero-2": _cat_b2,
    "sqrt11-limit": _cat_sqrt11,
    "remark2-x3": _cat_remark2,
}


def catalog_verify(ident: str, bound: int | None = None) -> Report:
    if ident not in CATALOG and ident != "all":
        raise KeyError(f"unknown catalog id {ident!r}")
    rep = Report("verify catalog", {"id": ident, **({"bound": bound} if bound else {})})
    with timed(rep):
        ids = sorted(CATALOG) if ident == "all" else [ident]
        for i in ids:
            rep.extend(CATALOG[i](bound))
        if ident in ("all", "sqrt11-limit"):
            rep.extend(example_F_instance())
    return rep
