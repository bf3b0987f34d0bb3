"""Exact continued fractions of rationals, quadratic surds and real algebraic
numbers, plus the expansion harness for the roots near -4 of the three terms.

Algebraic expansions never touch floating point: each partial quotient is an
integer floor certified by exact sign tests of the defining polynomial, and
the polynomial is then moved by ``p(x) -> x^d * p(a + 1/x)``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Sequence

from .exact import Surd, isqrt, rational_floor
from .poly import MPoly
from .report import Check, Report, check_equal, check_true, timed


class RootNotFoundError(ValueError):
    pass


class RootAmbiguityError(ValueError):
    pass


class CertificationError(RuntimeError):
    """Root selection could not be certified by a Sturm count."""


@dataclass(frozen=True)
class CFExpansion:
    quotients: list[int]
    period: tuple[int, int] | None = None  # (start index, length)
    terminated: bool = False

    def convergents(self) -> list[tuple[int, int]]:
        out = []
        p0, p1 = 0, 1
        q0, q1 = 1, 0
        for a in self.quotients:
            p0, p1 = p1, a * p1 + p0
            q0, q1 = q1, a * q1 + q0
            out.append((p1, q1))
        return out

    def value(self) -> Fraction:
        p, q = self.convergents()[-1]
        return Fraction(p, q)

    def to_dict(self) -> dict:
        d = {"quotients": [str(a) for a in self.quotients], "terminated": self.terminated}
        if self.period is not None:
            d["period"] = {"start": self.period[0], "length": self.period[1]}
        return d


def convergent_determinants_ok(cf: CFExpansion) -> bool:
    """p_k q_{k-1} - p_{k-1} q_k == (-1)^(k-1) for every computed k (convergents indexed from 0)."""
    cs = cf.convergents()
    prev = (1, 0)
    for k, (p, q) in enumerate(cs):
        if p * prev[1] - prev[0] * q != (-1) ** (k + 1):
            return False
        prev = (p, q)
    return True


def cf_rational(q, max_quotients: int | None = None) -> CFExpansion:
    q = Fraction(q)
    num, den = q.numerator, q.denominator
    out = []
    while den:
        if max_quotients is not None and len(out) >= max_quotients:
            return CFExpansion(out, None, False)
        a, r = divmod(num, den)
        out.append(a)
        num, den = den, r
    return CFExpansion(out, None, True)


def cf_quadratic(s: Surd, max_quotients: int | None = None) -> CFExpansion:
    """Periodic expansion of a + b*sqrt(d) through the (P + sqrt D)/Q recurrence."""
    if s.is_rational():
        raise ValueError("cf_quadratic needs an irrational surd; use cf_rational")
    r = s.rational.denominator * s.surd.denominator // gcd(s.rational.denominator, s.surd.denominator)
    A = int(s.rational * r)
    B = int(s.surd * r)
    D = B * B * s.radicand
    P, Q = (A, r) if B > 0 else (-A, -r)
    if (D - P * P) % Q:
        P, Q, D = P * abs(Q), Q * abs(Q), D * Q * Q
    root = isqrt(D)[0]
    seen: dict[tuple[int, int], int] = {}
    out: list[int] = []
    while True:
        state = (P, Q)
        if state in seen:
            start = seen[state]
            return CFExpansion(out, (start, len(out) - start), False)
        if max_quotients is not None and len(out) >= max_quotients:
            return CFExpansion(out, None, False)
        seen[state] = len(out)
        a = (P + root) // Q if Q > 0 else (P + root + 1) // Q
        out.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q


def expand_periodic(cf: CFExpansion, count: int) -> list[int]:
    """First ``count`` quotients of a (possibly periodic) expansion."""
    if cf.period is None:
        return cf.quotients[:count]
    start, length = cf.period
    out = list(cf.quotients[:start])
    block = cf.quotients[start:start + length]
    while len(out) < count:
        out.extend(block)
    return out[:count]


# ---------------------------------------------------------------------------
# dense univariate integer polynomials, constant term first


def to_dense(p: MPoly, var: str = "x") -> list[int]:
    """Integer, content-free coefficient list of a univariate polynomial."""
    others = [v for v in p.used_vars() if v != var]
    if others:
        raise ValueError(f"polynomial is not univariate in {var!r}: {others}")
    cs = [c.constant_value() if not c.is_zero() else 0 for c in p.coefficients(var)]
    if any(isinstance(c, Surd) for c in cs):
        raise TypeError("algebraic expansion needs rational coefficients")
    den = 1
    for c in cs:
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(Fraction(c) * den) for c in cs]
    return primitive(ints)


def trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def primitive(p: Sequence[int]) -> list[int]:
    p = trim(p)
    g = 0
    for c in p:
        g = gcd(g, c)
    if g == 0:
        return []
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def sign_at(p: Sequence[int], t) -> int:
    """Sign of p(t) at a rational t, using integer arithmetic."""
    t = Fraction(t)
    a, b = t.numerator, t.denominator
    d = len(p) - 1
    acc = 0
    bp = 1
    # sum c_i a^i b^(d-i), Horner in a with running powers of b
    for c in reversed(p):
        acc = acc * a + c * bp
        bp *= b
    return (acc > 0) - (acc < 0)


def _divmod_q(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(c) for c in a]
    b = trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = Fraction(b[-1])
    while len(trim(a)) >= len(b):
        a = trim(a)
        shift = len(a) - len(b)
        f = a[-1] / lb
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
    return q, trim(a)


def _deriv(p: Sequence) -> list:
    return [i * c for i, c in enumerate(p)][1:]


def _gcd_q(a: list, b: list) -> list:
    a, b = trim(a), trim(b)
    while b:
        _, r = _divmod_q(a, b)
        a, b = b, r
    return a


def _to_int(p: Sequence, keep_sign: bool = False) -> list[int]:
    den = 1
    for c in p:
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    ints = primitive([int(Fraction(c) * den) for c in p])
    if keep_sign and ints and (Fraction(p[len(ints) - 1]) < 0):
        ints = [-c for c in ints]
    return ints


def squarefree_part(p: Sequence[int]) -> list[int]:
    p = trim(p)
    if len(p) <= 2:
        return primitive(p)
    g = _gcd_q(p, _deriv(p))
    if len(g) <= 1:
        return primitive(p)
    q, r = _divmod_q(p, g)
    return _to_int(q)


def sturm_sequence(p: Sequence[int]) -> list[list[int]]:
    seq = [primitive(p), primitive(_deriv(p))]
    while len(seq[-1]) > 1:
        _, r = _divmod_q(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in _to_int(r, keep_sign=True)])
    return [s for s in seq if s]


def _variations(seq: list[list[int]], t) -> int:
    signs = [s for s in (sign_at(q, t) for q in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count(p: Sequence[int], lo, hi, seq: list[list[int]] | None = None) -> int:
    """Number of distinct real roots of squarefree p in (lo, hi]."""
    seq = seq or sturm_sequence(p)
    return _variations(seq, lo) - _variations(seq, hi)


def taylor_shift(p: Sequence[int], a: int) -> list[int]:
    """Coefficients of p(x + a)."""
    c = list(p)
    n = len(c)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            c[k] += a * c[k + 1]
    return c


def cauchy_bound(p: Sequence[int]) -> int:
    lead = abs(p[-1])
    return 1 + max((abs(c) + lead - 1) // lead for c in p[:-1]) if len(p) > 1 else 1


def compose_neg(p: Sequence[int]) -> list[int]:
    """Coefficients of p(-x)."""
    return primitive([c if i % 2 == 0 else -c for i, c in enumerate(p)])


# ---------------------------------------------------------------------------
# algebraic reals


@dataclass(frozen=True)
class AlgebraicReal:
    """Root of ``poly`` (integer, squarefree) isolated in the open interval (lo, hi).

    ``lo == hi`` encodes an exactly known rational root.
    """

    poly: tuple[int, ...]
    lo: Fraction
    hi: Fraction

    def certify(self) -> bool:
        if self.lo == self.hi:
            return sign_at(self.poly, self.lo) == 0
        if sign_at(self.poly, self.lo) == 0 or sign_at(self.poly, self.hi) == 0:
            return False
        return sturm_count(self.poly, self.lo, self.hi) == 1

    def negated(self) -> "AlgebraicReal":
        return AlgebraicReal(tuple(compose_neg(self.poly)), -self.hi, -self.lo)


def _split_point(p, lo: Fraction, hi: Fraction) -> Fraction:
    for k in (2, 3, 5, 7, 11, 13):
        mid = lo + (hi - lo) / k
        if sign_at(p, mid):
            return mid
    raise RuntimeError("no non-root split point found")


def _isolate(p, seq, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals each holding one root of p in (lo, hi); endpoints non-roots."""
    n = sturm_count(p, lo, hi, seq)
    if n == 0:
        return []
    if n == 1:
        return [(lo, hi)]
    mid = _split_point(p, lo, hi)
    return _isolate(p, seq, lo, mid) + _isolate(p, seq, mid, hi)


def _refine(p, iv: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    lo, hi = iv
    if lo == hi:
        return iv
    mid = (lo + hi) / 2
    s = sign_at(p, mid)
    if s == 0:
        return (mid, mid)
    return (lo, mid) if s != sign_at(p, lo) else (mid, hi)


def _dist_range(iv, t) -> tuple[Fraction, Fraction]:
    lo, hi = iv
    if lo >= t:
        return lo - t, hi - t
    if hi <= t:
        return t - hi, t - lo
    return Fraction(0), max(hi - t, t - lo)


def isolate_root_near(p, target, var: str = "x") -> AlgebraicReal:
    """Certified isolating interval for the root of ``p`` closest to ``target`` (within 1)."""
    target = Fraction(target)
    dense = to_dense(p, var) if isinstance(p, MPoly) else primitive(p)
    sq = squarefree_part(dense)
    if len(sq) < 2:
        raise RootNotFoundError("constant polynomial has no roots")
    if sign_at(sq, target) == 0:
        return AlgebraicReal(tuple(sq), target, target)
    seq = sturm_sequence(sq)
    lo, hi = target - 1, target + 1
    cands = []
    for end in (lo, hi):
        if sign_at(sq, end) == 0:
            cands.append((end, end))
    a = lo if sign_at(sq, lo) else lo + Fraction(1, 10**6)
    b = hi if sign_at(sq, hi) else hi - Fraction(1, 10**6)
    cands += _isolate(sq, seq, a, b)
    if not cands:
        raise RootNotFoundError(f"no real root within distance 1 of {target}")
    mirror = None
    for _ in range(4000):
        ranges = [_dist_range(iv, target) for iv in cands]
        best = min(range(len(cands)), key=lambda i: ranges[i][1])
        if all(i == best or ranges[best][1] < ranges[i][0] for i in range(len(cands))):
            lo_, hi_ = cands[best]
            if lo_ < target < hi_:
                # p(target) != 0, so the root sits strictly on one side
                lo_, hi_ = (lo_, target) if sign_at(sq, target) != sign_at(sq, lo_) else (target, hi_)
            return AlgebraicReal(tuple(sq), lo_, hi_)
        rivals = [i for i in range(len(cands)) if i != best and ranges[i][0] <= ranges[best][1]]
        if mirror is None:
            mirror = _to_int(_gcd_q(sq, _reflect(sq, target)))
        if len(mirror) >= 2 and all(cands[i][0] == cands[i][1] or sturm_count(mirror, *cands[i]) >= 1
                                    for i in [best, *rivals]):
            sides = {cands[i][0] >= target for i in [best, *rivals]}
            if len(sides) == 2:
                # refine a bit more before declaring a tie
                widths = [cands[i][1] - cands[i][0] for i in [best, *rivals]]
                if max(widths) < Fraction(1, 10**40):
                    raise RootAmbiguityError(f"two roots equidistant from {target}")
        for i in [best, *rivals]:
            cands[i] = _refine(sq, cands[i])
    raise RootAmbiguityError(f"could not separate roots near {target}")


def _reflect(p: Sequence[int], t: Fraction) -> list[int]:
    """Integer coefficients proportional to p(2t - x)."""
    two_t = 2 * t
    out = [Fraction(0)] * len(p)
    for i, c in enumerate(p):
        for k in range(i + 1):
            out[k] += c * comb(i, k) * two_t ** (i - k) * (-1) ** k
    return _to_int(out)


def _floor_in(p: Sequence[int], lo: Fraction, hi: Fraction) -> tuple[int, bool]:
    """Floor of the unique root in (lo, hi); ``exact`` set when the root is that integer."""
    s_lo = sign_at(p, lo)

    def below(t: int):
        if t <= lo:
            return True
        if t >= hi:
            return False
        s = sign_at(p, t)
        if s == 0:
            return None
        return s == s_lo

    base = rational_floor(lo)
    step = 1
    while True:
        r = below(base + step)
        if r is None:
            return base + step, True
        if not r:
            break
        base += step
        step *= 2
    lo_i, hi_i = base, base + step
    while hi_i - lo_i > 1:
        mid = (lo_i + hi_i) // 2
        r = below(mid)
        if r is None:
            return mid, True
        if r:
            lo_i = mid
        else:
            hi_i = mid
    return lo_i, False


def cf_algebraic(r: AlgebraicReal, k: int) -> CFExpansion:
    """First ``k`` partial quotients of an isolated algebraic real."""
    if r.lo == r.hi:
        return cf_rational(r.lo, k)
    p = list(r.poly)
    lo, hi = Fraction(r.lo), Fraction(r.hi)
    out: list[int] = []
    while len(out) < k:
        a, exact = _floor_in(p, lo, hi)
        out.append(a)
        if exact:
            return CFExpansion(out, None, True)
        if len(out) >= k:
            break
        # root - a lies in (max(lo, a) - a, min(hi, a + 1) - a) within (0, 1)
        l2 = max(lo, Fraction(a)) - a
        h2 = min(hi, Fraction(a + 1)) - a
        shifted = taylor_shift(p, a)
        q = primitive(list(reversed(shifted)))
        if q[-1] < 0:
            q = [-c for c in q]
        new_lo = 1 / h2
        new_hi = 1 / l2 if l2 > 0 else Fraction(cauchy_bound(q) + 1)
        p, lo, hi = q, new_lo, new_hi
    return CFExpansion(out, None, False)


# ---------------------------------------------------------------------------
# the three terms at m = 10^(4n+2)


def sample_m(n: int) -> int:
    return 10 ** (4 * n + 2)


def term_poly(term: str, parity: str, mv: int) -> list[int]:
    from .identities import build_terms

    t = build_terms(parity)
    poly = {"L": t.L, "R": t.R, "XP": t.XP}[term]
    return to_dense(poly.substitute("m", mv), "x")


def root_near_minus4(poly: Sequence[int]) -> AlgebraicReal:
    sq = squarefree_part(poly)
    n = sturm_count(sq, Fraction(-5), Fraction(-3))
    if n != 1 or sign_at(sq, -5) == 0:
        raise CertificationError(f"expected exactly one root in (-5, -3), Sturm count {n}")
    r = isolate_root_near(sq, -4)
    if not (-5 <= r.lo and r.hi <= -3):
        raise CertificationError("closest root to -4 lies outside (-5, -3)")
    return r


def negated_root_expansion(term: str, parity: str, n: int, count: int) -> tuple[AlgebraicReal, CFExpansion]:
    r = root_near_minus4(term_poly(term, parity, sample_m(n))).negated()
    return r, cf_algebraic(r, count)


def conjectured_prefix(term: str, n: int) -> list[int]:
    p4 = 10 ** (4 * n)
    if term == "L":
        num = (15 * 10 ** (2 * n)) ** 2 - 23
        return [4, 75 * p4, 3, 4, 1, num // 101]
    if term == "R":
        return [4, 50 * p4 + 2, 10 ** (4 * n + 2) // 7 - 1]
    if term == "XP":
        top = 6 * 10 ** (4 * n + 2) + 100
        return [4, 75 * p4, 3, -(-top // 35)]
    raise ValueError(f"unknown term {term!r}")


RATIO_TARGET = {"L": Fraction(101, 3), "R": Fraction(7, 2), "XP": Fraction(35, 8)}


def rational_root_R(parity: str, mv: int) -> Fraction:
    """The R root is rational: -T_top / (1 + T_m) with top = 2m+1 (odd) or 2m (even)."""
    top = 2 * mv + 1 if parity == "odd" else 2 * mv
    return -Fraction(top * (top + 1) // 2, 1 + mv * (mv + 1) // 2)


def _expand_job(args):
    term, parity, n, count = args
    r, cf = negated_root_expansion(term, parity, n, count)
    return term, r, cf


def _map(jobs, parallel: bool):
    if parallel and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=len(jobs)) as ex:
            return list(ex.map(_expand_job, jobs))
    return [_expand_job(j) for j in jobs]


def _bracket_ok(r: AlgebraicReal, cf: CFExpansion) -> bool:
    """Consecutive convergents lie on opposite sides of the root."""
    cs = [Fraction(p, q) for p, q in cf.convergents()]
    if r.lo == r.hi:
        return all((c - r.lo) * (d - r.lo) <= 0 for c, d in zip(cs, cs[1:]))
    # sign of p at a convergent relative to the root's side, via the isolating interval
    s_lo = sign_at(r.poly, r.lo)
    sides = []
    for c in cs:
        if c <= r.lo:
            sides.append(-1)
        elif c >= r.hi:
            sides.append(1)
        else:
            s = sign_at(r.poly, c)
            sides.append(0 if s == 0 else (-1 if s == s_lo else 1))
    return all(a * b <= 0 for a, b in zip(sides, sides[1:]))


def rounds_to_four(cf: CFExpansion) -> bool:
    """Value within 1/2 of 4, read off the leading quotients."""
    q = cf.quotients
    if q[0] == 4:
        return len(q) == 1 or q[1] >= 2
    return q[0] == 3 and len(q) > 1 and q[1] == 1


def engine_checks(tag: str, r: AlgebraicReal, cf: CFExpansion, count: int,
                  first_exact: bool = True) -> list[Check]:
    if first_exact:
        lead = check_equal(f"{tag}.first-quotient", 4, cf.quotients[0], "cf_algebraic")
    else:
        lead = check_true(f"{tag}.rounds-to-4", rounds_to_four(cf), actual=str(cf.quotients[:2]),
                          provenance="cf_algebraic")
    checks = [
        lead,
        check_true(f"{tag}.convergent-determinants", convergent_determinants_ok(cf), provenance="cf_algebraic"),
        check_true(f"{tag}.convergents-bracket-root", _bracket_ok(r, cf), provenance="cf_algebraic"),
        check_true(f"{tag}.quotients-positive", all(a >= 1 for a in cf.quotients[1:]), provenance="cf_algebraic"),
        check_true(f"{tag}.quotient-count", cf.terminated or len(cf.quotients) >= count,
                   f">= {count}", str(len(cf.quotients)), "cf_algebraic"),
    ]
    return checks


def _prefix_checks(tag: str, term: str, n: int, cf: CFExpansion) -> list[Check]:
    want = conjectured_prefix(term, n)
    checks = []
    for i, w in enumerate(want):
        got = cf.quotients[i] if i < len(cf.quotients) else None
        name = f"{tag}.conjecture.q{i}"
        if got == w:
            checks.append(Check(name, "pass", str(w), str(got), "conjecture"))
        else:
            payload = {"delta": str(got - w)} if got is not None else {"delta": "missing"}
            checks.append(Check(name, "info", str(w), str(got), "conjecture", payload=payload))
    return checks


def _ratio_check(tag: str, term: str, cf: CFExpansion) -> Check:
    qs = cf.quotients
    target = RATIO_TARGET[term]
    if len(qs) < 3:
        return Check(f"{tag}.ratio", "info", str(target), "too few quotients", "conjecture")
    pos = max(range(2, len(qs)), key=lambda i: qs[i])
    ratio = Fraction(qs[1], qs[pos])
    rel = abs(ratio - target) / target
    status = "pass" if rel < Fraction(1, 100) else "info"
    return Check(f"{tag}.ratio", status, f"{target} (within 1%)", f"{ratio.numerator}/{ratio.denominator}",
                 "conjecture", payload={"position": pos, "relativeError": f"{float(rel):.3e}"})


def root_report(term: str, parity: str, n: int, count: int) -> Report:
    rep = Report("cfrac root", {"term": term, "parity": parity, "n": n, "quotients": count})
    with timed(rep):
        r, cf = negated_root_expansion(term, parity, n, count)
        tag = f"{parity}.{term}"
        rep.add(Check(f"{tag}.expansion", "info", "", "[" + ", ".join(map(str, cf.quotients)) + "]",
                      "cf_algebraic", payload=cf.to_dict()))
        rep.add(Check(f"{tag}.isolating-interval", "info", "", f"({r.lo}, {r.hi})", "sturm"))
        rep.extend(engine_checks(tag, r, cf, count, first_exact=parity == "odd"))
        if term == "R":
            rat = cf_rational(-rational_root_R(parity, sample_m(n)), count)
            rep.add(check_equal(f"{tag}.matches-cf_rational", rat.quotients, cf.quotients, "cross-method"))
        if parity == "odd":
            rep.extend(_prefix_checks(tag, term, n, cf))
    return rep


def conjecture_report(n: int, count: int = 8, parallel: bool = False) -> Report:
    rep = Report("cfrac conjecture", {"n": n, "quotients": count, "m": f"10^{4 * n + 2}"})
    with timed(rep):
        results = _map([(t, "odd", n, count) for t in ("L", "R", "XP")], parallel)
        for term, r, cf in sorted(results, key=lambda t: t[0]):
            tag = f"n{n}.{term}"
            rep.add(Check(f"{tag}.expansion", "info", "", "[" + ", ".join(map(str, cf.quotients)) + "]",
                          "cf_algebraic", payload=cf.to_dict()))
            rep.extend(engine_checks(tag, r, cf, count))
            rep.extend(_prefix_checks(tag, term, n, cf))
            rep.add(_ratio_check(tag, term, cf))
            if term == "R":
                rat = cf_rational(-rational_root_R("odd", sample_m(n)), count)
                rep.add(check_equal(f"{tag}.matches-cf_rational", rat.quotients, cf.quotients, "cross-method"))
        num = (15 * 10 ** (2 * n)) ** 2 - 23
        rep.add(check_equal(f"n{n}.L-sixth-quotient-integral", 0, num % 101, "exact"))
    return rep


def explore_even(n: int, count: int = 8, parallel: bool = False) -> Report:
    rep = Report("cfrac explore-even", {"n": n, "quotients": count, "m": f"10^{4 * n + 2}"})
    with timed(rep):
        results = _map([(t, "even", n, count) for t in ("L", "R", "XP")], parallel)
        for term, r, cf in sorted(results, key=lambda t: t[0]):
            tag = f"even.n{n}.{term}"
            rep.add(Check(f"{tag}.expansion", "info", "", "[" + ", ".join(map(str, cf.quotients)) + "]",
                          "cf_algebraic", payload=cf.to_dict()))
            rep.add(Check(f"{tag}.first-quotient", "info", "", str(cf.quotients[0]), "cf_algebraic"))
            rep.extend(engine_checks(tag, r, cf, count, first_exact=False))
            if term == "R":
                rat = cf_rational(-rational_root_R("even", sample_m(n)))
                full = cf_algebraic(r, len(rat.quotients) + 1)
                rep.add(check_true(f"{tag}.terminated", full.terminated, provenance="cf_algebraic"))
                rep.add(check_equal(f"{tag}.matches-cf_rational", rat.quotients, full.quotients, "cross-method"))
    return rep
