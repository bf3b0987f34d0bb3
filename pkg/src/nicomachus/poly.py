"""Sparse multivariate polynomials over Q (or Q(sqrt d)).

Monomials are stored as packed integers: each variable owns a 16-bit field,
the first variable (in sorted name order) in the most significant field.
With that layout integer comparison of keys is the lex order, and monomial
multiplication is integer addition. The top bit of every field is kept clear
so divisibility can be tested with a single subtraction.

    >>> m = MPoly.var("m")
    >>> str((m + 1) ** 2)
    'm^2 + 2*m + 1'
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Mapping, Sequence

from .exact import Surd, format_rational

__all__ = [
    "MPoly",
    "PolyMatrix",
    "bernoulli",
    "faulhaber",
    "sum_over",
    "resultant",
    "discriminant",
    "discriminant_sylvester",
    "det",
]

_W = 16
_FIELD = (1 << _W) - 1
_MAXEXP = (1 << (_W - 1)) - 1


@functools.lru_cache(maxsize=None)
def _guard(n: int) -> int:
    h = 0
    for i in range(n):
        h |= 1 << (_W * i + _W - 1)
    return h


def _pack(exps: Sequence[int]) -> int:
    k = 0
    for e in exps:
        if e < 0 or e > _MAXEXP:
            raise OverflowError(f"exponent {e} out of range")
        k = (k << _W) | e
    return k


def _unpack(key: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = key & _FIELD
        key >>= _W
    return tuple(out)


def _is_zero(c) -> bool:
    return not c


def _cdiv(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return a / b


def _fmt_coeff(c) -> str:
    if isinstance(c, Surd):
        return f"({c})"
    return format_rational(c)


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Fraction, Surd))


class MPoly:
    """Immutable sparse polynomial; variables are kept in sorted name order.

    Binary operations between polynomials over different variable sets work
    over the union of the two sets. Zero coefficients are never stored.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, terms: Mapping[int, object] | None = None, vars: Sequence[str] = ()):
        vs = tuple(vars)
        if list(vs) != sorted(set(vs)):
            raise ValueError(f"variables must be distinct and sorted: {vs}")
        object.__setattr__(self, "vars", vs)
        object.__setattr__(
            self, "terms", {k: c for k, c in (terms or {}).items() if not _is_zero(c)}
        )

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def _make(cls, terms: dict, vars: tuple[str, ...]) -> "MPoly":
        # terms must already be free of zeros
        obj = object.__new__(cls)
        object.__setattr__(obj, "vars", vars)
        object.__setattr__(obj, "terms", terms)
        return obj

    # construction ---------------------------------------------------------

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls._make({1: 1}, (name,))

    @classmethod
    def const(cls, c, vars: Sequence[str] = ()) -> "MPoly":
        if isinstance(c, MPoly):
            return c
        vs = tuple(sorted(set(vars)))
        return cls._make({0: c} if not _is_zero(c) else {}, vs)

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, ...], object], vars: Sequence[str]) -> "MPoly":
        """Build from ``{exponent tuple: coefficient}`` in the order of ``vars``."""
        order = sorted(range(len(vars)), key=lambda i: vars[i])
        svars = tuple(vars[i] for i in order)
        if len(set(svars)) != len(svars):
            raise ValueError("duplicate variable names")
        out: dict[int, object] = {}
        for exps, c in terms.items():
            if len(exps) != len(vars):
                raise ValueError("exponent vector arity mismatch")
            k = _pack([exps[i] for i in order])
            out[k] = out.get(k, 0) + c
        return cls({k: c for k, c in out.items()}, svars)

    @classmethod
    def from_coeffs(cls, var: str, coeffs: Sequence) -> "MPoly":
        """``sum(coeffs[k] * var**k)``; entries may be scalars or polynomials."""
        x = cls.var(var)
        acc = cls.const(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    # structure ------------------------------------------------------------

    def _lift(self, vars: tuple[str, ...]) -> dict[int, object]:
        if vars == self.vars:
            return self.terms
        pos = [vars.index(v) for v in self.vars]
        n, m = len(self.vars), len(vars)
        out = {}
        for k, c in self.terms.items():
            exps = [0] * m
            for i, e in zip(pos, _unpack(k, n)):
                exps[i] = e
            out[_pack(exps)] = c
        return out

    def _common(self, other: "MPoly"):
        if other.vars == self.vars:
            return self.vars, self.terms, other.terms
        vs = tuple(sorted(set(self.vars) | set(other.vars)))
        return vs, self._lift(vs), other._lift(vs)

    def with_vars(self, vars: Iterable[str]) -> "MPoly":
        vs = tuple(sorted(set(vars) | set(self.vars)))
        return MPoly._make(self._lift(vs), vs)

    def used_vars(self) -> tuple[str, ...]:
        mask = 0
        for k in self.terms:
            mask |= k
        n = len(self.vars)
        return tuple(v for v, e in zip(self.vars, _unpack(mask, n)) if e)

    def monomials(self) -> list[tuple[tuple[int, ...], object]]:
        """(exponent tuple, coefficient) pairs in descending graded-lex order."""
        n = len(self.vars)
        items = [(_unpack(k, n), c) for k, c in self.terms.items()]
        items.sort(key=lambda t: (sum(t[0]), t[0]), reverse=True)
        return items

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(0, 0)

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if omitted); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        n = len(self.vars)
        if var is None:
            return max(sum(_unpack(k, n)) for k in self.terms)
        if var not in self.vars:
            return 0
        shift = _W * (n - 1 - self.vars.index(var))
        return max((k >> shift) & _FIELD for k in self.terms)

    def coefficients(self, var: str) -> list["MPoly"]:
        """Coefficients in ``var`` as polynomials in the remaining variables."""
        if var not in self.vars:
            return [self]
        n = len(self.vars)
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1 :]
        buckets: dict[int, dict[int, object]] = {}
        for k, c in self.terms.items():
            exps = _unpack(k, n)
            e = exps[i]
            buckets.setdefault(e, {})[_pack(exps[:i] + exps[i + 1 :])] = c
        deg = max(buckets) if buckets else 0
        return [MPoly._make(buckets.get(e, {}), rest) for e in range(deg + 1)]

    def coeff(self, var: str, k: int) -> "MPoly":
        cs = self.coefficients(var)
        return cs[k] if 0 <= k < len(cs) else MPoly.const(0)

    def leading_coeff(self, var: str) -> "MPoly":
        return self.coefficients(var)[-1]

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if _is_scalar(other):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        vs, a, b = self._common(other)
        out = dict(a)
        for k, c in b.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                s = v + c
                if _is_zero(s):
                    del out[k]
                else:
                    out[k] = s
        return MPoly._make(out, vs)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._make({k: -c for k, c in self.terms.items()}, self.vars)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if _is_scalar(other):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MPoly":
        if _is_zero(c):
            return MPoly._make({}, self.vars)
        return MPoly._make({k: v * c for k, v in self.terms.items()}, self.vars)

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        vs, a, b = self._common(other)
        if not a or not b:
            return MPoly._make({}, vs)
        guard = _guard(len(vs))
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, object] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                v = get(k)
                out[k] = ca * cb if v is None else v + ca * cb
        if any(k & guard for k in out):
            raise OverflowError("exponent overflow in product")
        return MPoly._make({k: c for k, c in out.items() if not _is_zero(c)}, vs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            if _is_zero(other):
                raise ZeroDivisionError("polynomial division by zero")
            return MPoly._make({k: _cdiv(c, other) for k, c in self.terms.items()}, self.vars)
        if isinstance(other, MPoly):
            return self.exact_div(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if _is_scalar(other):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    # division -------------------------------------------------------------

    def divmod(self, divisor: "MPoly") -> tuple["MPoly", "MPoly"]:
        """Multivariate division by one divisor using lex order on sorted variables.

        Returns ``(q, r)`` with ``self = q*divisor + r`` and no term of ``r``
        divisible by the leading monomial of ``divisor``.
        """
        if _is_scalar(divisor):
            divisor = MPoly.const(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        vs, a, b = self._common(divisor)
        guard = _guard(len(vs))
        p = dict(a)
        lk = max(b)
        lc = b[lk]
        rest = [(k, c) for k, c in b.items() if k != lk]
        q: dict[int, object] = {}
        r: dict[int, object] = {}
        while p:
            k = max(p)
            c = p.pop(k)
            t = k - lk
            if t >= 0 and ((k | guard) - lk) & guard == guard:
                f = _cdiv(c, lc)
                q[t] = f
                for kb, cb in rest:
                    kk = t + kb
                    v = p.get(kk, 0) - f * cb
                    if _is_zero(v):
                        p.pop(kk, None)
                    else:
                        p[kk] = v
            else:
                r[k] = c
        return MPoly._make(q, vs), MPoly._make(r, vs)

    def exact_div(self, divisor) -> "MPoly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    # calculus and substitution -------------------------------------------

    def diff(self, var: str) -> "MPoly":
        if var not in self.vars:
            return MPoly._make({}, self.vars)
        shift = _W * (len(self.vars) - 1 - self.vars.index(var))
        unit = 1 << shift
        out = {}
        for k, c in self.terms.items():
            e = (k >> shift) & _FIELD
            if e:
                out[k - unit] = c * e
        return MPoly._make(out, self.vars)

    def substitute(self, var: str, replacement) -> "MPoly":
        """Replace ``var`` by a polynomial (or scalar)."""
        if var not in self.vars:
            raise KeyError(f"unknown variable {var!r}")
        cs = self.coefficients(var)
        acc = MPoly.const(0)
        for c in reversed(cs):
            acc = acc * replacement + c
        return acc

    def compose(self, mapping: Mapping[str, object]) -> "MPoly":
        """Simultaneous substitution of several variables."""
        n = len(self.vars)
        idx = [i for i, v in enumerate(self.vars) if v in mapping]
        if not idx:
            return self
        keep = [v for v in self.vars if v not in mapping]
        keep_t = tuple(keep)
        keep_pos = [i for i, v in enumerate(self.vars) if v not in mapping]
        powers: dict[tuple[int, int], MPoly] = {}

        def power(i: int, e: int) -> MPoly:
            key = (i, e)
            if key not in powers:
                base = mapping[self.vars[i]]
                if not isinstance(base, MPoly):
                    base = MPoly.const(base)
                if e == 1:
                    powers[key] = base
                else:
                    half = power(i, e // 2)
                    sq = half * half
                    powers[key] = sq * base if e % 2 else sq
            return powers[key]

        # group by the substituted exponents to share products
        groups: dict[tuple[int, ...], dict[int, object]] = {}
        for k, c in self.terms.items():
            ex = _unpack(k, n)
            sub = tuple(ex[i] for i in idx)
            kk = _pack([ex[i] for i in keep_pos])
            groups.setdefault(sub, {})[kk] = c
        acc = MPoly.const(0)
        for sub, rest in groups.items():
            term = MPoly._make(rest, keep_t)
            for i, e in zip(idx, sub):
                if e:
                    term = term * power(i, e)
            acc = acc + term
        return acc

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at scalar values; returns a scalar if every variable is bound."""
        res = self.compose(values)
        if res.is_constant():
            return res.constant_value()
        return res

    # integrality ----------------------------------------------------------

    def denominator_lcm(self) -> int:
        out = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                out = lcm(out, c.denominator)
            elif isinstance(c, Surd):
                out = lcm(out, c.rational.denominator, c.surd.denominator)
        return out

    def to_integer(self) -> tuple["MPoly", int]:
        """Return ``(L*self, L)`` with ``L`` the least common denominator; rational coefficients only."""
        L = self.denominator_lcm()
        out = {}
        for k, c in self.terms.items():
            if isinstance(c, Surd):
                raise TypeError("to_integer requires rational coefficients")
            v = c * L
            out[k] = int(v)
        return MPoly._make(out, self.vars), L

    def primitive(self) -> tuple[Fraction, "MPoly"]:
        """Split ``self = content * prim`` with ``prim`` integral, content-free,
        and positive leading coefficient in graded-lex order."""
        if self.is_zero():
            return Fraction(0), self
        ip, L = self.to_integer()
        g = 0
        for c in ip.terms.values():
            g = gcd(g, c)
        lead = max(ip.terms, key=lambda k: (sum(_unpack(k, len(self.vars))), k))
        if ip.terms[lead] < 0:
            g = -g
        prim = MPoly._make({k: c // g for k, c in ip.terms.items()}, self.vars)
        return Fraction(g, L), prim

    # text -----------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.monomials():
            if isinstance(c, Surd) and c.is_rational():
                c = c.rational
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exps) if e
            )
            if isinstance(c, Surd):
                body = _fmt_coeff(c) + (f"*{mono}" if mono else "")
                parts.append(("+", body))
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if mono and a == 1:
                body = mono
            else:
                body = format_rational(a) + (f"*{mono}" if mono else "")
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MPoly({self}; vars={self.vars})"


def _as_poly(v) -> MPoly:
    return v if isinstance(v, MPoly) else MPoly.const(v)


# ---------------------------------------------------------------------------
# power sums


@functools.lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number with the B_1 = -1/2 convention."""
    if n == 0:
        return Fraction(1)
    s = sum(comb(n + 1, k) * bernoulli(k) for k in range(n))
    return -s / (n + 1)


@functools.lru_cache(maxsize=None)
def _faulhaber_coeffs(e: int) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * (e + 2)
    for k in range(e + 1):
        b = bernoulli(k)
        if k == 1:
            b = -b
        out[e + 1 - k] += comb(e + 1, k) * b / (e + 1)
    return tuple(out)


def faulhaber(e: int, var: str = "m") -> MPoly:
    """Closed form of ``sum_{j=1}^{var} j**e`` as a polynomial of degree e+1."""
    if e < 0:
        raise ValueError("power must be nonnegative")
    return MPoly.from_coeffs(var, list(_faulhaber_coeffs(e)))


def sum_over(summand: MPoly, index: str, lo: int, hi) -> MPoly:
    """``sum_{index=lo}^{hi} summand`` where ``hi`` may be a polynomial.

    Uses the polynomial extension of the power sums, so ``lo`` may be 0 or
    negative and the result is the usual telescoping difference.
    """
    hi = _as_poly(hi)
    acc = MPoly.const(0)
    for e, c in enumerate(summand.coefficients(index)):
        if c.is_zero():
            continue
        coeffs = _faulhaber_coeffs(e)
        upper = MPoly.from_coeffs("_N", list(coeffs))
        at_hi = upper.substitute("_N", hi) if upper.vars else upper
        at_lo = sum(cf * (lo - 1) ** i for i, cf in enumerate(coeffs))
        acc = acc + c * (at_hi - at_lo)
    return acc


# ---------------------------------------------------------------------------
# matrices, determinants, resultants


class PolyMatrix:
    """Rectangular grid of polynomial entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rs = [tuple(_as_poly(v) for v in r) for r in rows]
        if rs and any(len(r) != len(rs[0]) for r in rs):
            raise ValueError("matrix rows must have equal length")
        object.__setattr__(self, "rows", tuple(rs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix) or self.shape != other.shape:
            return False
        return all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None

    def apply(self, vec: Sequence) -> list[MPoly]:
        """Matrix times column vector."""
        if len(vec) != self.shape[1]:
            raise ValueError("vector length mismatch")
        return [sum((a * v for a, v in zip(r, vec)), MPoly.const(0)) for r in self.rows]

    def left_apply(self, vec: Sequence) -> list[MPoly]:
        """Row vector times matrix."""
        if len(vec) != self.shape[0]:
            raise ValueError("vector length mismatch")
        ncols = self.shape[1]
        return [
            sum((self.rows[i][j] * vec[i] for i in range(len(vec))), MPoly.const(0))
            for j in range(ncols)
        ]

    def drop_row(self, i: int) -> "PolyMatrix":
        return PolyMatrix([r for k, r in enumerate(self.rows) if k != i])

    def drop_cols(self, cols: Iterable[int]) -> "PolyMatrix":
        cs = set(cols)
        return PolyMatrix([[v for j, v in enumerate(r) if j not in cs] for r in self.rows])

    def is_zero(self) -> bool:
        return all(v.is_zero() for r in self.rows for v in r)

    def to_strings(self) -> list[list[str]]:
        return [[str(v) for v in r] for r in self.rows]


def det(M: PolyMatrix | Sequence[Sequence]) -> MPoly:
    """Fraction-free (Bareiss) determinant."""
    if not isinstance(M, PolyMatrix):
        M = PolyMatrix(M)
    n, k = M.shape
    if n != k:
        raise ValueError(f"determinant of non-square {n}x{k} matrix")
    if n == 0:
        return MPoly.const(1)
    a = [list(r) for r in M.rows]
    sign = 1
    prev = MPoly.const(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return MPoly.const(0)
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * piv - aik * a[k][j]
                a[i][j] = num if prev.is_constant() and prev.constant_value() == 1 else num.exact_div(prev)
        prev = piv
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def sylvester(p: MPoly, q: MPoly, var: str) -> PolyMatrix:
    pc = p.coefficients(var)[::-1]  # leading first
    qc = q.coefficients(var)[::-1]
    dp, dq = len(pc) - 1, len(qc) - 1
    n = dp + dq
    zero = MPoly.const(0)
    rows = []
    for i in range(dq):
        rows.append([zero] * i + pc + [zero] * (n - dp - 1 - i))
    for i in range(dp):
        rows.append([zero] * i + qc + [zero] * (n - dq - 1 - i))
    return PolyMatrix(rows)


def resultant(p, q, var: str) -> MPoly:
    """Sylvester resultant eliminating ``var``."""
    p, q = _as_poly(p), _as_poly(q)
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if p.degree(var) < 1 or q.degree(var) < 1:
        raise ValueError(f"resultant needs positive degree in {var!r}")
    return det(sylvester(p, q, var))


def discriminant_sylvester(p, var: str) -> MPoly:
    """Discriminant directly from the Sylvester determinant of ``p`` and ``p'``."""
    p = _as_poly(p)
    d = p.degree(var)
    if d < 2:
        raise ValueError(f"discriminant needs degree >= 2 in {var!r}, got {d}")
    r = resultant(p, p.diff(var), var)
    r = r.exact_div(p.leading_coeff(var))
    return -r if (d * (d - 1) // 2) % 2 else r


@functools.lru_cache(maxsize=None)
def _generic_discriminant(d: int) -> MPoly:
    names = [f"_c{i}" for i in range(d + 1)]
    p = MPoly.from_coeffs("_t", [MPoly.var(n) for n in names])
    return discriminant_sylvester(p, "_t")


def discriminant(p, var: str) -> MPoly:
    """``(-1)^(d(d-1)/2) * Res(p, dp/dvar) / lc(p)``.

    Computed by specializing the discriminant of the generic degree-d
    polynomial; denominators are cleared first so the heavy expansion runs
    over integers.
    """
    p = _as_poly(p)
    d = p.degree(var)
    if d < 2:
        raise ValueError(f"discriminant needs degree >= 2 in {var!r}, got {d}")
    scale = 1
    if not any(isinstance(c, Surd) for c in p.terms.values()):
        p, scale = p.to_integer()
    coeffs = p.coefficients(var)
    generic = _generic_discriminant(d)
    D = generic.compose({f"_c{i}": c for i, c in enumerate(coeffs)})
    if scale != 1:
        D = D / Fraction(scale) ** (2 * d - 2)
    return D
