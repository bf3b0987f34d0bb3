"""Exact scalars: integers, rationals and elements of a real quadratic field.

Python ints already carry arbitrary precision and :class:`fractions.Fraction`
is always reduced with a positive denominator, so both are used directly.
The only new type here is :class:`Surd`, an element ``a + b*sqrt(d)``.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "Surd",
    "isqrt",
    "rational_floor",
    "rational_ceil",
    "parse_rational",
    "format_rational",
    "is_squarefree",
    "factorize",
]

_TRIAL_BOUND = 10**6
_ZERO = Fraction(0)
_ONE = Fraction(1)


def isqrt(n: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(n)), exact)`` where ``exact`` means ``n`` is a square."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    r = math.isqrt(n)
    return r, r * r == n


def rational_floor(q) -> int:
    q = Fraction(q)
    return q.numerator // q.denominator


def rational_ceil(q) -> int:
    q = Fraction(q)
    return -((-q.numerator) // q.denominator)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (surrounding whitespace allowed)."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    return Fraction(text)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def factorize(n: int, bound: int = _TRIAL_BOUND) -> dict[int, int]:
    """Trial-division factorization of ``|n|``; ``n`` must be nonzero.

    Raises ``ValueError`` if a cofactor above ``bound**2`` survives, since
    trial division can no longer certify it prime.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        if p > bound:
            raise ValueError(f"cofactor {n} too large for trial division")
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@functools.lru_cache(maxsize=64)
def is_squarefree(d: int, bound: int = 10**4) -> bool:
    """Squarefree test: trial division up to ``bound``, then a square check
    of the cofactor. Cofactors with two large repeated primes that are not an
    exact square (p*p*q, all > bound) are not detected; irrelevant at desk scale.
    """
    if d <= 0:
        return False
    p = 2
    while p <= bound and p * p <= d:
        if d % (p * p) == 0:
            return False
        if d % p == 0:
            d //= p
        p += 1 if p == 2 else 2
    return d == 1 or not isqrt(d)[1]


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, _RationalABC)):
        return Fraction(v)
    raise TypeError(f"expected a rational value, got {type(v).__name__}")


class Surd:
    """Immutable element ``rational + surd*sqrt(radicand)`` of Q(sqrt(d)), d > 1 squarefree.

    Arithmetic mixes freely with ``int`` and ``Fraction``. Two surds with
    different radicands cannot be combined.
    """

    __slots__ = ("rational", "surd", "radicand")

    def __init__(self, rational=0, surd=0, radicand: int = 11):
        if not isinstance(radicand, int) or radicand <= 1 or not is_squarefree(radicand):
            raise ValueError(f"radicand must be a squarefree integer > 1, got {radicand!r}")
        object.__setattr__(self, "rational", _as_fraction(rational))
        object.__setattr__(self, "surd", _as_fraction(surd))
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, name, value):
        raise AttributeError("Surd is immutable")

    @classmethod
    def _raw(cls, rational: Fraction, surd: Fraction, radicand: int) -> "Surd":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rational", rational)
        object.__setattr__(obj, "surd", surd)
        object.__setattr__(obj, "radicand", radicand)
        return obj

    @classmethod
    def sqrt(cls, radicand: int) -> "Surd":
        return cls(0, 1, radicand)

    def _coerce(self, other) -> "Surd | None":
        if isinstance(other, Surd):
            if other.radicand != self.radicand:
                raise ValueError(
                    f"mismatched radicands {self.radicand} and {other.radicand}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Surd._raw(Fraction(other), _ZERO, self.radicand)
        return None

    def is_rational(self) -> bool:
        return self.surd == 0

    def conjugate(self) -> "Surd":
        return Surd._raw(self.rational, -self.surd, self.radicand)

    def norm(self) -> Fraction:
        return self.rational**2 - self.surd**2 * self.radicand

    def sign(self) -> int:
        """Exact sign of the real number represented."""
        a, b, d = self.rational, self.surd, self.radicand
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 with b^2 d
        diff = a * a - b * b * d
        if a > 0:
            return (diff > 0) - (diff < 0)
        return -((diff > 0) - (diff < 0))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Surd._raw(self.rational + o.rational, self.surd + o.surd, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return Surd._raw(-self.rational, -self.surd, self.radicand)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Surd._raw(self.rational - o.rational, self.surd - o.surd, self.radicand)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, e = self.rational, self.surd, o.rational, o.surd
        return Surd._raw(a * c + b * e * self.radicand, a * e + b * c, self.radicand)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero surd")
        num = self * o.conjugate()
        return Surd._raw(num.rational / n, num.surd / n, self.radicand)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return Surd._raw(_ONE, _ZERO, self.radicand) / (self ** (-k))
        result = Surd._raw(_ONE, _ZERO, self.radicand)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Surd):
            return (
                self.radicand == other.radicand
                and self.rational == other.rational
                and self.surd == other.surd
            )
        if isinstance(other, (int, Fraction)):
            return self.surd == 0 and self.rational == other
        return NotImplemented

    def __hash__(self):
        if self.surd == 0:
            return hash(self.rational)
        return hash((self.rational, self.surd, self.radicand))

    def __bool__(self):
        return bool(self.rational) or bool(self.surd)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __str__(self):
        return (
            f"{format_rational(self.rational)} + "
            f"{format_rational(self.surd)}*sqrt({self.radicand})"
        )

    def __repr__(self):
        return f"Surd({self})"
