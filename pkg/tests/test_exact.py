import random
from fractions import Fraction

import pytest

from nicomachus.exact import (
    Surd, factorize, format_rational, is_squarefree, isqrt, parse_rational, rational_ceil, rational_floor,
)


@pytest.mark.parametrize("n, expected", [
    (0, (0, True)),
    (5 * 45, (15, True)),
    (1805 * 19845, (5985, True)),
    (2, (1, False)),
    (10**40 + 1, (10**20, False)),
])
def test_isqrt_examples(n, expected):
    assert isqrt(n) == expected


def test_isqrt_negative_is_domain_error():
    with pytest.raises(ValueError):
        isqrt(-1)


def test_isqrt_bracket_property():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randrange(10**30)
        r, exact = isqrt(n)
        assert r * r <= n < (r + 1) ** 2
        assert exact == (r * r == n)
        a = rng.randrange(1, 10**6)
        assert isqrt(a * a * r * r)[0] == a * r


@pytest.mark.parametrize("q, fl", [
    (Fraction(22, 19), 1),
    (Fraction(-22, 19), -2),
    (Fraction(10**6, 7), 142857),
    (Fraction(5), 5),
])
def test_rational_floor(q, fl):
    assert rational_floor(q) == fl


def test_rational_ceil():
    assert rational_ceil(Fraction(6000100, 35)) == 171432
    assert rational_ceil(Fraction(-22, 19)) == -1


def test_rational_round_trip_and_reduction():
    for text in ["0", "-7", "22/19", "-439/379", str(10**30) + "/7"]:
        assert format_rational(parse_rational(text)) == text
    assert Fraction(6 * 22, 6 * 19) == Fraction(22, 19)
    assert format_rational(Fraction(4, -2)) == "-2"


def test_surd_products():
    a = Surd(10, 3)
    b = Surd(10, -3)
    assert a * b == 1
    assert Surd(1, 0) * a == a
    assert a**2 == Surd(199, 60)
    assert str(a**2) == "199 + 60*sqrt(11)"


def test_surd_inverse_and_negative_power():
    a = Surd(Fraction(-1, 2), Fraction(1, 2))
    assert a * a**-1 == 1
    assert (a**-3) * a**3 == 1
    # (-1 + sqrt 11)/2 is a root of t^2 + t - 5/2
    assert a * a + a - Fraction(5, 2) == 0


def test_surd_radicand_mismatch():
    with pytest.raises(ValueError):
        Surd(1, 1, 11) * Surd(1, 1, 7)


def test_surd_rejects_non_squarefree_radicand():
    with pytest.raises(ValueError):
        Surd(0, 1, 12)
    assert is_squarefree(11) and not is_squarefree(18)


def test_surd_sign_and_order():
    s = Surd.sqrt(11)
    assert 3 < s < 4
    assert Surd(10, -3).sign() == 1  # 10 > 3*sqrt(11) = 9.9498...
    assert Surd(-10, 3).sign() == -1
    assert Surd(Fraction(-1, 2), Fraction(1, 2)) < Fraction(58, 50)


def _rand_surd(rng):
    return Surd(Fraction(rng.randint(-30, 30), rng.randint(1, 9)), Fraction(rng.randint(-30, 30), rng.randint(1, 9)))


def test_surd_ring_axioms():
    rng = random.Random(11)
    for _ in range(200):
        x, y, z = (_rand_surd(rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x
        assert x - x == 0
        if x:
            assert (y / x) * x == y
        assert (x * y).norm() == x.norm() * y.norm()


def test_factorize():
    assert factorize(158400) == {2: 6, 3: 2, 5: 2, 11: 1}
    assert factorize(15125) == {5: 3, 11: 2}
    assert factorize(-15125) == {5: 3, 11: 2}  # sign is dropped
    assert factorize(1) == {}
