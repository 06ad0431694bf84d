from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from coxorder.errors import UnsupportedLabel, ParseError
from coxorder.scalars import Scalar, cos_pi_over

r2, r3, r5, r6 = (Scalar.sqrt(n) for n in (2, 3, 5, 6))

mpmath.mp.prec = 200
BASIS = [mpmath.mpf(1)] + [mpmath.sqrt(n) for n in (2, 3, 5, 6, 10, 15, 30)]


def big(x):
    "200-bit value of a scalar, independent of the library's own sign code"
    return mpmath.fsum(mpmath.mpf(q.numerator) / q.denominator * b for (q, b) in zip(x.c, BASIS))


fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.lists(fracs, min_size=8, max_size=8).map(Scalar.from_coords)
small = st.lists(st.sampled_from([Fraction(0)] * 4 + [Fraction(k, 3) for k in range(-4, 5)]),
    min_size=8, max_size=8).map(Scalar.from_coords)


def test_add_examples():
    x = Scalar.from_coords([Fraction(1, 3), 2, 0, 0, 0, 0, 0, 1])
    assert Scalar(0) + x == x
    assert r2 + r2 == 2 * r2
    a = Fraction(1, 4) + Fraction(1, 4) * r5
    b = Fraction(1, 4) - Fraction(1, 4) * r5
    assert a + b == Fraction(1, 2)


def test_mul_examples():
    assert r2 * r3 == r6
    assert r5 * r5 == 5
    g = Fraction(1, 4) + Fraction(1, 4) * r5
    assert g * g == Fraction(3, 8) + Fraction(1, 8) * r5


def test_sign_examples():
    assert Scalar(0).sign() == 0
    assert (r2 - 1).sign() == 1
    x = r6 - r2 - 1
    assert x.sign() == 1
    assert abs(float(x) - 0.0353) < 1e-3


def test_cos_table():
    assert cos_pi_over(2) == 0
    assert cos_pi_over(3) == Fraction(1, 2)
    assert cos_pi_over(5) == Fraction(1, 4) + Fraction(1, 4) * r5
    assert cos_pi_over(4) * cos_pi_over(4) == Fraction(1, 2)
    assert cos_pi_over(6) * cos_pi_over(6) == Fraction(3, 4)
    with pytest.raises(UnsupportedLabel):
        cos_pi_over(7)


def test_str_roundtrip():
    for x in [Scalar(0), Fraction(1, 2) + r5, Fraction(1, 4) * r5, 3 - r6]:
        assert Scalar.parse(str(x)) == x
    assert str(Fraction(1, 2) + r5) == "1/2 + r5"
    with pytest.raises(ParseError):
        Scalar.parse("")


def test_hash_matches_fraction():
    assert hash(Scalar(Fraction(3, 4))) == hash(Fraction(3, 4))
    assert len({Scalar(2), Scalar(2), r2 * r2}) == 1


@given(scalars, scalars, scalars)
@settings(max_examples=150, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(scalars)
@settings(max_examples=150, deadline=None)
def test_inverse(a):
    if a:
        assert a * a.inverse() == 1
        assert (1 / a) * a == 1
    else:
        with pytest.raises(ZeroDivisionError):
            a.inverse()


@given(small, small)
@settings(max_examples=300, deadline=None)
def test_sign_against_200_bits(a, b):
    d = a - b
    v = big(d)
    if d:
        assert d.sign() == (1 if v > 0 else -1)
        assert (a < b) == (v < 0)
    else:
        assert d.sign() == 0 and a == b


@given(scalars)
@settings(max_examples=100, deadline=None)
def test_float_close(a):
    assert abs(float(a) - float(big(a))) <= 1e-9 * (1 + abs(float(big(a))))


def test_sign_near_cancellation():
    # (r2 + r3)^2 = 5 + 2 r6, so this is r2 + r3 - sqrt(5 + 2r6) = 0 up to a tiny nudge
    x = r2 + r3 - Fraction(314626436, 100000000)
    assert x.sign() == (1 if big(x) > 0 else -1)
    eps = Fraction(1, 10 ** 30)
    y = (r2 + r3) * (r2 + r3) - 5 - 2 * r6
    assert y == 0
    assert (y + eps).sign() == 1 and (y - eps).sign() == -1
