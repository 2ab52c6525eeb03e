from fractions import Fraction

import pytest

from hatlab.poly import UnivariatePoly

X = UnivariatePoly.x()


def test_of_normalizes_trailing_zeros():
    p = UnivariatePoly.of(1, 2, 0, 0)
    assert p.coeffs == (Fraction(1), Fraction(2))
    assert p.degree() == 1


def test_zero_and_one():
    assert UnivariatePoly.ZERO.is_zero()
    assert UnivariatePoly.ONE(Fraction(7)) == 1


def test_arithmetic():
    p = (X + 1) * (X - 1)
    assert p == X * X - 1
    assert (p - p).is_zero()
    assert (-p)(Fraction(2)) == -3


def test_evaluation_horner():
    p = UnivariatePoly.of(1, -4, 3)  # 1 - 4x + 3x^2
    assert p(Fraction(1, 3)) == 0
    assert p(Fraction(1)) == 0
    assert p(Fraction(0)) == 1


def test_derivative():
    p = UnivariatePoly.of(5, 0, 3)  # 5 + 3x^2
    assert p.derivative() == UnivariatePoly.of(0, 6)


def test_compose_neg_x():
    p = UnivariatePoly.of(1, 1, 1)  # 1 + x + x^2
    assert p.compose_neg_x() == UnivariatePoly.of(1, -1, 1)


def test_divmod_and_rem():
    p = X * X * X - 1
    d = X - 1
    q, r = p.divmod(d)
    assert r.is_zero()
    assert q == X * X + X + 1
    assert (X * X + 1).rem(X) == UnivariatePoly.ONE


def test_gcd_of_common_factor():
    p = (X - 1) * (X - 2)
    q = (X - 1) * (X - 3)
    g = p.gcd(q)
    # gcd is the common root factor up to a constant
    assert g.degree() == 1
    assert g(Fraction(1)) == 0


def test_square_free_drops_multiplicity():
    p = (X - 1) * (X - 1) * (X + 2)
    sf = p.square_free()
    assert sf.degree() == 2
    assert sf(Fraction(1)) == 0 and sf(Fraction(-2)) == 0


def test_integer_cleared():
    p = UnivariatePoly.of(Fraction(1, 2), Fraction(1, 3))
    assert p.integer_cleared() == [3, 2]


def test_divmod_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        (X + 1).divmod(UnivariatePoly.ZERO)
