import pickle
import random

import pytest

from bichroma.polynomial import (IntPolynomial, NonIntegerCoefficient,
                                 compose_shift, display, evaluate_complex,
                                 evaluate_int, falling_factorial, interpolate)


def test_trim_and_degree():
    assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPolynomial(()).degree == -1
    assert IntPolynomial((5,)).degree == 0


def test_arithmetic():
    p = IntPolynomial((1, 1))      # 1 + x
    q = IntPolynomial((-1, 1))     # x - 1
    assert p * q == IntPolynomial((-1, 0, 1))
    assert p + q == IntPolynomial((0, 2))
    assert p - p == IntPolynomial.zero()
    assert (-q) == IntPolynomial((1, -1))
    assert 3 * p == IntPolynomial((3, 3))
    assert q ** 3 == IntPolynomial((-1, 3, -3, 1))
    assert q ** 0 == IntPolynomial.one()


def test_falling_factorial():
    assert falling_factorial(0) == IntPolynomial.one()
    assert falling_factorial(3) == IntPolynomial((0, 2, -3, 1))
    assert evaluate_int(falling_factorial(5), 5) == 120
    assert evaluate_int(falling_factorial(5), 4) == 0


def test_interpolate_exact():
    # x^3 - 7x + 2 at 0..3
    p = IntPolynomial((2, -7, 0, 1))
    vals = [evaluate_int(p, k) for k in range(4)]
    assert interpolate(vals) == p


def test_interpolate_round_trip_property():
    rng = random.Random(12)
    for _ in range(50):
        coeffs = [rng.randint(-50, 50) for _ in range(rng.randint(1, 8))]
        p = IntPolynomial(coeffs)
        vals = [evaluate_int(p, k) for k in range(len(coeffs))]
        assert interpolate(vals) == p


def test_interpolate_rejects_non_integer():
    # values of x/2 at 0 and 1
    with pytest.raises(NonIntegerCoefficient):
        interpolate([0, 0, 1])


def test_compose_shift():
    p = IntPolynomial((0, 0, 1))  # x^2
    assert compose_shift(p, 3) == IntPolynomial((9, -6, 1))
    q = falling_factorial(4)
    for k in range(-3, 8):
        assert evaluate_int(compose_shift(q, 2), k) == evaluate_int(q, k - 2)


def test_evaluate_complex():
    p = IntPolynomial((1, 0, 1))  # x^2 + 1
    assert abs(evaluate_complex(p, 1j)) < 1e-15


def test_display_goldens():
    assert display(IntPolynomial((2, -1, -2, 0, 1))) == "x^4 - 2*x^2 - x + 2"
    assert display(IntPolynomial((0, 2, -1))) == "-x^2 + 2*x"
    assert display(IntPolynomial((0, 1))) == "x"
    assert display(IntPolynomial((-7,))) == "-7"
    assert display(IntPolynomial.zero()) == "0"


def test_immutable_and_hashable():
    p = IntPolynomial((1, 2))
    with pytest.raises(AttributeError):
        p.coeffs = (3,)
    assert hash(p) == hash(IntPolynomial((1, 2)))


def test_pickle_round_trip():
    p = falling_factorial(6)
    assert pickle.loads(pickle.dumps(p)) == p
