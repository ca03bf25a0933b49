import random
from fractions import Fraction

import pytest

from hdx.exact import (
    cbrt_bounds,
    cbrt_exact,
    frac_pow_le,
    quad_at_cbrt_is_nonneg,
)


def test_integer_exponent_threshold():
    assert frac_pow_le(Fraction(1, 8), Fraction(1, 2), 3)
    assert not frac_pow_le(Fraction(1, 7), Fraction(1, 2), 3)
    assert frac_pow_le(Fraction(1, 4), Fraction(1, 2), 2)
    assert frac_pow_le(Fraction(0), Fraction(1, 2), 5)


def test_cube_root_threshold():
    # w <= eta^(1/3)  <=>  w^3 <= eta
    assert frac_pow_le(Fraction(1, 2), Fraction(1, 8), 1, 3)
    assert not frac_pow_le(Fraction(51, 100), Fraction(1, 8), 1, 3)


def test_threshold_agrees_with_floats():
    rng = random.Random(0)
    for _ in range(300):
        w = Fraction(rng.randint(0, 50), rng.randint(51, 100))
        eta = Fraction(rng.randint(1, 99), 100)
        num, den = rng.choice([(1, 1), (2, 1), (3, 1), (1, 3), (2, 3)])
        exact = frac_pow_le(w, eta, num, den)
        approx = float(w) <= float(eta) ** (num / den) + 1e-12
        if abs(float(w) - float(eta) ** (num / den)) > 1e-9:
            assert exact == approx


def test_cbrt_exact():
    assert cbrt_exact(Fraction(8, 27)) == Fraction(2, 3)
    assert cbrt_exact(Fraction(1)) == 1
    assert cbrt_exact(Fraction(1, 2)) is None


def test_cbrt_bounds_bracket():
    for x in (Fraction(1, 2), Fraction(3, 7), Fraction(99, 100)):
        lo, hi = cbrt_bounds(x, Fraction(1, 10**9))
        assert lo**3 <= x <= hi**3
        assert hi - lo <= Fraction(1, 10**9)
    with pytest.raises(ValueError):
        cbrt_bounds(Fraction(0), Fraction(1, 10))


def test_quadratic_sign_at_cube_root():
    rng = random.Random(1)
    for _ in range(200):
        a = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
        b = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
        c = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
        eta = Fraction(rng.randint(1, 99), 100)
        t = float(eta) ** (1 / 3)
        value = float(a) * t * t + float(b) * t + float(c)
        if abs(value) > 1e-9:
            assert quad_at_cbrt_is_nonneg(a, b, c, eta) == (value >= 0)


def test_quadratic_sign_degenerate_cases():
    assert quad_at_cbrt_is_nonneg(Fraction(0), Fraction(0), Fraction(0), Fraction(1, 2))
    assert quad_at_cbrt_is_nonneg(Fraction(0), Fraction(0), Fraction(1), Fraction(1, 2))
    assert not quad_at_cbrt_is_nonneg(Fraction(0), Fraction(0), Fraction(-1), Fraction(1, 2))
    # Exact rational cube root: evaluate directly.
    assert quad_at_cbrt_is_nonneg(Fraction(1), Fraction(0), Fraction(-1, 4), Fraction(8, 27))
