import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fpgrover.errors import FracBitsMismatchError, InvalidInputError
from fpgrover.fixedpoint import FxValue, mul_truncate, quantize, right_shift

F = Fraction


@pytest.mark.parametrize(
    "r, f, value, eps",
    [
        (0.625, 2, F(1, 2), F(1, 8)),
        (0.0625, 16, F(1, 16), F(0)),
        (F(-3, 10), 4, F(-5, 16), F(1, 80)),  # floor(-4.8) = -5
    ],
)
def test_quantize_examples(r, f, value, eps):
    res = quantize(r, f)
    assert res.value.to_fraction() == value
    assert res.eps == eps


def test_quantize_float_negative():
    # -0.3 as a float is not exactly -3/10, but the floor is still -5/16
    res = quantize(-0.3, 4)
    assert res.value.mantissa == -5
    assert res.eps == pytest.approx(0.0125, abs=1e-15)


@pytest.mark.parametrize("bad", [math.inf, -math.inf, math.nan])
def test_quantize_rejects_non_finite(bad):
    with pytest.raises(InvalidInputError):
        quantize(bad, 8)


def test_quantize_rejects_negative_f():
    with pytest.raises(InvalidInputError):
        quantize(0.5, -1)


@pytest.mark.parametrize(
    "m, a, value_m, eps",
    [
        (13, 2, 3, F(1, 64)),
        (-13, 2, -4, F(3, 64)),
        (13, 0, 13, F(0)),
        (-7, 0, -7, F(0)),
    ],
)
def test_right_shift_examples(m, a, value_m, eps):
    res = right_shift(FxValue(m, 4), a)
    assert res.value == FxValue(value_m, 4)
    assert res.eps == eps


def test_right_shift_negative_count():
    with pytest.raises(InvalidInputError):
        right_shift(FxValue(1, 4), -1)


@pytest.mark.parametrize(
    "x, y, value, eps",
    [
        (8, 8, F(1, 4), F(0)),
        (3, 3, F(0), F(9, 256)),
        (-3, 3, F(-1, 16), F(7, 256)),
    ],
)
def test_mul_truncate_examples(x, y, value, eps):
    res = mul_truncate(FxValue(x, 4), FxValue(y, 4))
    assert res.value.to_fraction() == value
    assert res.eps == eps


def test_mul_truncate_mismatch():
    with pytest.raises(FracBitsMismatchError):
        mul_truncate(FxValue(1, 4), FxValue(1, 5))


def test_add_mismatch():
    with pytest.raises(FracBitsMismatchError):
        FxValue(1, 4) + FxValue(1, 8)


def test_bit_length_includes_sign():
    assert FxValue(0, 3).bit_length() == 1
    assert FxValue(1, 3).bit_length() == 2
    assert FxValue(-1, 3).bit_length() == 1
    assert FxValue(-2, 3).bit_length() == 2
    assert FxValue(255, 3).bit_length() == 9


# -- properties ---------------------------------------------------------------

fracs = st.fractions(max_denominator=10**12).filter(lambda x: abs(x) < 10**6)
floats = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
fbits = st.integers(min_value=0, max_value=64)
mantissas = st.integers(min_value=-(2**80), max_value=2**80)


@given(r=st.one_of(fracs, floats), f=fbits)
def test_quantize_reconstructs_and_bounds(r, f):
    res = quantize(r, f)
    assert res.reconstruct() == Fraction(r)
    assert 0 <= res.eps < Fraction(1, 2**f)


@given(m=mantissas, f=fbits, a=st.integers(min_value=0, max_value=100))
def test_right_shift_matches_scaling(m, f, a):
    x = FxValue(m, f)
    res = right_shift(x, a)
    assert res.reconstruct() == x.to_fraction() / 2**a
    assert 0 <= res.eps < x.ulp
    assert res.value.frac_bits == f


@given(x=mantissas, y=mantissas, f=fbits)
def test_mul_truncate_remainder(x, y, f):
    a, b = FxValue(x, f), FxValue(y, f)
    res = mul_truncate(a, b)
    assert res.reconstruct() == a.to_fraction() * b.to_fraction()
    assert 0 <= res.eps < Fraction(1, 2**f)


@given(x=mantissas, y=mantissas, f=fbits)
def test_addition_is_exact(x, y, f):
    a, b = FxValue(x, f), FxValue(y, f)
    assert (a + b).to_fraction() == a.to_fraction() + b.to_fraction()
    assert (a - b).to_fraction() == a.to_fraction() - b.to_fraction()
