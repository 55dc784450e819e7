import pytest
from hypothesis import given, strategies as st

from charbound.graded import CapMismatchError, NotAUnitError, TruncatedClass


def tc(coeffs, cap):
    return TruncatedClass.from_coeffs(coeffs, cap)


# -- frozen examples ---------------------------------------------------------


def test_add_coefficientwise():
    assert tc([1, 2], 2) + tc([0, 3, 1], 2) == tc([1, 5, 1], 2)


def test_add_zero_is_identity():
    a = tc([3, -1, 7], 2)
    assert a + TruncatedClass.zero(2) == a


def test_add_cap_mismatch():
    with pytest.raises(CapMismatchError):
        tc([0, 0], 1) + tc([0, 1], 1) + tc([0, 1, 1], 2)


def test_mul_truncates():
    one_plus_h = tc([1, 1], 1)
    assert one_plus_h * one_plus_h == tc([1, 2], 1)


def test_mul_difference_of_squares():
    assert tc([1, 1], 2) * tc([1, -1], 2) == tc([1, 0, -1], 2)


def test_mul_one_is_identity():
    a = tc([2, 5, -3], 2)
    assert a * TruncatedClass.one(2) == a


def test_pow_binomial():
    assert tc([1, 1], 2) ** 4 == tc([1, 4, 6], 2)


def test_pow_one():
    a = tc([1, 7, 2], 2)
    assert a**1 == a
    assert a**0 == TruncatedClass.one(2)


def test_pow_truncated_away():
    assert tc([0, 2], 2) ** 3 == TruncatedClass.zero(2)


def test_invert_geometric_series():
    assert tc([1, 2], 2).invert_unit() == tc([1, -2, 4], 2)


def test_invert_one():
    assert TruncatedClass.one(3).invert_unit() == TruncatedClass.one(3)


def test_invert_non_unit():
    with pytest.raises(NotAUnitError):
        tc([2, 1], 1).invert_unit()


def test_monomial_beyond_cap_is_zero():
    assert TruncatedClass.monomial(5, 3, 2) == TruncatedClass.zero(2)


def test_exact_length_required():
    with pytest.raises(ValueError):
        TruncatedClass((1, 0), 2)


def test_integer_coefficients_required():
    with pytest.raises(TypeError):
        TruncatedClass((1.0, 0), 1)


def test_scalar_multiplication():
    assert 3 * tc([1, -2], 1) == tc([3, -6], 1)


def test_str_rendering():
    assert str(tc([1, 2, 0, -1], 3)) == "1 + 2*h - 1*h^3"
    assert str(TruncatedClass.zero(2)) == "0"


# -- properties --------------------------------------------------------------

coeff = st.integers(min_value=-40, max_value=40)


@st.composite
def class_triples(draw):
    cap = draw(st.integers(min_value=0, max_value=12))
    mk = lambda: tc(draw(st.lists(coeff, min_size=0, max_size=cap + 1)), cap)
    return mk(), mk(), mk()


@given(class_triples())
def test_ring_axioms(abc):
    a, b, c = abc
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@st.composite
def units(draw):
    cap = draw(st.integers(min_value=0, max_value=12))
    tail = draw(st.lists(coeff, min_size=cap, max_size=cap))
    return tc([1] + tail, cap)


@given(units())
def test_invert_unit_is_inverse(a):
    assert a * a.invert_unit() == TruncatedClass.one(a.cap)


@given(class_triples(), st.integers(min_value=0, max_value=12))
def test_truncation_coherence(abc, low):
    a, b, _ = abc
    low = min(low, a.cap)
    assert (a * b).truncate(low) == a.truncate(low) * b.truncate(low)
    assert (a + b).truncate(low) == a.truncate(low) + b.truncate(low)


@given(units(), st.integers(min_value=0, max_value=12))
def test_invert_commutes_with_truncation(a, low):
    low = min(low, a.cap)
    assert a.invert_unit().truncate(low) == a.truncate(low).invert_unit()


@given(class_triples(), st.integers(min_value=0, max_value=6))
def test_pow_matches_repeated_mul(abc, k):
    a, _, _ = abc
    expected = TruncatedClass.one(a.cap)
    for _ in range(k):
        expected = expected * a
    assert a**k == expected
