import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monogen.algebra import UniPoly, poly_discriminant
from monogen.numberfields import (
    BinaryCubicForm,
    composite_order,
    char_poly,
    element_index,
    index_factors,
    is_squarefree,
    make_cubic_field,
    make_imaginary_quadratic,
    norm_form_shifted,
    norm_form_theta,
    norm_L_element,
    order_discriminant,
)

F42 = make_cubic_field(-1, -2, 1)
F2 = make_cubic_field(-14, 24, 1)
GAUSS = composite_order(F42, make_imaginary_quadratic(1))


def test_cubic_field_examples():
    assert F42.disc == 49
    with pytest.raises(ValueError):
        make_cubic_field(0, 0, -1)
    with pytest.raises(ValueError):
        make_cubic_field(0, 1, 1)


def test_imaginary_quadratic_examples():
    q1 = make_imaginary_quadratic(1)
    assert (q1.case, q1.disc_m, q1.omega_trace, q1.omega_norm) == ("A", -4, 0, 1)
    q3 = make_imaginary_quadratic(3)
    assert (q3.case, q3.omega_norm, q3.omega_trace, q3.disc_m) == ("B", 1, 1, -3)
    q2 = make_imaginary_quadratic(2)
    assert (q2.case, q2.disc_m) == ("A", -8)
    q7 = make_imaginary_quadratic(7)
    assert (q7.case, q7.omega_norm, q7.disc_m) == ("B", 2, -7)
    for bad in (4, 0, -3, 18):
        with pytest.raises(ValueError):
            make_imaginary_quadratic(bad)


def test_is_squarefree():
    assert [n for n in range(1, 20) if is_squarefree(n)] == [1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]


def test_order_discriminant_gaussian():
    assert GAUSS.disc_o == -153664 == 49**2 * (-4) ** 3
    assert GAUSS.trace_form_discriminant() == GAUSS.disc_o


def test_structure_constants():
    a2, a1, a0 = F42.coefficients
    assert GAUSS.multiply((0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)) == (-a0, -a1, -a2, 0, 0, 0)
    q = make_imaginary_quadratic(5)
    order = composite_order(F42, q)
    assert order.multiply((0, 0, 0, 1, 0, 0), (0, 0, 0, 1, 0, 0)) == (-5, 0, 0, 0, 0, 0)


def test_char_poly_examples():
    x = UniPoly([0, 1])
    assert char_poly(GAUSS, (0, 0, 0, 1, 0, 0)) == (x * x + 1) ** 3
    assert char_poly(GAUSS, (0, 1, 0, 0, 0, 0)) == F42.poly**2
    assert char_poly(GAUSS, (7, 0, 0, 0, 0, 0)) == (x - 7) ** 6


def test_element_index_examples():
    assert element_index(GAUSS, (0, 0, 0, 0, 1, 0)) == 1
    assert element_index(GAUSS, (0, 0, 0, 2, 0, -1)) == 1
    assert element_index(GAUSS, (0, 1, 0, 0, 0, 0)) is None


def test_index_factors_examples():
    assert index_factors(GAUSS, (0, 0, 0, 1, 0)) == (1, -1)
    n1, n2 = index_factors(GAUSS, (0, 0, 1, -1, 0))
    assert n1 == 1 and n2 == -1
    assert index_factors(GAUSS, (0, 0, 0, 0, 0)) == (0, 0)


def test_norm_forms():
    assert norm_form_shifted(F42) == BinaryCubicForm(1, 2, -1, -1)
    assert norm_form_shifted(F42)(1, 0) == 1
    assert norm_form_theta(F2) == BinaryCubicForm(1, -14, 24, 1)
    assert norm_form_shifted(F2) == BinaryCubicForm(1, 28, 220, 337)
    fm1 = make_cubic_field(-2, -3, 1)  # t = -1 member of the example family
    assert norm_form_theta(fm1)(6, -5) == 1


def test_norm_L_element():
    for y0 in range(-4, 5):
        assert norm_L_element(F42, y0, 0, 0) == y0**3
    assert norm_L_element(F42, 1, -1, 0) == -1
    assert norm_L_element(F42, 0, 1, 0) == -1


@settings(max_examples=200, deadline=None)
@given(st.integers(-50, 50), st.integers(-50, 50))
def test_shifted_theta_identity(x, y):
    for cubic in (F42, F2):
        assert norm_form_shifted(cubic)(x + cubic.a2 * y, y) == norm_form_theta(cubic)(x, y)


vec6 = st.tuples(*[st.integers(-5, 5)] * 6)


@settings(max_examples=60, deadline=None)
@given(vec6, st.integers(-10, 10))
def test_index_translation_and_sign_invariance(v, m):
    k = element_index(GAUSS, v)
    assert element_index(GAUSS, (v[0] + m,) + v[1:]) == k
    assert element_index(GAUSS, tuple(-c for c in v)) == k


def _random_fields(rng, n):
    out = []
    while len(out) < n:
        a2, a1, a0 = (rng.randint(-6, 6) for _ in range(3))
        d = rng.choice([1, 2, 3, 5, 6, 7, 10, 11, 13, 15])
        try:
            out.append((make_cubic_field(a2, a1, a0), make_imaginary_quadratic(d)))
        except ValueError:
            continue
    return out


def test_discriminant_cross_check_random():
    for cubic, quad in _random_fields(random.Random(11), 10):
        order = composite_order(cubic, quad)
        assert order.trace_form_discriminant() == order_discriminant(cubic, quad)


def test_disc_char_poly_equals_disc_o_times_index_squared():
    rng = random.Random(5)
    for cubic, quad in _random_fields(rng, 5):
        order = composite_order(cubic, quad)
        for _ in range(10):
            v = tuple(rng.randint(-5, 5) for _ in range(6))
            k = element_index(order, v)
            if k is None:
                continue
            assert poly_discriminant(char_poly(order, v)) == order.disc_o * k * k
