"""Acceptance criteria 1-8. Each test prints one PASS/FAIL line (visible with -s or -v -rA)."""

import random
import sys
import time
from contextlib import contextmanager

import pytest

from monogen.algebra import poly_discriminant
from monogen.families import example_family, prove_family_nonmonogenic, specialized_thue_solutions
from monogen.indexform import build_F, theorem1_bounds
from monogen.numberfields import (
    char_poly,
    composite_order,
    element_index,
    index_factors,
    is_squarefree,
    make_cubic_field,
    make_imaginary_quadratic,
    norm_form_shifted,
    norm_form_theta,
    order_discriminant,
)
from monogen.pipeline import SearchConfig, find_generators, report_to_dict
from monogen.thue import DEFAULT_BOUND, brute_force_thue, solve_thue_range

F42 = make_cubic_field(-1, -2, 1)
FAMILY = example_family()


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, label):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {label} ({time.perf_counter() - start:.1f}s)"
            with capsys.disabled():
                sys.stdout.write("\n" + line + "\n")

    return run


def analyze(cubic, d, **config):
    return find_generators(composite_order(cubic, make_imaginary_quadratic(d)), SearchConfig(**config))


def test_criterion_1_gaussian_golden(criterion):
    with criterion(1, "six generators for x^3-x^2-2x+1 with d=1"):
        start = time.perf_counter()
        rep = analyze(F42, 1, bound=DEFAULT_BOUND)
        elapsed = time.perf_counter() - start
        got = [str(tuple(int(c) for c in g)) for g in report_to_dict(rep)["generators"]]
        assert sorted(got) == sorted(
            [
                "(0, 0, 1, -1, 0)",
                "(0, 0, 1, 0, -1)",
                "(0, 0, 2, 0, -1)",
                "(0, 0, 1, 1, -1)",
                "(0, 0, 2, 1, -1)",
                "(0, 0, 0, 1, 0)",
            ]
        )
        assert len(got) == 6
        assert rep.completeness == f"bounded({DEFAULT_BOUND})"
        assert elapsed < 60


def test_criterion_2_negative_sweep(criterion):
    ds = [d for d in range(2, 31) if is_squarefree(d)]
    with criterion(2, f"no generators for square-free d in [2, 30] ({len(ds)} values)"):
        start = time.perf_counter()
        assert 3 in ds
        for d in ds:
            rep = analyze(F42, d, bound=DEFAULT_BOUND)
            assert rep.generators == [], d
            assert not rep.is_complete
            if d == 3:
                assert (rep.bounds.x_rhs_max, rep.bounds.y_rhs_max) == (8, 1)
                assert rep.stages[0].cap == 1 and rep.stages[1].cap == 8
        assert time.perf_counter() - start < 300


def test_criterion_3_family(criterion):
    with criterion(3, "family non-monogenic for t >= 2, specializations empty"):
        start = time.perf_counter()
        proof = prove_family_nonmonogenic(FAMILY, 2)
        assert proof.overall == "NonMonogenic"
        assert proof.verdicts and all(v.negative for v in proof.verdicts)
        for t in (2, 3, 4):
            cubic = make_cubic_field(*FAMILY.specialize(t))
            certified = [specialized_thue_solutions(FAMILY, t)]
            for d in (2, 5, 6):
                bounded = analyze(cubic, d, bound=DEFAULT_BOUND)
                assert bounded.generators == [] and not bounded.is_complete
                listed = analyze(cubic, d, bound=DEFAULT_BOUND, certified=certified)
                assert listed.generators == [] and listed.is_complete
        assert time.perf_counter() - start < 300


def test_criterion_4_parametric_identities(criterion):
    with criterion(4, "parametric Thue solutions and the t=-1 extra solution"):
        for x, y in FAMILY.solutions:
            assert tuple(FAMILY.theta_form(x, y).coeffs) == (1,)
        f_minus_1 = make_cubic_field(*FAMILY.specialize(-1))
        assert norm_form_theta(f_minus_1)(6, -5) == 1


FIELDS = [((-1, -2, 1), 1), ((-1, -2, 1), 3), ((-14, 24, 1), 2), ((0, -3, 1), 5), ((1, -4, 1), 7), ((-2, -3, 1), 6)]


def test_criterion_5_factorization_identity(criterion):
    with criterion(5, "k = |N1 N2 F| and disc(char poly) = D_O k^2 on random vectors"):
        rng = random.Random(20240)
        checked = 0
        for coeffs, d in FIELDS:
            cubic, quad = make_cubic_field(*coeffs), make_imaginary_quadratic(d)
            order, F = composite_order(cubic, quad), build_F(cubic, quad)
            for _ in range(25):
                v = tuple(rng.randint(-5, 5) for _ in range(5))
                k = element_index(order, (0,) + v)
                n1, n2 = index_factors(order, v)
                assert abs(n1 * n2 * F(*v)) == (k or 0)
                if k is not None:
                    assert poly_discriminant(char_poly(order, (0,) + v)) == order.disc_o * k * k
                checked += 1
        assert checked >= 100 and len(FIELDS) >= 5


def test_criterion_6_discriminant_identity(criterion):
    with criterion(6, "trace-form discriminant equals D(theta)^2 D_M^3 on 20 fields"):
        rng = random.Random(606)
        seen = 0
        while seen < 20:
            try:
                cubic = make_cubic_field(*(rng.randint(-9, 9) for _ in range(3)))
                quad = make_imaginary_quadratic(rng.randint(1, 40))
            except ValueError:
                continue
            order = composite_order(cubic, quad)
            assert order.trace_form_discriminant() == order_discriminant(cubic, quad)
            assert order.disc_o == cubic.disc**2 * quad.disc_m**3
            seen += 1


def test_criterion_7_thue_oracle(criterion):
    f2 = make_cubic_field(*FAMILY.specialize(2))
    f3 = make_cubic_field(*FAMILY.specialize(3))
    forms = [norm_form_shifted(F42), norm_form_theta(f2), norm_form_shifted(f2), norm_form_theta(f3), norm_form_shifted(f3)]
    with criterion(7, "Thue search equals brute force on |x|,|y| <= 200, caps 0..8"):
        for form in forms:
            oracle = brute_force_thue(form, 8, 200)
            for cap in range(9):
                got = set(solve_thue_range(form, cap, 200).solutions)
                assert got == {s for s in oracle if abs(s[2]) <= cap}, (form, cap)


def test_criterion_8_bounds_table(criterion):
    with criterion(8, "bounds (1,1), (8,1), (1,0), (8,0) for d = 1, 3, 2, 7"):
        table = {1: (1, 1), 3: (8, 1), 2: (1, 0), 7: (8, 0)}
        for d, expected in table.items():
            b = theorem1_bounds(make_imaginary_quadratic(d))
            assert (b.x_rhs_max, b.y_rhs_max) == expected
