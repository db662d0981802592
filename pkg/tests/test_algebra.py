import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monogen.algebra import (
    MultiPoly,
    NotSymmetricError,
    UniPoly,
    integer_roots,
    poly_discriminant,
    poly_resultant,
    sylvester_resultant,
    symmetric_reduce,
)

F42 = UniPoly.from_descending([1, -1, -2, 1])


def small_poly(max_deg=5, lo=-9, hi=9):
    return st.lists(st.integers(lo, hi), min_size=1, max_size=max_deg + 1).map(UniPoly).filter(
        lambda p: not p.is_zero()
    )


def test_resultant_linear_convention():
    assert poly_resultant(UniPoly([-1, 0, 1]), UniPoly([-2, 1])) == 3


def test_resultant_constant_second_argument():
    for f in (F42, UniPoly([5, 0, 2]), UniPoly([1, 1])):
        assert poly_resultant(f, UniPoly([1])) == 1


def test_resultant_with_derivative_sign():
    # Sylvester convention: Res(f, f') = (-1)^3 disc(f) for this cubic
    assert poly_resultant(F42, F42.derivative()) == -49
    assert sylvester_resultant(F42, F42.derivative()) == -49


def test_resultant_rejects_zero():
    with pytest.raises(ValueError):
        poly_resultant(UniPoly(), F42)


@settings(max_examples=300, deadline=None)
@given(small_poly(), small_poly())
def test_resultant_matches_sylvester_determinant(f, g):
    assert poly_resultant(f, g) == sylvester_resultant(f, g)


@settings(max_examples=200, deadline=None)
@given(small_poly(4), small_poly(3), small_poly(3))
def test_resultant_multiplicative(f, g, h):
    assert poly_resultant(f, g * h) == poly_resultant(f, g) * poly_resultant(f, h)


def test_discriminant_examples():
    assert poly_discriminant(F42) == 49
    assert poly_discriminant(UniPoly([1, 0, 1])) == -4
    f2 = UniPoly.from_descending([1, -14, 24, 1])
    # frozen from an independent Sylvester-determinant evaluation
    assert poly_discriminant(f2) == 62501
    assert poly_discriminant(f2) > 0


def test_discriminant_needs_degree_two():
    with pytest.raises(ValueError):
        poly_discriminant(UniPoly([1, 1]))


@settings(max_examples=200, deadline=None)
@given(small_poly(5).filter(lambda p: p.degree >= 2), st.integers(-20, 20))
def test_discriminant_translation_invariant(f, a):
    assert poly_discriminant(f.shift(a)) == poly_discriminant(f)


def test_integer_roots_examples():
    assert integer_roots(UniPoly.from_descending([1, 0, 0, -1])) == {1}
    assert integer_roots(F42 - 1) == {0, 2, -1}
    assert integer_roots(UniPoly([1, 0, 1])) == set()
    with pytest.raises(ValueError):
        integer_roots(UniPoly())


def test_integer_roots_against_brute_force():
    rng = random.Random(7)
    for _ in range(40):
        r = rng.randint(-10**6, 10**6)
        q = UniPoly([rng.randint(-30, 30) for _ in range(3)])
        if q.is_zero():
            continue
        p = UniPoly([-r, 1]) * q
        roots = integer_roots(p)
        assert r in roots
        assert all(p(m) == 0 for m in roots)
        # every integer root lies within the Cauchy bound
        cauchy = 1 + max(abs(c) for c in p.coeffs[:-1]) // abs(p.lc) + 1
        window = min(cauchy, 10**6)
        brute = {m for m in range(-window, window + 1) if p(m) == 0}
        assert brute <= roots


V = ("r1", "r2", "r3", "z")
R = [MultiPoly.var(V, v) for v in V[:3]]
Z = MultiPoly.var(V, "z")
E = ("z", "e1", "e2", "e3")


def test_symmetric_reduce_examples():
    assert str(symmetric_reduce(R[0] + R[1] + R[2], V[:3])) == "e1"
    assert str(symmetric_reduce(R[0] ** 2 + R[1] ** 2 + R[2] ** 2, V[:3])) == "e1^2 - 2*e2"
    mixed = sum((R[i] ** 2 * R[j] for i in range(3) for j in range(3) if i != j), MultiPoly.const(V, 0))
    e = {n: MultiPoly.var(E, n) for n in E}
    assert symmetric_reduce(mixed, V[:3]) == e["e1"] * e["e2"] - 3 * e["e3"]


def test_symmetric_reduce_keeps_passengers():
    p = (R[0] * R[1] + R[0] * R[2] + R[1] * R[2]) * Z**2 + Z
    out = symmetric_reduce(p, V[:3])
    assert out.vars == E
    assert str(out) == "z^2*e2 + z"


def test_symmetric_reduce_rejects_asymmetric():
    with pytest.raises(NotSymmetricError) as info:
        symmetric_reduce(R[0] + 2 * R[1], V[:3])
    assert info.value.witness in {(1, 0, 2), (1, 2, 0)}


def _random_symmetric(rng):
    # sum over S3 of a random monomial-times-passenger polynomial
    from itertools import permutations

    base = MultiPoly(V, {tuple(rng.randint(0, 3) for _ in range(4)): rng.randint(-5, 5) for _ in range(4)})
    total = MultiPoly.const(V, 0)
    for perm in permutations(range(3)):
        total = total + base.permute_vars({V[i]: V[perm[i]] for i in range(3)})
    return total


def test_symmetric_reduce_round_trip():
    rng = random.Random(3)
    for _ in range(25):
        p = _random_symmetric(rng)
        q = symmetric_reduce(p, V[:3])
        for _ in range(5):
            r = [rng.randint(-6, 6) for _ in range(3)]
            z = rng.randint(-4, 4)
            e1 = r[0] + r[1] + r[2]
            e2 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2]
            e3 = r[0] * r[1] * r[2]
            assert q.evaluate({"z": z, "e1": e1, "e2": e2, "e3": e3}) == p.evaluate(r + [z])


def test_multipoly_text_is_graded_lex():
    x = MultiPoly.var(("a", "b"), "a")
    y = MultiPoly.var(("a", "b"), "b")
    p = 3 * x * y**2 - x + 2 * y**3 + 5
    assert p.to_text() == "3 a*b^2\n2 b^3\n-1 a\n5 1\n"


def test_multipoly_substitute_and_split():
    vars_ = ("x", "t")
    x = MultiPoly.var(vars_, "x")
    t = MultiPoly.var(vars_, "t")
    p = x**2 * t + x
    q = p.substitute({"x": t + 1}, ("t",))
    assert q.to_unipoly() == UniPoly([1, 2, 2, 1], "t")
    parts = p.coefficients_in("x")
    assert set(parts) == {1, 2}
    assert parts[2].to_unipoly() == UniPoly([0, 1], "t")
