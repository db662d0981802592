"""The integer polynomial F(x1, x2, y0, y1, y2) and the norm caps on x and y.

F is the product of the six mixed conjugate differences
alpha^(1,j) - alpha^(2,k), j != k.  It is expanded once over symbolic
roots r1, r2, r3 of the cubic and w, w' of the quadratic, then rewritten
through elementary symmetric functions; fields are obtained by
substituting numbers (or polynomials in t and d) for those.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from .algebra import MultiPoly, UniPoly, symmetric_reduce
from .numberfields import CubicFieldSpec, ImagQuadSpec

COORD_VARS = ("x1", "x2", "y0", "y1", "y2")
ROOT_VARS = ("r1", "r2", "r3")
GENERIC_VARS = COORD_VARS + ("s1", "s2", "e1", "e2", "e3")
PARAM_VARS = COORD_VARS + ("t", "d")


@dataclass(frozen=True)
class IndexFormF:
    poly: MultiPoly
    case: str
    source: Tuple

    def __call__(self, x1: int, x2: int, y0: int, y1: int, y2: int) -> int:
        if self.poly.vars != COORD_VARS:
            raise TypeError("only a numeric F can be evaluated at integer coordinates")
        return self.poly.evaluate((x1, x2, y0, y1, y2))

    def to_text(self) -> str:
        return self.poly.to_text()


@dataclass(frozen=True)
class Theorem1Bounds:
    """Integer caps on |N(x-part)| and |N(y-part)| that a generator must satisfy."""

    x_rhs_max: int
    y_rhs_max: int


def _difference(vars, j: str, k: str, w: str, w_conj: str) -> MultiPoly:
    """alpha with (root j, w) minus alpha with (root k, w'); x0 cancels."""
    V = {v: MultiPoly.var(vars, v) for v in vars}
    rj, rk = V[j], V[k]
    wj, wk = V[w], V[w_conj]
    return (
        V["x1"] * (rj - rk)
        + V["x2"] * (rj * rj - rk * rk)
        + V["y0"] * (wj - wk)
        + V["y1"] * (wj * rj - wk * rk)
        + V["y2"] * (wj * rj * rj - wk * rk * rk)
    )


@lru_cache(maxsize=None)
def generic_F() -> MultiPoly:
    """F over (x1, x2, y0, y1, y2, s1, s2, e1, e2, e3).

    s1 = w + w', s2 = w w'; e1, e2, e3 are the elementary symmetric
    functions of the cubic's roots.
    """
    pair_vars = COORD_VARS + ("a", "b", "w", "wc")
    # the two factors for an unordered root pair {j, k}; their product is
    # invariant under w <-> w'
    pair = _difference(pair_vars, "a", "b", "w", "wc") * _difference(pair_vars, "b", "a", "w", "wc")
    pair = symmetric_reduce(pair, ("w", "wc"), ("s1", "s2"))

    full_vars = COORD_VARS + ROOT_VARS + ("s1", "s2")
    R = {r: MultiPoly.var(full_vars, r) for r in ROOT_VARS}
    product = MultiPoly.const(full_vars, 1)
    for j, k in (("r1", "r2"), ("r1", "r3"), ("r2", "r3")):
        product = product * pair.substitute({"a": R[j], "b": R[k]}, full_vars)
    reduced = symmetric_reduce(product, ROOT_VARS, ("e1", "e2", "e3"))
    return reduced.reorder(GENERIC_VARS)


def build_F(cubic: CubicFieldSpec, quad: ImagQuadSpec) -> IndexFormF:
    poly = generic_F().substitute(
        {
            "s1": quad.omega_trace,
            "s2": quad.omega_norm,
            "e1": -cubic.a2,
            "e2": cubic.a1,
            "e3": -cubic.a0,
        },
        COORD_VARS,
    )
    return IndexFormF(poly, quad.case, (cubic.coefficients, quad.d))


def build_F_parametric(a2: UniPoly, a1: UniPoly, a0: UniPoly, case: str = "A") -> IndexFormF:
    """F over (x1, x2, y0, y1, y2, t, d) for the cubic x^3 + a2(t) x^2 + a1(t) x + a0(t)
    and w = i sqrt(d) with d symbolic."""
    if case != "A":
        raise NotImplementedError("symbolic d is only supported for w = i*sqrt(d)")
    for p in (a2, a1, a0):
        if p.var != "t":
            raise ValueError("cubic coefficients must be polynomials in t")

    def in_t(p: UniPoly) -> MultiPoly:
        return MultiPoly.from_unipoly(p, PARAM_VARS)

    d = MultiPoly.var(PARAM_VARS, "d")
    poly = generic_F().substitute(
        {"s1": 0, "s2": d, "e1": -in_t(a2), "e2": in_t(a1), "e3": -in_t(a0)},
        PARAM_VARS,
    )
    return IndexFormF(poly, "A", ((str(a2), str(a1), str(a0)), "d"))


def _norm_cap(numerator: int, d: int) -> int:
    """floor(numerator / d^(3/2)) in exact integer arithmetic."""
    # largest k with k^2 d^3 <= numerator^2
    k = 0
    while (k + 1) ** 2 * d**3 <= numerator**2:
        k += 1
    return k


def theorem1_bounds(quad: ImagQuadSpec) -> Theorem1Bounds:
    if quad.case == "A":
        return Theorem1Bounds(1, _norm_cap(1, quad.d))
    return Theorem1Bounds(8, _norm_cap(8, quad.d))
