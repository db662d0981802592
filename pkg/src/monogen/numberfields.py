"""The cubic field L, the imaginary quadratic field M and the order O of LM.

Elements of ``O = Z[1, t, t^2, w, w t, w t^2]`` are integer coordinate
vectors ``(x0, x1, x2, y0, y1, y2)``.  Everything is computed with exact
integers through the multiplication table of the basis.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from sympy import factorint

from .algebra import UniPoly, bareiss_det, integer_roots, poly_discriminant, poly_resultant

Coords = Tuple[int, int, int, int, int, int]


class IndexInvariantError(ArithmeticError):
    """|D(alpha)/D_O| came out as a non-square; the multiplication table is wrong."""


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CubicFieldSpec:
    a2: int
    a1: int
    a0: int
    disc: int

    @property
    def poly(self) -> UniPoly:
        return UniPoly([self.a0, self.a1, self.a2, 1])

    @property
    def coefficients(self) -> Tuple[int, int, int]:
        return (self.a2, self.a1, self.a0)


def make_cubic_field(a2: int, a1: int, a0: int) -> CubicFieldSpec:
    """Validate x^3 + a2 x^2 + a1 x + a0 as a totally real irreducible cubic."""
    a2, a1, a0 = int(a2), int(a1), int(a0)
    f = UniPoly([a0, a1, a2, 1])
    roots = integer_roots(f)
    if roots:
        raise ValueError(f"{f} is reducible (integer root {min(roots)})")
    disc = poly_discriminant(f)
    if disc <= 0:
        raise ValueError(f"{f} is not totally real (discriminant {disc})")
    return CubicFieldSpec(a2, a1, a0, disc)


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for e in factorint(n).values())


@dataclass(frozen=True)
class ImagQuadSpec:
    """Q(sqrt(-d)) with integral generator w.

    Case "A" (-d = 2, 3 mod 4): w = i sqrt(d), w^2 = -d.
    Case "B" (-d = 1 mod 4):    w = (1 + i sqrt(d))/2, w^2 = w - (1+d)/4.
    """

    d: int
    case: str
    omega_trace: int
    omega_norm: int
    disc_m: int


def make_imaginary_quadratic(d: int) -> ImagQuadSpec:
    d = int(d)
    if d <= 0:
        raise ValueError(f"d must be positive, got {d}")
    if not is_squarefree(d):
        raise ValueError(f"d = {d} is not square-free")
    if (-d) % 4 == 1:
        return ImagQuadSpec(d, "B", 1, (1 + d) // 4, -d)
    return ImagQuadSpec(d, "A", 0, d, -4 * d)


@dataclass(frozen=True)
class QuadInt:
    """a + b*w in Z_M, where w^2 = trace*w - norm."""

    a: int
    b: int
    trace: int
    norm_w: int

    @classmethod
    def of(cls, quad: ImagQuadSpec, a: int, b: int = 0) -> "QuadInt":
        return cls(a, b, quad.omega_trace, quad.omega_norm)

    def _lift(self, other) -> "QuadInt":
        if isinstance(other, QuadInt):
            if (other.trace, other.norm_w) != (self.trace, self.norm_w):
                raise ValueError("QuadInt from different rings")
            return other
        return QuadInt(int(other), 0, self.trace, self.norm_w)

    def __add__(self, other) -> "QuadInt":
        o = self._lift(other)
        return QuadInt(self.a + o.a, self.b + o.b, self.trace, self.norm_w)

    __radd__ = __add__

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b, self.trace, self.norm_w)

    def __sub__(self, other) -> "QuadInt":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "QuadInt":
        return self._lift(other) - self

    def __mul__(self, other) -> "QuadInt":
        o = self._lift(other)
        bb = self.b * o.b
        return QuadInt(
            self.a * o.a - self.norm_w * bb,
            self.a * o.b + self.b * o.a + self.trace * bb,
            self.trace,
            self.norm_w,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuadInt":
        out = QuadInt(1, 0, self.trace, self.norm_w)
        for _ in range(n):
            out = out * self
        return out

    def norm(self) -> int:
        """N_{M/Q}(a + b w) = a^2 + trace*a*b + norm_w*b^2."""
        return self.a * self.a + self.trace * self.a * self.b + self.norm_w * self.b * self.b


# ---------------------------------------------------------------------------
# binary cubic forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryCubicForm:
    """c3 x^3 + c2 x^2 y + c1 x y^2 + c0 y^3."""

    c3: int
    c2: int
    c1: int
    c0: int

    def __call__(self, x, y):
        x2 = x * x
        y2 = y * y
        return self.c3 * x2 * x + self.c2 * x2 * y + self.c1 * x * y2 + self.c0 * y2 * y

    @property
    def coefficients(self) -> Tuple[int, int, int, int]:
        return (self.c3, self.c2, self.c1, self.c0)

    def discriminant(self) -> int:
        a, b, c, d = self.coefficients
        return b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d

    def dehomogenized(self, var: str = "x") -> UniPoly:
        """F(x, 1) as a univariate polynomial."""
        return UniPoly([self.c0, self.c1, self.c2, self.c3], var)

    def swapped(self) -> "BinaryCubicForm":
        """G with G(x, y) = F(y, x)."""
        return BinaryCubicForm(self.c0, self.c1, self.c2, self.c3)

    def checksum(self) -> str:
        canonical = ",".join(str(c) for c in self.coefficients)
        return hashlib.sha256(canonical.encode("ascii")).hexdigest()

    def __str__(self) -> str:
        return f"form({self.c3},{self.c2},{self.c1},{self.c0})"


def norm_form_shifted(cubic: CubicFieldSpec) -> BinaryCubicForm:
    """prod_j (u - (a2 + t_j) v): the homogenized f(X - a2)."""
    g = cubic.poly.shift(-cubic.a2)
    return BinaryCubicForm(g[3], g[2], g[1], g[0])


def norm_form_theta(cubic: CubicFieldSpec) -> BinaryCubicForm:
    """N(x - t y) = y^3 f(x/y)."""
    return BinaryCubicForm(1, cubic.a2, cubic.a1, cubic.a0)


def norm_L_element(cubic: CubicFieldSpec, y0: int, y1: int, y2: int) -> int:
    """N_{L/Q}(y0 + y1 t + y2 t^2) as Res_X(f, y0 + y1 X + y2 X^2)."""
    g = UniPoly([y0, y1, y2])
    if g.is_zero():
        return 0
    return poly_resultant(cubic.poly, g)


# ---------------------------------------------------------------------------
# the order
# ---------------------------------------------------------------------------


def _mul_mod_cubic(p: Sequence[int], q: Sequence[int], cubic: CubicFieldSpec) -> List[int]:
    prod = [0] * 5
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            prod[i + j] += a * b
    # t^3 = -a2 t^2 - a1 t - a0
    for k in (4, 3):
        c = prod[k]
        if c:
            prod[k] = 0
            prod[k - 1] -= cubic.a2 * c
            prod[k - 2] -= cubic.a1 * c
            prod[k - 3] -= cubic.a0 * c
    return prod[:3]


def _basis_product(i: int, j: int, cubic: CubicFieldSpec, quad: ImagQuadSpec) -> Coords:
    si, ki = divmod(i, 3)
    sj, kj = divmod(j, 3)
    e = [0, 0, 0]
    e_i = list(e)
    e_i[ki] = 1
    e_j = list(e)
    e_j[kj] = 1
    theta_part = _mul_mod_cubic(e_i, e_j, cubic)
    s = si + sj
    if s == 0:
        return tuple(theta_part + [0, 0, 0])
    if s == 1:
        return tuple([0, 0, 0] + theta_part)
    # w^2 = trace*w - norm
    return tuple([-quad.omega_norm * c for c in theta_part] + [quad.omega_trace * c for c in theta_part])


@dataclass(frozen=True)
class CompositeOrder:
    cubic: CubicFieldSpec
    quad: ImagQuadSpec
    structure: Tuple[Tuple[Coords, ...], ...] = field(repr=False)
    disc_o: int

    def multiply(self, u: Sequence[int], v: Sequence[int]) -> Coords:
        out = [0] * 6
        for i, a in enumerate(u):
            if a:
                row = self.structure[i]
                for j, b in enumerate(v):
                    if b:
                        ab = a * b
                        for k, c in enumerate(row[j]):
                            if c:
                                out[k] += ab * c
        return tuple(out)

    def mult_matrix(self, coords: Sequence[int]) -> List[List[int]]:
        """Matrix of multiplication by alpha; column j holds alpha * b_j."""
        cols = [self.multiply(coords, tuple(1 if k == j else 0 for k in range(6))) for j in range(6)]
        return [[cols[j][i] for j in range(6)] for i in range(6)]

    def trace(self, coords: Sequence[int]) -> int:
        m = self.mult_matrix(coords)
        return sum(m[i][i] for i in range(6))

    def trace_form_discriminant(self) -> int:
        """det(Tr(b_i b_j)), computed from the multiplication table alone."""
        gram = [[self.trace(self.structure[i][j]) for j in range(6)] for i in range(6)]
        return bareiss_det(gram)


def composite_order(cubic: CubicFieldSpec, quad: ImagQuadSpec) -> CompositeOrder:
    structure = tuple(tuple(_basis_product(i, j, cubic, quad) for j in range(6)) for i in range(6))
    return CompositeOrder(cubic, quad, structure, cubic.disc**2 * quad.disc_m**3)


def order_discriminant(cubic: CubicFieldSpec, quad: ImagQuadSpec) -> int:
    return cubic.disc**2 * quad.disc_m**3


def _charpoly_matrix(A: List[List[int]]) -> UniPoly:
    # Faddeev-LeVerrier; every division below is exact over Z
    n = len(A)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        AM = [[sum(A[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        c_prev = coeffs[n - k + 1]
        M = [[AM[i][j] + (c_prev if i == j else 0) for j in range(n)] for i in range(n)]
        tr = sum(sum(A[i][l] * M[l][i] for l in range(n)) for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = q
    return UniPoly(coeffs)


def char_poly(order: CompositeOrder, coords: Sequence[int]) -> UniPoly:
    """Characteristic polynomial of multiplication by alpha (degree 6, monic)."""
    return _charpoly_matrix(order.mult_matrix(coords))


def element_index(order: CompositeOrder, coords: Sequence[int]) -> Optional[int]:
    """Index of alpha in O, or None when alpha does not generate a degree-6 field."""
    D = poly_discriminant(char_poly(order, coords))
    if D == 0:
        return None
    q, r = divmod(D, order.disc_o)
    if r:
        raise IndexInvariantError(f"D(alpha) = {D} not divisible by D_O = {order.disc_o}")
    k = math.isqrt(abs(q))
    if k * k != abs(q):
        raise IndexInvariantError(f"|D(alpha)/D_O| = {abs(q)} is not a square")
    return k


def index_factors(order: CompositeOrder, coords5: Sequence[int]) -> Tuple[int, int]:
    """(N1, N2) for coords5 = (x1, x2, y0, y1, y2).

    N1 = N_{M/Q}(N_{K/M}(X1 - (a2 + t) X2)) with X_j = x_j + w y_j,
    N2 = N_{L/Q}(y0 + y1 t + y2 t^2).
    """
    x1, x2, y0, y1, y2 = coords5
    form = norm_form_shifted(order.cubic)
    X1 = QuadInt.of(order.quad, x1, y1)
    X2 = QuadInt.of(order.quad, x2, y2)
    n1 = form(X1, X2).norm()
    n2 = norm_L_element(order.cubic, y0, y1, y2)
    return n1, n2


def coords_from5(coords5: Sequence[int], x0: int = 0) -> Coords:
    return (x0,) + tuple(coords5)
