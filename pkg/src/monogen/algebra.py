"""Exact integer polynomial kernel.

Univariate polynomials (`UniPoly`), sparse multivariate polynomials
(`MultiPoly`), resultants through the subresultant remainder sequence,
discriminants, reduction of symmetric polynomials to elementary symmetric
functions, and integer root extraction.  No floating point is used here.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from sympy import divisors

Monomial = Tuple[int, ...]


class NotSymmetricError(ValueError):
    """Raised by `symmetric_reduce` when the input is not symmetric.

    ``witness`` is a permutation (tuple of root indices) that changes the
    polynomial.
    """

    def __init__(self, message: str, witness: Tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------


def _strip(coeffs: Iterable[int]) -> Tuple[int, ...]:
    cs = [int(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class UniPoly:
    """Polynomial with integer coefficients in one variable.

    Coefficients are stored in ascending degree order; the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[int] = (), var: str = "x"):
        self.coeffs = _strip(coeffs)
        self.var = var

    @classmethod
    def from_descending(cls, coeffs: Sequence[int], var: str = "x") -> "UniPoly":
        return cls(reversed(list(coeffs)), var)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1, var: str = "x") -> "UniPoly":
        return cls([0] * degree + [coeff], var)

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = UniPoly([other], self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)}, var={self.var!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                mono = str(abs(c))
            else:
                power = self.var if i == 1 else f"{self.var}^{i}"
                mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly([other], self.var)
        return NotImplemented

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> "UniPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UniPoly((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly([1], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def shift(self, a: int) -> "UniPoly":
        """Return p(x + a)."""
        result = UniPoly((), self.var)
        lin = UniPoly([a, 1], self.var)
        for c in reversed(self.coeffs):
            result = result * lin + c
        return result

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def exact_div(self, k: int) -> "UniPoly":
        out = []
        for c in self.coeffs:
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError(f"{c} not divisible by {k}")
            out.append(q)
        return UniPoly(out, self.var)

    def pseudo_rem(self, other: "UniPoly") -> "UniPoly":
        """Pseudo-remainder: lc(other)^(deg self - deg other + 1) * self mod other."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo-remainder by zero polynomial")
        r = list(self.coeffs)
        m = other.degree
        lb = other.lc
        e = len(r) - 1 - m + 1
        while len(r) - 1 >= m and r:
            lr = r[-1]
            shift = len(r) - 1 - m
            r = [lb * c for c in r]
            for i, b in enumerate(other.coeffs):
                r[shift + i] -= lr * b
            r.pop()
            while r and r[-1] == 0:
                r.pop()
            e -= 1
        if e > 0:
            r = [c * lb**e for c in r]
        return UniPoly(r, self.var)


def _check_same_var(f: UniPoly, g: UniPoly) -> None:
    if f.var != g.var:
        raise ValueError(f"variable mismatch: {f.var!r} vs {g.var!r}")


def poly_resultant(f: UniPoly, g: UniPoly) -> int:
    """Res(f, g) with the Sylvester-matrix sign convention.

    Uses the subresultant pseudo-remainder sequence, so intermediate
    coefficients stay polynomially bounded.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial is undefined here")
    _check_same_var(f, g)
    A, B = f, g
    sign = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            sign = -1
    if B.degree == 0:
        return sign * B.lc**A.degree
    a, b = A.content(), B.content()
    A, B = A.exact_div(a), B.exact_div(b)
    t = a**B.degree * b**A.degree
    g_, h = 1, 1
    while True:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            sign = -sign
        R = A.pseudo_rem(B)
        A = B
        if R.is_zero():
            return 0
        B = R.exact_div(g_ * h**delta)
        g_ = A.lc
        h = g_**delta // h ** (delta - 1) if delta else h
        if B.degree == 0:
            n = A.degree
            h = B.lc**n // h ** (n - 1) if n else 1
            return sign * t * h


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list:
    """Sylvester matrix of f and g (rows of descending coefficients)."""
    m, n = f.degree, g.degree
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    M = [list(row) for row in matrix]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def sylvester_resultant(f: UniPoly, g: UniPoly) -> int:
    """Resultant as the Sylvester determinant (slow reference route)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial is undefined here")
    if f.degree == 0 and g.degree == 0:
        return 1
    return bareiss_det(sylvester_matrix(f, g))


def poly_discriminant(f: UniPoly) -> int:
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    res = poly_resultant(f, f.derivative())
    q, r = divmod(res, f.lc)
    if r:
        raise ArithmeticError("Res(f, f') not divisible by lc(f)")
    return -q if (n * (n - 1) // 2) % 2 else q


def integer_roots(p: UniPoly) -> set:
    """All integer roots of p, by divisor enumeration of the trailing coefficient."""
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    coeffs = list(p.coeffs)
    roots = set()
    k = 0
    while coeffs[k] == 0:
        k += 1
    if k:
        roots.add(0)
    q = UniPoly(coeffs[k:], p.var)
    if q.degree < 1:
        return roots
    for m in divisors(abs(q[0])):
        for cand in (m, -m):
            if q(cand) == 0:
                roots.add(cand)
    return roots


# ---------------------------------------------------------------------------
# multivariate
# ---------------------------------------------------------------------------


def _grlex_key(mono: Monomial):
    return (sum(mono), mono)


class MultiPoly:
    """Sparse polynomial with integer coefficients over named variables.

    ``terms`` maps exponent tuples (aligned with ``vars``) to nonzero
    integers.  Iteration follows descending graded-lexicographic order.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[Monomial, int] | None = None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean: Dict[Monomial, int] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    mono = tuple(mono)
                    if len(mono) != n:
                        raise ValueError(f"exponent vector {mono} does not match {self.vars}")
                    clean[mono] = int(c)
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, vars: Tuple[str, ...], terms: Dict[Monomial, int]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, vars: Sequence[str], c: int) -> "MultiPoly":
        vars = tuple(vars)
        return cls._raw(vars, {(0,) * len(vars): int(c)} if c else {})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> "MultiPoly":
        vars = tuple(vars)
        mono = tuple(1 if v == name else 0 for v in vars)
        if sum(mono) != 1:
            raise ValueError(f"unknown variable {name!r}")
        return cls._raw(vars, {mono: 1})

    @classmethod
    def from_unipoly(cls, p: UniPoly, vars: Sequence[str] | None = None) -> "MultiPoly":
        vars = tuple(vars) if vars is not None else (p.var,)
        idx = vars.index(p.var)
        terms = {}
        for i, c in enumerate(p.coeffs):
            if c:
                mono = [0] * len(vars)
                mono[idx] = i
                terms[tuple(mono)] = c
        return cls._raw(vars, terms)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        for mono in sorted(self.terms, key=_grlex_key, reverse=True):
            yield mono, self.terms[mono]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars}, {len(self.terms)} terms)"

    def degree(self, name: str) -> int:
        i = self.vars.index(name)
        return max((m[i] for m in self.terms), default=-1)

    def total_degree(self, names: Iterable[str] | None = None) -> int:
        idx = range(len(self.vars)) if names is None else [self.vars.index(n) for n in names]
        return max((sum(m[i] for i in idx) for m in self.terms), default=-1)

    def is_homogeneous(self, names: Iterable[str]) -> bool:
        idx = [self.vars.index(n) for n in names]
        degrees = {sum(m[i] for i in idx) for m in self.terms}
        return len(degrees) <= 1

    def constant_value(self) -> int:
        """The value of a constant polynomial; raises if variables remain."""
        if not self.terms:
            return 0
        if len(self.terms) == 1 and (0,) * len(self.vars) in self.terms:
            return self.terms[(0,) * len(self.vars)]
        raise ValueError("polynomial is not constant")

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable sets differ: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return MultiPoly.const(self.vars, other)
        return NotImplemented

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MultiPoly._raw(self.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            if not other:
                return MultiPoly._raw(self.vars, {})
            return MultiPoly._raw(self.vars, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Monomial, int] = {}
        get = terms.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = get(m, 0) + c1 * c2
        return MultiPoly._raw(self.vars, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- transformations --------------------------------------------------

    def evaluate(self, values: Mapping[str, object] | Sequence[object]):
        """Evaluate at a full assignment (mapping by name or sequence by position)."""
        if isinstance(values, Mapping):
            vals = [values[v] for v in self.vars]
        else:
            vals = list(values)
            if len(vals) != len(self.vars):
                raise ValueError("wrong number of values")
        total = 0
        for mono, c in self.terms.items():
            term = c
            for v, e in zip(vals, mono):
                if e:
                    term = term * v**e
            total = total + term
        return total

    def reorder(self, new_vars: Sequence[str]) -> "MultiPoly":
        """Express over ``new_vars`` (a superset of the variables actually used)."""
        new_vars = tuple(new_vars)
        pos = {v: i for i, v in enumerate(new_vars)}
        terms = {}
        for mono, c in self.terms.items():
            out = [0] * len(new_vars)
            for v, e in zip(self.vars, mono):
                if e:
                    if v not in pos:
                        raise ValueError(f"variable {v!r} in use but not in {new_vars}")
                    out[pos[v]] = e
            terms[tuple(out)] = c
        return MultiPoly._raw(new_vars, terms)

    def substitute(self, mapping: Mapping[str, object], new_vars: Sequence[str] | None = None) -> "MultiPoly":
        """Replace variables by integers or polynomials over ``new_vars``.

        Variables not in ``mapping`` are kept and must belong to ``new_vars``
        (default: the remaining variables in their current order).
        """
        if new_vars is None:
            new_vars = tuple(v for v in self.vars if v not in mapping)
        new_vars = tuple(new_vars)
        images = []
        for v in self.vars:
            if v in mapping:
                img = mapping[v]
                if isinstance(img, MultiPoly):
                    img = img.reorder(new_vars)
                else:
                    img = MultiPoly.const(new_vars, int(img))
            else:
                img = MultiPoly.var(new_vars, v)
            images.append(img)
        power_cache: Dict[Tuple[int, int], MultiPoly] = {}

        def power(i: int, e: int) -> MultiPoly:
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = images[i] if e == 1 else power(i, e - 1) * images[i]
            return power_cache[key]

        # group by the substituted part so each distinct product is formed once
        zero = (0,) * len(new_vars)
        kept_idx = [i for i, v in enumerate(self.vars) if v not in mapping]
        sub_idx = [i for i, v in enumerate(self.vars) if v in mapping]
        kept_pos = [new_vars.index(self.vars[i]) for i in kept_idx]
        groups: Dict[Monomial, Dict[Monomial, int]] = {}
        for mono, c in self.terms.items():
            key = tuple(mono[i] for i in sub_idx)
            kept = [0] * len(new_vars)
            for i, p in zip(kept_idx, kept_pos):
                kept[p] = mono[i]
            g = groups.setdefault(key, {})
            k = tuple(kept)
            g[k] = g.get(k, 0) + c
        out: Dict[Monomial, int] = {}
        for key, kept_terms in groups.items():
            prod = MultiPoly._raw(new_vars, {zero: 1})
            for i, e in zip(sub_idx, key):
                if e:
                    prod = prod * power(i, e)
            for km, kc in kept_terms.items():
                for pm, pc in prod.terms.items():
                    m = tuple(a + b for a, b in zip(km, pm))
                    out[m] = out.get(m, 0) + kc * pc
        return MultiPoly._raw(new_vars, {m: c for m, c in out.items() if c})

    def coefficients_in(self, name: str) -> Dict[int, "MultiPoly"]:
        """Split as sum_k coeff_k * name^k; coefficients drop ``name``."""
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        out: Dict[int, Dict[Monomial, int]] = {}
        for mono, c in self.terms.items():
            out.setdefault(mono[i], {})[mono[:i] + mono[i + 1:]] = c
        return {k: MultiPoly._raw(rest, t) for k, t in sorted(out.items())}

    def to_unipoly(self) -> UniPoly:
        used = {i for m in self.terms for i, e in enumerate(m) if e}
        if len(used) > 1:
            raise ValueError("more than one variable in use")
        if not used:
            return UniPoly([self.constant_value()], self.vars[0] if self.vars else "x")
        i = used.pop()
        coeffs = [0] * (self.degree(self.vars[i]) + 1)
        for m, c in self.terms.items():
            coeffs[m[i]] = c
        return UniPoly(coeffs, self.vars[i])

    def permute_vars(self, perm: Mapping[str, str]) -> "MultiPoly":
        """Rename variables by a bijection on a subset of ``vars``."""
        idx = {v: i for i, v in enumerate(self.vars)}
        src = [idx[perm.get(v, v)] for v in self.vars]
        terms = {tuple(m[j] for j in src): c for m, c in self.terms.items()}
        return MultiPoly._raw(self.vars, terms)

    # -- text -------------------------------------------------------------

    def monomial_text(self, mono: Monomial) -> str:
        parts = []
        for v, e in zip(self.vars, mono):
            if e == 1:
                parts.append(v)
            elif e:
                parts.append(f"{v}^{e}")
        return "*".join(parts) if parts else "1"

    def to_text(self) -> str:
        """One ``coeff monomial`` line per term, descending graded-lex order."""
        return "".join(f"{c} {self.monomial_text(m)}\n" for m, c in self)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in self:
            mt = self.monomial_text(m)
            if mt == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mt
            else:
                body = f"{abs(c)}*{mt}"
            out.append(("-" if c < 0 else "+", body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s


# ---------------------------------------------------------------------------
# symmetric reduction
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _elementary_root_terms(n: int, k: int) -> Dict[Monomial, int]:
    """e_k(r_1..r_n) as a dict over root exponents."""
    terms = {}
    for mono in set(permutations([1] * k + [0] * (n - k))):
        terms[mono] = 1
    return terms


def _mul_terms(a: Dict[Monomial, int], b: Dict[Monomial, int]) -> Dict[Monomial, int]:
    out: Dict[Monomial, int] = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


class _ElementaryExpander:
    """Caches expansions of e_1^k1 ... e_n^kn in the roots."""

    def __init__(self, n: int):
        self.n = n
        self.cache: Dict[Monomial, Dict[Monomial, int]] = {(0,) * n: {(0,) * n: 1}}

    def expand(self, exps: Monomial) -> Dict[Monomial, int]:
        hit = self.cache.get(exps)
        if hit is not None:
            return hit
        # peel one factor off the last nonzero exponent
        k = max(i for i, e in enumerate(exps) if e)
        prev = list(exps)
        prev[k] -= 1
        result = _mul_terms(self.expand(tuple(prev)), _elementary_root_terms(self.n, k + 1))
        self.cache[exps] = result
        return result


def check_symmetric(p: MultiPoly, roots: Sequence[str]) -> None:
    """Raise `NotSymmetricError` unless p is invariant under permuting ``roots``."""
    n = len(roots)
    if n < 2:
        return
    generators = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        generators.append(tuple(list(range(1, n)) + [0]))
    for perm in generators:
        mapping = {roots[i]: roots[perm[i]] for i in range(n)}
        if p.permute_vars(mapping) != p:
            raise NotSymmetricError(f"polynomial changes under permutation {perm} of {tuple(roots)}", perm)


def symmetric_reduce(p: MultiPoly, roots: Sequence[str], elementary: Sequence[str] | None = None) -> MultiPoly:
    """Rewrite a polynomial symmetric in ``roots`` in terms of elementary symmetric functions.

    Returns a polynomial over the non-root variables of ``p`` (in their
    original order) followed by ``elementary`` (default ``e1..en``).
    """
    roots = tuple(roots)
    n = len(roots)
    elementary = tuple(elementary) if elementary is not None else tuple(f"e{i + 1}" for i in range(n))
    if len(elementary) != n:
        raise ValueError("need one elementary name per root")
    check_symmetric(p, roots)

    root_idx = [p.vars.index(r) for r in roots]
    pass_idx = [i for i in range(len(p.vars)) if i not in root_idx]
    passengers = tuple(p.vars[i] for i in pass_idx)
    out_vars = passengers + elementary
    if set(passengers) & set(elementary):
        raise ValueError("elementary names clash with passenger variables")

    groups: Dict[Monomial, Dict[Monomial, int]] = {}
    for mono, c in p.terms.items():
        key = tuple(mono[i] for i in pass_idx)
        groups.setdefault(key, {})[tuple(mono[i] for i in root_idx)] = c

    expander = _ElementaryExpander(n)
    out: Dict[Monomial, int] = {}
    for key, rest in groups.items():
        rest = dict(rest)
        while rest:
            lead = max(rest)
            c = rest[lead]
            if any(lead[i] < lead[i + 1] for i in range(n - 1)):
                raise NotSymmetricError("leading exponent not a partition", tuple(range(n)))
            exps = tuple(lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n))
            for m, ec in expander.expand(exps).items():
                s = rest.get(m, 0) - c * ec
                if s:
                    rest[m] = s
                else:
                    rest.pop(m, None)
            mono = key + exps
            out[mono] = out.get(mono, 0) + c
    return MultiPoly(out_vars, out)
