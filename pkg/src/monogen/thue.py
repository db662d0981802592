"""Cubic Thue inequalities |F(x, y)| <= m by bounded search, the cubic unit
equation in y0, and ingestion of externally certified solution lists.

Search strategy for a form with c3 != 0, for y > 0 (negatives follow from
F(-x, -y) = -F(x, y)):

* small y: every x in [-bound, bound] is covered by bisection on the
  monotone pieces of x -> F(x, y);
* medium y: a solution must lie within 2 of round(r*y) for a real root r
  of F(x, 1); roots come from exact Sturm/bisection isolation;
* large y: x/y is then a continued-fraction convergent of some real root
  (Legendre), so only convergents and their small multiples are tested.

The thresholds between the regimes come from the root separation of the
form, with a safety factor of 2.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np
from sympy import divisors

from .algebra import UniPoly, integer_roots
from .numberfields import BinaryCubicForm, CubicFieldSpec, norm_L_element

DEFAULT_BOUND = 100_000
Solution = Tuple[int, int, int]


class DegenerateFormError(ValueError):
    pass


class CertifiedFormatError(ValueError):
    pass


class CertifiedIntegrityError(ValueError):
    pass


@dataclass(frozen=True)
class Completeness:
    """How exhaustive a solution set is: within a search bound, or certified externally."""

    kind: str
    bound: Optional[int] = None
    source: Optional[str] = None

    @classmethod
    def bounded(cls, bound: int) -> "Completeness":
        return cls("bounded", bound=bound)

    @classmethod
    def certified(cls, source: str) -> "Completeness":
        return cls("certified", source=source)

    @property
    def is_certified(self) -> bool:
        return self.kind == "certified"

    def __str__(self) -> str:
        if self.kind == "bounded":
            return f"bounded({self.bound})"
        return f"certified({self.source})"


@dataclass(frozen=True)
class ThueSolutionSet:
    form: BinaryCubicForm
    max_abs_rhs: int
    solutions: Tuple[Solution, ...]
    completeness: Completeness

    def pairs(self, max_abs_value: Optional[int] = None) -> List[Tuple[int, int]]:
        cap = self.max_abs_rhs if max_abs_value is None else max_abs_value
        return [(x, y) for x, y, v in self.solutions if abs(v) <= cap]

    def __len__(self) -> int:
        return len(self.solutions)

    def __contains__(self, xy) -> bool:
        return any((x, y) == tuple(xy) for x, y, _ in self.solutions)


def _normalize(form: BinaryCubicForm, pairs: Iterable[Tuple[int, int]], cap: int) -> Tuple[Solution, ...]:
    out = set()
    for x, y in pairs:
        v = form(x, y)
        if abs(v) <= cap:
            out.add((x, y, v))
            out.add((-x, -y, -v))
    return tuple(sorted(out, key=lambda s: (s[1], s[0])))


# ---------------------------------------------------------------------------
# exact real root isolation
# ---------------------------------------------------------------------------


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _eval_scaled(p: UniPoly, num: int, bits: int) -> int:
    """2^(bits*deg p) * p(num / 2^bits), an exact integer with the sign of p there."""
    n = p.degree
    acc = 0
    scale = 1 << bits
    for i in range(n, -1, -1):
        acc = acc * num + p[i] * scale ** (n - i)
    return acc


def sturm_sequence(p: UniPoly) -> List[UniPoly]:
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        a, b = seq[-2], seq[-1]
        delta = a.degree - b.degree
        r = a.pseudo_rem(b)
        # prem multiplies by lc(b)^(delta+1); undo its sign
        if b.lc < 0 and (delta + 1) % 2:
            r = -r
        if r.is_zero():
            break
        r = -r
        c = r.content()
        seq.append(r.exact_div(c) if c > 1 else r)
    return seq


def _variations(seq: Sequence[UniPoly], num: int, bits: int) -> int:
    signs = [s for s in (_sign(_eval_scaled(q, num, bits)) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _cauchy_bound(p: UniPoly) -> int:
    lc = abs(p.lc)
    return 1 + max((-(-abs(c) // lc) for c in p.coeffs[:-1]), default=0)


def isolate_real_roots(p: UniPoly, bits: int = 20) -> List[Tuple[int, int]]:
    """Real roots of a square-free p as intervals (n/2^bits, (n+1)/2^bits].

    Returns the numerators n in ascending order.
    """
    seq = sturm_sequence(p)
    if seq[-1].degree > 0:
        raise DegenerateFormError(f"{p} has a repeated root")
    B = _cauchy_bound(p) << bits
    out = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        count = _variations(seq, lo, bits) - _variations(seq, hi, bits)
        if count == 0:
            continue
        if hi - lo == 1:
            out.append((lo, bits))
            continue
        mid = (lo + hi) // 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    return sorted(out)


def _refine(p: UniPoly, seq: Sequence[UniPoly], num: int, bits: int, new_bits: int) -> int:
    shift = new_bits - bits
    lo, hi = num << shift, (num + 1) << shift
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _variations(seq, lo, new_bits) - _variations(seq, mid, new_bits) > 0:
            hi = mid
        else:
            lo = mid
    return lo


def _cf(num: int, den: int) -> List[int]:
    out = []
    while den:
        q, r = divmod(num, den)
        out.append(q)
        num, den = den, r
    return out


def root_convergents(p: UniPoly, num: int, bits: int, qmax: int) -> List[Tuple[int, int]]:
    """All convergents p_k/q_k with q_k <= qmax of the irrational root in (num/2^bits, (num+1)/2^bits]."""
    seq = sturm_sequence(p)
    while True:
        lo_cf = _cf(num, 1 << bits)[:-1]
        hi_cf = _cf(num + 1, 1 << bits)[:-1]
        prefix = []
        for a, b in zip(lo_cf, hi_cf):
            if a != b:
                break
            prefix.append(a)
        convs = []
        h0, h1, k0, k1 = 0, 1, 1, 0
        for a in prefix:
            h0, h1 = h1, a * h1 + h0
            k0, k1 = k1, a * k1 + k0
            convs.append((h1, k1))
        if convs and convs[-1][1] > qmax:
            return [c for c in convs if c[1] <= qmax]
        new_bits = bits + max(64, 2 * qmax.bit_length())
        num = _refine(p, seq, num, bits, new_bits)
        bits = new_bits


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def _has_rational_root(p: UniPoly) -> bool:
    if p[0] == 0:
        return True
    for q in divisors(abs(p.lc)):
        for a in divisors(abs(p[0])):
            for s in (a, -a):
                if p(Fraction(s, q)) == 0:
                    return True
    return False


def _root_geometry(p: UniPoly) -> Tuple[float, float]:
    """(min over roots of prod_{j != i} |r_i - r_j|, min over non-real roots of that product times |Im r_i|)."""
    roots = np.roots([float(c) for c in reversed(p.coeffs)])
    prods = []
    complex_prods = []
    for i, r in enumerate(roots):
        P = 1.0
        for j, s in enumerate(roots):
            if j != i:
                P *= abs(r - s)
        prods.append(P)
        if abs(r.imag) > 1e-12 * max(1.0, abs(r)):
            complex_prods.append(P * abs(r.imag))
    return min(prods), (min(complex_prods) if complex_prods else math.inf)


def _monotone_hits(g: UniPoly, m: int, lo: int, hi: int, increasing: bool) -> range:
    """Integers x in [lo, hi] with |g(x)| <= m, for g monotone on [lo, hi]."""
    if lo > hi:
        return range(0)
    h = g if increasing else -g
    # first x with h(x) >= -m
    a, b = lo, hi + 1
    while a < b:
        mid = (a + b) // 2
        if h(mid) >= -m:
            b = mid
        else:
            a = mid + 1
    start = a
    # first x with h(x) > m
    a, b = start, hi + 1
    while a < b:
        mid = (a + b) // 2
        if h(mid) > m:
            b = mid
        else:
            a = mid + 1
    return range(start, a)


def _scan_x(g: UniPoly, m: int, bound: int) -> Set[int]:
    """All |x| <= bound with |g(x)| <= m for a cubic g with nonzero leading coefficient."""
    a, b, c = g[3], g[2], g[1]
    # g'(x) = 3a x^2 + 2b x + c
    disc = 4 * b * b - 12 * a * c
    cuts = []
    if disc > 0:
        s = math.isqrt(disc)
        for num in (-2 * b - s, -2 * b + s):
            cuts.append(num // (6 * a))
    cuts.sort()
    hits: Set[int] = set()
    pieces = []
    start = -bound
    for cpt in cuts:
        pieces.append((start, cpt - 3))
        for x in range(max(-bound, cpt - 2), min(bound, cpt + 3) + 1):
            if abs(g(x)) <= m:
                hits.add(x)
        start = cpt + 4
    pieces.append((start, bound))
    for lo, hi in pieces:
        lo, hi = max(lo, -bound), min(hi, bound)
        if lo > hi:
            continue
        increasing = g(hi) >= g(lo)
        hits.update(_monotone_hits(g, m, lo, hi, increasing))
    return hits


def _search_pairs(form: BinaryCubicForm, m: int, bound: int) -> Set[Tuple[int, int]]:
    """Pairs with |form| <= m, max(|x|, |y|) <= bound, y >= 0; form.c3 != 0."""
    c3 = form.c3
    p = form.dehomogenized()
    pairs: Set[Tuple[int, int]] = set()

    # y = 0
    x = 0
    while x <= bound and abs(c3) * x**3 <= m:
        pairs.add((x, 0))
        pairs.add((-x, 0))
        x += 1

    min_prod, min_complex = _root_geometry(p)
    safety = 2.0
    y_small = math.sqrt(4 * m / (1.25 * abs(c3) * min_prod)) if m else 0.0
    if math.isfinite(min_complex) and m:
        y_small = max(y_small, (4 * m / (abs(c3) * min_complex)) ** (1 / 3))
    y_small = min(bound, int(safety * y_small) + 1)
    irreducible = not _has_rational_root(p)
    if irreducible:
        y_legendre = min(bound, max(y_small, int(safety * 8 * m / (abs(c3) * min_prod)) + 1))
    else:
        y_legendre = bound

    for y in range(1, y_small + 1):
        g = UniPoly([form.c0 * y**3, form.c1 * y * y, form.c2 * y, c3])
        for x in _scan_x(g, m, bound):
            pairs.add((x, y))

    bits = max(20, bound.bit_length() + 3)
    roots = isolate_real_roots(p, bits)
    scale = 1 << bits
    for y in range(y_small + 1, y_legendre + 1):
        for num, _ in roots:
            center = (2 * num * y + scale) // (2 * scale)
            for x in range(center - 2, center + 3):
                if abs(x) <= bound and abs(form(x, y)) <= m:
                    pairs.add((x, y))

    if y_legendre < bound and m > 0:
        # F(kp, kq) = k^3 F(p, q) and F(p, q) != 0, so k^3 <= m
        kmax = 1
        while (kmax + 1) ** 3 <= m:
            kmax += 1
        for num, b in roots:
            for pk, qk in root_convergents(p, num, b, bound):
                for k in range(1, kmax + 1):
                    x, y = k * pk, k * qk
                    if y > y_legendre and y <= bound and abs(x) <= bound and abs(form(x, y)) <= m:
                        pairs.add((x, y))
    return pairs


def solve_thue_range(form: BinaryCubicForm, max_abs_rhs: int, bound: int = DEFAULT_BOUND) -> ThueSolutionSet:
    """All (x, y) with |form(x, y)| <= max_abs_rhs and max(|x|, |y|) <= bound."""
    if form.discriminant() == 0:
        raise DegenerateFormError(f"{form} has zero discriminant")
    if max_abs_rhs < 0 or bound < 1:
        raise ValueError("need max_abs_rhs >= 0 and bound >= 1")
    if form.c3 != 0:
        pairs = _search_pairs(form, max_abs_rhs, bound)
    elif form.c0 != 0:
        pairs = {(x, y) for y, x in _search_pairs(form.swapped(), max_abs_rhs, bound)}
    else:
        raise DegenerateFormError(f"{form} vanishes on both axes; rewrite it with c3 or c0 nonzero")
    return ThueSolutionSet(form, max_abs_rhs, _normalize(form, pairs, max_abs_rhs), Completeness.bounded(bound))


def brute_force_thue(form: BinaryCubicForm, max_abs_rhs: int, bound: int) -> Set[Solution]:
    """Reference scan over the full box; used as an oracle."""
    out = set()
    for y in range(-bound, bound + 1):
        for x in range(-bound, bound + 1):
            v = form(x, y)
            if abs(v) <= max_abs_rhs:
                out.add((x, y, v))
    return out


# ---------------------------------------------------------------------------
# y0 from N_{L/Q}(y0 + y1 t + y2 t^2) in a target set
# ---------------------------------------------------------------------------


def norm_polynomial_in_y0(cubic: CubicFieldSpec, y1: int, y2: int) -> UniPoly:
    """p(y0) = N(y0 + y1 t + y2 t^2), a monic cubic in y0."""
    c = norm_L_element(cubic, 0, y1, y2)
    p1 = norm_L_element(cubic, 1, y1, y2)
    m1 = norm_L_element(cubic, -1, y1, y2)
    a = (p1 + m1) // 2 - c
    b = (p1 - m1 - 2) // 2
    return UniPoly([c, b, a, 1], "y0")


def solve_norm_pm(cubic: CubicFieldSpec, y1: int, y2: int, rhs_set: Iterable[int] = (1, -1)) -> Set[int]:
    p = norm_polynomial_in_y0(cubic, y1, y2)
    out: Set[int] = set()
    for r in rhs_set:
        q = p - r
        if q.degree <= 0:
            continue  # constant q: never zero, as p is monic of degree 3
        out |= integer_roots(q)
    return {y0 for y0 in out if norm_L_element(cubic, y0, y1, y2) in set(rhs_set)}


# ---------------------------------------------------------------------------
# certified solution files
# ---------------------------------------------------------------------------

_HEADER = re.compile(r"^#form\s+(-?\d+)\s+(-?\d+)\s+(-?\d+)\s+(-?\d+)\s+sha256:([0-9a-f]{64})\s*$")
_RHS_MAX = re.compile(r"^#rhs-max\s+(\d+)\s*$")


def _read_source(source) -> Tuple[str, str]:
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source and Path(source).exists()):
        path = Path(source)
        return path.read_text(), str(path)
    if isinstance(source, str):
        return source, "<text>"
    raise TypeError("source must be a path or the file contents")


def read_certified(source, source_id: Optional[str] = None) -> ThueSolutionSet:
    """Parse and re-verify a certified solution file; the form comes from its header."""
    text, default_id = _read_source(source)
    source_id = source_id or default_id
    form = None
    declared_max = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if form is None:
            mh = _HEADER.match(line)
            if not mh:
                raise CertifiedFormatError(f"line {lineno}: expected '#form c3 c2 c1 c0 sha256:<hex>' header")
            form = BinaryCubicForm(*(int(g) for g in mh.groups()[:4]))
            if form.checksum() != mh.group(5):
                raise CertifiedIntegrityError(f"line {lineno}: header checksum does not match {form}")
            continue
        if line.startswith("#"):
            mr = _RHS_MAX.match(line)
            if mr:
                declared_max = int(mr.group(1))
            continue
        fields = line.split()
        if len(fields) != 3:
            raise CertifiedFormatError(f"line {lineno}: expected 'rhs x y', got {line!r}")
        try:
            rhs, x, y = (int(f) for f in fields)
        except ValueError:
            raise CertifiedFormatError(f"line {lineno}: non-integer field in {line!r}") from None
        if form(x, y) != rhs:
            raise CertifiedIntegrityError(
                f"line {lineno}: entry (x, y) = ({x}, {y}) claims value {rhs} but {form} gives {form(x, y)}"
            )
        entries.append((x, y))
    if form is None:
        raise CertifiedFormatError("missing '#form' header")
    values = [abs(form(x, y)) for x, y in entries]
    max_abs = declared_max if declared_max is not None else max(values, default=0)
    if values and max(values) > max_abs:
        raise CertifiedIntegrityError(f"entry value {max(values)} exceeds declared #rhs-max {max_abs}")
    return ThueSolutionSet(form, max_abs, _normalize(form, entries, max_abs), Completeness.certified(source_id))


def ingest_certified(source, form: BinaryCubicForm, source_id: Optional[str] = None) -> ThueSolutionSet:
    sols = read_certified(source, source_id)
    if sols.form.checksum() != form.checksum():
        raise CertifiedIntegrityError(f"certified file is for {sols.form}, not {form}")
    return sols


def certified_from_pairs(
    form: BinaryCubicForm, pairs: Iterable[Tuple[int, int]], max_abs_rhs: int, source_id: str
) -> ThueSolutionSet:
    """Wrap a solution list proven complete elsewhere; every pair is re-evaluated."""
    pairs = list(pairs)
    for x, y in pairs:
        if abs(form(x, y)) > max_abs_rhs:
            raise CertifiedIntegrityError(f"({x}, {y}) gives {form(x, y)}, outside |value| <= {max_abs_rhs}")
    return ThueSolutionSet(form, max_abs_rhs, _normalize(form, pairs, max_abs_rhs), Completeness.certified(source_id))


def format_certified(sols: ThueSolutionSet, comment: Optional[str] = None) -> str:
    f = sols.form
    lines = [f"#form {f.c3} {f.c2} {f.c1} {f.c0} sha256:{f.checksum()}", f"#rhs-max {sols.max_abs_rhs}"]
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.extend(f"{v} {x} {y}" for x, y, v in sols.solutions)
    return "\n".join(lines) + "\n"
