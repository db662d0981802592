"""Non-monogenity of one-parameter families x^3 + a2(t) x^2 + a1(t) x + a0(t)
composed with Q(i sqrt(d)), d > 1, -d = 2, 3 (mod 4).

For such d the y-part of a generator is forced to (y0, y1, y2) = (+-1, 0, 0)
and (x1, x2) comes from the Thue equation of the cubic.  Given the complete
parametric list of Thue solutions, F at every candidate is a polynomial in
(t, d).  If every coefficient in d is a polynomial in t that is negative for
all t >= t0, then at integer t each coefficient is <= -1, so F <= -(1 + d)
< -1 for d > 1 and no candidate has index 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .algebra import MultiPoly, UniPoly
from .indexform import build_F_parametric
from .numberfields import BinaryCubicForm
from .thue import ThueSolutionSet, certified_from_pairs

T = UniPoly([0, 1], "t")
ONE = UniPoly([1], "t")
ZERO = UniPoly([], "t")

ParamPair = Tuple[UniPoly, UniPoly]


@dataclass(frozen=True)
class FamilySpec:
    """Cubic x^3 + a2 x^2 + a1 x + a0 with coefficients in Z[t], valid for t >= t0."""

    a2: UniPoly
    a1: UniPoly
    a0: UniPoly
    t0: int
    solutions: Tuple[ParamPair, ...]
    name: str = "family"

    def theta_form(self, x: UniPoly, y: UniPoly) -> UniPoly:
        """N(x - t y) = x^3 + a2 x^2 y + a1 x y^2 + a0 y^3."""
        return x**3 + self.a2 * x * x * y + self.a1 * x * y * y + self.a0 * y**3

    def shifted_coefficients(self) -> Tuple[UniPoly, UniPoly, UniPoly, UniPoly]:
        # homogenized f(X - a2)
        a2, a1, a0 = self.a2, self.a1, self.a0
        return ONE, -2 * a2, a2 * a2 + a1, a0 - a1 * a2

    def shifted_form(self, u: UniPoly, v: UniPoly) -> UniPoly:
        c3, c2, c1, c0 = self.shifted_coefficients()
        return c3 * u**3 + c2 * u * u * v + c1 * u * v * v + c0 * v**3

    def specialize(self, t: int) -> Tuple[int, int, int]:
        return self.a2(t), self.a1(t), self.a0(t)


def example_family() -> FamilySpec:
    """x^3 - (t^4 - t) x^2 + (t^5 - 2 t^2) x + 1 with its five Thue solutions."""
    return FamilySpec(
        a2=-(T**4 - T),
        a1=T**5 - 2 * T**2,
        a0=ONE,
        t0=2,
        solutions=(
            (ONE, ZERO),
            (ZERO, ONE),
            (T, ONE),
            (T**4 - 2 * T, ONE),
            (1 - T**3, T**8 - 3 * T**5 + 3 * T**2),
        ),
        name="x^3-(t^4-t)x^2+(t^5-2t^2)x+1",
    )


def verify_parametric_solutions(family: FamilySpec) -> List[UniPoly]:
    """Theta-form values of the listed solutions; each must be the constant 1."""
    values = [family.theta_form(x, y) for x, y in family.solutions]
    for (x, y), v in zip(family.solutions, values):
        if v != ONE:
            raise ValueError(f"({x}, {y}) gives {v}, not 1")
    return values


def lift_thue_solutions(family: FamilySpec) -> List[ParamPair]:
    """(x, y) -> (x1, x2) = (x + a2 y, y), checked against the shifted form."""
    lifts = []
    for x, y in family.solutions:
        x1, x2 = x + family.a2 * y, y
        if family.shifted_form(x1, x2) != ONE:
            raise ValueError(f"lift of ({x}, {y}) does not satisfy the shifted form identity")
        lifts.append((x1, x2))
    return lifts


def shift_test(p: UniPoly, t0: int) -> bool:
    """Sufficient test for p(t) < 0 on all t >= t0: p(s + t0) has no positive
    coefficient and a negative constant term."""
    if p.is_zero():
        return False
    q = p.shift(t0)
    return q[0] < 0 and all(c <= 0 for c in q.coeffs)


@dataclass
class CandidateVerdict:
    candidate: str
    coords: Tuple[ParamPair, int]
    d_coefficients: Dict[int, UniPoly]
    negative: bool
    diagnostic: str = ""


@dataclass
class FamilyProof:
    family: FamilySpec
    t0: int
    verdicts: List[CandidateVerdict] = field(default_factory=list)
    overall: str = "Inconclusive"


def _candidate_label(x1: UniPoly, x2: UniPoly, y0: int) -> str:
    return f"x1={x1}; x2={x2}; y0={y0}; y1=0; y2=0"


def prove_family_nonmonogenic(family: FamilySpec, t0: int | None = None) -> FamilyProof:
    t0 = family.t0 if t0 is None else t0
    if not family.solutions:
        raise ValueError("no Thue solutions to build candidates from")
    verify_parametric_solutions(family)
    lifts = lift_thue_solutions(family)

    F = build_F_parametric(family.a2, family.a1, family.a0).poly
    F = F.substitute({"y1": 0, "y2": 0})
    tv = ("t",)

    def as_poly(p: UniPoly) -> MultiPoly:
        return MultiPoly.from_unipoly(p, tv)

    proof = FamilyProof(family, t0)
    seen: Dict[Tuple, str] = {}
    for x1, x2 in lifts:
        for sign in (1, -1):
            for y0 in (1, -1):
                sx1, sx2 = sign * x1, sign * x2
                label = _candidate_label(sx1, sx2, y0)
                sub = F.substitute({"x1": as_poly(sx1), "x2": as_poly(sx2), "y0": y0}, ("t", "d"))
                key = tuple(sorted(sub.terms.items()))
                if key in seen:
                    continue
                seen[key] = label
                coeffs = {k: c.to_unipoly() for k, c in sub.coefficients_in("d").items()}
                if sub.is_zero():
                    proof.verdicts.append(
                        CandidateVerdict(label, ((sx1, sx2), y0), {}, False, "F vanishes identically at this candidate")
                    )
                    continue
                full = {k: coeffs.get(k, UniPoly([], "t")) for k in range(max(coeffs) + 1)}
                bad = [k for k, c in full.items() if not shift_test(c, t0)]
                diag = "" if not bad else f"coefficients of d^{bad} not certified negative for t >= {t0}"
                proof.verdicts.append(CandidateVerdict(label, ((sx1, sx2), y0), full, not bad, diag))
    proof.overall = "NonMonogenic" if all(v.negative for v in proof.verdicts) else "Inconclusive"
    return proof


def specialized_thue_solutions(family: FamilySpec, t: int) -> ThueSolutionSet:
    """The family's solution list at a fixed t, as a certified set for the theta form."""
    a2, a1, a0 = family.specialize(t)
    form = BinaryCubicForm(1, a2, a1, a0)
    pairs = [(x(t), y(t)) for x, y in family.solutions]
    return certified_from_pairs(form, pairs, 1, f"{family.name}@t={t}")


def proof_to_dict(proof: FamilyProof) -> dict:
    fam = proof.family
    return {
        "family": fam.name,
        "cubic": [str(fam.a2), str(fam.a1), str(fam.a0)],
        "t0": str(proof.t0),
        "verdict": proof.overall,
        "candidates": [
            {
                "candidate": v.candidate,
                "d_coefficients": {f"d^{k}": str(c) for k, c in sorted(v.d_coefficients.items())},
                "negative_for_t_ge_t0": v.negative,
                "diagnostic": v.diagnostic,
            }
            for v in proof.verdicts
        ],
    }
