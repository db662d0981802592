"""Enumeration of all generators of power integral bases of O.

Stages, following the factorization of the index:

1. y-stage: (y1, y2) with |N_{L/Q}(y1 - (a2 + t) y2)| within the y-cap;
2. y0 from N_{L/Q}(y0 + y1 t + y2 t^2) = +-1 for each (y1, y2);
3. x-stage: (x1, x2) from |N_{L/Q}(u - (a2 + t) v)| within the x-cap, where
   (u, v) = (x1, x2) for w = i sqrt(d) and (u, v) = (2 x1 + y1, 2 x2 + y2)
   for w = (1 + i sqrt(d))/2;
4. every assembled candidate is kept iff its index equals 1.

x0 never enters: the index is invariant under translation by integers.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .indexform import Theorem1Bounds, theorem1_bounds
from .numberfields import (
    BinaryCubicForm,
    CompositeOrder,
    element_index,
    norm_form_shifted,
    norm_form_theta,
)
from .thue import (
    DEFAULT_BOUND,
    ThueSolutionSet,
    read_certified,
    solve_norm_pm,
    solve_thue_range,
)

log = logging.getLogger(__name__)

Coords5 = Tuple[int, int, int, int, int]


@dataclass
class StageReport:
    name: str
    form: BinaryCubicForm
    cap: int
    completeness: str
    solutions: int


@dataclass
class GeneratorReport:
    order: CompositeOrder
    bounds: Theorem1Bounds
    generators: List[Coords5]
    stages: List[StageReport]
    counts: Dict[str, int]
    seconds: float = 0.0

    @property
    def is_complete(self) -> bool:
        return not any(s.completeness.startswith("bounded(") for s in self.stages)

    @property
    def completeness(self) -> str:
        """'certified' when no stage relied on a bounded search, else 'bounded(B)'."""
        for s in self.stages:
            if s.completeness.startswith("bounded("):
                return s.completeness
        return "certified"


def canonicalize(coords5: Sequence[int]) -> Coords5:
    """Return v or -v, whichever has a positive first nonzero entry."""
    v = tuple(int(c) for c in coords5)
    for c in v:
        if c:
            return v if c > 0 else tuple(-a for a in v)
    raise ValueError("the zero vector has no canonical representative")


@dataclass
class SearchConfig:
    bound: int = DEFAULT_BOUND
    certified: Sequence[ThueSolutionSet] = field(default_factory=tuple)


def load_certified(paths: Iterable) -> List[ThueSolutionSet]:
    return [read_certified(p) for p in paths]


def _stage_pairs(
    order: CompositeOrder, cap: int, config: SearchConfig, name: str
) -> Tuple[List[Tuple[int, int]], StageReport]:
    """Pairs (u, v) with |shifted_form(u, v)| <= cap, from certified data when available."""
    shifted = norm_form_shifted(order.cubic)
    if cap == 0:
        # an irreducible form vanishes only at (0, 0)
        return [(0, 0)], StageReport(name, shifted, 0, "trivial", 1)

    theta = norm_form_theta(order.cubic)
    a2 = order.cubic.a2
    for sols in config.certified:
        if sols.max_abs_rhs < cap:
            continue
        if sols.form == shifted:
            pairs = sols.pairs(cap)
        elif sols.form == theta:
            # shifted(x + a2 y, y) = theta(x, y)
            pairs = [(x + a2 * y, y) for x, y in sols.pairs(cap)]
        else:
            continue
        pairs = sorted(set(pairs) | {(0, 0)})
        return pairs, StageReport(name, shifted, cap, str(sols.completeness), len(pairs))

    sols = solve_thue_range(shifted, cap, config.bound)
    pairs = sols.pairs(cap)
    return pairs, StageReport(name, shifted, cap, str(sols.completeness), len(pairs))


def find_generators(order: CompositeOrder, config: Optional[SearchConfig] = None) -> GeneratorReport:
    config = config or SearchConfig()
    start = time.perf_counter()
    bounds = theorem1_bounds(order.quad)
    case_b = order.quad.case == "B"
    counts: Dict[str, int] = {}

    y_pairs, y_stage = _stage_pairs(order, bounds.y_rhs_max, config, "y1,y2")
    counts["y_pairs"] = len(y_pairs)

    y_triples = []
    for y1, y2 in y_pairs:
        for y0 in sorted(solve_norm_pm(order.cubic, y1, y2, (1, -1))):
            y_triples.append((y0, y1, y2))
    counts["y_triples"] = len(y_triples)

    x_pairs, x_stage = _stage_pairs(order, bounds.x_rhs_max, config, "x1,x2")
    counts["x_pairs"] = len(x_pairs)

    candidates = set()
    for y0, y1, y2 in y_triples:
        for u, v in x_pairs:
            if case_b:
                if (u - y1) % 2 or (v - y2) % 2:
                    continue
                x1, x2 = (u - y1) // 2, (v - y2) // 2
            else:
                x1, x2 = u, v
            candidates.add(canonicalize((x1, x2, y0, y1, y2)))
    counts["candidates"] = len(candidates)

    generators = sorted(
        (c for c in candidates if element_index(order, (0,) + c) == 1),
    )
    counts["generators"] = len(generators)
    log.info("d=%s: %s", order.quad.d, counts)
    return GeneratorReport(
        order=order,
        bounds=bounds,
        generators=generators,
        stages=[y_stage, x_stage],
        counts=counts,
        seconds=time.perf_counter() - start,
    )


def _strs(values) -> List[str]:
    return [str(v) for v in values]


def report_to_dict(report: GeneratorReport) -> dict:
    """JSON-ready report; integers become decimal strings."""
    order = report.order
    return {
        "cubic": _strs(order.cubic.coefficients),
        "d": str(order.quad.d),
        "case": order.quad.case,
        "disc_o": str(order.disc_o),
        "bounds": {
            "x_rhs_max": str(report.bounds.x_rhs_max),
            "y_rhs_max": str(report.bounds.y_rhs_max),
        },
        "generators": [_strs(g) for g in report.generators],
        "x0": "free",
        "completeness": report.completeness,
        "stages": {
            **{
                s.name: {
                    "form": _strs(s.form.coefficients),
                    "cap": str(s.cap),
                    "completeness": s.completeness,
                    "solutions": str(s.solutions),
                }
                for s in report.stages
            },
            "counts": {k: str(v) for k, v in report.counts.items()},
        },
        "seconds": f"{report.seconds:.3f}",
    }
