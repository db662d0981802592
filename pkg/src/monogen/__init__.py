"""Generators of power integral bases in composites of a totally real cubic
field and an imaginary quadratic field."""

from .numberfields import (
    BinaryCubicForm,
    CompositeOrder,
    composite_order,
    element_index,
    index_factors,
    make_cubic_field,
    make_imaginary_quadratic,
    norm_form_shifted,
    norm_form_theta,
)
from .indexform import build_F, build_F_parametric, theorem1_bounds
from .pipeline import SearchConfig, canonicalize, find_generators
from .thue import ingest_certified, solve_norm_pm, solve_thue_range
from .families import example_family, prove_family_nonmonogenic

__version__ = "0.1.0"

__all__ = [
    "BinaryCubicForm",
    "CompositeOrder",
    "SearchConfig",
    "build_F",
    "build_F_parametric",
    "canonicalize",
    "composite_order",
    "element_index",
    "example_family",
    "find_generators",
    "index_factors",
    "ingest_certified",
    "make_cubic_field",
    "make_imaginary_quadratic",
    "norm_form_shifted",
    "norm_form_theta",
    "prove_family_nonmonogenic",
    "solve_norm_pm",
    "solve_thue_range",
    "theorem1_bounds",
]
