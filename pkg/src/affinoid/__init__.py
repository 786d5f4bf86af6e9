"""Exact computer algebra for affine and multiplicative structures on
polynomial Lie groupoids."""

from .poly import ArityError, Poly, PolyMap, format_poly, jacobian, parse_poly, polymap_compose
from .linalg import NoSolution, Solution, kernel_basis, linsolve
from .fields import (
    DegreeError,
    DifferentialForm,
    MultiVectorField,
    TensorField,
    derham_d,
    eval_form,
    eval_mv,
    eval_tensor,
    interior_product,
    interior_vector,
    pullback,
    pushforward_linear,
    schouten_bracket,
    wedge,
)

__all__ = [
    "ArityError",
    "DegreeError",
    "DifferentialForm",
    "MultiVectorField",
    "NoSolution",
    "Poly",
    "PolyMap",
    "Solution",
    "TensorField",
    "derham_d",
    "eval_form",
    "eval_mv",
    "eval_tensor",
    "format_poly",
    "interior_product",
    "interior_vector",
    "jacobian",
    "kernel_basis",
    "linsolve",
    "parse_poly",
    "polymap_compose",
    "pullback",
    "pushforward_linear",
    "schouten_bracket",
    "wedge",
]
