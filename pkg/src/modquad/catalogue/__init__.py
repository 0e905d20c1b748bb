from .expr import ExprError, RatFunc, eval_bipoly, eval_bivariate, eval_constant, eval_poly
from .models import (
    ArityError, Catalogue, CatalogueError, CuratedPoint, CurveModel, FixedLocus, FixedPoint,
    InvalidMap, InvolutionSpec, JMap, builtin_catalogue, compose_jmap, factor_qq, fibre_polynomial,
    fixed_points, involution_check, load_catalogue, on_curve, projective_matrix, ramification_divides,
    smoothness, validate_model,
)
