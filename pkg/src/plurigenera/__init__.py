"""Exact plurigenus computations for minimal 3-folds of general type with
baskets of terminal quotient singularities."""

from .basket import (
    Basket,
    QuotientSingularity,
    Rational,
    basket_correction,
    canonicalize,
    local_correction,
    miyaoka_sum,
    mod_inverse,
)
from .bounds import BoundQuery, birationality_bound
from .reid import (
    BasketRow,
    GeometrySpec,
    LinearCombination,
    apply_F,
    apply_G,
    build_table,
    delta,
    lambda_vector,
    nabla_vector,
    plurigenus,
    solve_k3,
    verify_identity,
)
from .search import SearchProblem, SolutionMultiset, enumerate_solutions, enumerate_with_filters
from .verify import CaseReport, check_index_bounds, reproduce_all

__version__ = "0.1.0"
