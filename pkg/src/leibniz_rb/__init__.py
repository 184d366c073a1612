"""Exact computations with Leibniz algebras and weighted Rota-Baxter operators."""

from .core import (ActionPair, LeibnizAlgebra, LeibnizGRep, ValidationReport,
                   adjoint_grep, basis_vec, semidirect_product,
                   validate_leibniz, validate_leibniz_g_rep,
                   validate_representation)
from .fields import PrimeField, RationalField, field_from_spec
from .linalg import Matrix
from .multimap import MultiMap
from .operators import (WeightedRBO, check_weighted_rbo,
                        check_weighted_relative_rbo, graph_check,
                        induced_algebra, search_rbos)

__version__ = "0.1.0"

__all__ = [
    "ActionPair", "LeibnizAlgebra", "LeibnizGRep", "Matrix", "MultiMap",
    "PrimeField", "RationalField", "ValidationReport", "WeightedRBO",
    "adjoint_grep", "basis_vec", "check_weighted_rbo",
    "check_weighted_relative_rbo", "field_from_spec", "graph_check",
    "induced_algebra", "search_rbos", "semidirect_product",
    "validate_leibniz", "validate_leibniz_g_rep", "validate_representation",
    "__version__",
]
