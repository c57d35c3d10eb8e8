"""Exact algebra kernel: polynomials, number fields, gcds, resultants, factoring."""
from .factor import Factorization, factor_bivariate, factor_poly, univariate_roots
from .gcd import (normalize, poly_gcd, poly_lcm, prem, pquo, resultant, squarefree_decomposition,
                  squarefree_part, strip_univariate_factors, subresultant, sylvester_resultant)
from .numberfield import AlgebraicNumber, NumberField
from .poly import Poly
from .ratfunc import ParamRational

__all__ = [
    "AlgebraicNumber", "Factorization", "NumberField", "ParamRational", "Poly",
    "factor_bivariate", "factor_poly", "normalize", "poly_gcd", "poly_lcm", "pquo", "prem",
    "resultant", "squarefree_decomposition", "squarefree_part", "strip_univariate_factors",
    "subresultant", "sylvester_resultant", "univariate_roots",
]
