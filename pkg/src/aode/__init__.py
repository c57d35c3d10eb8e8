"""Exact solver for autonomous algebraic ODE systems of dimension one."""
from .algebraic import (AlgebraicSolutionFamily, RationalSolution, alg_sol, alg_solution_system,
                        rational_solutions, verify_algebraic)
from .chains import RegularChain, triangularize
from .errors import (AodeError, AutonomyError, DimensionError, ExtensionTowerLimit,
                     FactorizationLimit, OrderLimit, ParseError, ResourceLimit, TrivialSystem)
from .oracle import verify_truncation
from .parser import SourceSystem, parse_series, parse_system, serialize
from .puiseux import linear_solutions, puiseux_solve, puiseux_solve_system, solve_at_point
from .reduction import reduce_system
from .series import PuiseuxPoly, PuiseuxTruncation, SolutionFamily
from .system import DiffSystem

__version__ = "0.1.0"

__all__ = [
    "AlgebraicSolutionFamily", "AodeError", "AutonomyError", "DiffSystem", "DimensionError",
    "ExtensionTowerLimit", "FactorizationLimit", "OrderLimit", "ParseError", "PuiseuxPoly",
    "PuiseuxTruncation", "RationalSolution", "RegularChain", "ResourceLimit", "SolutionFamily",
    "SourceSystem", "TrivialSystem", "alg_sol", "alg_solution_system", "linear_solutions",
    "parse_series", "parse_system", "puiseux_solve", "puiseux_solve_system", "rational_solutions",
    "reduce_system", "serialize", "solve_at_point", "triangularize", "verify_algebraic",
    "verify_truncation",
]
