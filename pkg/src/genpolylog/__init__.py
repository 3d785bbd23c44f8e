"""Generalized finite polylogarithms over F_p(alpha) and their identities."""

from .errors import (
    BadArgument, DegreeGuardError, DivisionByZero, InternalInconsistency, PoleError,
    PolylogError, UnsupportedOrder,
)
from .funcfield import BFF, RFF, BiFrac, RatFunc
from .kernels import BACKEND
from .polyring import BiPoly, GeneralMonic, Poly, SpecialXp, compose, reduce, theta
from .primefield import GF, PrimeField, stirling1, valuation_e
from .special import (
    build_b1s, build_g, build_gen_polylog, build_gexp, build_laguerre, build_polylog,
    build_T, build_thm1_coeffs, build_thm2_correction, build_trunc_exp,
)
from .verify import CheckReport, Mutation, SuiteResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BFF", "BadArgument", "BiFrac", "BiPoly", "CheckReport", "DegreeGuardError",
    "DivisionByZero", "GF", "GeneralMonic", "InternalInconsistency", "Mutation", "PoleError",
    "Poly", "PolylogError", "PrimeField", "RFF", "RatFunc", "SpecialXp", "SuiteResult",
    "UnsupportedOrder", "build_T", "build_b1s", "build_g", "build_gen_polylog", "build_gexp",
    "build_laguerre", "build_polylog", "build_thm1_coeffs", "build_thm2_correction",
    "build_trunc_exp", "compose", "reduce", "run_suite", "stirling1", "theta", "valuation_e",
]
