"""Deciding local cohomology vanishing over F_p[x1..xn] by Frobenius
nilpotency of Ext chains, with the derived invariants: depth, dimension,
projective dimension, cohomological dimension, formal grade and F-depth.

All computation happens on the finitely generated Ext side of local
duality; local cohomology itself is never materialized.
"""

from ._kernel import BACKEND
from .errors import (CappedChain, DimensionMismatch, FDepthError, LiftFailed,
                     NotHomogeneous, NotMonomial, NotSquarefree, ParseError,
                     ResourceExhausted, UnitIdeal, ZeroDimensional,
                     ZeroInverse)
from .fmodule import (ChainResult, Subquotient, SubquotientMap,
                      cofinality_check, ext_module, frobenius_chain,
                      frobenius_power, frobenius_pullback, kernel_chain,
                      structural_map)
from .groebner import (Ideal, Submodule, VectorPoly, buchberger, dim_quotient,
                       eliminate, height, ideal_equal, membership,
                       minimal_primes_monomial, punctured_connected,
                       radical_monomial, reduce, set_verify, syzygies)
from .invariants import (CheckResult, InvariantReport, cd, fdepth_quotient,
                         fgrade, monomial_oracle_cd, report)
from .resolution import (FreeComplex, GradedFreeModule, depth_quotient,
                         free_resolution, hilbert_numerator, pd)
from .ring import (Monomial, Polynomial, RingCtx, ff_inv, format_polynomial,
                   monomial_cmp, parse_polynomial, poly_mul, poly_power_p)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "__version__",
    # errors
    "FDepthError", "ZeroInverse", "DimensionMismatch", "UnitIdeal",
    "NotMonomial", "NotSquarefree", "ZeroDimensional", "NotHomogeneous",
    "LiftFailed", "ResourceExhausted", "CappedChain", "ParseError",
    # ring
    "RingCtx", "Monomial", "Polynomial", "ff_inv", "monomial_cmp",
    "poly_mul", "poly_power_p", "parse_polynomial", "format_polynomial",
    # groebner
    "Ideal", "VectorPoly", "Submodule", "reduce", "buchberger", "membership",
    "ideal_equal", "syzygies", "eliminate", "dim_quotient", "height",
    "radical_monomial", "minimal_primes_monomial", "punctured_connected",
    "set_verify",
    # resolution
    "GradedFreeModule", "FreeComplex", "free_resolution", "pd",
    "depth_quotient", "hilbert_numerator",
    # fmodule
    "Subquotient", "SubquotientMap", "ChainResult", "frobenius_power",
    "frobenius_pullback", "ext_module", "structural_map", "frobenius_chain",
    "kernel_chain", "cofinality_check",
    # invariants
    "InvariantReport", "CheckResult", "cd", "fdepth_quotient", "fgrade",
    "report", "monomial_oracle_cd",
]
