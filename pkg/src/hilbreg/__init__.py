"""Exact Hilbert functions and Castelnuovo-Mumford regularity of graded algebras."""

from .bounds import (
    abhyankar_bound,
    bound_polynomial,
    cm_tangent_cone_bound,
    h1_bound_check,
    kleiman_bounds,
    local_mumford_bound,
    parameter_hf_bound,
)
from .enumerate import (
    HFSignature,
    brute_force_hf_oracle,
    enumerate_borel_ideals,
    enumerate_hilbert_functions,
)
from .groebner import GinResult, GroebnerBasis, buchberger, gin, initial_ideal, normal_form
from .hilbert import (
    GotzmannRep,
    HilbertFunction,
    HilbertPolynomial,
    HilbertSeries,
    deficiency,
    gotzmann_representation,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series,
    iterated_hf,
    macaulay_growth_bound,
)
from .monideal import (
    BettiTable,
    MonomialIdeal,
    betti_lcm,
    ek_betti,
    is_borel_fixed,
    lex_segment_ideal,
    minimalize,
    regularity_from_betti,
    saturate,
)
from .parse import IdealDocument, parse_ideal
from .regularity import RegularityReport, check_mumford, h0_dims, lex_ideal, regularity
from .ring import (
    QQ,
    Field,
    Ideal,
    PolyRing,
    Polynomial,
    apply_linear_change,
    binomial,
    cmp_monomials,
)

__version__ = "0.1.0"

__all__ = [
    "abhyankar_bound",
    "bound_polynomial",
    "cm_tangent_cone_bound",
    "kleiman_bounds",
    "h1_bound_check",
    "local_mumford_bound",
    "parameter_hf_bound",
    "HFSignature",
    "brute_force_hf_oracle",
    "enumerate_borel_ideals",
    "enumerate_hilbert_functions",
    "GotzmannRep",
    "HilbertFunction",
    "HilbertPolynomial",
    "HilbertSeries",
    "deficiency",
    "gotzmann_representation",
    "hilbert_function",
    "hilbert_polynomial",
    "hilbert_series",
    "iterated_hf",
    "macaulay_growth_bound",
    "BettiTable",
    "MonomialIdeal",
    "betti_lcm",
    "ek_betti",
    "is_borel_fixed",
    "lex_segment_ideal",
    "minimalize",
    "regularity_from_betti",
    "saturate",
    "QQ",
    "Field",
    "Ideal",
    "PolyRing",
    "Polynomial",
    "apply_linear_change",
    "binomial",
    "cmp_monomials",
    "GinResult",
    "GroebnerBasis",
    "buchberger",
    "gin",
    "initial_ideal",
    "normal_form",
    "IdealDocument",
    "parse_ideal",
    "RegularityReport",
    "check_mumford",
    "h0_dims",
    "lex_ideal",
    "regularity",
]
