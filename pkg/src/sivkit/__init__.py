"""Exact-arithmetic toolkit for signed graphs: switching calculus, signed
Laplacian spectra, integral spectral variation under edge addition, and
completion planning toward signed complete graphs."""

from .completion import (
    CompletionPlan,
    PlanStep,
    QuotientDecomposition,
    SignedComplete,
    SubstitutionSpectrum,
    brute_force_completable,
    is_plain_integrally_completable,
    is_sigma_completable,
    part_blocks,
    plan_completion,
    quotient_decomposition,
    substitute,
    substitution_spectrum,
    swap_y,
    triangle_parity,
    x_set,
    y_set,
)
from .fileio import ParseError, dumps_sg, dumps_sk, load_sg, load_sk, parse_sg, parse_sk
from .graphs import (
    EVEN,
    ODD,
    EdgeQuantities,
    NeighborhoodSplit,
    SignedGraph,
    SwitchingResult,
    edge,
    edge_quantities,
    is_centered,
    make_centered,
    neighborhood_split,
    switch_at,
    switching_equivalent,
    switching_normal_form,
)
from .polynomials import IntPoly
from .sivcheck import (
    QuadInt,
    Type2Certificate,
    build_type2_eigenvectors,
    check_type1,
    check_type2,
    classify,
)
from .spectra import (
    IntegerSpectrum,
    IntMatrix,
    SivVerdict,
    char_poly,
    integer_spectrum,
    laplacian_char_poly,
    signed_laplacian,
    siv_oracle,
    verify_shift_identity,
)

__version__ = "0.1.0"

__all__ = [
    "CompletionPlan",
    "EVEN",
    "EdgeQuantities",
    "IntMatrix",
    "IntPoly",
    "IntegerSpectrum",
    "NeighborhoodSplit",
    "ODD",
    "ParseError",
    "PlanStep",
    "QuadInt",
    "QuotientDecomposition",
    "SignedComplete",
    "SignedGraph",
    "SivVerdict",
    "SubstitutionSpectrum",
    "SwitchingResult",
    "Type2Certificate",
    "brute_force_completable",
    "build_type2_eigenvectors",
    "char_poly",
    "check_type1",
    "check_type2",
    "classify",
    "dumps_sg",
    "dumps_sk",
    "edge",
    "edge_quantities",
    "integer_spectrum",
    "is_centered",
    "is_plain_integrally_completable",
    "is_sigma_completable",
    "laplacian_char_poly",
    "load_sg",
    "load_sk",
    "make_centered",
    "neighborhood_split",
    "parse_sg",
    "parse_sk",
    "part_blocks",
    "plan_completion",
    "quotient_decomposition",
    "signed_laplacian",
    "siv_oracle",
    "substitute",
    "substitution_spectrum",
    "swap_y",
    "switch_at",
    "switching_equivalent",
    "switching_normal_form",
    "triangle_parity",
    "verify_shift_identity",
    "x_set",
    "y_set",
]
