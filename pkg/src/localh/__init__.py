"""Exact local h-vector computations for topological subdivisions of simplices."""

from .complexes import EMPTY, VOID, SimplicialComplex, simplex, simplex_boundary
from .constructions import (
    OpStep,
    OpWord,
    join_subdivided_edge,
    push_ridge,
    push_then_stellar,
    random_subdivision,
    realize_local_h,
    replay,
    stellar_facet,
    trivial_on,
)
from .identities import (
    boundary_h_from_h,
    h_difference_partial_sums,
    local_h_via_boundary_recursion,
    local_h_via_derangements,
    verify_all,
)
from .permstats import derangement_enum, derangement_recurrence, eulerian_polynomial
from .polynomials import (
    GammaVector,
    Polynomial,
    gamma_compose,
    gamma_extract,
    geometric_block,
    is_unimodal,
)
from .posets import (
    AbPolynomial,
    CdPolynomial,
    FacePoset,
    NotExpressible,
    ab_index,
    cd_extract,
    ek_difference,
    face_poset,
    flag_vectors,
    sd_complex,
    sd_subdivision,
)
from .subdivisions import Subdivision

__all__ = [
    "AbPolynomial",
    "CdPolynomial",
    "EMPTY",
    "FacePoset",
    "GammaVector",
    "NotExpressible",
    "OpStep",
    "OpWord",
    "Polynomial",
    "SimplicialComplex",
    "Subdivision",
    "VOID",
    "ab_index",
    "boundary_h_from_h",
    "cd_extract",
    "derangement_enum",
    "derangement_recurrence",
    "ek_difference",
    "eulerian_polynomial",
    "face_poset",
    "flag_vectors",
    "gamma_compose",
    "gamma_extract",
    "geometric_block",
    "h_difference_partial_sums",
    "is_unimodal",
    "join_subdivided_edge",
    "local_h_via_boundary_recursion",
    "local_h_via_derangements",
    "push_ridge",
    "push_then_stellar",
    "random_subdivision",
    "realize_local_h",
    "replay",
    "sd_complex",
    "sd_subdivision",
    "simplex",
    "simplex_boundary",
    "stellar_facet",
    "trivial_on",
    "verify_all",
]
