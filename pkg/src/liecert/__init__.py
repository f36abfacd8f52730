"""Compact Lie algebra triples as real matrix algebras, with condition certificates.

Typical use:

    from liecert import catalog, decompose, certify_bracket_intersection
    t = catalog.build("g2-spin7", 0)
    dec = decompose(t)
    verdict = certify_bracket_intersection(dec)
"""

__version__ = "0.1.0"

from .algebras import (
    AlgebraRealization,
    make_so,
    make_sp,
    make_su,
    make_u,
    realization,
    spin7_in_so8,
    su4_as_so6,
)
from .condition import (
    Verdict,
    builtin_witness,
    certify_bracket_intersection,
    certify_positive_curvature,
    estimate_inf_rho,
    g2_sequence,
    rho,
    verify_witness,
)
from .linalg import (
    Subspace,
    bracket,
    inner_product,
    intersect,
    orthonormalize,
    project,
    solve_commutant,
    wedge_norm,
)
from .octonion import Octonion, derivation_algebra, oct_mul, triality_frame
from .triple import (
    Decomposition,
    Triple,
    classify_phi,
    decompose,
    isotypic_split,
    symmetric_pair_check,
    transitivity_check,
)

__all__ = [
    "AlgebraRealization",
    "Decomposition",
    "Octonion",
    "Subspace",
    "Triple",
    "Verdict",
    "bracket",
    "builtin_witness",
    "certify_bracket_intersection",
    "certify_positive_curvature",
    "classify_phi",
    "decompose",
    "derivation_algebra",
    "estimate_inf_rho",
    "g2_sequence",
    "inner_product",
    "intersect",
    "isotypic_split",
    "make_so",
    "make_sp",
    "make_su",
    "make_u",
    "oct_mul",
    "orthonormalize",
    "project",
    "realization",
    "rho",
    "solve_commutant",
    "spin7_in_so8",
    "su4_as_so6",
    "symmetric_pair_check",
    "transitivity_check",
    "triality_frame",
    "verify_witness",
    "wedge_norm",
    "__version__",
]
