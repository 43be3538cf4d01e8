"""Exact K-group bookkeeping for lamplighter group C*-algebras.

Computes, in exact integer/rational arithmetic: canonical shift-orbit word
bases, the inductive-limit direct-sum certificate, kernel/cokernel
bookkeeping for the crossed product, trace images, and, for abelian base
groups, the full-shift coboundary splitting and the periodic-orbit
coboundary test.
"""

from .colimitk import ClaimCertificate, LevelVector, claim_check, f_apply, r_map, s_map
from .errors import (
    BudgetError,
    CatalogError,
    GroupDataError,
    LampkError,
    NonAbelianGroupError,
    TruncationError,
)
from .fullshift import (
    CylinderSpec,
    PeriodicPoint,
    beta_eval,
    coboundary_decompose,
    cylinder_to_chain,
    livsic_check,
    periodic_orbit_sum,
)
from .grouprep import (
    GroupRepData,
    builtin,
    csalgebras_isomorphic_abelian_case,
    fingerprint,
    validate,
)
from .lamplighterk import (
    KGroupReport,
    k_groups,
    pv_check,
    trace_of_chain,
    trace_of_word,
    trace_image_level,
)
from .shiftwords import Word, canonicalize, enumerate_canonical, shift
from .zchain import ZChain, alpha, coinvariant_class, decompose, is_invariant

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CatalogError",
    "ClaimCertificate",
    "CylinderSpec",
    "GroupDataError",
    "GroupRepData",
    "KGroupReport",
    "LampkError",
    "LevelVector",
    "NonAbelianGroupError",
    "PeriodicPoint",
    "TruncationError",
    "Word",
    "ZChain",
    "alpha",
    "beta_eval",
    "builtin",
    "canonicalize",
    "claim_check",
    "coboundary_decompose",
    "coinvariant_class",
    "csalgebras_isomorphic_abelian_case",
    "cylinder_to_chain",
    "decompose",
    "enumerate_canonical",
    "f_apply",
    "fingerprint",
    "is_invariant",
    "k_groups",
    "livsic_check",
    "periodic_orbit_sum",
    "pv_check",
    "r_map",
    "s_map",
    "shift",
    "trace_of_chain",
    "trace_of_word",
    "trace_image_level",
    "validate",
]
