"""Exact pan, Choquet and concave integrals on finite monotone measure spaces."""

from .core import (
    Capacity,
    FiniteSpace,
    PanintError,
    PropertyReport,
    RealFunction,
    conjugate,
    is_null_additive,
    is_subadditive,
    is_submodular,
    is_supermodular,
    members,
    minimal_atoms,
    subset_index,
    validate_capacity,
)
from .generators import FAMILIES, SUBADDITIVE_FAMILIES, gen_capacity
from .integrals import (
    IntegralResult,
    PartitionValuation,
    choquet_asymmetric,
    choquet_pos,
    choquet_symmetric,
    concave_integral,
    pan_on_set,
    pan_pos,
    pan_pos_oracle,
    pan_signed,
)
from .lp import DualCertificate, primal_enumeration_oracle, solve_cover_dual

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Capacity",
    "choquet_asymmetric",
    "choquet_pos",
    "choquet_symmetric",
    "concave_integral",
    "conjugate",
    "DualCertificate",
    "FAMILIES",
    "FiniteSpace",
    "gen_capacity",
    "IntegralResult",
    "is_null_additive",
    "is_subadditive",
    "is_submodular",
    "is_supermodular",
    "members",
    "minimal_atoms",
    "pan_on_set",
    "pan_pos",
    "pan_pos_oracle",
    "pan_signed",
    "PanintError",
    "PartitionValuation",
    "primal_enumeration_oracle",
    "PropertyReport",
    "RealFunction",
    "solve_cover_dual",
    "SUBADDITIVE_FAMILIES",
    "subset_index",
    "validate_capacity",
]
