"""Exact isotypical decompositions of degree-2 Siegel modular forms at
level 2, under the symmetric group S6, including the full Arthur-packet
refinement and the underlying equivariant Euler characteristics."""

from .cyclotomic import (
    CycNum,
    NotRationalError,
    NotRootOfUnityError,
    root_of_unity,
    zeta_pow,
)
from .elliptic import cusp_gamma2_s3, dim_cusp, dim_new, dim_new_fricke
from .euler import euler_characteristic
from .packets import (
    PacketDecomposition,
    UnsupportedWeightError,
    decompose,
    eisenstein_F,
    eisenstein_Q,
    euler_eis,
    euler_endo,
    general_type,
    restrict_level,
    saito_kurokawa,
    scalar_total,
    tsushima_dim,
    yoshida,
)
from .repring import IsoDecomp, NonIntegralMultiplicityError, format_partition
from .series import expand, verify_tables
from .sp4 import character_polynomial, dimension as sp4_dimension, evaluate
from .strata import derive_multiplier, enumerate_elements, genus2_strata

__all__ = [
    "CycNum",
    "IsoDecomp",
    "NonIntegralMultiplicityError",
    "NotRationalError",
    "NotRootOfUnityError",
    "PacketDecomposition",
    "UnsupportedWeightError",
    "character_polynomial",
    "cusp_gamma2_s3",
    "decompose",
    "derive_multiplier",
    "dim_cusp",
    "dim_new",
    "dim_new_fricke",
    "eisenstein_F",
    "eisenstein_Q",
    "enumerate_elements",
    "euler_characteristic",
    "euler_eis",
    "euler_endo",
    "evaluate",
    "expand",
    "format_partition",
    "general_type",
    "genus2_strata",
    "restrict_level",
    "root_of_unity",
    "saito_kurokawa",
    "scalar_total",
    "sp4_dimension",
    "tsushima_dim",
    "verify_tables",
    "yoshida",
    "zeta_pow",
]
