"""Segre and Chern-Schwartz-MacPherson classes of projective schemes over GF(p).

Classes are returned as coefficient lists [c_0, ..., c_n] of c_0 + c_1 h + ... + c_n h^n,
where h is the hyperplane class of P^n.
"""

from ._charclass import (
    DEFAULT_PRIME,
    DimensionError,
    Error,
    GenericityError,
    Ideal,
    InternalError,
    IoError,
    ParseError,
    UnsupportedError,
    aluffi_involution,
    csm_class,
    csm_from_polar_degrees,
    euler_characteristic,
    euler_sections,
    g_from_segre,
    involution_polynomial,
    projective_degrees,
    segre_class,
    segre_from_degrees,
    suwa_ci_csm,
)

__all__ = [
    "DEFAULT_PRIME",
    "DimensionError",
    "Error",
    "GenericityError",
    "Ideal",
    "InternalError",
    "IoError",
    "ParseError",
    "UnsupportedError",
    "aluffi_involution",
    "csm_class",
    "csm_from_polar_degrees",
    "euler_characteristic",
    "euler_sections",
    "g_from_segre",
    "involution_polynomial",
    "projective_degrees",
    "segre_class",
    "segre_from_degrees",
    "suwa_ci_csm",
]
