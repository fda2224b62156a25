"""p-adic spectral calculus and one-parameter unitary groups."""

from ._core import (
    Certificate,
    GroupCheck,
    OneParamGroup,
    PadicError,
    PadicInt,
    PadicMatrix,
    SeriesBudget,
    UnitaryOperator,
    __version__,
    certify,
    congruent,
    divide_exact,
    mahler_coeff,
    make_unitary,
    pexp,
    plog,
    principal_power,
    stone_recover,
    zeta_of,
)

__all__ = [
    "Certificate",
    "GroupCheck",
    "OneParamGroup",
    "PadicError",
    "PadicInt",
    "PadicMatrix",
    "SeriesBudget",
    "UnitaryOperator",
    "__version__",
    "certify",
    "congruent",
    "divide_exact",
    "mahler_coeff",
    "make_unitary",
    "pexp",
    "plog",
    "principal_power",
    "stone_recover",
    "zeta_of",
]
