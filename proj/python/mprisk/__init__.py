"""Python bindings for the mprisk C++ core."""

from ._mprisk import (
    CostTable,
    IoError,
    NumericalError,
    ValidationError,
    accumulate,
    accumulation_weights,
    cvar,
    decide,
    digamma,
    estimate_mle,
    exceedance_probs,
    inv_digamma,
    reg_lower_inc_gamma,
    risk_profile,
    sample,
)

__all__ = [
    "CostTable",
    "IoError",
    "NumericalError",
    "ValidationError",
    "accumulate",
    "accumulation_weights",
    "cvar",
    "decide",
    "digamma",
    "estimate_mle",
    "exceedance_probs",
    "inv_digamma",
    "reg_lower_inc_gamma",
    "risk_profile",
    "sample",
]
