"""Locally Lorentz covariant bitensors for two Dirac spinors and the product-state test they give."""

from .bitensors import BitensorSet, compute_all, parity_action, trace_form
from .detect import Verdict, decide, identities_residual, minor_table, nearest_rank_one_gap
from .errors import DomainError, NumericError
from .lorentz import OmegaParams, parity_spinor, random_proper_transform, spinor_transform, time_reversal_spinor, vector_transform
from .states import TwoParticleState, apply_local, from_coefficients, normalize, product_state, random_state

__all__ = [
    "BitensorSet", "DomainError", "NumericError", "OmegaParams", "TwoParticleState", "Verdict",
    "apply_local", "compute_all", "decide", "from_coefficients", "identities_residual", "minor_table",
    "nearest_rank_one_gap", "normalize", "parity_action", "parity_spinor", "product_state",
    "random_proper_transform", "random_state", "spinor_transform", "time_reversal_spinor",
    "trace_form", "vector_transform",
]
