"""Two-particle spinor states as 4x4 coefficient matrices.

Row index j is Alice's basis spinor, column index k is Bob's.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .lorentz import SpinorTransform

RANK_RTOL = 1e-6
_MAX_REDRAWS = 100

SQRT_HALF = 1.0 / np.sqrt(2.0)


def basis_spinor(j: int) -> np.ndarray:
    if not 0 <= j <= 3:
        raise DomainError(f"basis index must be in 0..3, got {j}")
    phi = np.zeros(4, dtype=np.complex128)
    phi[j] = 1.0
    return phi


def _as_spinor(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.shape != (4,):
        raise DomainError(f"spinor must have 4 components, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("spinor has non-finite entries")
    if not np.any(a):
        raise DomainError("spinor must be nonzero")
    return a


@dataclass(frozen=True)
class TwoParticleState:
    psi: np.ndarray

    def __post_init__(self):
        psi = np.array(self.psi, dtype=np.complex128)
        if psi.shape != (4, 4):
            raise DomainError(f"state matrix must be 4x4, got shape {psi.shape}")
        if not np.all(np.isfinite(psi)):
            raise DomainError("state matrix has non-finite entries")
        if not np.any(psi):
            raise DomainError("state matrix must be nonzero")
        psi.setflags(write=False)
        object.__setattr__(self, "psi", psi)

    def __mul__(self, c: complex) -> "TwoParticleState":
        return TwoParticleState(c * self.psi)

    __rmul__ = __mul__

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.psi))

    def singular_values(self) -> np.ndarray:
        return np.linalg.svd(self.psi, compute_uv=False)

    def transpose(self) -> "TwoParticleState":
        """Swap the roles of Alice and Bob."""
        return TwoParticleState(self.psi.T)


def product_state(a, b) -> TwoParticleState:
    """Outer product a b^T of Alice's spinor a and Bob's spinor b."""
    return TwoParticleState(np.outer(_as_spinor(a), _as_spinor(b)))


def from_coefficients(entries) -> TwoParticleState:
    return TwoParticleState(entries)


def normalize(state: TwoParticleState) -> TwoParticleState:
    return TwoParticleState(state.psi / state.norm)


def _matrix(s) -> np.ndarray:
    return s.matrix if isinstance(s, SpinorTransform) else np.asarray(s, dtype=np.complex128)


def apply_local(state: TwoParticleState, s_a, s_b) -> TwoParticleState:
    """Psi -> S_A Psi S_B^T."""
    return TwoParticleState(_matrix(s_a) @ state.psi @ _matrix(s_b).T)


def random_spinor(rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal(4) + 1j * rng.standard_normal(4)


def random_state(seed, rank: int) -> TwoParticleState:
    """Unit-norm state that is a sum of `rank` random outer products.

    Draws whose `rank`-th singular value falls below RANK_RTOL times the
    largest are rejected and redrawn.
    """
    if rank not in (1, 2, 3, 4):
        raise DomainError(f"rank must be 1..4, got {rank}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    for _ in range(_MAX_REDRAWS):
        psi = sum(np.outer(random_spinor(rng), random_spinor(rng)) for _ in range(rank))
        sv = np.linalg.svd(psi, compute_uv=False)
        if sv[rank - 1] > RANK_RTOL * sv[0]:
            return TwoParticleState(psi / np.linalg.norm(psi))
    raise RuntimeError(f"could not draw a rank-{rank} state")  # pragma: no cover


def bell01() -> TwoParticleState:
    """psi_01 = 1/sqrt2, psi_10 = -1/sqrt2."""
    psi = np.zeros((4, 4), dtype=np.complex128)
    psi[0, 1] = SQRT_HALF
    psi[1, 0] = -SQRT_HALF
    return TwoParticleState(psi)


def bell03() -> TwoParticleState:
    """psi_00 = psi_33 = 1/sqrt2."""
    psi = np.zeros((4, 4), dtype=np.complex128)
    psi[0, 0] = psi[3, 3] = SQRT_HALF
    return TwoParticleState(psi)
