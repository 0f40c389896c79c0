"""Spinor and vector representations of local Lorentz transformations."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import clifford
from .errors import DomainError, NumericError

OMEGA_BOUND = 10.0
ANTISYMMETRY_ATOL = 1e-12

# Upper-triangle ordering used wherever six independent parameters are listed.
OMEGA_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class Kind(str, Enum):
    PROPER_ORTHOCHRONOUS = "proper_orthochronous"
    PARITY = "parity"
    COMPOSITE = "composite"


@dataclass(frozen=True)
class OmegaParams:
    """Antisymmetric real parameters omega_{rho sigma} (rapidities and angles)."""

    omega: np.ndarray
    bound: float = OMEGA_BOUND

    def __post_init__(self):
        w = np.array(self.omega, dtype=np.float64)
        if w.shape != (4, 4):
            raise DomainError(f"omega must be 4x4, got shape {w.shape}")
        if not np.all(np.isfinite(w)):
            raise DomainError("omega has non-finite entries")
        if np.max(np.abs(w + w.T)) > ANTISYMMETRY_ATOL:
            raise DomainError("omega must be antisymmetric: omega[r, s] == -omega[s, r]")
        if np.max(np.abs(w)) > self.bound:
            raise DomainError(f"|omega| exceeds the bound {self.bound}")
        w.setflags(write=False)
        object.__setattr__(self, "omega", w)

    @classmethod
    def from_components(cls, values, bound: float = OMEGA_BOUND) -> "OmegaParams":
        """Build from the six values omega_01, omega_02, omega_03, omega_12, omega_13, omega_23."""
        values = list(values)
        if len(values) != 6:
            raise DomainError(f"expected 6 omega components, got {len(values)}")
        w = np.zeros((4, 4))
        for (r, s), v in zip(OMEGA_PAIRS, values):
            w[r, s] = v
            w[s, r] = -v
        return cls(w, bound=bound)

    @classmethod
    def zero(cls) -> "OmegaParams":
        return cls(np.zeros((4, 4)))

    def components(self) -> np.ndarray:
        return np.array([self.omega[r, s] for r, s in OMEGA_PAIRS])

    def __neg__(self) -> "OmegaParams":
        return OmegaParams(-self.omega, bound=self.bound)

    def algebra_element(self) -> np.ndarray:
        """(1/2) sum_{rho, sigma} omega_{rho sigma} S^{rho sigma}."""
        out = np.zeros((4, 4), dtype=np.complex128)
        for r, s in clifford.GENERATOR_INDICES:
            out += 0.5 * self.omega[r, s] * clifford.generator(r, s)
        return out


@dataclass(frozen=True)
class SpinorTransform:
    matrix: np.ndarray
    kind: Kind = Kind.PROPER_ORTHOCHRONOUS

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.complex128)
        if m.shape != (4, 4):
            raise DomainError(f"spinor transform must be 4x4, got {m.shape}")
        if not np.all(np.isfinite(m)):
            raise DomainError("spinor transform has non-finite entries")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "kind", Kind(self.kind))

    def __matmul__(self, other: "SpinorTransform") -> "SpinorTransform":
        kind = self.kind
        if self.kind != other.kind or self.kind != Kind.PROPER_ORTHOCHRONOUS:
            kind = Kind.COMPOSITE
        return SpinorTransform(self.matrix @ other.matrix, kind)

    def inverse(self) -> np.ndarray:
        return np.linalg.inv(self.matrix)

    def charge_residual(self) -> float:
        """max |S^T C S - C|, zero for the proper orthochronous group."""
        c = clifford.charge_conjugation()
        return clifford.max_abs(self.matrix.T @ c @ self.matrix - c)


@dataclass(frozen=True)
class VectorTransform:
    """Lambda^mu_nu, row index mu, column index nu."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.float64)
        if m.shape != (4, 4):
            raise DomainError(f"vector transform must be 4x4, got {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def metric_residual(self) -> float:
        g = clifford.METRIC
        return clifford.max_abs(self.matrix.T @ g @ self.matrix - g)

    def is_proper_orthochronous(self, atol: float = 1e-10) -> bool:
        return (
            abs(np.linalg.det(self.matrix) - 1.0) < atol * max(1.0, self.matrix[0, 0] ** 2)
            and self.matrix[0, 0] >= 1.0 - atol
        )


def expm(a: np.ndarray, max_terms: int = 64) -> np.ndarray:
    """Matrix exponential by scaling and squaring with a truncated Taylor series.

    The argument is halved until its max-norm is at most 0.5; the series
    stops once a term's max-norm falls below 1e-16.
    """
    a = np.asarray(a, dtype=np.complex128)
    norm = clifford.max_abs(a)
    if not math.isfinite(norm):
        raise NumericError("matrix exponential of a non-finite matrix")
    squarings = 0
    while norm > 0.5:
        norm /= 2.0
        squarings += 1
    scaled = a / (2.0**squarings)
    result = np.eye(a.shape[0], dtype=np.complex128)
    term = result.copy()
    for k in range(1, max_terms + 1):
        term = term @ scaled / k
        result = result + term
        if clifford.max_abs(term) < 1e-16:
            break
    else:
        raise NumericError(f"Taylor series did not converge in {max_terms} terms")
    for _ in range(squarings):
        result = result @ result
    if not np.all(np.isfinite(result)):
        raise NumericError("matrix exponential overflowed")
    return result


def _as_params(params) -> OmegaParams:
    return params if isinstance(params, OmegaParams) else OmegaParams(params)


def spinor_transform(params) -> SpinorTransform:
    """S(Lambda) = exp((1/2) sum omega_{rho sigma} S^{rho sigma})."""
    params = _as_params(params)
    return SpinorTransform(expm(params.algebra_element()), Kind.PROPER_ORTHOCHRONOUS)


def vector_from_spinor(s: np.ndarray) -> VectorTransform:
    """Solve S^{-1} gamma^mu S = sum_nu Lambda^mu_nu gamma^nu for Lambda.

    Uses Lambda^mu_nu = Tr[S^{-1} gamma^mu S gamma_nu] / 4.
    """
    s = np.asarray(s, dtype=np.complex128)
    s_inv = np.linalg.inv(s)
    lam = np.empty((4, 4), dtype=np.complex128)
    for mu in range(4):
        m = s_inv @ clifford.gamma(mu) @ s
        for nu in range(4):
            lam[mu, nu] = 0.25 * np.trace(m @ clifford.gamma_lower(nu))
    scale = max(1.0, clifford.max_abs(lam))
    if np.max(np.abs(lam.imag)) > 1e-9 * scale:
        raise NumericError("spinor matrix does not induce a real vector transformation")
    return VectorTransform(lam.real)


def vector_transform(params) -> VectorTransform:
    return vector_from_spinor(spinor_transform(params).matrix)


def covariance_residual(s: np.ndarray, lam: np.ndarray) -> float:
    """max over mu of |S^{-1} gamma^mu S - sum_nu Lambda^mu_nu gamma^nu|."""
    s = np.asarray(s)
    lam = np.asarray(lam)
    s_inv = np.linalg.inv(s)
    worst = 0.0
    for mu in range(4):
        lhs = s_inv @ clifford.gamma(mu) @ s
        rhs = sum(lam[mu, nu] * clifford.gamma(nu) for nu in range(4))
        worst = max(worst, clifford.max_abs(lhs - rhs))
    return worst


def parity_spinor() -> SpinorTransform:
    return SpinorTransform(clifford.gamma(0), Kind.PARITY)


def parity_vector() -> VectorTransform:
    return VectorTransform(clifford.METRIC)


def with_parity(s: SpinorTransform) -> SpinorTransform:
    """Compose parity after a proper orthochronous part: S(P) S."""
    return SpinorTransform(clifford.gamma(0) @ s.matrix, Kind.COMPOSITE)


def time_reversal_spinor(psi) -> np.ndarray:
    """Antiunitary single-particle time reversal psi -> C psi*."""
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape != (4,):
        raise DomainError(f"spinor must have 4 components, got shape {psi.shape}")
    if not np.all(np.isfinite(psi)):
        raise DomainError("spinor has non-finite entries")
    return clifford.charge_conjugation() @ np.conj(psi)


def random_omega(rng: np.random.Generator, scale: float) -> OmegaParams:
    if scale < 0 or not math.isfinite(scale):
        raise DomainError(f"scale must be finite and >= 0, got {scale}")
    return OmegaParams.from_components(rng.uniform(-scale, scale, size=6), bound=max(OMEGA_BOUND, scale))


def random_proper_transform(
    seed, scale: float = 1.0
) -> tuple[OmegaParams, SpinorTransform, VectorTransform]:
    """Draw omega uniformly in [-scale, scale] and return both representations.

    `seed` may be an int or an existing numpy Generator.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    params = random_omega(rng, scale)
    s = spinor_transform(params)
    return params, s, vector_from_spinor(s.matrix)
