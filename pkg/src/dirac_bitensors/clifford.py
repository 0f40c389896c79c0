"""Dirac-basis gamma matrices and the fixed algebra built from them.

Every matrix here has entries in {0, +-1, +-i}, so products of them are
exact in complex128 and the algebraic relations can be checked with zero
tolerance.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import DomainError

ATOL = 1e-12

_I2 = np.eye(2, dtype=np.complex128)
_Z2 = np.zeros((2, 2), dtype=np.complex128)
PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.setflags(write=False)
    return a


IDENTITY = _frozen(np.eye(4, dtype=np.complex128))
METRIC = _frozen(np.diag([1.0, -1.0, -1.0, -1.0]))

_GAMMAS = (
    _frozen(np.block([[_I2, _Z2], [_Z2, -_I2]])),
    *(_frozen(np.block([[_Z2, s], [-s, _Z2]])) for s in PAULI),
)


def _check_index(mu: int, name: str = "mu") -> int:
    if isinstance(mu, bool) or not isinstance(mu, (int, np.integer)) or not 0 <= mu <= 3:
        raise DomainError(f"{name} must be an integer in 0..3, got {mu!r}")
    return int(mu)


def gamma(mu: int) -> np.ndarray:
    """Dirac-basis gamma^mu with upper index, mu in 0..3."""
    return _GAMMAS[_check_index(mu)]


def gammas() -> tuple[np.ndarray, ...]:
    return _GAMMAS


def gamma_lower(nu: int) -> np.ndarray:
    """gamma_nu = g_{nu nu} gamma^nu (diagonal metric, no sum)."""
    nu = _check_index(nu, "nu")
    return METRIC[nu, nu] * _GAMMAS[nu]


@lru_cache(maxsize=None)
def charge_conjugation() -> np.ndarray:
    """C = i gamma^1 gamma^3 = block-diag(-sigma^2, -sigma^2)."""
    return _frozen(1j * _GAMMAS[1] @ _GAMMAS[3])


@lru_cache(maxsize=None)
def gamma5() -> np.ndarray:
    """gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3, the off-diagonal identity blocks."""
    g0, g1, g2, g3 = _GAMMAS
    return _frozen(1j * g0 @ g1 @ g2 @ g3)


@lru_cache(maxsize=None)
def _generator(rho: int, sigma: int) -> np.ndarray:
    g_r, g_s = _GAMMAS[rho], _GAMMAS[sigma]
    return _frozen(0.25 * (g_r @ g_s - g_s @ g_r))


def generator(rho: int, sigma: int) -> np.ndarray:
    """Lie-algebra generator S^{rho sigma} = [gamma^rho, gamma^sigma] / 4.

    The diagonal case rho == sigma vanishes identically and is rejected.
    """
    rho = _check_index(rho, "rho")
    sigma = _check_index(sigma, "sigma")
    if rho == sigma:
        raise DomainError(f"generator index requires rho != sigma, got ({rho}, {sigma})")
    return _generator(rho, sigma)


GENERATOR_INDICES = tuple((r, s) for r in range(4) for s in range(4) if r != s)


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if np.size(a) else 0.0


# Residual predicates. Each returns the max-norm of the defect, so 0.0 means
# the relation holds exactly.

def clifford_residual() -> float:
    """max over mu, nu of |{gamma^mu, gamma^nu} - 2 g^{mu nu} I|."""
    return max(
        max_abs(anticommutator(gamma(m), gamma(n)) - 2.0 * METRIC[m, n] * IDENTITY)
        for m in range(4)
        for n in range(4)
    )


def charge_conjugation_residual() -> float:
    """Defect of C gamma^mu = gamma^mu^T C, C = -C^T and C = C^{-1}."""
    c = charge_conjugation()
    parts = [max_abs(c @ gamma(m) - gamma(m).T @ c) for m in range(4)]
    parts.append(max_abs(c + c.T))
    parts.append(max_abs(c @ c - IDENTITY))
    return max(parts)


def gamma5_residual() -> float:
    """Defect of gamma^5 anticommuting with every gamma^mu, being symmetric and self-inverse."""
    g5 = gamma5()
    parts = [max_abs(anticommutator(g5, gamma(m))) for m in range(4)]
    parts.append(max_abs(g5 - g5.T))
    parts.append(max_abs(g5 @ g5 - IDENTITY))
    return max(parts)


def generator_residual() -> float:
    """Defect of S^T C = -C S and S^{rho sigma} = -S^{sigma rho} over all generators."""
    c = charge_conjugation()
    parts = []
    for r, s in GENERATOR_INDICES:
        gen = generator(r, s)
        parts.append(max_abs(gen.T @ c + c @ gen))
        parts.append(max_abs(gen + generator(s, r)))
    return max(parts)


def bilinear_kernels() -> tuple[np.ndarray, ...]:
    """The six antisymmetric kernels C, C gamma^5, C gamma^0..3, in that order."""
    c = charge_conjugation()
    return (c, c @ gamma5(), *(c @ g for g in _GAMMAS))


def antisymmetry_residual() -> float:
    return max(max_abs(k + k.T) for k in bilinear_kernels())


def algebra_residuals() -> dict[str, float]:
    return {
        "clifford": clifford_residual(),
        "charge_conjugation": charge_conjugation_residual(),
        "gamma5": gamma5_residual(),
        "generators": generator_residual(),
        "kernel_antisymmetry": antisymmetry_residual(),
    }


def allclose(a: np.ndarray, b: np.ndarray, atol: float = ATOL) -> bool:
    """Tolerance-based equality used for Mat4c comparisons."""
    return bool(np.all(np.abs(np.asarray(a) - np.asarray(b)) <= atol))
