"""The nine locally covariant bitensors of a two-particle Dirac state.

All 36 components are entries of one 6x6 table

    T[a, b] = Tr[Psi^T K_a Psi K_b] / 2

over the antisymmetric kernels K = (C, C g5, C g0, C g1, C g2, C g3).
Row a carries Alice's transformation character and column b Bob's:

    I1 = T[C, C]     I2A = T[C, g5]     KB^mu = T[C, g^mu]
    I2 = T[g5, g5]   I2B = T[g5, C]     LB^mu = T[g5, g^mu]
    KA^mu = T[g^mu, C]   LA^mu = T[g^mu, g5]   KAB^{mu nu} = T[g^mu, g^nu]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from . import clifford
from .errors import DomainError
from .states import TwoParticleState

SCALAR, PSEUDO = 0, 1
VEC = slice(2, 6)

KERNELS = np.stack(clifford.bilinear_kernels())
KERNELS.setflags(write=False)


class Lab(str, Enum):
    A = "A"
    B = "B"


def trace_form(state, left, right) -> complex:
    """Tr[Psi^T left Psi right] / 2."""
    psi = state.psi if isinstance(state, TwoParticleState) else np.asarray(state)
    return complex(0.5 * np.trace(psi.T @ np.asarray(left) @ psi @ np.asarray(right)))


def trace_table(psi: np.ndarray) -> np.ndarray:
    """The 6x6 table T[a, b] for one state or a stack of states (..., 4, 4)."""
    psi = np.asarray(psi, dtype=np.complex128)
    sandwiched = np.einsum("...ji,ajk,...kl->...ail", psi, KERNELS, psi)
    return 0.5 * np.einsum("...ail,bli->...ab", sandwiched, KERNELS)


_NAME = re.compile(r"^(I1|I2A|I2B|I2|KAB|KA|KB|LA|LB)([0-3]*)$")


@dataclass(frozen=True)
class BitensorSet:
    i1: complex
    i2: complex
    i2a: complex
    i2b: complex
    ka: np.ndarray
    kb: np.ndarray
    la: np.ndarray
    lb: np.ndarray
    kab: np.ndarray

    @classmethod
    def from_table(cls, t: np.ndarray) -> "BitensorSet":
        t = np.array(t, dtype=np.complex128)
        if t.shape != (6, 6):
            raise DomainError(f"bitensor table must be 6x6, got {t.shape}")
        vectors = [t[VEC, SCALAR], t[SCALAR, VEC], t[VEC, PSEUDO], t[PSEUDO, VEC], t[VEC, VEC]]
        for v in vectors:
            v.setflags(write=False)
        return cls(
            complex(t[SCALAR, SCALAR]),
            complex(t[PSEUDO, PSEUDO]),
            complex(t[SCALAR, PSEUDO]),
            complex(t[PSEUDO, SCALAR]),
            *vectors,
        )

    @classmethod
    def from_components(cls, values) -> "BitensorSet":
        """Inverse of components(): build from a name -> value mapping."""
        v = dict(values)
        return cls(
            i1=complex(v["I1"]), i2=complex(v["I2"]), i2a=complex(v["I2A"]), i2b=complex(v["I2B"]),
            ka=np.array([v[f"KA{m}"] for m in range(4)], dtype=np.complex128),
            kb=np.array([v[f"KB{m}"] for m in range(4)], dtype=np.complex128),
            la=np.array([v[f"LA{m}"] for m in range(4)], dtype=np.complex128),
            lb=np.array([v[f"LB{m}"] for m in range(4)], dtype=np.complex128),
            kab=np.array([[v[f"KAB{m}{n}"] for n in range(4)] for m in range(4)], dtype=np.complex128),
        )

    def table(self) -> np.ndarray:
        t = np.empty((6, 6), dtype=np.complex128)
        t[SCALAR, SCALAR] = self.i1
        t[PSEUDO, PSEUDO] = self.i2
        t[SCALAR, PSEUDO] = self.i2a
        t[PSEUDO, SCALAR] = self.i2b
        t[VEC, SCALAR] = self.ka
        t[SCALAR, VEC] = self.kb
        t[VEC, PSEUDO] = self.la
        t[PSEUDO, VEC] = self.lb
        t[VEC, VEC] = self.kab
        return t

    def components(self) -> dict[str, complex]:
        """All 36 components by name, e.g. 'I2A', 'KB3', 'KAB01'."""
        out = {"I1": self.i1, "I2": self.i2, "I2A": self.i2a, "I2B": self.i2b}
        for prefix, vec in (("KA", self.ka), ("KB", self.kb), ("LA", self.la), ("LB", self.lb)):
            out.update({f"{prefix}{mu}": complex(vec[mu]) for mu in range(4)})
        out.update({f"KAB{m}{n}": complex(self.kab[m, n]) for m in range(4) for n in range(4)})
        return out

    def component(self, name: str) -> complex:
        m = _NAME.match(name)
        if m is None:
            raise KeyError(name)
        head, idx = m.groups()
        expected = {"KAB": 2, "KA": 1, "KB": 1, "LA": 1, "LB": 1}.get(head, 0)
        if len(idx) != expected:
            raise KeyError(name)
        if expected == 0:
            return {"I1": self.i1, "I2": self.i2, "I2A": self.i2a, "I2B": self.i2b}[head]
        if head == "KAB":
            return complex(self.kab[int(idx[0]), int(idx[1])])
        return complex(getattr(self, head.lower())[int(idx)])

    def vector(self) -> np.ndarray:
        return np.array(list(self.components().values()))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.table())))

    def scaled(self, c: complex) -> "BitensorSet":
        return BitensorSet.from_table(c * self.table())


COMPONENT_NAMES = tuple(BitensorSet.from_table(np.zeros((6, 6))).components())


def compute_all(state: TwoParticleState) -> BitensorSet:
    return BitensorSet.from_table(trace_table(state.psi))


def compute_direct(state: TwoParticleState) -> BitensorSet:
    """Same result as compute_all, evaluated one trace at a time."""
    c, g5 = clifford.charge_conjugation(), clifford.gamma5()
    cg = [c @ clifford.gamma(mu) for mu in range(4)]
    tf = lambda left, right: trace_form(state, left, right)  # noqa: E731
    return BitensorSet(
        i1=tf(c, c),
        i2=tf(c @ g5, c @ g5),
        i2a=tf(c, c @ g5),
        i2b=tf(c @ g5, c),
        ka=np.array([tf(cg[mu], c) for mu in range(4)]),
        kb=np.array([tf(c, cg[mu]) for mu in range(4)]),
        la=np.array([tf(cg[mu], c @ g5) for mu in range(4)]),
        lb=np.array([tf(c @ g5, cg[mu]) for mu in range(4)]),
        kab=np.array([[tf(cg[m], cg[n]) for n in range(4)] for m in range(4)]),
    )


@lru_cache(maxsize=None)
def kernel_parity_signs() -> tuple[int, ...]:
    """Sign s_a with g0 K_a g0 = s_a K_a for each kernel, derived from the algebra."""
    g0 = clifford.gamma(0)
    signs = []
    for k in KERNELS:
        conj = g0 @ k @ g0
        if np.array_equal(conj, k):
            signs.append(1)
        elif np.array_equal(conj, -k):
            signs.append(-1)
        else:  # pragma: no cover
            raise ArithmeticError("kernel is not a parity eigenmatrix")
    return tuple(signs)


def parity_sign_table(lab: Lab | str) -> np.ndarray:
    """6x6 array of +-1 multiplying T under parity in one lab.

    Parity in Alice's lab sends Psi -> g0 Psi, conjugating the row kernel;
    in Bob's lab Psi -> Psi g0, conjugating the column kernel.
    """
    lab = Lab(lab)
    s = np.array(kernel_parity_signs())
    ones = np.ones(6, dtype=int)
    return np.outer(s, ones) if lab is Lab.A else np.outer(ones, s)


def parity_action(bset: BitensorSet, lab: Lab | str) -> BitensorSet:
    """Predicted components after parity inversion S(P) = g0 in one lab."""
    return BitensorSet.from_table(parity_sign_table(lab) * bset.table())


def _embed_vector(lam) -> np.ndarray:
    r = np.eye(6)
    if lam is not None:
        r[VEC, VEC] = lam.matrix if hasattr(lam, "matrix") else np.asarray(lam)
    return r


def lorentz_action(bset: BitensorSet, lam_a=None, lam_b=None) -> BitensorSet:
    """Predicted components after proper orthochronous transforms in each lab.

    Scalar and pseudoscalar slots are invariant; every vector index picks up
    the Lambda of its own lab.
    """
    r_a, r_b = _embed_vector(lam_a), _embed_vector(lam_b)
    return BitensorSet.from_table(r_a @ bset.table() @ r_b.T)


def covariance_error(
    got: BitensorSet, want: BitensorSet, rtol: float = 1e-9, atol: float = 1e-12
) -> float:
    """max |got - want| relative to the larger set's max magnitude.

    The magnitude is floored at atol / rtol, so the check `error < rtol`
    is the same as |got - want| < max(rtol * magnitude, atol).
    """
    diff = float(np.max(np.abs(got.table() - want.table())))
    return diff / max(got.max_abs(), want.max_abs(), atol / rtol)
