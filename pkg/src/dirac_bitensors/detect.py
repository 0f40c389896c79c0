"""Product-state decision from the bitensors, with the 2x2-minor oracle.

The link between the two is a set of 36 linear identities: a quarter of a
fixed linear combination of bitensor components equals one 2x2 minor of
Psi. The table below lists them in readable form, grouped by the row pair
their minors use, and is parsed at import time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .bitensors import COMPONENT_NAMES, BitensorSet, compute_all
from .errors import DomainError
from .states import TwoParticleState, normalize

DEFAULT_TOL = 1e-9

PAIRS = tuple(combinations(range(4), 2))
PAIR_INDEX = {p: n for n, p in enumerate(PAIRS)}

# (row pair, [(bitensor combination, psi_ab psi_cd - psi_ef psi_gh), ...])
IDENTITY_BLOCKS = (
    ((0, 1), [
        ("KB1 - i KB2 + KAB01 - i KAB02", "00 12 - 02 10"),
        ("KB1 + i KB2 + KAB01 + i KAB02", "03 11 - 01 13"),
        ("I1 + KA0 + KB0 + KAB00", "00 11 - 01 10"),
        ("I1 + KA0 - KB0 - KAB00", "02 13 - 03 12"),
        ("I2A + LA0 + KB3 + KAB03", "02 11 - 12 01"),
        ("I2A + LA0 - KB3 - KAB03", "00 13 - 10 03"),
    ]),
    ((0, 2), [
        ("KAB11 - i KAB12 - i KAB21 - KAB22", "00 22 - 02 20"),
        ("KAB11 + i KAB12 - i KAB21 + KAB22", "03 21 - 01 23"),
        ("KA1 - i KA2 - KAB10 + i KAB20", "02 23 - 03 22"),
        ("KA1 - i KA2 + KAB10 - i KAB20", "00 21 - 01 20"),
        ("LA1 - i LA2 - KAB13 + i KAB23", "00 23 - 03 20"),
        ("LA1 - i LA2 + KAB13 - i KAB23", "02 21 - 01 22"),
    ]),
    ((0, 3), [
        ("LB1 - i LB2 - KAB31 + i KAB32", "00 32 - 02 30"),
        ("LB1 + i LB2 - KAB31 - i KAB32", "03 31 - 01 33"),
        ("I2 - LA3 - LB3 + KAB33", "00 33 - 03 30"),
        ("I2 - LA3 + LB3 - KAB33", "02 31 - 01 32"),
        ("I2B + LB0 - KA3 - KAB30", "00 31 - 01 30"),
        ("I2B - LB0 - KA3 + KAB30", "02 33 - 03 32"),
    ]),
    ((1, 2), [
        ("LB1 - i LB2 + KAB31 - i KAB32", "20 12 - 22 10"),
        ("LB1 + i LB2 + KAB31 + i KAB32", "23 11 - 21 13"),
        ("I2 + LA3 + LB3 + KAB33", "22 11 - 21 12"),
        ("I2 + LA3 - LB3 - KAB33", "20 13 - 23 10"),
        ("I2B + LB0 + KA3 + KAB30", "20 11 - 21 10"),
        ("I2B - LB0 + KA3 - KAB30", "13 22 - 12 23"),
    ]),
    ((1, 3), [
        ("KAB11 - i KAB12 + i KAB21 + KAB22", "12 30 - 10 32"),
        ("KAB11 + i KAB12 + i KAB21 - KAB22", "11 33 - 13 31"),
        ("KA1 + i KA2 + KAB10 + i KAB20", "11 30 - 10 31"),
        ("KA1 + i KA2 - KAB10 - i KAB20", "13 32 - 12 33"),
        ("LA1 + i LA2 + KAB13 + i KAB23", "11 32 - 12 31"),
        ("LA1 + i LA2 - KAB13 - i KAB23", "13 30 - 10 33"),
    ]),
    ((2, 3), [
        ("KB1 - i KB2 - KAB01 + i KAB02", "20 32 - 22 30"),
        ("KB1 + i KB2 - KAB01 - i KAB02", "23 31 - 21 33"),
        ("I1 - KA0 - KB0 + KAB00", "22 33 - 23 32"),
        ("I1 - KA0 + KB0 - KAB00", "20 31 - 21 30"),
        ("I2A - LA0 + KB3 - KAB03", "22 31 - 21 32"),
        ("I2A - LA0 - KB3 + KAB03", "20 33 - 30 23"),
    ]),
)

_TERM = re.compile(r"([+-])?\s*(i\s+)?([A-Z0-9]+)")
_RHS = re.compile(r"^(\d)(\d) (\d)(\d) - (\d)(\d) (\d)(\d)$")


@dataclass(frozen=True)
class Identity:
    block: tuple[int, int]
    terms: tuple[tuple[complex, str], ...]
    rhs_indices: tuple[tuple[int, int], ...]
    rows: tuple[int, int]
    cols: tuple[int, int]
    sign: int

    def lhs(self, bset: BitensorSet) -> complex:
        return 0.25 * sum(c * bset.component(name) for c, name in self.terms)

    def rhs(self, psi: np.ndarray) -> complex:
        (a, b), (c, d), (e, f), (g, h) = self.rhs_indices
        return complex(psi[a, b] * psi[c, d] - psi[e, f] * psi[g, h])


def _parse_terms(text: str) -> tuple[tuple[complex, str], ...]:
    terms = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None:
            raise ValueError(f"cannot parse combination {text!r} at {pos}")
        sign, imag, name = m.groups()
        coef = (-1 if sign == "-" else 1) * (1j if imag else 1)
        terms.append((coef, name))
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return tuple(terms)


def _classify_rhs(written) -> tuple[tuple[int, int], tuple[int, int], int]:
    """Match psi_ab psi_cd - psi_ef psi_gh to a 2x2 submatrix and a sign.

    Returns (rows, cols, sign) with written value = sign * det(submatrix).
    """
    first = frozenset(written[:2])
    second = frozenset(written[2:])
    rows = tuple(sorted({r for r, _ in written}))
    cols = tuple(sorted({c for _, c in written}))
    if len(rows) != 2 or len(cols) != 2:
        raise ValueError(f"{written} does not span a 2x2 submatrix")
    (j, jj), (k, kk) = rows, cols
    diagonal = frozenset({(j, k), (jj, kk)})
    anti = frozenset({(j, kk), (jj, k)})
    if (first, second) == (diagonal, anti):
        return rows, cols, 1
    if (first, second) == (anti, diagonal):
        return rows, cols, -1
    raise ValueError(f"{written} is not a 2x2 determinant")


def _parse_rhs(text: str) -> tuple[tuple[int, int], ...]:
    m = _RHS.match(text)
    if m is None:
        raise ValueError(f"cannot parse minor {text!r}")
    d = [int(x) for x in m.groups()]
    return tuple((d[n], d[n + 1]) for n in range(0, 8, 2))


@lru_cache(maxsize=None)
def identities() -> tuple[Identity, ...]:
    out = []
    for block, rows in IDENTITY_BLOCKS:
        for lhs_text, rhs_text in rows:
            written = _parse_rhs(rhs_text)
            r, c, sign = _classify_rhs(written)
            out.append(Identity(block, _parse_terms(lhs_text), written, r, c, sign))
    return tuple(out)


def transcription_report() -> dict[str, object]:
    """Check the identity table is internally consistent.

    Every right-hand side must be +-det of a submatrix whose rows match its
    block tag, and the 36 must cover every submatrix exactly once.
    """
    ids = identities()
    covered = {(i.rows, i.cols) for i in ids}
    names = set(COMPONENT_NAMES)
    return {
        "count": len(ids),
        "block_mismatches": [i for i in ids if i.rows != i.block],
        "distinct_submatrices": len(covered),
        "unknown_components": sorted({n for i in ids for _, n in i.terms} - names),
    }


@dataclass(frozen=True)
class MinorTable:
    """minors[r, c] = det of rows PAIRS[r], columns PAIRS[c]."""

    minors: np.ndarray

    def __getitem__(self, key) -> complex:
        rows, cols = key
        return complex(self.minors[PAIR_INDEX[tuple(rows)], PAIR_INDEX[tuple(cols)]])

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.minors)))

    def transpose(self) -> "MinorTable":
        return MinorTable(self.minors.T)


def minor_table(state: TwoParticleState) -> MinorTable:
    psi = state.psi
    m = np.empty((6, 6), dtype=np.complex128)
    for r, (j, jj) in enumerate(PAIRS):
        for c, (k, kk) in enumerate(PAIRS):
            m[r, c] = psi[j, k] * psi[jj, kk] - psi[j, kk] * psi[jj, k]
    return MinorTable(m)


def minors_from_bitensors(bset: BitensorSet) -> MinorTable:
    m = np.empty((6, 6), dtype=np.complex128)
    for ident in identities():
        m[PAIR_INDEX[ident.rows], PAIR_INDEX[ident.cols]] = ident.sign * ident.lhs(bset)
    return MinorTable(m)


def identities_residual(state: TwoParticleState, bset: BitensorSet | None = None) -> float:
    """max over the 36 identities of |combination / 4 - signed minor|."""
    if bset is None:
        bset = compute_all(state)
    return float(np.max(np.abs(minors_from_bitensors(bset).minors - minor_table(state).minors)))


@lru_cache(maxsize=None)
def identity_matrix() -> np.ndarray:
    """36x36 matrix A with signed minors = A @ components (component order of BitensorSet)."""
    col = {n: k for k, n in enumerate(COMPONENT_NAMES)}
    a = np.zeros((36, 36), dtype=np.complex128)
    for ident in identities():
        row = 6 * PAIR_INDEX[ident.rows] + PAIR_INDEX[ident.cols]
        for coef, name in ident.terms:
            a[row, col[name]] += 0.25 * ident.sign * coef
    a.setflags(write=False)
    return a


def bitensors_from_minors(table: MinorTable) -> BitensorSet:
    """Invert the identities: recover all 36 components from the minors alone."""
    comps = np.linalg.solve(identity_matrix(), table.minors.reshape(36))
    return BitensorSet.from_components(zip(COMPONENT_NAMES, comps))


def nearest_rank_one_gap(state: TwoParticleState) -> float:
    """sigma_2 / sigma_1 of Psi; zero exactly for product states."""
    sv = state.singular_values()
    return float(sv[1] / sv[0])


@dataclass(frozen=True)
class Verdict:
    is_product: bool
    max_indicator: float
    tolerance_used: float
    sigma_ratio: float

    def to_dict(self) -> dict[str, object]:
        return {
            "is_product": self.is_product,
            "max_indicator": self.max_indicator,
            "tolerance": self.tolerance_used,
            "sigma_ratio": self.sigma_ratio,
        }


def decide(state: TwoParticleState, tol: float = DEFAULT_TOL) -> Verdict:
    """Product iff every bitensor component of the unit-normalized state is below tol."""
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    unit = normalize(state)
    indicator = compute_all(unit).max_abs()
    return Verdict(indicator < tol, indicator, float(tol), nearest_rank_one_gap(unit))
