"""Randomized verification suites shared by the CLI and the test-suite.

Each suite returns a SuiteResult with pass/fail counts and the worst
residual seen for every checked property.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import bitensors, clifford, detect, lorentz, states

ALGEBRA_TOL = 0.0
EQ13_TOL = 1e-10
CHARGE_TOL = 1e-10
GAMMA5_TOL = 1e-12
GROUP_TOL = 1e-10
COVARIANCE_RTOL = 1e-9
COVARIANCE_ATOL = 1e-12
IDENTITY_TOL = 1e-12


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    worst: dict[str, float] = field(default_factory=dict)
    tolerances: dict[str, float] = field(default_factory=dict)
    info: dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def check(self, key: str, value: float, tol: float, strict: bool = True) -> bool:
        """Record one check; passes when value < tol (or <= tol when not strict)."""
        self.tolerances[key] = tol
        self.worst[key] = max(self.worst.get(key, 0.0), float(value))
        good = value < tol if strict else value <= tol
        if good:
            self.passed += 1
        else:
            self.failed += 1
        return good

    def summary(self) -> str:
        lines = [f"{self.name}: {'PASS' if self.ok else 'FAIL'} ({self.passed} passed, {self.failed} failed)"]
        for key, value in self.worst.items():
            lines.append(f"  {key}: worst {value:.3e} (tol {self.tolerances[key]:.0e})")
        for key, value in self.info.items():
            lines.append(f"  {key}: {value:.3e}")
        return "\n".join(lines)


def algebra(trials: int = 1, seed: int = 0) -> SuiteResult:
    """Exact Clifford-algebra relations; trials and seed are ignored."""
    result = SuiteResult("algebra")
    for key, value in clifford.algebra_residuals().items():
        result.check(key, value, ALGEBRA_TOL, strict=False)
    return result


def representation(trials: int = 200, seed: int = 0, scale: float = 2.0) -> SuiteResult:
    """Consistency between spinor and vector representations for random omega."""
    result = SuiteResult("representation")
    rng = np.random.default_rng(seed)
    g5 = clifford.gamma5()
    for _ in range(trials):
        params, s, lam = lorentz.random_proper_transform(rng, scale)
        result.check("eq13_residual", lorentz.covariance_residual(s.matrix, lam.matrix), EQ13_TOL)
        result.check("charge_residual", s.charge_residual(), CHARGE_TOL)
        result.check("gamma5_commutator", clifford.max_abs(g5 @ s.matrix - s.matrix @ g5), GAMMA5_TOL)
        result.check("metric_residual", lam.metric_residual(), EQ13_TOL)
        inverse = lorentz.spinor_transform(-params).matrix
        result.check("group_inverse", clifford.max_abs(s.matrix @ inverse - clifford.IDENTITY), GROUP_TOL)
        result.check("proper_orthochronous", 0.0 if lam.is_proper_orthochronous() else 1.0, 0.5)
    return result


def covariance(trials: int = 200, seed: int = 0, scale: float = 1.0) -> SuiteResult:
    """Transformation laws of all 36 components under local transformations."""
    result = SuiteResult("covariance")
    rng = np.random.default_rng(seed)
    for t in range(trials):
        state = states.random_state(rng, rank=int(rng.integers(1, 5)))
        before = bitensors.compute_all(state)
        _, s_a, lam_a = lorentz.random_proper_transform(rng, scale)
        _, s_b, lam_b = lorentz.random_proper_transform(rng, scale)
        after = bitensors.compute_all(states.apply_local(state, s_a, s_b))

        scale_ = max(before.max_abs(), after.max_abs(), COVARIANCE_ATOL / COVARIANCE_RTOL)
        scalars = np.array([after.i1 - before.i1, after.i2 - before.i2,
                            after.i2a - before.i2a, after.i2b - before.i2b])
        result.check("scalar_slots", float(np.max(np.abs(scalars))) / scale_, COVARIANCE_RTOL)
        predicted = bitensors.lorentz_action(before, lam_a, lam_b)
        result.check("all_slots", bitensors.covariance_error(after, predicted), COVARIANCE_RTOL)
        kab = lam_a.matrix @ before.kab @ lam_b.matrix.T
        result.check("bivector_double_sum", float(np.max(np.abs(after.kab - kab))) / scale_, COVARIANCE_RTOL)

        for lab, (pa, pb) in (("A", (lorentz.parity_spinor(), clifford.IDENTITY)),
                              ("B", (clifford.IDENTITY, lorentz.parity_spinor()))):
            direct = bitensors.compute_all(states.apply_local(state, pa, pb))
            predicted = bitensors.parity_action(before, lab)
            result.check(f"parity_{lab}", bitensors.covariance_error(direct, predicted), COVARIANCE_RTOL)
    result.check("parity_sign_table", float(parity_table_mismatches()), 0.0, strict=False)
    return result


# Expected parity behaviour of each kernel: C and the time component C g0
# are even, C g5 and the spatial components C g^i are odd.
EXPECTED_KERNEL_SIGNS = (1, -1, 1, -1, -1, -1)


def parity_table_mismatches() -> int:
    """Number of entries where the derived sign tables disagree with the stated signs."""
    s = np.array(EXPECTED_KERNEL_SIGNS)
    expected_a = np.outer(s, np.ones(6, dtype=int))
    bad = int(np.sum(bitensors.parity_sign_table("A") != expected_a))
    bad += int(np.sum(bitensors.parity_sign_table("B") != expected_a.T))
    return bad


def identities(trials: int = 1000, seed: int = 0) -> SuiteResult:
    """The 36 linear identities against the independently computed minors, per rank."""
    result = SuiteResult("identities")
    report = detect.transcription_report()
    result.check("transcription_defects",
                 float(len(report["block_mismatches"]) + len(report["unknown_components"])
                       + abs(36 - report["distinct_submatrices"])), 0.0, strict=False)
    rng = np.random.default_rng(seed)
    for rank in (1, 2, 3, 4):
        for _ in range(trials):
            state = states.random_state(rng, rank)
            result.check(f"rank{rank}_residual", detect.identities_residual(state), IDENTITY_TOL)
    return result


def theorem(trials: int = 1000, seed: int = 0, tol: float = detect.DEFAULT_TOL) -> SuiteResult:
    """Product iff all bitensors vanish: rank 1 must be product, ranks 2-4 entangled."""
    result = SuiteResult("theorem")
    rng = np.random.default_rng(seed)
    worst_product = 0.0
    weakest_entangled = np.inf
    for rank in (1, 2, 3, 4):
        for _ in range(trials):
            verdict = detect.decide(states.random_state(rng, rank), tol)
            correct = verdict.is_product == (rank == 1)
            result.check(f"rank{rank}_misclassified", 0.0 if correct else 1.0, 0.5)
            if rank == 1:
                worst_product = max(worst_product, verdict.max_indicator)
            else:
                weakest_entangled = min(weakest_entangled, verdict.max_indicator)
    result.info["max_indicator_rank1"] = worst_product
    if np.isfinite(weakest_entangled):
        result.info["min_indicator_rank2to4"] = float(weakest_entangled)
    return result


SUITES = {
    "algebra": algebra,
    "representation": representation,
    "covariance": covariance,
    "identities": identities,
    "theorem": theorem,
}
