"""Exit criteria. Each test prints one PASS/FAIL line; run with `pytest -s` to see them."""

import io
import json
import time
from contextlib import redirect_stdout

import numpy as np
import pytest

from dirac_bitensors import bitensors, cli, clifford, detect, serialize, states, suites


def report(number, title, ok, detail):
    print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {title}: {detail}")
    return ok


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def test_1_clifford_algebra_exact():
    residuals, elapsed = timed(clifford.algebra_residuals)
    ok = all(v == 0.0 for v in residuals.values()) and elapsed < 1.0
    assert report(1, "Clifford algebra exact", ok, f"residuals={residuals} time={elapsed:.3f}s")


def test_2_representation_consistency():
    result, elapsed = timed(suites.representation, trials=200, seed=1, scale=2.0)
    ok = result.ok and elapsed < 5.0
    assert result.tolerances["eq13_residual"] == 1e-10
    assert result.tolerances["charge_residual"] == 1e-10
    assert result.tolerances["gamma5_commutator"] == 1e-12
    assert report(2, "representation consistency (200 omega, |omega|<=2)", ok,
                  f"worst={result.worst} time={elapsed:.2f}s")


def test_3_covariance():
    result, elapsed = timed(suites.covariance, trials=200, seed=2, scale=1.0)
    ok = result.ok and elapsed < 10.0 and result.worst["parity_sign_table"] == 0.0
    assert result.tolerances["all_slots"] == 1e-9
    assert report(3, "covariance (200 states x local transforms)", ok,
                  f"worst={result.worst} time={elapsed:.2f}s")


def test_4_identities():
    result, elapsed = timed(suites.identities, trials=1000, seed=3)
    ok = result.ok and elapsed < 10.0 and result.passed == 4001
    assert report(4, "36 identities vs minors (1000 per rank)", ok,
                  f"worst={result.worst} time={elapsed:.2f}s")


def test_5_theorem_equivalence():
    result, elapsed = timed(suites.theorem, trials=1000, seed=4, tol=1e-9)
    ok = result.ok and elapsed < 10.0 and result.passed == 4000
    assert report(5, "product iff all bitensors vanish (tol 1e-9)", ok,
                  f"misclassified={result.failed} {result.info} time={elapsed:.2f}s")


def test_6_worked_states():
    bell = bitensors.compute_all(states.bell01())
    nonzero = {k: v for k, v in bell.components().items() if abs(v) > 1e-15}
    bell_ok = set(nonzero) == {"I1", "KA0", "KB0", "KAB00"} and all(
        abs(abs(v) - 0.5) < 1e-15 for v in nonzero.values()
    )
    oracle = detect.bitensors_from_minors(detect.minor_table(states.bell01()))
    oracle_ok = np.max(np.abs(oracle.table() - bell.table())) < 1e-14
    rng = np.random.default_rng(6)
    product_max = max(
        bitensors.compute_all(states.random_state(rng, 1)).max_abs() for _ in range(100)
    )
    ok = bell_ok and oracle_ok and product_max < 1e-12
    assert report(6, "worked states", ok, f"bell01 nonzero={sorted(nonzero)} product max={product_max:.1e}")


def test_7_cli_roundtrip_and_determinism(tmp_path):
    worst = 0.0
    for seed in range(50):
        state = states.random_state(seed, 1 + seed % 4)
        path = tmp_path / f"s{seed}.json"
        serialize.write_state(state, path)
        worst = max(worst, float(np.max(np.abs(serialize.read_state(path).psi - state.psi))))

    def capture(argv):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli.main(argv)
        return code, buf.getvalue()

    identical = True
    for kind in cli.GEN_KINDS:
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        cli.main(["gen", kind, "--seed", "17", "--out", str(a)])
        cli.main(["gen", kind, "--seed", "17", "--out", str(b)])
        identical &= a.read_bytes() == b.read_bytes()
        ia, ib = tmp_path / "ia.json", tmp_path / "ib.json"
        cli.main(["invariants", "--in", str(a), "--out", str(ia)])
        cli.main(["invariants", "--in", str(b), "--out", str(ib)])
        identical &= ia.read_bytes() == ib.read_bytes()
    identical &= capture(["verify", "theorem", "--trials", "20", "--seed", "5"]) == capture(
        ["verify", "theorem", "--trials", "20", "--seed", "5"]
    )
    ok = worst <= 1e-15 and identical
    assert report(7, "CLI round-trip and determinism", ok, f"roundtrip worst={worst:.1e} byte-identical={identical}")
