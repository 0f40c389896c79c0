import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dirac_bitensors import cli, serialize, states
from dirac_bitensors.bitensors import compute_all


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@given(st.integers(0, 2**32 - 1), st.integers(1, 4))
def test_state_roundtrip(seed, rank):
    state = states.random_state(seed, rank)
    back = serialize.state_from_dict(json.loads(serialize.dumps(serialize.state_to_dict(state))))
    assert np.max(np.abs(back.psi - state.psi)) <= 1e-15
    assert np.array_equal(back.psi, state.psi)


def test_state_document_shape():
    doc = serialize.state_to_dict(states.bell01())
    assert set(doc) == {"psi"}
    assert np.array(doc["psi"]).shape == (4, 4, 2)
    assert doc["psi"][0][1] == [pytest.approx(2**-0.5), 0.0]


@pytest.mark.parametrize(
    "doc, field",
    [
        ([], "document root"),
        ({"phi": []}, "psi"),
        ({"psi": [[0] * 4] * 3}, "psi"),
        ({"psi": [[[0, 0]] * 4] * 2 + [[[0, 0]] * 3] + [[[0, 0]] * 4]}, "psi[2]"),
        ({"psi": [[[1, 0]] * 4] * 3 + [[[1, 0]] * 3 + [[1, "x"]]]}, "psi[3][3][1]"),
        ({"psi": [[[0, 0]] * 4] * 4}, "nonzero"),
    ],
)
def test_state_document_errors_name_field(doc, field):
    with pytest.raises(serialize.DocumentError, match=field.replace("[", r"\[").replace("]", r"\]")):
        serialize.state_from_dict(doc)


def test_report_roundtrip():
    bset = compute_all(states.random_state(4, 4))
    doc = json.loads(serialize.dumps(serialize.report_to_dict(bset)))
    assert set(doc) == {"I1", "I2", "I2A", "I2B", "KA", "KB", "LA", "LB", "KAB", "max_abs"}
    assert np.array_equal(serialize.report_from_dict(doc).table(), bset.table())


def test_gen_product_then_decide(tmp_path, capsys):
    path = tmp_path / "p.json"
    assert run(capsys, "gen", "product", "--seed", 7, "--out", path)[0] == 0
    code, out, _ = run(capsys, "decide", "--in", path)
    assert code == 0
    verdict = json.loads(out)
    assert verdict["is_product"] is True
    assert set(verdict) == {"is_product", "max_indicator", "tolerance", "sigma_ratio"}


def test_gen_bell01_invariants(tmp_path, capsys):
    path = tmp_path / "b.json"
    run(capsys, "gen", "bell01", "--out", path)
    code, out, _ = run(capsys, "invariants", "--in", path)
    assert code == 0
    report = serialize.report_from_dict(json.loads(out))
    mags = np.abs(report.vector())
    assert np.sum(np.isclose(mags, 0.5, atol=1e-15)) == 4
    assert np.sum(mags > 1e-15) == 4
    assert report.i1 == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("kind", cli.GEN_KINDS)
def test_gen_deterministic_bytes(tmp_path, capsys, kind):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "gen", kind, "--seed", 11, "--out", a)
    run(capsys, "gen", kind, "--seed", 11, "--out", b)
    assert a.read_bytes() == b.read_bytes()


def test_product_invariants_vanish(tmp_path, capsys):
    path = tmp_path / "p.json"
    run(capsys, "gen", "product", "--seed", 3, "--out", path)
    _, out, _ = run(capsys, "invariants", "--in", path)
    assert json.loads(out)["max_abs"] < 1e-12


def test_garbage_input(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text('{"psi": [[1, 2]')
    code, _, err = run(capsys, "invariants", "--in", path)
    assert code == 2
    assert "line 1" in err
    path.write_text('{"psi": [[[1, 0], [0, 0], [0, 0], [0, 0]], 7, [], []]}')
    code, _, err = run(capsys, "invariants", "--in", path)
    assert code == 2
    assert "psi[1]" in err


def test_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "decide", "--in", tmp_path / "nope.json")
    assert code == 2 and "error" in err


def test_transform_zero_is_identity(tmp_path, capsys):
    src, dst = tmp_path / "s.json", tmp_path / "t.json"
    run(capsys, "gen", "random-rank-3", "--seed", 1, "--out", src)
    assert run(capsys, "transform", "--in", src, "--out", dst)[0] == 0
    assert np.array_equal(serialize.read_state(src).psi, serialize.read_state(dst).psi)


def test_transform_preserves_scalars_and_products(tmp_path, capsys):
    src, dst = tmp_path / "s.json", tmp_path / "t.json"
    run(capsys, "gen", "random-rank-4", "--seed", 2, "--out", src)
    run(capsys, "transform", "--in", src, "--out", dst,
        "--omega-a", "0.5,-0.3,0.2,1.0,0.1,-0.4", "--omega-b", "[0.1, 0.2, 0.3, 0.4, 0.5, 0.6]")
    before = compute_all(serialize.read_state(src))
    after = compute_all(serialize.read_state(dst))
    for name in ("i1", "i2", "i2a", "i2b"):
        assert getattr(after, name) == pytest.approx(getattr(before, name), abs=1e-9)

    run(capsys, "gen", "product", "--seed", 2, "--out", src)
    run(capsys, "transform", "--in", src, "--out", dst, "--omega-a", "1,0,0,0,0,0", "--parity-b")
    assert json.loads(run(capsys, "decide", "--in", dst)[1])["is_product"] is True


def test_transform_parity_flips_pseudoscalar(tmp_path, capsys):
    src, dst = tmp_path / "s.json", tmp_path / "t.json"
    run(capsys, "gen", "random-rank-4", "--seed", 9, "--out", src)
    run(capsys, "transform", "--in", src, "--out", dst, "--parity-b")
    before = compute_all(serialize.read_state(src))
    after = compute_all(serialize.read_state(dst))
    assert after.i2a == pytest.approx(-before.i2a, abs=1e-14)
    assert after.i1 == pytest.approx(before.i1, abs=1e-14)


def test_transform_rejects_non_antisymmetric(tmp_path, capsys):
    src = tmp_path / "s.json"
    run(capsys, "gen", "bell01", "--out", src)
    code, _, err = run(capsys, "transform", "--in", src, "--omega-a", "[[0,1,0,0],[1,0,0,0],[0,0,0,0],[0,0,0,0]]")
    assert code == 2 and "antisymmetric" in err
    code, _, _ = run(capsys, "transform", "--in", src, "--omega-a", "1,2")
    assert code == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["gen", "nonsense"])
    assert exc.value.code == 2
    assert run(capsys, "decide", "--tol", "0")[0] == 2
    assert run(capsys, "verify", "theorem", "--trials", "0")[0] == 2
    assert run(capsys, "verify", "covariance", "--omega-scale", "11")[0] == 2


def test_run_config_bounds():
    cli.RunConfig(omega_scale=10.0)
    with pytest.raises(Exception):
        cli.RunConfig(omega_scale=0.0)


def test_verify_algebra(capsys):
    code, out, _ = run(capsys, "verify", "algebra")
    assert code == 0
    assert "PASS" in out and "worst 0.000e+00" in out


def test_verify_failure_exit_code(capsys):
    # a tolerance far above any indicator makes every entangled state look like a product
    code, out, _ = run(capsys, "verify", "theorem", "--trials", 5, "--tol", 100)
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("suite", ["covariance", "identities", "theorem", "representation"])
def test_verify_suites_deterministic(capsys, suite):
    first = run(capsys, "verify", suite, "--trials", 10, "--seed", 4)
    second = run(capsys, "verify", suite, "--trials", 10, "--seed", 4)
    assert first[0] == 0
    assert first == second


def test_stdin_stdout_pipeline(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(serialize.dumps(serialize.state_to_dict(states.bell03()))))
    code, out, _ = run(capsys, "decide")
    assert code == 0 and json.loads(out)["is_product"] is False
