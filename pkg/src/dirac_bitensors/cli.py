"""Command-line front end.

    dirac-bitensors gen bell01 --out state.json
    dirac-bitensors invariants --in state.json
    dirac-bitensors transform --in state.json --omega-a 0.5,0,0,0,0,0 --parity-b --out moved.json
    dirac-bitensors decide --in moved.json --tol 1e-9
    dirac-bitensors verify theorem --trials 1000 --seed 3

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import bitensors, detect, lorentz, serialize, states, suites
from .errors import DomainError, NumericError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

GEN_KINDS = ("product", "bell01", "bell03", "random-rank-1", "random-rank-2", "random-rank-3", "random-rank-4")


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    tolerance: float = detect.DEFAULT_TOL
    omega_scale: float = 1.0
    trials: int = 100
    input: Path | None = None
    output: Path | None = None

    def __post_init__(self):
        if not (self.tolerance > 0 and math.isfinite(self.tolerance)):
            raise DomainError(f"--tol must be positive, got {self.tolerance}")
        if not 0 < self.omega_scale <= lorentz.OMEGA_BOUND:
            raise DomainError(f"--omega-scale must lie in (0, {lorentz.OMEGA_BOUND}], got {self.omega_scale}")
        if self.trials < 1:
            raise DomainError(f"--trials must be >= 1, got {self.trials}")


class UsageError(Exception):
    pass


def parse_omega(text: str) -> lorentz.OmegaParams:
    """Six comma-separated values (01,02,03,12,13,23) or JSON: 6-list or 4x4 nested list."""
    text = text.strip()
    try:
        value = json.loads(text) if text.startswith("[") else [float(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"cannot parse omega {text!r}: {exc}") from exc
    arr = np.asarray(value, dtype=np.float64)
    if arr.shape == (6,):
        return lorentz.OmegaParams.from_components(arr)
    if arr.shape == (4, 4):
        return lorentz.OmegaParams(arr)
    raise UsageError(f"omega must have 6 components or be 4x4, got shape {arr.shape}")


def generate(kind: str, seed: int) -> states.TwoParticleState:
    rng = np.random.default_rng(seed)
    if kind == "product":
        return states.normalize(states.product_state(states.random_spinor(rng), states.random_spinor(rng)))
    if kind == "bell01":
        return states.bell01()
    if kind == "bell03":
        return states.bell03()
    if kind.startswith("random-rank-"):
        return states.random_state(rng, int(kind.rsplit("-", 1)[1]))
    raise UsageError(f"unknown state kind {kind!r}")


def _emit(doc: dict, out: Path | None) -> None:
    text = serialize.dumps(doc)
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _load(path: Path | None) -> states.TwoParticleState:
    if path is None:
        return serialize.state_from_dict(serialize.loads(sys.stdin.read(), "<stdin>"))
    return serialize.read_state(path)


def cmd_gen(args, cfg: RunConfig) -> int:
    _emit(serialize.state_to_dict(generate(args.kind, cfg.seed)), cfg.output)
    return EXIT_OK


def cmd_invariants(args, cfg: RunConfig) -> int:
    _emit(serialize.report_to_dict(bitensors.compute_all(_load(cfg.input))), cfg.output)
    return EXIT_OK


def cmd_transform(args, cfg: RunConfig) -> int:
    state = _load(cfg.input)
    s_a = lorentz.spinor_transform(parse_omega(args.omega_a))
    s_b = lorentz.spinor_transform(parse_omega(args.omega_b))
    if args.parity_a:
        s_a = lorentz.with_parity(s_a)
    if args.parity_b:
        s_b = lorentz.with_parity(s_b)
    _emit(serialize.state_to_dict(states.apply_local(state, s_a, s_b)), cfg.output)
    return EXIT_OK


def cmd_decide(args, cfg: RunConfig) -> int:
    _emit(detect.decide(_load(cfg.input), cfg.tolerance).to_dict(), cfg.output)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    kwargs = {"trials": cfg.trials, "seed": cfg.seed}
    if args.suite in ("representation", "covariance"):
        kwargs["scale"] = cfg.omega_scale
    if args.suite == "theorem":
        kwargs["tol"] = cfg.tolerance
    result = suites.SUITES[args.suite](**kwargs)
    print(result.summary())
    return EXIT_OK if result.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dirac-bitensors", description="Lorentz covariant entanglement indicators for two Dirac spinors.")
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p, with_in=True):
        if with_in:
            p.add_argument("--in", dest="input", type=Path, help="state JSON (default: stdin)")
        p.add_argument("--out", dest="output", type=Path, help="output JSON (default: stdout)")

    p = sub.add_parser("gen", help="write a state document")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("--seed", type=int, default=0)
    io(p, with_in=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("invariants", help="evaluate the 36 bitensor components")
    io(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("transform", help="apply local transformations in each lab")
    io(p)
    p.add_argument("--omega-a", default="0,0,0,0,0,0", help="Alice's omega: 01,02,03,12,13,23 or JSON")
    p.add_argument("--omega-b", default="0,0,0,0,0,0", help="Bob's omega")
    p.add_argument("--parity-a", action="store_true", help="compose parity after Alice's transformation")
    p.add_argument("--parity-b", action="store_true", help="compose parity after Bob's transformation")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("decide", help="product-state verdict")
    io(p)
    p.add_argument("--tol", type=float, default=detect.DEFAULT_TOL)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="run a randomized verification suite")
    p.add_argument("suite", choices=sorted(suites.SUITES))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=detect.DEFAULT_TOL)
    p.add_argument("--omega-scale", type=float, default=1.0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            seed=getattr(args, "seed", 0),
            tolerance=getattr(args, "tol", detect.DEFAULT_TOL),
            omega_scale=getattr(args, "omega_scale", 1.0),
            trials=getattr(args, "trials", 100),
            input=getattr(args, "input", None),
            output=getattr(args, "output", None),
        )
        return args.func(args, cfg)
    except (DomainError, serialize.DocumentError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
