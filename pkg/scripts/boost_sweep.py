"""How the indicators and the roundoff floor behave as Alice's boost grows.

For a fixed entangled and a fixed product state, boost Alice's particle
along x with rapidity eta and report the largest bitensor component of the
unit-normalized state, the identity residual, and the covariance error.
"""

import argparse

import numpy as np

from dirac_bitensors import bitensors, detect, lorentz, states

parser = argparse.ArgumentParser()
parser.add_argument("--seed", type=int, default=0)
parser.add_argument("--max-rapidity", type=float, default=8.0)
parser.add_argument("--steps", type=int, default=9)
args = parser.parse_args()

rng = np.random.default_rng(args.seed)
entangled = states.random_state(rng, 2)
product = states.random_state(rng, 1)

print(f"{'eta':>6} {'ent max|T|':>12} {'prod max|T|':>12} {'id resid':>10} {'cov err':>10}")
for eta in np.linspace(0.0, args.max_rapidity, args.steps):
    params = lorentz.OmegaParams.from_components([eta, 0, 0, 0, 0, 0])
    s, lam = lorentz.spinor_transform(params), lorentz.vector_transform(params)
    moved = states.apply_local(entangled, s, np.eye(4))
    moved_product = states.normalize(states.apply_local(product, s, np.eye(4)))
    predicted = bitensors.lorentz_action(bitensors.compute_all(entangled), lam, None)
    cov = bitensors.covariance_error(bitensors.compute_all(moved), predicted)
    print(
        f"{eta:6.2f} {detect.decide(moved).max_indicator:12.3e} "
        f"{bitensors.compute_all(moved_product).max_abs():12.3e} "
        f"{detect.identities_residual(states.normalize(moved)):10.1e} {cov:10.1e}"
    )
