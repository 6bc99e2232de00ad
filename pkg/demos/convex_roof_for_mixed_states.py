"""Estimating the concurrence of a mixed state by a convex roof.

The roof is the cheapest average concurrence over all ways of writing
rho as a mixture of pure states. For two qubits the exact answer is
known in closed form, so we can see how close the search gets.
"""
import numpy as np

from multisep import DensityMatrix, RoofConfig, convex_roof_concurrence, wootters_concurrence

phi = np.array([1, 0, 0, 1]) / np.sqrt(2)
cfg = RoofConfig(ensemble_size=6, restarts=16, max_iters=300, seed=0)

print("  p    roof      exact")
for p in (0.2, 0.5, 0.7, 0.9):
    rho = DensityMatrix((2, 2), p * np.outer(phi, phi) + (1 - p) * np.eye(4) / 4)
    res = convex_roof_concurrence(rho, cfg)
    print(f"{p:4.1f}  {res.value:.6f}  {wootters_concurrence(rho):.6f}")

# The winning ensemble really does mix back to rho.
res = convex_roof_concurrence(rho, cfg)
print(f"ensemble of {len(res.ensemble.states)} states, weights {np.round(res.ensemble.weights, 4)}")
print(f"|sum p psi psi^+ - rho| = {np.linalg.norm(res.ensemble.mixture() - rho.matrix):.2e}")
