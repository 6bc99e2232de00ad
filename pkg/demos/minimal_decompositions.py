"""Shrinking a sum of product vectors down to its tensor rank.

Start from the naive expansion of a matrix over the standard basis and
merge linearly dependent columns until none remain. The count that
survives is the Schmidt rank across the cut.
"""
import numpy as np

from multisep import make_state, minimal_decomposition, rank_oracle, reconstruct
from multisep.decomposition import orthogonalize

rng = np.random.default_rng(3)
rank = 3
mat = (rng.standard_normal((6, rank)) + 1j * rng.standard_normal((6, rank))) @ rng.standard_normal((5, rank)).T
state = make_state([6, 5], mat.reshape(-1))

dec = minimal_decomposition(state, [1])
print(f"planted rank {rank}, merged rank {dec.rank}, SVD rank {rank_oracle(state, [1])}")
print(f"merge steps taken: {len(dec.steps)}")
residual = np.linalg.norm(reconstruct(dec).amplitudes - state.amplitudes)
print(f"reconstruction residual {residual:.2e}")

# Orthogonalizing both sides gives the Schmidt form.
orth = orthogonalize(dec)
print("Schmidt coefficients:", np.round(np.linalg.norm(orth.left, axis=0) * np.linalg.norm(orth.right, axis=0), 6))

# A three-qubit GHZ state has rank 2 across every cut.
ghz = make_state([2, 2, 2], [1, 0, 0, 0, 0, 0, 0, 1])
print("GHZ rank across cuts:", [minimal_decomposition(ghz, cut).rank for cut in ([1], [2], [1, 3])])
