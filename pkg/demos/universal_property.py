"""Every multilinear map factors through the tensor product.

A map f(v1, ..., vm) that is linear in each slot equals a single linear
map applied to v1 (x) ... (x) vm. We check that numerically and then
test the two defining conditions on the canonical map.
"""
import numpy as np

from multisep import canonical_map, check_multilinearity, induced_linear, tensor_product, tensor_product_criteria
from multisep.multilinear import factorization_residual, random_map

rng = np.random.default_rng(11)
f = random_map([2, 3, 4], 5, rng)
print("multilinearity check:", check_multilinearity(f, trials=20, seed=0))

theta = induced_linear(f)
args = [rng.standard_normal(n) for n in (2, 3, 4)]
lhs = f(*args)
rhs = theta @ tensor_product(args).amplitudes
print(f"|f(v) - theta(v1 x v2 x v3)| = {np.linalg.norm(lhs - rhs):.2e}")
print(f"worst residual over a random tuple: {factorization_residual(f, args):.2e}")

print("canonical map:", tensor_product_criteria(canonical_map([2, 3])))
# a map into too small a space cannot be a tensor product
print("squashed map: ", tensor_product_criteria(random_map([2, 3], 4, rng)))
