"""The minor-sum concurrence on a few familiar states.

With unit normalization the value reduces to 2|ad - bc| for two qubits
and to sqrt(2(1 - Tr rho_A^2)) for any bipartite state.
"""
import numpy as np

from multisep import (
    ConcurrenceConfig,
    concurrence_pure,
    concurrence_two_qubit,
    linear_entropy_concurrence,
    make_state,
    parse_ket,
)

bell = parse_ket("|00> + |11>", [2, 2])
print(f"Bell        C = {concurrence_pure(bell):.12f}  closed form {concurrence_two_qubit(bell):.12f}")

for expr, label in [("|000> + |111>", "GHZ"), ("|001> + |010> + |100>", "W")]:
    s = parse_ket(expr, [2, 2, 2])
    print(f"{label:11s} C = {concurrence_pure(s):.12f}")
print(f"sqrt(3/2) = {np.sqrt(1.5):.12f}, sqrt(4/3) = {np.sqrt(4 / 3):.12f}")

rng = np.random.default_rng(1)
s = make_state([3, 5], rng.standard_normal(15) + 1j * rng.standard_normal(15))
print(f"3x5 random  C = {concurrence_pure(s):.12f}  linear entropy {linear_entropy_concurrence(s, [1]):.12f}")

# The overall scale is a free choice; values scale with its square root.
print(f"Bell with normalization 2: {concurrence_pure(bell, ConcurrenceConfig(normalization=2.0)):.12f}")
