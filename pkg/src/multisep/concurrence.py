"""Generalized concurrence of pure states built from the minor system."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError
from .separability import all_minors
from .tensor_core import StateTensor, matricize, normalize


@dataclass(frozen=True)
class ConcurrenceConfig:
    """``normalization`` scales the squared-minor sum before the square root.

    With the default 1.0 and the duplicated minor enumeration, two-qubit
    states reproduce ``2|a00 a11 - a01 a10|`` and bipartite states the
    linear-entropy concurrence.
    """

    normalization: float = 1.0
    tolerance: float = 1e-10

    def __post_init__(self):
        if not self.normalization > 0:
            raise ArgumentError("normalization must be positive")


DEFAULT_CONFIG = ConcurrenceConfig()


def _normalized(state):
    try:
        return normalize(state)
    except ArgumentError:
        raise ArgumentError("concurrence of the zero state is undefined") from None


def concurrence_pure(state: StateTensor, config: ConcurrenceConfig = DEFAULT_CONFIG) -> float:
    minors = all_minors(_normalized(state))
    total = float(np.sum(minors.real**2 + minors.imag**2))
    return float(np.sqrt(config.normalization * total))


def concurrence_two_qubit(state: StateTensor) -> float:
    if state.dims != (2, 2):
        raise ArgumentError(f"two-qubit concurrence needs dims (2, 2), got {state.dims}")
    a = _normalized(state).amplitudes
    return float(2 * abs(a[0] * a[3] - a[1] * a[2]))


def linear_entropy_concurrence(state: StateTensor, cut) -> float:
    """``sqrt(2 (1 - Tr rho_A^2))`` for the reduced state on the axes in ``cut``.

    ``1 - Tr rho_A^2`` is accumulated as ``2 sum_{i<j} lam_i lam_j`` over the
    eigenvalues of ``rho_A`` (squared singular values of the unfolding),
    which avoids cancellation for nearly pure reduced states.
    """
    mat = matricize(_normalized(state), cut)
    lam = np.linalg.svd(mat, compute_uv=False) ** 2
    lam = lam / lam.sum()
    mixedness = 2.0 * float(np.sum(np.triu(np.outer(lam, lam), 1)))
    return float(np.sqrt(2.0 * mixedness))
