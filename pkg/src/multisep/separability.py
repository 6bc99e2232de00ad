"""Product-state test through the 2x2 minor system.

For an axis ``j`` and multi-indices ``k``, ``l`` with ``k_j < l_j`` the
minor is::

    S = a[k] * a[l] - a[k with k_j -> l_j] * a[l with l_j -> k_j]

A state is a product state exactly when every such minor vanishes.
Minors are enumerated with axis ascending, then ``k`` row-major, then
``l`` row-major; the complement indices of ``k`` and ``l`` are free, so
each geometric minor shows up twice (once with each sign).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

import numpy as np

from .errors import ArgumentError, CapacityError, TensorIndexError
from .tensor_core import StateTensor, _check_dims, matricize, normalize, unflatten_index
from .multilinear import numerical_rank

MAX_MINORS = 2**26
DEFAULT_TOL = 1e-10


class MinorId(NamedTuple):
    axis: int  # 1-based
    k: tuple[int, ...]
    l: tuple[int, ...]


@dataclass(frozen=True)
class SeparabilityReport:
    separable: bool
    max_abs_minor: float
    witness: Optional[MinorId]
    tolerance: float


def minor_count(dims) -> int:
    dims = tuple(dims)
    total = 0
    for j, n in enumerate(dims):
        rest = math.prod(dims) // n
        total += n * (n - 1) // 2 * rest * rest
    return total


@lru_cache(maxsize=32)
def _minor_offsets(dims: tuple[int, ...]):
    """Flat offsets ``(axis, a, b, c, d)`` so that ``S = x[a]x[b] - x[c]x[d]``."""
    count = minor_count(dims)
    if count > MAX_MINORS:
        raise CapacityError(f"{count} minors exceed the limit of {MAX_MINORS}")
    size = math.prod(dims)
    coords = np.indices(dims).reshape(len(dims), size)
    axes, a_all, b_all, c_all, d_all = [], [], [], [], []
    for j in range(len(dims)):
        stride = math.prod(dims[j + 1:])
        cj = coords[j]
        # row-major over (k, l) pairs; np.nonzero walks in C order
        k, l = np.nonzero(cj[:, None] < cj[None, :])
        shift = (cj[l] - cj[k]) * stride
        axes.append(np.full(k.size, j + 1))
        a_all.append(k)
        b_all.append(l)
        c_all.append(k + shift)
        d_all.append(l - shift)
    out = tuple(np.concatenate(v).astype(np.intp) for v in (axes, a_all, b_all, c_all, d_all))
    for arr in out:
        arr.setflags(write=False)
    return out


def minor_offsets(dims):
    return _minor_offsets(_check_dims(dims))


def enumerate_minors(dims) -> list[MinorId]:
    dims = _check_dims(dims)
    axis, a, b, _, _ = _minor_offsets(dims)
    return [
        MinorId(int(j), unflatten_index(dims, ka), unflatten_index(dims, lb))
        for j, ka, lb in zip(axis, a, b)
    ]


def eval_minor(state: StateTensor, minor: MinorId) -> complex:
    j, k, l = minor
    m = state.m
    if not 1 <= j <= m or len(k) != m or len(l) != m:
        raise TensorIndexError(f"minor {minor} does not fit a {m}-partite state")
    for i, n in enumerate(state.dims):
        if not (0 <= k[i] < n and 0 <= l[i] < n):
            raise TensorIndexError(f"minor {minor} out of bounds for dims {state.dims}")
    t = state.tensor
    k_sw = list(k)
    l_sw = list(l)
    k_sw[j - 1], l_sw[j - 1] = l[j - 1], k[j - 1]
    return complex(t[tuple(k)] * t[tuple(l)] - t[tuple(k_sw)] * t[tuple(l_sw)])


def all_minors(state: StateTensor) -> np.ndarray:
    """Values of every minor in enumeration order."""
    _, a, b, c, d = minor_offsets(state.dims)
    x = state.amplitudes
    return x[a] * x[b] - x[c] * x[d]


def is_separable(state: StateTensor, tol: float = DEFAULT_TOL) -> SeparabilityReport:
    """Decide full separability on the normalized state."""
    try:
        psi = normalize(state)
    except ArgumentError:
        raise ArgumentError("separability of the zero state is undefined") from None
    values = np.abs(all_minors(psi))
    if values.size == 0:
        return SeparabilityReport(True, 0.0, None, tol)
    idx = int(np.argmax(values))
    worst = float(values[idx])
    if worst <= tol:
        return SeparabilityReport(True, worst, None, tol)
    axis, a, b, _, _ = minor_offsets(psi.dims)
    witness = MinorId(int(axis[idx]), unflatten_index(psi.dims, a[idx]), unflatten_index(psi.dims, b[idx]))
    return SeparabilityReport(False, worst, witness, tol)


def rank_one_oracle(state: StateTensor, tol: float = DEFAULT_TOL) -> bool:
    """Independent check: every single-axis unfolding has numerical rank 1."""
    if not np.any(state.amplitudes):
        raise ArgumentError("rank test of the zero state is undefined")
    if state.m == 1:
        return True
    return all(numerical_rank(matricize(state, [j]), tol) == 1 for j in range(1, state.m + 1))
