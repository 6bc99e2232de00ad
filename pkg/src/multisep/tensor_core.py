"""Dense multipartite pure-state tensors.

Amplitudes are stored flat in row-major order with the last factor
index running fastest::

    offset = i_1*N_2*...*N_m + ... + i_{m-1}*N_m + i_m

Every other module, and the on-disk formats, use this same order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    ArgumentError,
    CapacityError,
    DimensionError,
    NormalizationError,
    TensorIndexError,
)

MAX_AMPLITUDES = 2**20


def _check_dims(dims) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if len(dims) == 0:
        raise ArgumentError("dims must be nonempty")
    if any(d < 1 for d in dims):
        raise DimensionError(f"every factor dimension must be >= 1, got {dims}")
    if math.prod(dims) > MAX_AMPLITUDES:
        raise CapacityError(
            f"state of size {math.prod(dims)} exceeds the limit of {MAX_AMPLITUDES} amplitudes"
        )
    return dims


@dataclass(frozen=True, eq=False)
class StateTensor:
    """Complex amplitude array over the factor dimensions ``dims``.

    Not normalized on construction. ``amplitudes`` is a read-only flat
    complex128 array; ``tensor`` gives the same data shaped as ``dims``.
    """

    dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self):
        dims = _check_dims(self.dims)
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size != math.prod(dims):
            raise DimensionError(
                f"expected {math.prod(dims)} amplitudes for dims {dims}, got {amps.size}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def m(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return self.amplitudes.size

    @property
    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape(self.dims)

    def __repr__(self):
        return f"StateTensor(dims={list(self.dims)}, amplitudes={self.amplitudes!r})"


def make_state(dims: Sequence[int], amplitudes) -> StateTensor:
    return StateTensor(tuple(dims), amplitudes)


def basis_state(dims: Sequence[int], index: Sequence[int]) -> StateTensor:
    dims = _check_dims(dims)
    amps = np.zeros(math.prod(dims), dtype=np.complex128)
    amps[flatten_index(dims, index)] = 1.0
    return StateTensor(dims, amps)


def flatten_index(dims: Sequence[int], index: Sequence[int]) -> int:
    dims = tuple(dims)
    index = tuple(int(i) for i in index)
    if len(index) != len(dims):
        raise TensorIndexError(f"multi-index {index} has length {len(index)}, expected {len(dims)}")
    offset = 0
    for j, (i, n) in enumerate(zip(index, dims)):
        if not 0 <= i < n:
            raise TensorIndexError(f"index {i} out of range for factor {j + 1} of dimension {n}")
        offset = offset * n + i
    return offset


def unflatten_index(dims: Sequence[int], offset: int) -> tuple[int, ...]:
    dims = tuple(dims)
    offset = int(offset)
    if not 0 <= offset < math.prod(dims):
        raise TensorIndexError(f"offset {offset} out of range for dims {dims}")
    index = []
    for n in reversed(dims):
        offset, i = divmod(offset, n)
        index.append(i)
    return tuple(reversed(index))


def tensor_product(factors) -> StateTensor:
    """Product state with amplitudes ``prod_j factors[j][i_j]``."""
    factors = [np.asarray(f, dtype=np.complex128).reshape(-1) for f in factors]
    if not factors:
        raise ArgumentError("tensor_product needs at least one factor")
    dims = _check_dims(f.size for f in factors)
    out = factors[0]
    for f in factors[1:]:
        out = np.outer(out, f).reshape(-1)
    return StateTensor(dims, out)


def _check_axes(m: int, axes) -> tuple[int, ...]:
    """Validate a 1-based axis subset and return it sorted, 0-based."""
    try:
        axes = sorted({int(a) for a in axes})
    except TypeError:
        raise ArgumentError("axes must be an iterable of integers") from None
    if not axes:
        raise ArgumentError("axis subset must be nonempty")
    if len(axes) == m:
        raise ArgumentError("axis subset must be a proper subset of the factors")
    if axes[0] < 1 or axes[-1] > m:
        raise ArgumentError(f"axes must lie in 1..{m}, got {axes}")
    return tuple(a - 1 for a in axes)


def matricize(state: StateTensor, row_axes) -> np.ndarray:
    """Unfold ``state`` with the 1-based ``row_axes`` as the row index.

    Rows and columns are each ordered row-major over their own axis group.
    """
    rows = _check_axes(state.m, row_axes)
    cols = tuple(a for a in range(state.m) if a not in rows)
    nrows = math.prod(state.dims[a] for a in rows)
    return np.transpose(state.tensor, rows + cols).reshape(nrows, -1)


def norm(state: StateTensor) -> float:
    return float(np.linalg.norm(state.amplitudes))


def normalize(state: StateTensor) -> StateTensor:
    nrm = norm(state)
    if nrm == 0.0 or not np.isfinite(nrm):
        raise NormalizationError("cannot normalize a zero (or non-finite) state")
    return StateTensor(state.dims, state.amplitudes / nrm)


def block_decompose(state: StateTensor, partitions):
    """Split ``state`` along per-factor partitions of the basis indices.

    ``partitions[j]`` is a list of index classes covering ``range(N_j)``
    disjointly. Returns ``[(label, component), ...]`` with one entry per
    label tuple in row-major label order; each component keeps the
    amplitudes inside its block and zeros elsewhere, so the components
    sum to ``state`` exactly.
    """
    if len(partitions) != state.m:
        raise ArgumentError(f"need one partition per factor ({state.m}), got {len(partitions)}")
    owner = []  # owner[j][i] = class label of basis index i in factor j
    for j, (classes, n) in enumerate(zip(partitions, state.dims)):
        lab = np.full(n, -1)
        for r, cls in enumerate(classes):
            for i in cls:
                i = int(i)
                if not 0 <= i < n:
                    raise ArgumentError(f"factor {j + 1}: index {i} outside 0..{n - 1}")
                if lab[i] != -1:
                    raise ArgumentError(f"factor {j + 1}: index {i} appears in two classes")
                lab[i] = r
        if (lab == -1).any():
            missing = np.flatnonzero(lab == -1).tolist()
            raise ArgumentError(f"factor {j + 1}: indices {missing} not covered")
        owner.append(lab)

    tensor = state.tensor
    blocks = []
    for label in np.ndindex(*(len(p) for p in partitions)):
        mask = np.ones(state.dims, dtype=bool)
        for j, r in enumerate(label):
            shape = [1] * state.m
            shape[j] = state.dims[j]
            mask = mask & (owner[j] == r).reshape(shape)
        blocks.append((label, StateTensor(state.dims, np.where(mask, tensor, 0))))
    return blocks
