"""Minimal-length product expansions across a bipartite cut.

Starting from the column expansion of the unfolded state, dependent
factors are merged away one at a time: if ``left[k] = sum_i g_i left[i]``
then ``left[k] (x) right[k]`` is absorbed through
``right[i] += g_i * right[k]`` and term ``k`` is dropped. The same is done
with the roles swapped until both factor lists are independent, at which
point the length equals the Schmidt rank.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError
from .multilinear import numerical_rank
from .tensor_core import StateTensor, _check_axes, matricize

DEFAULT_TOL = 1e-10


@dataclass
class Decomposition:
    dims: tuple[int, ...]
    cut: tuple[int, ...]  # 1-based row axes
    left: np.ndarray  # shape (prod cut dims, k), one factor per column
    right: np.ndarray  # shape (prod complement dims, k)
    steps: list = field(default_factory=list, repr=False)

    @property
    def rank(self) -> int:
        return self.left.shape[1]


def pivoted_independent(vectors: np.ndarray, tol: float = DEFAULT_TOL):
    """Column-pivoted Gram-Schmidt elimination.

    Returns ``(independent, dependent)`` lists of column indices. The pivot
    is the largest remaining residual norm (ties to the lowest index); a
    column is dependent once its residual falls to ``tol`` times the
    largest original column norm.
    """
    if vectors.shape[1] == 0:
        return [], []
    resid = np.array(vectors, dtype=np.complex128)
    scale = float(np.max(np.linalg.norm(resid, axis=0)))
    remaining = list(range(resid.shape[1]))
    chosen = []
    threshold = tol * scale
    while remaining:
        norms = np.linalg.norm(resid[:, remaining], axis=0)
        best = int(np.argmax(norms))
        if norms[best] <= threshold:
            break
        p = remaining.pop(best)
        q = resid[:, p] / norms[best]
        chosen.append(p)
        for c in remaining:
            resid[:, c] -= q * np.vdot(q, resid[:, c])
    return sorted(chosen), remaining


def merge_step(left: np.ndarray, right: np.ndarray, dependent: int, basis: list[int]):
    """Absorb term ``dependent`` into the terms in ``basis``.

    ``left[:, dependent]`` is expanded over ``left[:, basis]`` by least
    squares; the returned pair has one fewer column.
    """
    gamma, *_ = np.linalg.lstsq(left[:, basis], left[:, dependent], rcond=None)
    right = right.copy()
    right[:, basis] += right[:, [dependent]] * gamma[None, :]
    keep = [c for c in range(left.shape[1]) if c != dependent]
    return left[:, keep], right[:, keep]


def _reduce(left, right, tol, log):
    """Merge dependent left factors; returns updated pair and whether anything changed."""
    independent, dependent = pivoted_independent(left, tol)
    if not dependent:
        return left, right, False
    k = dependent[0]
    log.append(("left", left.shape[1]))
    left, right = merge_step(left, right, k, independent)
    return left, right, True


def minimal_decomposition(state: StateTensor, cut, tol: float = DEFAULT_TOL) -> Decomposition:
    if not np.any(state.amplitudes):
        raise ArgumentError("zero state has no minimal decomposition")
    rows = tuple(a + 1 for a in _check_axes(state.m, cut))
    mat = matricize(state, rows)
    ncols = mat.shape[1]
    # basis expansion: state = sum_c mat[:, c] (x) e_c over nonzero columns
    nz = [c for c in range(ncols) if np.any(mat[:, c])]
    left = mat[:, nz]
    right = np.eye(ncols, dtype=np.complex128)[:, nz]
    log: list = []
    while True:
        left, right, changed_l = _reduce(left, right, tol, log)
        right, left, changed_r = _reduce(right, left, tol, log)
        if not (changed_l or changed_r):
            break
    return Decomposition(state.dims, rows, left, right, log)


def rank_oracle(state: StateTensor, cut, tol: float = DEFAULT_TOL) -> int:
    if not np.any(state.amplitudes):
        raise ArgumentError("zero state has no Schmidt rank")
    return numerical_rank(matricize(state, cut), tol)


def reconstruct(dec: Decomposition) -> StateTensor:
    rows = tuple(a - 1 for a in dec.cut)
    cols = tuple(a for a in range(len(dec.dims)) if a not in rows)
    nrow = math.prod(dec.dims[a] for a in rows)
    ncol = math.prod(dec.dims[a] for a in cols)
    if dec.left.shape[0] != nrow or dec.right.shape[0] != ncol or dec.left.shape[1] != dec.right.shape[1]:
        raise ArgumentError("factor shapes do not match the cut")
    mat = dec.left @ dec.right.T
    perm_shape = tuple(dec.dims[a] for a in rows + cols)
    tensor = np.transpose(mat.reshape(perm_shape), np.argsort(rows + cols))
    return StateTensor(dec.dims, tensor.reshape(-1))


def orthogonalize(dec: Decomposition) -> Decomposition:
    """Schmidt form of the same tensor: orthonormal left factors, orthogonal right factors."""
    q, r = np.linalg.qr(dec.left)
    u, s, vh = np.linalg.svd(r @ dec.right.T, full_matrices=False)
    k = dec.rank
    return Decomposition(dec.dims, dec.cut, (q @ u)[:, :k], (s[:k, None] * vh[:k]).T)
