"""Multilinear maps on standard bases and their linearization through the tensor product.

A map ``V_1 x ... x V_m -> C^M`` is stored by its coefficient tensor of
shape ``(N_1, ..., N_m, M)``; evaluating it is a full contraction against
the factor vectors. The induced linear operator on ``V_1 (x) ... (x) V_m``
is the same data reshaped to ``M x prod(N_j)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ArgumentError, CapacityError
from .tensor_core import MAX_AMPLITUDES, tensor_product


@dataclass(frozen=True, eq=False)
class MultilinearMap:
    source_dims: tuple[int, ...]
    target_dim: int
    coefficients: np.ndarray

    def __post_init__(self):
        src = tuple(int(d) for d in self.source_dims)
        if not src or any(d < 1 for d in src):
            raise ArgumentError(f"invalid source dims {src}")
        tgt = int(self.target_dim)
        if tgt < 1:
            raise ArgumentError(f"invalid target dim {tgt}")
        coeff = np.array(self.coefficients, dtype=np.complex128)
        if coeff.size != tgt * math.prod(src):
            raise ArgumentError(
                f"expected {tgt * math.prod(src)} coefficients, got {coeff.size}"
            )
        coeff = coeff.reshape(src + (tgt,))
        coeff.setflags(write=False)
        object.__setattr__(self, "source_dims", src)
        object.__setattr__(self, "target_dim", tgt)
        object.__setattr__(self, "coefficients", coeff)

    def __call__(self, *factors):
        return evaluate(self, factors)


def canonical_map(dims: Sequence[int]) -> MultilinearMap:
    """The map sending basis tuple ``(e_i1, ..., e_im)`` to ``e_flat(i)``."""
    dims = tuple(dims)
    size = math.prod(dims)
    return MultilinearMap(dims, size, np.eye(size))


def zero_map(dims: Sequence[int], target_dim: int) -> MultilinearMap:
    dims = tuple(dims)
    return MultilinearMap(dims, target_dim, np.zeros(dims + (target_dim,)))


def random_map(dims: Sequence[int], target_dim: int, rng) -> MultilinearMap:
    shape = tuple(dims) + (target_dim,)
    coeff = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return MultilinearMap(tuple(dims), target_dim, coeff)


def _as_factors(factors, dims):
    factors = [np.asarray(f, dtype=np.complex128).reshape(-1) for f in factors]
    if len(factors) != len(dims):
        raise ArgumentError(f"expected {len(dims)} factors, got {len(factors)}")
    for j, (f, n) in enumerate(zip(factors, dims)):
        if f.size != n:
            raise ArgumentError(f"factor {j + 1} has length {f.size}, expected {n}")
    return factors


def evaluate(mlmap: MultilinearMap, factors) -> np.ndarray:
    factors = _as_factors(factors, mlmap.source_dims)
    out = mlmap.coefficients
    for f in factors:
        # contract the leading source axis each time
        out = np.tensordot(f, out, axes=(0, 0))
    return out


def check_multilinearity(mlmap, trials: int = 10, seed=0, tol: float = 1e-12, dims=None):
    """Probe the m-linearity identity slot by slot with random data.

    ``mlmap`` is a :class:`MultilinearMap` or any callable taking the m
    factor vectors (then ``dims`` must give the source dimensions).
    Returns ``{"max_violation": float, "passed": bool}``.
    """
    if trials < 1:
        raise ArgumentError("trials must be >= 1")
    if isinstance(mlmap, MultilinearMap):
        dims = mlmap.source_dims
        fn: Callable = lambda *fs: evaluate(mlmap, fs)
    else:
        if dims is None:
            raise ArgumentError("dims is required for a black-box evaluator")
        dims = tuple(dims)
        fn = mlmap
    rng = np.random.default_rng(seed)

    def rvec(n):
        return rng.standard_normal(n) + 1j * rng.standard_normal(n)

    worst = 0.0
    for _ in range(trials):
        base = [rvec(n) for n in dims]
        for j, n in enumerate(dims):
            psi, phi = base[j], rvec(n)
            lam, mu = rvec(2)
            mixed = base[:j] + [lam * psi + mu * phi] + base[j + 1:]
            with_psi = base[:j] + [psi] + base[j + 1:]
            with_phi = base[:j] + [phi] + base[j + 1:]
            lhs = np.asarray(fn(*mixed))
            rhs = lam * np.asarray(fn(*with_psi)) + mu * np.asarray(fn(*with_phi))
            worst = max(worst, float(np.max(np.abs(lhs - rhs), initial=0.0)))
    return {"max_violation": worst, "passed": worst <= tol}


def induced_linear(mlmap: MultilinearMap) -> np.ndarray:
    """Operator ``Theta`` with ``evaluate(map, fs) == Theta @ tensor_product(fs)``."""
    size = math.prod(mlmap.source_dims)
    return mlmap.coefficients.reshape(size, mlmap.target_dim).T.copy()


def factorization_residual(mlmap: MultilinearMap, factors) -> float:
    """Entrywise gap between the two paths of the commutative diagram."""
    direct = evaluate(mlmap, factors)
    via_tensor = induced_linear(mlmap) @ tensor_product(factors).amplitudes
    return float(np.max(np.abs(direct - via_tensor)))


def numerical_rank(matrix: np.ndarray, tol: float = 1e-10) -> int:
    """Count singular values above ``tol * sigma_max``."""
    if matrix.size == 0:
        return 0
    sv = np.linalg.svd(matrix, compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.count_nonzero(sv > tol * sv[0]))


def tensor_product_criteria(mlmap: MultilinearMap, tol: float = 1e-10) -> dict:
    """Check whether ``mlmap`` is a tensor product of its source spaces.

    Condition I (image spans the target) is surjectivity of the induced
    operator; condition II (universal factorization) is its injectivity.
    """
    size = math.prod(mlmap.source_dims)
    if size * mlmap.target_dim > MAX_AMPLITUDES:
        raise CapacityError(f"induced operator has {size * mlmap.target_dim} entries")
    rank = numerical_rank(induced_linear(mlmap), tol)
    return {
        "condition_I": rank == mlmap.target_dim,
        "condition_II": rank == size,
        "rank": rank,
    }


def map_add(psi: MultilinearMap, phi: MultilinearMap) -> MultilinearMap:
    if psi.source_dims != phi.source_dims or psi.target_dim != phi.target_dim:
        raise ArgumentError("maps must share source dims and target dim")
    return MultilinearMap(psi.source_dims, psi.target_dim, psi.coefficients + phi.coefficients)


def map_scale(lam, psi: MultilinearMap) -> MultilinearMap:
    return MultilinearMap(psi.source_dims, psi.target_dim, lam * psi.coefficients)


def operator_tensor(ops) -> np.ndarray:
    """Kronecker product of square operators, consistent with the state index order."""
    ops = [np.asarray(op, dtype=np.complex128) for op in ops]
    if not ops:
        raise ArgumentError("operator_tensor needs at least one operator")
    for j, op in enumerate(ops):
        if op.ndim != 2 or op.shape[0] != op.shape[1]:
            raise ArgumentError(f"operator {j + 1} is not square: shape {op.shape}")
    if math.prod(op.shape[0] for op in ops) ** 2 > MAX_AMPLITUDES * 16:
        raise CapacityError("operator tensor product too large")
    out = ops[0]
    for op in ops[1:]:
        out = np.kron(out, op)
    return out
