"""Convex-roof concurrence of mixed states.

Every size-``n`` pure decomposition of ``rho = sum_k lam_k |v_k><v_k|``
comes from an ``n x r`` isometry ``U`` via
``|phi_i> = sum_k conj(U[i, k]) sqrt(lam_k) |v_k>``, ``p_i = <phi_i|phi_i>``.
The roof is estimated by a derivative-free local search over ``U``,
written as a product of two-row complex rotations, from several starts.

Because every minor is quadratic in the amplitudes,
``p_i * C(phi_i / sqrt(p_i)) = C_raw(phi_i)`` where ``C_raw`` is the
concurrence formula applied without normalization. The search works on
the unnormalized rows directly and only touches the two rows a rotation
mixes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .concurrence import ConcurrenceConfig, DEFAULT_CONFIG, concurrence_pure
from .errors import ArgumentError, CapacityError, ValidationError
from .separability import minor_offsets
from .tensor_core import StateTensor, _check_dims

MAX_DIM = 64
RANK_CUTOFF = 1e-12
DROP_WEIGHT = 1e-14


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    dims: tuple[int, ...]
    matrix: np.ndarray
    herm_tol: float = 1e-12
    psd_tol: float = 1e-10
    trace_tol: float = 1e-12

    def __post_init__(self):
        dims = _check_dims(self.dims)
        size = math.prod(dims)
        mat = np.array(self.matrix, dtype=np.complex128)
        if mat.size != size * size:
            raise ValidationError(f"expected a {size}x{size} matrix for dims {dims}, got {mat.size} entries")
        mat = mat.reshape(size, size)
        if np.max(np.abs(mat - mat.conj().T)) > self.herm_tol:
            raise ValidationError("density matrix is not Hermitian")
        if abs(np.trace(mat) - 1) > self.trace_tol:
            raise ValidationError(f"density matrix trace is {np.trace(mat).real}, expected 1")
        if np.linalg.eigvalsh(mat)[0] < -self.psd_tol:
            raise ValidationError("density matrix is not positive semidefinite")
        mat.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def from_pure(cls, state: StateTensor):
        psi = state.amplitudes / np.linalg.norm(state.amplitudes)
        return cls(state.dims, np.outer(psi, psi.conj()))

    @classmethod
    def from_ensemble(cls, dims, weights, states):
        dims = tuple(dims)
        size = math.prod(dims)
        rho = np.zeros((size, size), dtype=np.complex128)
        for p, s in zip(weights, states):
            v = s.amplitudes if isinstance(s, StateTensor) else np.asarray(s, dtype=np.complex128)
            v = v / np.linalg.norm(v)
            rho += p * np.outer(v, v.conj())
        rho = 0.5 * (rho + rho.conj().T)
        return cls(dims, rho / np.trace(rho).real)


@dataclass
class Ensemble:
    weights: np.ndarray
    states: list

    def mixture(self) -> np.ndarray:
        size = self.states[0].size
        rho = np.zeros((size, size), dtype=np.complex128)
        for p, s in zip(self.weights, self.states):
            rho += p * np.outer(s.amplitudes, s.amplitudes.conj())
        return rho


@dataclass(frozen=True)
class RoofConfig:
    ensemble_size: Optional[int] = None  # default: rank + 2
    restarts: int = 32
    max_iters: int = 500  # sweeps over all row pairs
    seed: int = 0
    initial_step: float = 0.5
    shrink: float = 0.5
    grow: float = 1.5
    min_step: float = 1e-5
    ftol: float = 1e-9  # sweep gains below this count as no progress
    concurrence: ConcurrenceConfig = DEFAULT_CONFIG


@dataclass
class RoofResult:
    value: float
    ensemble: Ensemble
    restart: int
    sweeps: int
    restart_values: np.ndarray = field(repr=False)


def spectral(rho: DensityMatrix):
    """Eigenpairs above the rank cutoff, largest eigenvalue first."""
    lam, vec = np.linalg.eigh(rho.matrix)
    order = np.argsort(-lam, kind="stable")
    lam, vec = lam[order], vec[:, order]
    keep = lam > RANK_CUTOFF * lam[0]
    return lam[keep], vec[:, keep]


def _scaled_rows(rho: DensityMatrix) -> np.ndarray:
    lam, vec = spectral(rho)
    return np.sqrt(lam)[:, None] * vec.T


def _ensemble_from_rows(dims, rows: np.ndarray) -> Ensemble:
    weights = np.real(np.einsum("ij,ij->i", rows.conj(), rows))
    keep = weights > DROP_WEIGHT
    states = [StateTensor(dims, r / math.sqrt(w)) for r, w in zip(rows[keep], weights[keep])]
    return Ensemble(weights[keep], states)


def pure_decomposition(rho: DensityMatrix, isometry) -> Ensemble:
    u = np.atleast_2d(np.asarray(isometry, dtype=np.complex128))
    base = _scaled_rows(rho)
    r = base.shape[0]
    if u.shape[1] != r:
        raise ArgumentError(f"isometry has {u.shape[1]} columns, but rank(rho) = {r}")
    if u.shape[0] < r or np.max(np.abs(u.conj().T @ u - np.eye(r))) > 1e-10:
        raise ArgumentError("U is not an isometry (U^dagger U != I)")
    return _ensemble_from_rows(rho.dims, u.conj() @ base)


def random_isometry(n: int, r: int, rng) -> np.ndarray:
    z = rng.standard_normal((n, r)) + 1j * rng.standard_normal((n, r))
    q, rr = np.linalg.qr(z)
    return q * (np.diag(rr) / np.abs(np.diag(rr)))


def distinct_minors(dims):
    """Collapse the enumerated minors to distinct ones with multiplicities.

    ``S = x[a]x[b] - x[c]x[d]`` and its sign flip share a key; minors whose
    two products coincide vanish identically and are dropped. Returns
    ``(a, b, c, d, weight)`` with ``sum weight * |S|^2`` equal to the full
    enumerated sum.
    """
    _, a, b, c, d = minor_offsets(dims)
    p1 = np.sort(np.stack([a, b]), axis=0)
    p2 = np.sort(np.stack([c, d]), axis=0)
    swap = (p1[0] > p2[0]) | ((p1[0] == p2[0]) & (p1[1] > p2[1]))
    lo = np.where(swap, p2, p1)
    hi = np.where(swap, p1, p2)
    nontrivial = (lo != hi).any(axis=0)
    keys = np.stack([lo[0], lo[1], hi[0], hi[1]], axis=1)[nontrivial]
    uniq, counts = np.unique(keys, axis=0, return_counts=True)
    return uniq[:, 0], uniq[:, 1], uniq[:, 2], uniq[:, 3], counts.astype(float)


class _RawConcurrence:
    """Unnormalized concurrence over the trailing axis of a batch of rows."""

    def __init__(self, dims, normalization):
        self.a, self.b, self.c, self.d, weight = distinct_minors(dims)
        self.weight = normalization * weight

    def __call__(self, rows):
        s = rows[..., self.a] * rows[..., self.b] - rows[..., self.c] * rows[..., self.d]
        return np.sqrt((s.real**2 + s.imag**2) @ self.weight)


# rotation generators tried at every pair: real, imaginary, and two diagonal phases
_PHASES = np.exp(1j * np.pi * np.array([0.0, 0.5, 0.25, 0.75]))


def _rounds(n: int):
    """Round-robin schedule: each round is a set of disjoint row pairs covering all pairs once."""
    players = list(range(n)) + ([None] if n % 2 else [])
    half = len(players) // 2
    rounds = []
    for _ in range(len(players) - 1):
        pairs = [(players[t], players[-1 - t]) for t in range(half)]
        pairs = sorted((min(a, b), max(a, b)) for a, b in pairs if a is not None and b is not None)
        if pairs:
            rounds.append((np.array([a for a, _ in pairs]), np.array([b for _, b in pairs])))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _search(rows, raw, cfg: RoofConfig):
    """Batched coordinate descent; ``rows`` has shape (restarts, n, D).

    Disjoint row pairs are rotated simultaneously, so one round costs a
    single batched objective call.
    """
    nrest, n, _ = rows.shape
    vals = raw(rows)
    step = np.full(nrest, cfg.initial_step)
    rounds = _rounds(n)
    signs = np.repeat([1.0, -1.0], len(_PHASES))
    phases = np.tile(_PHASES, 2)[None, None, :, None]
    sweeps = 0
    for sweeps in range(1, cfg.max_iters + 1):
        active = step >= cfg.min_step
        if not active.any():
            sweeps -= 1
            break
        before = vals.sum(axis=1)
        theta = signs[None, :] * step[:, None]
        cs = np.cos(theta)[:, None, :, None]  # (R, 1, C, 1)
        sn = np.sin(theta)[:, None, :, None]
        for ii, jj in rounds:
            ri = rows[:, ii, None, :]  # (R, P, 1, D)
            rj = rows[:, jj, None, :]
            new_i = cs * ri - sn * np.conj(phases) * rj
            new_j = sn * phases * ri + cs * rj
            cand = raw(new_i) + raw(new_j)  # (R, P, C)
            best = np.argmin(cand, axis=2)[..., None]
            best_val = np.take_along_axis(cand, best, axis=2)[..., 0]
            gain = vals[:, ii] + vals[:, jj] - best_val
            take = active[:, None] & (gain > 1e-15 * (1.0 + best_val))
            if take.any():
                bi = np.take_along_axis(new_i, best[..., None], axis=2)[:, :, 0]
                bj = np.take_along_axis(new_j, best[..., None], axis=2)[:, :, 0]
                rows[:, ii] = np.where(take[..., None], bi, rows[:, ii])
                rows[:, jj] = np.where(take[..., None], bj, rows[:, jj])
                vals[:, ii] = np.where(take, raw(rows[:, ii]), vals[:, ii])
                vals[:, jj] = np.where(take, raw(rows[:, jj]), vals[:, jj])
        progressed = before - vals.sum(axis=1) > cfg.ftol
        step = np.where(progressed, np.minimum(step * cfg.grow, np.pi / 4), step * cfg.shrink)
        step = np.where(active, step, 0.0)
    return rows, vals.sum(axis=1), sweeps


def convex_roof_concurrence(rho: DensityMatrix, config: RoofConfig = RoofConfig()) -> RoofResult:
    """Upper estimate of the roof ``inf sum_i p_i C(psi_i)`` over pure decompositions.

    Restart 0 starts from the eigen-ensemble, the rest from random
    isometries drawn from ``config.seed``. The minimum over restarts wins,
    ties going to the lowest restart index.
    """
    if not isinstance(rho, DensityMatrix):
        raise ArgumentError("rho must be a DensityMatrix")
    size = rho.matrix.shape[0]
    if size > MAX_DIM:
        raise CapacityError(f"dimension {size} exceeds the roof limit of {MAX_DIM}")
    if config.restarts < 1:
        raise ArgumentError("restarts must be >= 1")
    base = _scaled_rows(rho)
    r = base.shape[0]
    n = config.ensemble_size if config.ensemble_size is not None else r + 2
    if n < r:
        raise ArgumentError(f"ensemble size {n} is below rank(rho) = {r}")
    rng = np.random.default_rng(config.seed)
    isos = [np.eye(n, r, dtype=np.complex128)]
    isos += [random_isometry(n, r, rng) for _ in range(config.restarts - 1)]
    rows = np.stack([u.conj() @ base for u in isos])
    raw = _RawConcurrence(rho.dims, config.concurrence.normalization)
    rows, totals, sweeps = _search(rows, raw, config)
    winner = int(np.argmin(totals))
    ensemble = _ensemble_from_rows(rho.dims, rows[winner])
    value = float(sum(p * concurrence_pure(s, config.concurrence) for p, s in zip(ensemble.weights, ensemble.states)))
    return RoofResult(value, ensemble, winner, sweeps, totals)


_YY = np.array([[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=np.complex128)


def wootters_concurrence(rho: DensityMatrix) -> float:
    """Closed-form two-qubit mixed-state concurrence."""
    if rho.dims != (2, 2):
        raise ArgumentError(f"Wootters concurrence needs dims (2, 2), got {rho.dims}")
    lam, vec = np.linalg.eigh(rho.matrix)
    sqrt_rho = (vec * np.sqrt(np.clip(lam, 0, None))) @ vec.conj().T
    flipped = _YY @ rho.matrix.conj() @ _YY
    m = sqrt_rho @ flipped @ sqrt_rho
    ev = np.sqrt(np.clip(np.linalg.eigvalsh(0.5 * (m + m.conj().T)), 0, None))[::-1]
    return float(max(0.0, ev[0] - ev[1] - ev[2] - ev[3]))
