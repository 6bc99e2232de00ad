"""Acceptance gate: one check per exit criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines, or
``python tests/test_acceptance.py`` for a standalone report.
"""
import contextlib
import io
import json
import math
import os
import sys
import tempfile
import time

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from multisep import (  # noqa: E402
    DensityMatrix,
    KetSemanticError,
    KetSyntaxError,
    RoofConfig,
    canonical_map,
    concurrence_pure,
    convex_roof_concurrence,
    format_ket,
    is_separable,
    linear_entropy_concurrence,
    make_state,
    minimal_decomposition,
    parse_ket,
    rank_oracle,
    rank_one_oracle,
    read_state,
    reconstruct,
    tensor_product,
    tensor_product_criteria,
    wootters_concurrence,
)
from multisep.cli import main as cli_main  # noqa: E402
from multisep.errors import CapacityError  # noqa: E402
from multisep.multilinear import factorization_residual, random_map  # noqa: E402
from oracles import brute_minors  # noqa: E402

SQ2 = 1 / math.sqrt(2)


def crandn(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def unit(v):
    return v / np.linalg.norm(v)


def report(name, ok, detail, elapsed):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail} ({elapsed:.2f} s)")
    return ok


def timed(fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t0


# 1 -------------------------------------------------------------------------
def two_qubit_closed_form():
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(1000):
        s = make_state([2, 2], unit(crandn(rng, 4)))
        a = s.amplitudes
        worst = max(worst, abs(concurrence_pure(s) - 2 * abs(a[0] * a[3] - a[1] * a[2])))
    bell = concurrence_pure(make_state([2, 2], [SQ2, 0, 0, SQ2]))
    ok = worst <= 1e-12 and f"{bell:.12f}" == "1.000000000000"
    return ok, f"max deviation {worst:.2e}, Bell = {bell:.12f}"


# 2 -------------------------------------------------------------------------
def bipartite_oracle():
    rng = np.random.default_rng(202)
    worst = 0.0
    for _ in range(500):
        n1, n2 = (int(x) for x in rng.integers(1, 8, size=2))
        s = make_state([n1, n2], unit(crandn(rng, n1 * n2)))
        worst = max(worst, abs(concurrence_pure(s) - linear_entropy_concurrence(s, [1])))
    return worst <= 1e-10, f"max |C - sqrt(2(1 - Tr rho_A^2))| = {worst:.2e}"


# 3 -------------------------------------------------------------------------
SEP_DIMS = [[2, 2], [3, 3], [2, 2, 2], [2, 3, 4], [8, 8], [2, 2, 2, 2], [3, 3, 3], [4, 4, 4, 4], [2] * 8]


def normal_perturbation(rng, factors, eps):
    """Random direction orthogonal to the product manifold's tangent space at ``factors``."""
    cols = []
    for j, n in enumerate(f.size for f in factors):
        for e in np.eye(n):
            cols.append(tensor_product(factors[:j] + [e] + factors[j + 1:]).amplitudes)
    u, s, _ = np.linalg.svd(np.array(cols).T, full_matrices=False)
    q = u[:, s > 1e-10 * s[0]]
    g = crandn(rng, q.shape[0])
    g -= q @ (q.conj().T @ g)
    return eps * unit(g)


def separability_rank_one():
    rng = np.random.default_rng(303)
    eps = 1e-6
    mismatches = 0
    ratios = []
    for trial in range(1000):
        dims = SEP_DIMS[trial % len(SEP_DIMS)]
        kind = (trial // len(SEP_DIMS)) % 3
        factors = [unit(crandn(rng, n)) for n in dims]
        if kind == 0:
            s = tensor_product(factors)
        elif kind == 1:
            s = make_state(dims, unit(crandn(rng, math.prod(dims))))
        else:
            s = make_state(dims, tensor_product(factors).amplitudes + normal_perturbation(rng, factors, eps))
        rep = is_separable(s, 1e-10)
        if rep.separable != rank_one_oracle(s, 1e-10):
            mismatches += 1
        if kind == 2:
            ratios.append(rep.max_abs_minor / eps)
    ratios = np.array(ratios)
    ok = mismatches == 0 and ratios.min() >= 1e-2 and ratios.max() <= 1e2
    return ok, f"{mismatches} disagreements; perturbed max|S|/eps in [{ratios.min():.3f}, {ratios.max():.3f}]"


# 4 -------------------------------------------------------------------------
def multipartite_regressions():
    ghz_o = brute_minors.concurrence(*brute_minors.GHZ3)
    w_o = brute_minors.concurrence(*brute_minors.W3)
    oracle_ok = abs(ghz_o - math.sqrt(1.5)) <= 1e-14 and abs(w_o - math.sqrt(4 / 3)) <= 1e-14
    ghz = make_state(*brute_minors.GHZ3)
    w = make_state(*brute_minors.W3)
    c_ghz, c_w = concurrence_pure(ghz), concurrence_pure(w)
    r_ghz, r_w = is_separable(ghz), is_separable(w)
    ok = (
        oracle_ok
        and abs(c_ghz - math.sqrt(1.5)) <= 1e-12
        and abs(c_w - math.sqrt(4 / 3)) <= 1e-12
        and not r_ghz.separable
        and not r_w.separable
        and abs(r_ghz.max_abs_minor - 0.5) <= 1e-12
        and abs(r_w.max_abs_minor - 1 / 3) <= 1e-12
    )
    return ok, (
        f"GHZ3 C = {c_ghz:.15f} (oracle {ghz_o:.15f}), W C = {c_w:.15f} (oracle {w_o:.15f}), "
        f"witness |S| = {r_ghz.max_abs_minor:.6f}, {r_w.max_abs_minor:.6f}"
    )


# 5 -------------------------------------------------------------------------
def minimal_decompositions():
    rng = np.random.default_rng(505)
    bad = 0
    worst = 0.0
    for _ in range(500):
        n1, n2 = (int(x) for x in rng.integers(1, 9, size=2))
        r = int(rng.integers(1, min(n1, n2, 6) + 1))
        mat = crandn(rng, n1, r) @ crandn(rng, n2, r).T
        s = make_state([n1, n2], mat.reshape(-1))
        dec = minimal_decomposition(s, [1])
        if not dec.rank == r == rank_oracle(s, [1]):
            bad += 1
        res = np.linalg.norm(reconstruct(dec).amplitudes - s.amplitudes) / np.linalg.norm(s.amplitudes)
        worst = max(worst, res)
    return bad == 0 and worst <= 1e-10, f"{bad} rank mismatches, max relative residual {worst:.2e}"


# 6 -------------------------------------------------------------------------
def universal_property():
    rng = np.random.default_rng(606)
    worst = 0.0
    for _ in range(100):
        m = int(rng.integers(1, 4))
        dims = [int(x) for x in rng.integers(1, 5, size=m)]
        mlmap = random_map(dims, int(rng.integers(1, 17)), rng)
        for _ in range(100):
            worst = max(worst, factorization_residual(mlmap, [crandn(rng, n) for n in dims]))
    canon = all(
        tensor_product_criteria(canonical_map(d)) == {"condition_I": True, "condition_II": True, "rank": math.prod(d)}
        for d in ([2, 2], [3, 2, 4], [4, 4, 4])
    )
    return worst <= 1e-10 and canon, f"max factorization residual {worst:.2e}, canonical map criteria {canon}"


# 7 -------------------------------------------------------------------------
PHI = np.array([SQ2, 0, 0, SQ2])


def roof_vs_wootters():
    cfg = RoofConfig(ensemble_size=6, restarts=32, max_iters=500, seed=2026)
    werner_gap = 0.0
    for p in (0.4, 0.6, 0.8, 1.0):
        rho = DensityMatrix((2, 2), p * np.outer(PHI, PHI) + (1 - p) * np.eye(4) / 4)
        value = convex_roof_concurrence(rho, cfg).value
        werner_gap = max(werner_gap, abs(value - max(0.0, (3 * p - 1) / 2)))
    rng = np.random.default_rng(707)
    below = 0
    close = 0
    for _ in range(50):
        rank = int(rng.integers(1, 5))
        a = crandn(rng, 4, rank)
        rho = a @ a.conj().T
        rho = DensityMatrix((2, 2), rho / np.trace(rho).real)
        value = convex_roof_concurrence(rho, RoofConfig(restarts=32, max_iters=500, seed=2026)).value
        target = wootters_concurrence(rho)
        below += value < target - 1e-6
        close += abs(value - target) <= 2e-2
    ok = werner_gap <= 2e-2 and below == 0 and close >= 45
    return ok, f"Werner max gap {werner_gap:.2e}; random: {below} below Wootters, {close}/50 within 2e-2"


# 8 -------------------------------------------------------------------------
def _cli(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(list(argv))
    return code, buf.getvalue()


FUZZ_ALPHABET = b"0123456789|<>,.+-*()ie \t"
FUZZ_DIMS = ([2, 2], [3], [12, 4], [2, 2, 2])


def cli_round_trip():
    rng = np.random.default_rng(808)
    exprs = [
        ("2,2", "0.70710678|00> + 0.70710678|11>"),
        ("2,2,2", "|000> + |111>"),
        ("2,2,2", "|001> + |010> + |100>"),
        ("3,2", "(0.5-0.25i)|2,1> - 2i*|0,0> + 0.125|1,1>"),
    ]
    for dims in ([2, 3], [2, 2, 2], [3, 4]):
        exprs.append((",".join(map(str, dims)), format_ket(make_state(dims, crandn(rng, math.prod(dims))))))
    mismatches = 0
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "state.json")
        for dims_text, expr in exprs:
            dims = [int(d) for d in dims_text.split(",")]
            assert _cli("parse", "--dims", dims_text, "--expr", expr, "--out", path)[0] == 0
            lib_state = parse_ket(expr, dims)
            file_state = read_state(path)
            same_state = np.array_equal(file_state.amplitudes, lib_state.amplitudes)
            rep = is_separable(lib_state)
            code, out = _cli("--json", "separable", "--in", path)
            sep = json.loads(out)
            _, out = _cli("--json", "concurrence", "--in", path)
            conc = json.loads(out)
            if not (
                same_state
                and code == (0 if rep.separable else 1)
                and sep["separable"] == rep.separable
                and sep["max_abs_minor"] == rep.max_abs_minor
                and conc["concurrence"] == concurrence_pure(lib_state)
            ):
                mismatches += 1

    crashes = 0
    fuzz_rng = np.random.default_rng(8080)
    for t in range(100_000):
        length = int(fuzz_rng.integers(0, 257))
        if t % 2:
            data = fuzz_rng.integers(0, 256, size=length, dtype=np.uint8).tobytes()
        else:
            data = bytes(fuzz_rng.choice(np.frombuffer(FUZZ_ALPHABET, dtype=np.uint8), size=length))
        try:
            parse_ket(data, FUZZ_DIMS[t % len(FUZZ_DIMS)])
        except (KetSyntaxError, KetSemanticError, CapacityError):
            pass
        except Exception:  # noqa: BLE001 - any other exception is a crash
            crashes += 1
    ok = mismatches == 0 and crashes == 0
    return ok, f"{len(exprs)} pipelines, {mismatches} mismatches; fuzz 100000 inputs, {crashes} crashes"


CRITERIA = [
    ("1 two-qubit closed form", two_qubit_closed_form, 1.0),
    ("2 bipartite linear-entropy oracle", bipartite_oracle, 5.0),
    ("3 separability <=> rank one", separability_rank_one, 10.0),
    ("4 multipartite regressions", multipartite_regressions, None),
    ("5 minimal decomposition", minimal_decompositions, 5.0),
    ("6 universal property", universal_property, None),
    ("7 convex roof vs Wootters", roof_vs_wootters, 60.0),
    ("8 CLI round trip and parser fuzz", cli_round_trip, None),
]


@pytest.mark.parametrize("name,fn,budget", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, fn, budget):
    ok, detail, elapsed = timed(fn)
    if budget is not None:
        detail += f"; budget {budget:g} s"
        ok = ok and elapsed < budget
    assert report(name, ok, detail, elapsed), detail


if __name__ == "__main__":
    results = []
    for name, fn, budget in CRITERIA:
        ok, detail, elapsed = timed(fn)
        if budget is not None:
            ok = ok and elapsed < budget
            detail += f"; budget {budget:g} s"
        results.append(report(name, ok, detail, elapsed))
    sys.exit(0 if all(results) else 1)
