"""Standalone brute-force minor enumerator.

Shares no code with the library: plain Python, itertools and cmath only.
Walks every (axis, k, l) with k[axis] < l[axis] over the full index grid,
in axis / k row-major / l row-major order.

Run directly to print the GHZ3 and W regression values.
"""
import itertools
import math


def amplitude_table(dims, amplitudes):
    grid = list(itertools.product(*(range(n) for n in dims)))
    if len(grid) != len(amplitudes):
        raise ValueError("length mismatch")
    norm = math.sqrt(sum(abs(a) ** 2 for a in amplitudes))
    return {idx: complex(a) / norm for idx, a in zip(grid, amplitudes)}, grid


def minors(dims, amplitudes):
    amp, grid = amplitude_table(dims, amplitudes)
    out = []
    for j in range(len(dims)):
        for k in grid:
            for l in grid:
                if k[j] >= l[j]:
                    continue
                k_sw = k[:j] + (l[j],) + k[j + 1:]
                l_sw = l[:j] + (k[j],) + l[j + 1:]
                out.append(((j + 1, k, l), amp[k] * amp[l] - amp[k_sw] * amp[l_sw]))
    return out


def concurrence(dims, amplitudes, normalization=1.0):
    return math.sqrt(normalization * sum(abs(s) ** 2 for _, s in minors(dims, amplitudes)))


GHZ3 = ((2, 2, 2), [1, 0, 0, 0, 0, 0, 0, 1])
W3 = ((2, 2, 2), [0, 1, 1, 0, 1, 0, 0, 0])


if __name__ == "__main__":
    for name, (dims, amps) in (("GHZ3", GHZ3), ("W", W3)):
        ms = minors(dims, amps)
        nz = [abs(s) for _, s in ms if abs(s) > 1e-15]
        print(f"{name}: {len(ms)} minors, {len(nz)} nonzero, max |S| = {max(nz):.15f}, "
              f"C^2 = {concurrence(dims, amps) ** 2:.15f}, C = {concurrence(dims, amps):.15f}")
