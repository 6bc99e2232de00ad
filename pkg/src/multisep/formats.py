"""JSON file formats for states, density matrices, multilinear maps and minor dumps.

State::

    {"format": "multisep-state/1", "dims": [2, 2],
     "amplitudes": [[re, im], ...]}          # row-major, last factor fastest

Density matrix: ``"format": "multisep-density/1"``, ``"dims"`` and a
row-major ``"matrix"`` of ``[re, im]`` pairs. Multilinear map:
``"format": "multisep-map/1"``, ``"dims"`` (source), ``"target_dim"`` and
``"amplitudes"`` holding the coefficients with the target index fastest.
Minor dumps are JSON Lines, one ``{axis, k, l, re, im, abs}`` per minor.
"""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import FormatError
from .mixed_roof import DensityMatrix
from .multilinear import MultilinearMap
from .separability import all_minors, enumerate_minors
from .tensor_core import StateTensor

STATE_FORMAT = "multisep-state/1"
DENSITY_FORMAT = "multisep-density/1"
MAP_FORMAT = "multisep-map/1"


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    return doc


def _expect_format(doc, *allowed):
    fmt = doc.get("format")
    if fmt not in allowed:
        raise FormatError(f"expected one of {list(allowed)}, got {fmt!r}", "format")


def _dims(doc):
    dims = doc.get("dims")
    if not isinstance(dims, list) or not dims:
        raise FormatError("must be a nonempty list of integers", "dims")
    for t, d in enumerate(dims):
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise FormatError("must be a positive integer", f"dims[{t}]")
    return tuple(dims)


def _complex_array(doc, key, length):
    raw = doc.get(key)
    if not isinstance(raw, list):
        raise FormatError("must be a list of [re, im] pairs", key)
    if len(raw) != length:
        raise FormatError(f"expected {length} entries, got {len(raw)}", key)
    out = np.empty(length, dtype=np.complex128)
    for t, pair in enumerate(raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise FormatError("must be a [re, im] pair of numbers", f"{key}[{t}]")
        out[t] = complex(pair[0], pair[1])
    return out


def _pairs(values):
    return [[float(z.real), float(z.imag)] for z in np.asarray(values).reshape(-1)]


def _dump(doc, path):
    Path(path).write_text(json.dumps(doc) + "\n", encoding="utf-8")


def state_to_dict(state: StateTensor) -> dict:
    return {"format": STATE_FORMAT, "dims": list(state.dims), "amplitudes": _pairs(state.amplitudes)}


def state_from_dict(doc) -> StateTensor:
    _expect_format(doc, STATE_FORMAT)
    dims = _dims(doc)
    return StateTensor(dims, _complex_array(doc, "amplitudes", math.prod(dims)))


def read_state(path) -> StateTensor:
    return state_from_dict(_load(path))


def write_state(state: StateTensor, path):
    _dump(state_to_dict(state), path)


def read_density(path) -> DensityMatrix:
    doc = _load(path)
    _expect_format(doc, DENSITY_FORMAT)
    dims = _dims(doc)
    size = math.prod(dims)
    mat = _complex_array(doc, "matrix", size * size).reshape(size, size)
    return DensityMatrix(dims, mat)


def write_density(rho: DensityMatrix, path):
    _dump({"format": DENSITY_FORMAT, "dims": list(rho.dims), "matrix": _pairs(rho.matrix)}, path)


def read_map(path) -> MultilinearMap:
    doc = _load(path)
    _expect_format(doc, MAP_FORMAT, STATE_FORMAT)
    dims = _dims(doc)
    target = doc.get("target_dim")
    if not isinstance(target, int) or isinstance(target, bool) or target < 1:
        raise FormatError("must be a positive integer", "target_dim")
    coeff = _complex_array(doc, "amplitudes", target * math.prod(dims))
    return MultilinearMap(dims, target, coeff)


def write_map(mlmap: MultilinearMap, path):
    _dump(
        {
            "format": MAP_FORMAT,
            "dims": list(mlmap.source_dims),
            "target_dim": mlmap.target_dim,
            "amplitudes": _pairs(mlmap.coefficients),
        },
        path,
    )


def minor_records(state: StateTensor):
    """One dict per enumerated minor, in enumeration order."""
    values = all_minors(state)
    for mid, v in zip(enumerate_minors(state.dims), values):
        yield {
            "axis": mid.axis,
            "k": list(mid.k),
            "l": list(mid.l),
            "re": float(v.real),
            "im": float(v.imag),
            "abs": float(abs(v)),
        }


def write_minors(state: StateTensor, fh):
    for rec in minor_records(state):
        fh.write(json.dumps(rec) + "\n")
