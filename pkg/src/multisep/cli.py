"""Command-line interface.

Exit codes: 0 success, 1 for a "not separable" verdict, 2 validation
errors, 3 capacity errors.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import concurrence as conc
from . import decomposition, formats, mixed_roof, multilinear, separability
from .errors import CapacityError, MultisepError
from .ket import parse_ket
from .tensor_core import StateTensor, normalize


def _num(x) -> str:
    return f"{x:.12g}"


def _cplx(z) -> str:
    z = complex(z)
    return f"{_num(z.real)}{'+' if z.imag >= 0 else '-'}{_num(abs(z.imag))}i"


def _axes(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid axis list {text!r}") from None


def _emit(args, payload, lines):
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def cmd_product(args):
    states = [formats.read_state(p) for p in args.factors]
    dims = tuple(d for s in states for d in s.dims)
    amps = states[0].amplitudes
    for s in states[1:]:
        amps = np.outer(amps, s.amplitudes).reshape(-1)
    out = StateTensor(dims, amps)
    formats.write_state(out, args.out)
    _emit(args, {"dims": list(dims), "out": args.out}, [f"wrote dims {list(dims)} to {args.out}"])
    return 0


def cmd_parse(args):
    state = parse_ket(args.expr, args.dims)
    if args.normalize:
        state = normalize(state)
    formats.write_state(state, args.out)
    _emit(args, {"dims": list(state.dims), "out": args.out}, [f"wrote dims {list(state.dims)} to {args.out}"])
    return 0


def cmd_minors(args):
    state = normalize(formats.read_state(args.inp))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            formats.write_minors(state, fh)
    else:
        formats.write_minors(state, sys.stdout)
    return 0


def cmd_separable(args):
    state = formats.read_state(args.inp)
    rep = separability.is_separable(state, args.tol)
    witness = None
    if rep.witness is not None:
        witness = {"axis": rep.witness.axis, "k": list(rep.witness.k), "l": list(rep.witness.l)}
    lines = [
        f"separable: {'yes' if rep.separable else 'no'}",
        f"max |S|: {_num(rep.max_abs_minor)}",
    ]
    if witness:
        lines.append(f"witness: axis {witness['axis']} k={tuple(witness['k'])} l={tuple(witness['l'])}")
    _emit(
        args,
        {"separable": rep.separable, "max_abs_minor": rep.max_abs_minor, "witness": witness, "tolerance": rep.tolerance},
        lines,
    )
    return 0 if rep.separable else 1


def cmd_concurrence(args):
    state = formats.read_state(args.inp)
    cfg = conc.ConcurrenceConfig(normalization=args.normalization)
    value = conc.concurrence_pure(state, cfg)
    payload = {"concurrence": value, "normalization": args.normalization}
    lines = [f"concurrence: {_num(value)}"]
    if args.oracle:
        if state.m == 2:
            le = {"1": conc.linear_entropy_concurrence(state, [1])}
        elif state.m > 2:
            le = {str(j): conc.linear_entropy_concurrence(state, [j]) for j in range(1, state.m + 1)}
        else:
            le = {}
        payload["linear_entropy"] = le
        for cut, v in le.items():
            lines.append(f"linear entropy (cut {{{cut}}}): {_num(v)}")
        if state.dims == (2, 2):
            payload["two_qubit"] = conc.concurrence_two_qubit(state)
            lines.append(f"two-qubit closed form: {_num(payload['two_qubit'])}")
    _emit(args, payload, lines)
    return 0


def cmd_schmidt(args):
    state = formats.read_state(args.inp)
    dec = decomposition.minimal_decomposition(state, args.cut, args.tol)
    if args.orthogonal:
        dec = decomposition.orthogonalize(dec)
    payload = {
        "rank": dec.rank,
        "cut": list(dec.cut),
        "left": [formats._pairs(dec.left[:, i]) for i in range(dec.rank)],
        "right": [formats._pairs(dec.right[:, i]) for i in range(dec.rank)],
    }
    lines = [f"rank: {dec.rank}"]
    for i in range(dec.rank):
        lines.append(f"term {i + 1}:")
        lines.append("  left:  " + " ".join(_cplx(z) for z in dec.left[:, i]))
        lines.append("  right: " + " ".join(_cplx(z) for z in dec.right[:, i]))
    _emit(args, payload, lines)
    return 0


def cmd_roof(args):
    rho = formats.read_density(args.inp)
    cfg = mixed_roof.RoofConfig(
        ensemble_size=args.ensemble_size,
        restarts=args.restarts,
        max_iters=args.iters,
        seed=args.seed,
    )
    res = mixed_roof.convex_roof_concurrence(rho, cfg)
    payload = {
        "value": res.value,
        "restart": res.restart,
        "weights": [float(p) for p in res.ensemble.weights],
        "states": [formats._pairs(s.amplitudes) for s in res.ensemble.states],
    }
    lines = [f"roof concurrence: {_num(res.value)}", f"ensemble size: {len(res.ensemble.weights)}"]
    if args.wootters:
        payload["wootters"] = mixed_roof.wootters_concurrence(rho)
        lines.append(f"wootters: {_num(payload['wootters'])}")
    _emit(args, payload, lines)
    return 0


def cmd_criteria(args):
    mlmap = formats.read_map(args.map)
    crit = multilinear.tensor_product_criteria(mlmap, args.tol)
    lines = [
        f"condition I (surjective): {'yes' if crit['condition_I'] else 'no'}",
        f"condition II (injective): {'yes' if crit['condition_II'] else 'no'}",
        f"rank: {crit['rank']}",
    ]
    _emit(args, crit, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multisep", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="tensor product of state files")
    p.add_argument("--out", required=True)
    p.add_argument("factors", nargs="+")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("parse", help="ket expression to state file")
    p.add_argument("--dims", required=True, type=_axes)
    p.add_argument("--expr", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--normalize", action="store_true")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("minors", help="dump every minor of the normalized state")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("separable", help="product-state test")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--tol", type=float, default=separability.DEFAULT_TOL)
    p.set_defaults(func=cmd_separable)

    p = sub.add_parser("concurrence", help="pure-state concurrence")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--normalization", type=float, default=1.0)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_concurrence)

    p = sub.add_parser("schmidt", help="minimal decomposition across a cut")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--cut", required=True, type=_axes)
    p.add_argument("--tol", type=float, default=decomposition.DEFAULT_TOL)
    p.add_argument("--orthogonal", action="store_true")
    p.set_defaults(func=cmd_schmidt)

    p = sub.add_parser("roof", help="convex-roof concurrence of a density matrix")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--ensemble-size", type=int, default=None)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--iters", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--wootters", action="store_true")
    p.set_defaults(func=cmd_roof)

    p = sub.add_parser("criteria", help="tensor-product conditions of a multilinear map")
    p.add_argument("--map", required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_criteria)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (MultisepError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
