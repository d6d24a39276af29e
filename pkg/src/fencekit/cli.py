"""Command line entry point: ``fencekit <command> [options]``.

Exit status is 0 on success, 1 on a domain error (message on stderr) and
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Sequence

from . import hilbert, invariant_oracle
from .errors import FencekitError
from .lr import gl_dim, lr_coefficient, multi_lr
from .quiver import exhaustive_stability, load_quiver_spec, load_rep
from .schur_oracle import kostka
from .young import Partition, parse_composition, parse_partition


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _parse_labels(items: Sequence[str]) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise FencekitError(f"label {item!r} must look like VERTEX=parts")
        v, parts = item.split("=", 1)
        out[v.strip()] = parse_partition(parts)
    return out


def _full_label(spec, given: dict) -> dict:
    unknown = set(given) - set(spec.quiver.vertices)
    if unknown:
        raise FencekitError(f"unknown vertices in label: {sorted(unknown)}")
    return {v: given.get(v, Partition()) for v in spec.quiver.vertices}


def cmd_lr(args):
    F, D, E = (parse_partition(x) for x in (args.f, args.d, args.e))
    c = lr_coefficient(F, D, E)
    _emit(args, {"F": list(F), "D": list(D), "E": list(E), "value": c}, str(c))


def cmd_multi_lr(args):
    F = parse_partition(args.f)
    D = [parse_partition(x) for x in args.d]
    c = multi_lr(F, D, args.n)
    _emit(args, {"F": list(F), "D": [list(x) for x in D], "n": args.n, "value": c}, str(c))


def cmd_kostka(args):
    F = parse_partition(args.f)
    content = [int(x) for x in args.content.split(",") if x.strip()]
    c = kostka(F, content)
    _emit(args, {"F": list(F), "content": content, "value": c}, str(c))


def cmd_dim(args):
    F = parse_partition(args.f)
    c = gl_dim(F, args.n)
    _emit(args, {"F": list(F), "n": args.n, "value": c}, str(c))


def cmd_cauchy(args):
    lhs, rhs = hilbert.cauchy_sides(args.n, args.k, args.degree)
    ok = lhs == rhs
    _emit(args, {"n": args.n, "k": args.k, "degree": args.degree, "lhs": lhs, "rhs": rhs, "ok": ok},
          f"{lhs} == {rhs} OK" if ok else f"{lhs} != {rhs} FAIL")
    return 0 if ok else 1


def cmd_stability(args):
    spec = load_quiver_spec(args.quiver)
    rep = load_rep(args.rep)
    res = exhaustive_stability(spec.quiver, spec.dims, spec.linearization(), rep, convention=args.convention)
    payload = {"status": res.status.value, "convention": args.convention, "pairing": res.pairing,
               "witness_dims": dict(res.witness_dims) if res.witness_dims else None,
               "witness": {v: [list(x) for x in b] for v, b in res.witness.items()} if res.witness else None}
    text = res.status.value
    if res.witness_dims:
        dims = " ".join(f"{v}={n}" for v, n in res.witness_dims.items())
        text += f" pairing={res.pairing} witness_dims {dims}"
    _emit(args, payload, text)


def cmd_component(args):
    spec = load_quiver_spec(args.quiver)
    label = _full_label(spec, _parse_labels(args.label))
    value = hilbert.component_dim(spec.quiver, spec.dims, spec.compositions, label)
    payload = {"label": {v: list(F) for v, F in label.items()}, "value": value}
    if args.oracle:
        payload["oracle"] = hilbert.oracle_component(spec.quiver, spec.dims, spec.compositions, label)
    text = str(value) if not args.oracle else f"{value} oracle={payload['oracle']}"
    _emit(args, payload, text)


def cmd_oracle(args):
    spec = load_quiver_spec(args.quiver)
    label = _full_label(spec, _parse_labels(args.label))
    degree = args.degree
    if degree is None:
        degree = sum(Partition(label[h]).size for h in spec.quiver.heads)
    value = invariant_oracle.component_dim(spec.quiver, spec.dims, spec.compositions, label, degree)
    _emit(args, {"label": {v: list(F) for v, F in label.items()}, "degree": degree, "value": value}, str(value))


def cmd_gm_verify(args):
    spec = load_quiver_spec(args.quiver)
    reports = hilbert.gm_table(spec.quiver, spec.dims, spec.compositions, spec.exponents, args.nmax,
                               oracle=not args.no_oracle)
    rows = hilbert.gm_rows(reports)
    lines = ["N\tlabel\theads\ttails\toracle\tagree"]
    for r in rows:
        oracle = "-" if r["oracle"] is None else str(r["oracle"])
        lines.append(f"{r['N']}\t{r['label']}\t{r['heads']}\t{r['tails']}\t{oracle}\t{str(r['agree']).lower()}")
    _emit(args, {"rows": rows}, "\n".join(lines))
    return 0 if all(r["agree"] for r in rows) else 1


def cmd_transfer(args):
    F = parse_partition(args.f)
    lhs, rhs, ok = hilbert.transfer_check(args.n, args.m, parse_composition(args.comp_n),
                                          parse_composition(args.comp_m), F)
    _emit(args, {"F": list(F), "lhs": lhs, "rhs": rhs, "ok": ok}, f"{lhs} {rhs} {'OK' if ok else 'FAIL'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="fencekit", description="Exact invariants of fence quivers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient c^F_{DE}")
    p.add_argument("--f", required=True)
    p.add_argument("--d", required=True)
    p.add_argument("--e", required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("multi-lr", parents=[common], help="multiplicity of F in D1 x ... x Dm over GL_n")
    p.add_argument("--f", required=True)
    p.add_argument("--d", action="append", default=[], help="repeat once per factor")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_multi_lr)

    p = sub.add_parser("kostka", parents=[common], help="Kostka number")
    p.add_argument("--f", required=True)
    p.add_argument("--content", required=True)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("dim", parents=[common], help="dimension of rho_n^F")
    p.add_argument("--f", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("cauchy", parents=[common], help="GL_n-GL_k duality dimension count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser("stability", parents=[common], help="exhaustive stability of a finite-field rep")
    p.add_argument("--quiver", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--convention", choices=("king", "literal"), default="king")
    p.set_defaults(func=cmd_stability)

    for name, func, helptext in (("component", cmd_component, "component dimension by the multi-LR formula"),
                                 ("oracle", cmd_oracle, "component dimension by the invariant oracle")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--quiver", required=True)
        p.add_argument("--label", action="append", default=[], metavar="V=parts")
        if name == "component":
            p.add_argument("--oracle", action="store_true", help="also run the invariant oracle")
        else:
            p.add_argument("--degree", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("gm-verify", parents=[common], help="heads vs tails vs oracle, levels 0..nmax")
    p.add_argument("--quiver", required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--no-oracle", action="store_true")
    p.set_defaults(func=cmd_gm_verify)

    p = sub.add_parser("transfer", parents=[common], help="transfer-principle component check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--comp-n", required=True)
    p.add_argument("--comp-m", required=True)
    p.add_argument("--f", required=True)
    p.set_defaults(func=cmd_transfer)
    return parser


def main(argv: List[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except FencekitError as exc:
        print(f"fencekit: error: {exc}", file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
