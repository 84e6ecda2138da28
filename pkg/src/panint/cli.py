"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 a verification suite found violations.
"""

from __future__ import annotations

import argparse
import sys

from . import core, io
from .core import PanintError, members
from .integrals import (
    LevelChain,
    PartitionValuation,
    SignedWitness,
    choquet_asymmetric,
    choquet_pos,
    choquet_symmetric,
    concave_integral,
    pan_pos,
    pan_signed,
)
from .lp import DualCertificate
from .lpspace import p_norm
from .verify import find_additivity_counterexample, find_comonotone_counterexample, run_suite

KINDS = ("pan", "pan-signed", "choquet", "choquet-sym", "choquet-asym", "concave")
SUITE_NAMES = (
    "additivity", "set-additivity", "disjoint", "linearity", "singleton",
    "ae", "levi", "fatou", "coincide", "lp", "metric", "all",
)


def _blocks(pv: PartitionValuation):
    return [{"set": members(s), "coefficient": io.format_number(c)} for s, c in pv.blocks]


def witness_to_json(w):
    if w is None:
        return None
    if isinstance(w, PartitionValuation):
        return _blocks(w)
    if isinstance(w, SignedWitness):
        return {"positive": _blocks(w.positive), "negative": _blocks(w.negative)}
    if isinstance(w, LevelChain):
        return [{"set": members(s), "increment": io.format_number(d)} for s, d in w.steps]
    if isinstance(w, DualCertificate):
        return {
            "weights": [io.format_number(v) for v in w.weights],
            "objective": io.format_number(w.objective),
            "primal": [{"set": members(s), "value": io.format_number(v)} for s, v in sorted(w.primal.items())],
        }
    raise TypeError(f"cannot serialize witness {type(w).__name__}")


def _load(args):
    mu = io.capacity_from_json(args.capacity, exact=args.exact)
    f = io.function_from_json(args.function, mu.space, exact=args.exact) if getattr(args, "function", None) else None
    return mu, f


def cmd_compute(args) -> tuple[dict, int]:
    mu, f = _load(args)
    kind = args.kind
    if kind in ("pan", "choquet", "concave"):
        res = {"pan": pan_pos, "choquet": choquet_pos, "concave": concave_integral}[kind](f, mu)
        value, engine, witness = res.value, res.engine, res.witness
    elif kind == "pan-signed":
        res = pan_signed(f, mu)
        value, engine, witness = res.value, res.engine, res.witness
    else:
        fn = choquet_symmetric if kind == "choquet-sym" else choquet_asymmetric
        value, engine, witness = fn(f, mu), "sorted-levels", None
    out = {"kind": kind, "value": io.format_number(value), "engine": engine}
    if args.witness:
        out["witness"] = witness_to_json(witness)
    return out, 0


def cmd_check(args) -> tuple[dict, int]:
    mu, _ = _load(args)
    preds = [core.is_subadditive, core.is_submodular, core.is_supermodular, core.is_null_additive]
    out = {rep.name: rep.to_dict() for rep in (p(mu) for p in preds)}
    out["minimal_atoms"] = [members(a) for a in core.minimal_atoms(mu)]
    return out, 0


def cmd_norm(args) -> tuple[dict, int]:
    mu, f = _load(args)
    p = int(args.p) if float(args.p).is_integer() else args.p
    return {"p": args.p, "norm": io.format_number(p_norm(f, mu, p))}, 0


def _parse_n(text: str):
    if "-" in text:
        lo, hi = text.split("-", 1)
        return int(lo), int(hi)
    return int(text)


def cmd_verify(args) -> tuple[dict, int]:
    if args.capacity:
        family = io.capacity_from_json(args.capacity, exact=args.exact)
    else:
        family = args.family
    kwargs = {"trials": args.trials, "seed": args.seed, "exact": args.exact}
    if args.n is not None:
        kwargs["n"] = _parse_n(args.n)
    reports = run_suite(args.suite, family, **kwargs)
    failures = sum(r.failures for r in reports)
    out = {"suite": args.suite, "failures": failures, "reports": [r.to_dict() for r in reports]}
    return out, 2 if failures else 0


def cmd_search(args) -> tuple[dict, int]:
    mu, _ = _load(args)
    if args.mode == "additivity":
        w = find_additivity_counterexample(mu, args.budget, args.seed, signed=args.signed)
        out = w.to_dict() if w else {"found": False}
    else:
        out = find_comonotone_counterexample(mu, args.budget, args.seed).to_dict()
    return out, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="panint", description="Pan, Choquet and concave integrals on finite capacity spaces."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, function=True):
        p.add_argument("capacity", help="capacity JSON file")
        if function:
            p.add_argument("function", help="function JSON file")
        p.add_argument("--exact", action="store_true", help="exact rational arithmetic")
        p.add_argument("-o", "--output", help="write JSON here instead of stdout")

    p = sub.add_parser("compute", help="compute an integral")
    common(p)
    p.add_argument("--kind", choices=KINDS, default="pan")
    p.add_argument("--witness", action="store_true", help="include the optimality witness")
    p.set_defaults(run=cmd_compute)

    p = sub.add_parser("check", help="structural predicates and minimal atoms of a capacity")
    common(p, function=False)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("norm", help="L^p norm of a function")
    common(p)
    p.add_argument("--p", type=float, default=1.0)
    p.set_defaults(run=cmd_norm)

    p = sub.add_parser("verify", help="run randomized verification suites")
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", help="point count, or a range like 2-8")
    p.add_argument("--family", default=None,
                   help="capacity family name(s), comma separated; 'subadditive' or 'all' also accepted")
    p.add_argument("--capacity", help="use this fixed capacity instead of a family")
    p.add_argument("--exact", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("search", help="search for additivity counterexamples")
    common(p, function=False)
    p.add_argument("--mode", choices=("additivity", "comonotone"), default="additivity")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--signed", action="store_true",
                   help="signed integrands with disjoint positive sets (additivity mode)")
    p.set_defaults(run=cmd_search)
    return parser


def _emit(payload: dict, path: str | None) -> None:
    text = io.dumps(payload)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.family and args.capacity:
        parser.error("--family and --capacity are mutually exclusive")
    try:
        payload, code = args.run(args)
    except PanintError as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, core.NonMonotone):
            err["witness"] = [members(s) for s in exc.witness]
        _emit(err, None)
        return 1
    _emit(payload, getattr(args, "output", None))
    return code


if __name__ == "__main__":
    sys.exit(main())
