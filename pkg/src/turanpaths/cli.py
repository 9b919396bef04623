"""Command-line surface over the formulas, constructions, checks, and oracles.

Output on stdout is machine-readable (JSON unless another format is chosen);
diagnostics go to stderr.  Exit codes: 0 success or pass, 1 property violated
with a counterexample emitted, 2 usage error, 3 capability limit reached where
a verdict was required.  The same argument vector always produces the same
bytes on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import (
    build_Fkt,
    build_H,
    build_HkM2,
    build_HkP3,
    build_Hks,
    build_pair_witness,
    build_path_extremal,
    build_turan,
    build_Z,
)
from .errors import CapabilityError, UsageError
from .formulas import (
    c_def,
    c_small,
    conjecture_value,
    ex_matching,
    ex_path,
    f_conn,
    g_value,
    h_formula,
    identity_grids,
    kopylov_threshold,
    prop_grid_33,
    prop_grid_34,
    prop_grid_35,
    stability_threshold,
    two_paths_value,
)
from .graphs import graph6_encode
from .oracle import (
    brute_ex,
    check_lemma31,
    check_lemma32,
    check_remark_grid,
    crossover,
    falsify,
    verify_upper_at,
)
from .reports import CheckReport


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def _ints(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"--{flag} expects comma-separated integers, got {text!r}")


def _need(args, *names) -> list[int]:
    vals = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"--{name} is required for this operation")
        vals.append(v)
    return vals


def _forest(args, count: int | None = None) -> tuple[int, ...]:
    if args.forest is None:
        raise UsageError("--forest is required for this operation")
    orders = _ints(args.forest, "forest")
    if count is not None and len(orders) != count:
        raise UsageError(f"--forest needs exactly {count} path orders here")
    return orders


def _grid(args, default: tuple[int, ...]) -> tuple[int, ...]:
    if args.grid is None:
        return default
    vals = _ints(args.grid, "grid")
    if len(vals) != len(default):
        raise UsageError(f"--grid needs {len(default)} comma-separated value(s)")
    return vals


def _cmd_formula(args) -> tuple[int, str]:
    op = args.op
    if op == "c-def":
        n, m, l = _need(args, "n", "m", "l")
        out = {"value": c_def(n, m, l)}
    elif op == "c-small":
        n, m = _need(args, "n", "m")
        out = {"value": c_small(n, m)}
    elif op == "h":
        n, k, a = _need(args, "n", "k", "a")
        out = {"value": h_formula(n, k, a)}
    elif op == "ex-path":
        n, k = _need(args, "n", "k")
        out = {"value": ex_path(n, k)}
    elif op == "ex-matching":
        n, t = _need(args, "n", "t")
        out = {"value": ex_matching(n, t)}
    elif op == "two-paths":
        (n,) = _need(args, "n")
        k1, k2 = _forest(args, 2)
        out = two_paths_value(n, k1, k2).to_json()
    elif op == "conjecture":
        (n,) = _need(args, "n")
        orders = _forest(args)
        out = {
            "interpretation": args.interpretation,
            "value": conjecture_value(n, orders, args.interpretation),
        }
    elif op == "f-conn":
        n, k1, k2 = _need(args, "n", "k1", "k2")
        out = {"value": f_conn(n, k1, k2)}
    elif op == "g":
        n, k1, k2 = _need(args, "n", "k1", "k2")
        out = {"value": g_value(n, k1, k2)}
    else:  # thresholds
        n, k = _need(args, "n", "k")
        out = {"kopylov": kopylov_threshold(n, k), "stability": stability_threshold(n, k)}
    return 0, _dumps(out)


_BUILDERS = {
    "hnka": (build_H, ("n", "k", "a")),
    "znkt": (build_Z, ("n", "k", "t")),
    "hks": (build_Hks, ("k", "s")),
    "hkm2": (build_HkM2, ("k",)),
    "hkp3": (build_HkP3, ("k",)),
    "fkt": (build_Fkt, ("k", "t")),
    "path-extremal": (build_path_extremal, ("n", "k")),
    "pair-witness": (build_pair_witness, ("n", "s", "t")),
    "turan": (build_turan, ("n", "r")),
}


def _cmd_construct(args) -> tuple[int, str]:
    builder, flags = _BUILDERS[args.op]
    built = builder(*_need(args, *flags))
    if args.format == "graph6":
        return 0, graph6_encode(built.graph)
    if args.format == "dot":
        return 0, built.to_dot()
    return 0, _dumps(built.to_json())


def _merged(suite: str, params: dict, pairs, reports) -> CheckReport:
    samples = sum(r.samples for r in reports)
    for (k1, k2), rep in zip(pairs, reports):
        if rep.verdict == "violated":
            ce = dict(rep.counterexample or {})
            ce["k1"], ce["k2"] = k1, k2
            return CheckReport(suite, params, "violated", samples, ce)
    return CheckReport(suite, params, "pass", samples, None, {"pairs": len(reports)})


def _cmd_check(args) -> tuple[int, str]:
    op = args.op
    if op in ("lemma31", "lemma32"):
        single = check_lemma31 if op == "lemma31" else check_lemma32
        k2_lo = 1 if op == "lemma31" else 2
        if args.k1 is not None or args.k2 is not None:
            k1, k2 = _need(args, "k1", "k2")
            rep = single(k1, k2)
        else:
            (cap,) = _grid(args, (9,))
            pairs = [
                (k1, k2)
                for k1 in range(2, cap)
                for k2 in range(k2_lo, k1 + 1)
                if k1 + k2 + 1 <= cap
            ]
            if not pairs:
                raise UsageError("--grid bound admits no valid (k1, k2) pair")
            rep = _merged(op, {"max_total": cap}, pairs, [single(a, b) for a, b in pairs])
    elif op == "remark-hnka":
        max_n, max_k = _grid(args, (14, 9))
        rep = check_remark_grid(max_n=max_n, max_k=max_k)
    elif op == "identities":
        max_k, max_n = _grid(args, (12, 300))
        rep = identity_grids(max_k=max_k, max_n=max_n)
    else:
        fn = {"prop33": prop_grid_33, "prop34": prop_grid_34, "prop35": prop_grid_35}[op]
        max_k, max_n = _grid(args, (12, 300))
        rep = fn(max_k=max_k, max_n=max_n)
    return rep.exit_code, rep.dumps()


def _cmd_oracle(args) -> tuple[int, str]:
    op = args.op
    if op == "brute-ex":
        (n,) = _need(args, "n")
        forest = _forest(args)
        value, witnesses = brute_ex(n, forest)
        out = {
            "n": n,
            "forest": sorted(forest, reverse=True),
            "value": value,
            "witnesses": [graph6_encode(w) for w in witnesses],
        }
        return 0, _dumps(out)
    if op == "verify-upper":
        n, edges = _need(args, "n", "edges")
        rep = verify_upper_at(n, _forest(args), edges)
        return rep.exit_code, rep.dumps()
    # crossover
    forest = _forest(args, 2)
    return 0, _dumps(crossover(forest, max_n=args.max_n))


def _cmd_falsify(args) -> tuple[int, str]:
    rep = falsify(
        args.op,
        samples=args.samples,
        seed=args.seed,
        max_n=args.max_n,
        workers=args.workers,
    )
    return rep.exit_code, rep.dumps()


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="turanpaths",
        description="Exact path-forest Turán values, extremal constructions, "
        "exact oracles, and randomized falsification suites.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("formula", help="evaluate one closed-form quantity")
    f.add_argument(
        "op",
        choices=[
            "c-def", "c-small", "h", "ex-path", "ex-matching",
            "two-paths", "conjecture", "f-conn", "g", "thresholds",
        ],
    )
    for flag in ("n", "m", "l", "k", "a", "t", "k1", "k2"):
        f.add_argument(f"--{flag}", type=int)
    f.add_argument("--forest", help="comma-separated path orders, e.g. 5,5")
    f.add_argument("--interpretation", choices=["literal", "doubled"], default="doubled")

    c = sub.add_parser("construct", help="emit one extremal construction")
    c.add_argument("op", choices=sorted(_BUILDERS))
    for flag in ("n", "k", "a", "t", "s", "r"):
        c.add_argument(f"--{flag}", type=int)
    c.add_argument("--format", choices=["json", "graph6", "dot"], default="json")

    ch = sub.add_parser("check", help="run one statement battery")
    ch.add_argument(
        "op",
        choices=["lemma31", "lemma32", "remark-hnka", "prop33", "prop34", "prop35", "identities"],
    )
    ch.add_argument("--grid", help="grid bounds, e.g. 12,300 (battery-specific)")
    ch.add_argument("--k1", type=int, help="single-pair mode for the lemma batteries")
    ch.add_argument("--k2", type=int)

    o = sub.add_parser("oracle", help="exact search at desk scale")
    o.add_argument("op", choices=["brute-ex", "verify-upper", "crossover"])
    o.add_argument("--n", type=int)
    o.add_argument("--forest", help="comma-separated path orders, e.g. 5,5")
    o.add_argument("--edges", type=int, help="claimed extremal edge count for verify-upper")
    o.add_argument("--max-n", type=int, default=400, dest="max_n")

    fa = sub.add_parser("falsify", help="randomized stress suite for one statement")
    fa.add_argument(
        "op",
        choices=["posa", "fan", "kopylov", "yuan", "stability", "connected-bound"],
    )
    fa.add_argument("--samples", type=int, default=1000)
    fa.add_argument("--seed", type=int, default=42)
    fa.add_argument("--max-n", type=int, default=14, dest="max_n")
    fa.add_argument("--workers", type=int, default=1)
    return p


_HANDLERS = {
    "formula": _cmd_formula,
    "construct": _cmd_construct,
    "check": _cmd_check,
    "oracle": _cmd_oracle,
    "falsify": _cmd_falsify,
}


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse already printed its diagnostic
        return int(exc.code or 0)
    try:
        code, text = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CapabilityError as exc:
        print(f"capability limit: {exc}", file=sys.stderr)
        return 3
    print(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
