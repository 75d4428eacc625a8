"""Command-line interface: ``grw {weights,dual,verify,sweep,export}``.

Exit codes: 0 success, 1 a consistency check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from . import __version__
from .code_zoo import CodeSpecDescriptor
from .gf_arith import FieldTower, tower_for
from .io import CodeFileError, code_from_json, code_to_json, encode_subspace
from .linalg import DEFAULT_BUDGET, BudgetExceeded
from .rank_code import LinearCode, dual_code
from .sweep import SweepConfig, run_sweep, to_csv, to_json, to_table
from .theorem_suite import CODE_CHECKS, FAIL, check_wei_duality, run_checks, summarize
from .weights import grw_d, grw_M

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def parse_field_spec(text: str) -> FieldTower:
    """``"q=2,m=3"`` -> default tower over F_q (q a prime or prime power)."""
    vals = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, eq, val = item.partition("=")
        if not eq or key not in ("q", "m"):
            raise InputError(f"--field: bad item {item!r} (expected q=..,m=..)")
        try:
            vals[key] = int(val)
        except ValueError:
            raise InputError(f"--field: {key} must be an integer") from None
    if set(vals) != {"q", "m"}:
        raise InputError("--field needs both q= and m=")
    try:
        return tower_for(vals["q"], vals["m"])
    except ValueError as exc:
        raise InputError(f"--field: {exc}") from None


def load_code(args) -> LinearCode:
    if args.code and args.family:
        raise InputError("give either --code or --family, not both")
    if args.code:
        try:
            with open(args.code) as fh:
                obj = json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read {args.code}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"{args.code}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
        try:
            return code_from_json(obj)
        except CodeFileError as exc:
            raise InputError(f"{args.code}: {exc}") from None
    if args.family:
        if not args.field:
            raise InputError("--family needs --field q=..,m=..")
        tower = parse_field_spec(args.field)
        try:
            return CodeSpecDescriptor.parse(args.family).build(tower)
        except ValueError as exc:
            raise InputError(f"--family: {exc}") from None
    raise InputError("no code given: use --code FILE or --family DESCRIPTOR")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


# -- subcommands -----------------------------------------------------------------


def cmd_weights(args, out) -> int:
    C = load_code(args)
    if args.r == "all":
        rs = list(range(1, C.k + 1))
    else:
        try:
            rs = [int(args.r)]
        except ValueError:
            raise InputError(f"--r must be an integer or 'all', got {args.r!r}") from None
        if not 1 <= rs[0] <= C.k:
            raise InputError(f"--r {rs[0]} outside [1, {C.k}]")
    M, wit, d = [], [], []
    if args.algorithm in ("gamma", "both"):
        prev = 0
        for r in rs:
            v, W = grw_M(C, r, start=prev + 1 if args.r == "all" else None, budget=args.budget)
            M.append(v)
            wit.append(W)
            prev = v
    if args.algorithm in ("subspace", "both"):
        d = [grw_d(C, r, budget=args.budget) for r in rs]
    equivalence_applies = C.n <= C.tower.m
    disagree = [r for r, a, b in zip(rs, M, d) if a != b] if args.algorithm == "both" else []
    primary = M if M else d

    if args.emit == "json":
        doc = {"code": code_to_json(C), "n": C.n, "k": C.k, "r": rs, "algorithm": args.algorithm}
        if args.r == "all":
            doc["hierarchy"] = primary
        if M:
            doc["M"] = M
            doc["witnesses"] = [encode_subspace(W.rational_basis) for W in wit]
        if d:
            doc["d"] = d
        if args.algorithm == "both":
            doc["agree"] = not disagree
            doc["equality_proved"] = equivalence_applies
        out.write(_dump(doc))
    elif args.emit == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["r", "M_r", "d_r"])
        for i, r in enumerate(rs):
            w.writerow([r, M[i] if M else "", d[i] if d else ""])
        out.write(buf.getvalue())
    else:
        out.write(f"[n={C.n}, k={C.k}] code over F_{C.tower.order}/F_{C.tower.q}\n")
        for i, r in enumerate(rs):
            parts = []
            if M:
                parts.append(f"M_{r} = {M[i]}")
            if d:
                parts.append(f"d_{r} = {d[i]}")
            out.write("  ".join(parts) + "\n")
    if disagree:
        if equivalence_applies:
            print(f"error: the two weight definitions disagree at r = {disagree}", file=sys.stderr)
            return EXIT_FAIL
        print(f"note: definitions differ at r = {disagree} (n > m, equality not claimed)", file=sys.stderr)
    return EXIT_OK


def cmd_dual(args, out) -> int:
    C = load_code(args)
    D = dual_code(C)
    rep = check_wei_duality(C)
    primal, dual = rep.detail["hierarchy"], rep.detail["dual_hierarchy"]
    degenerate = D.k == 0
    if args.emit == "json":
        out.write(_dump({
            "code": code_to_json(C),
            "dual": None if degenerate else code_to_json(D),
            "hierarchy": primal,
            "dual_hierarchy": dual,
            "duality": rep.verdict,
            "degenerate": degenerate,
        }))
    else:
        out.write(f"primal hierarchy: {primal}\n")
        out.write(f"dual: {'zero space' if degenerate else f'[{D.n},{D.k}] code'}\n")
        out.write(f"dual hierarchy:   {dual}\n")
        out.write(f"duality: {rep.verdict}{' (degenerate)' if degenerate else ''}\n")
    return EXIT_FAIL if rep.verdict == FAIL else EXIT_OK


def cmd_verify(args, out) -> int:
    names = None
    if args.checks:
        names = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in names if c not in CODE_CHECKS]
        if unknown:
            raise InputError(f"unknown check(s): {', '.join(unknown)}; known: {', '.join(CODE_CHECKS)}")
    C = load_code(args)
    reports = run_checks(C, names)
    if args.emit == "json":
        out.write(_dump([r.to_dict() for r in reports]))
    else:
        for r in reports:
            out.write(f"{r.check:<14} {r.verdict}\n")
    print(summarize(reports), file=sys.stderr)
    return EXIT_FAIL if any(r.verdict == FAIL for r in reports) else EXIT_OK


def cmd_sweep(args, out) -> int:
    k = args.k
    if k != "all":
        try:
            k = int(k)
        except ValueError:
            raise InputError(f"--k must be an integer or 'all', got {k!r}") from None
    names = None
    if args.checks:
        names = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in names if c not in CODE_CHECKS]
        if unknown:
            raise InputError(f"unknown check(s): {', '.join(unknown)}")
    cfg = SweepConfig(q=args.q, m=args.m, n=args.n, k=k, mode=args.mode, count=args.count,
                      seed=args.seed, checks=names, budget=args.budget)
    try:
        result = run_sweep(cfg)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    emit = {"csv": to_csv, "json": to_json, "table": to_table}[args.emit]
    out.write(emit(result))
    if args.emit != "table":
        print(result.summary(), file=sys.stderr)
    return EXIT_FAIL if result.failures else EXIT_OK


def cmd_export(args, out) -> int:
    out.write(_dump(code_to_json(load_code(args))))
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grw", description="Generalized rank weights of linear codes over F_{q^m}.")
    ap.add_argument("--no-banner", action="store_true", help="suppress the version banner on stderr")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on objects visited by exhaustive enumeration")
    sub = ap.add_subparsers(dest="command", required=True)

    def code_args(p):
        p.add_argument("--code", help="code file (JSON)")
        p.add_argument("--family", help='family descriptor, e.g. "gabidulin:n=4,k=2"')
        p.add_argument("--field", help='field shorthand "q=2,m=3" (for --family)')

    p = sub.add_parser("weights", help="generalized rank weights of a code")
    code_args(p)
    p.add_argument("--r", default="all")
    p.add_argument("--algorithm", choices=["gamma", "subspace", "both"], default="gamma")
    p.add_argument("--emit", choices=["json", "csv", "table"], default="table")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("dual", help="dual code, both hierarchies and the duality verdict")
    code_args(p)
    p.add_argument("--emit", choices=["json", "table"], default="table")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("verify", help="run theorem checks on one code")
    code_args(p)
    p.add_argument("--checks", help=f"comma list from: {', '.join(CODE_CHECKS)} (default all)")
    p.add_argument("--emit", choices=["json", "table"], default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run the checks over many codes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", default="all")
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks")
    p.add_argument("--emit", choices=["csv", "json", "table"], default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export", help="write a code file for a family descriptor")
    code_args(p)
    p.set_defaults(func=cmd_export)
    return ap


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if not args.no_banner:
        print(f"grw {__version__}", file=sys.stderr)
    try:
        return args.func(args, out)
    except (InputError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
