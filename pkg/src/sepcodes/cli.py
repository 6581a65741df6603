"""Command-line entry point: construct, capset, verify, bounds, search, trace.

Exit codes: 0 success / verdict true, 1 verdict false or uncertified trace,
2 usage or input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from .bounds import BoundError, bound_report
from .capset import CapError, capset_exact, capset_greedy, capset_parse, capset_serialize
from .code import CodeError, code_parse, code_serialize, descendant_parse
from .constructions import ConstructionError, build_ssc, difference_matrix, generate, restrict
from .estimators import METHODS, fast_applies, verify
from .field import FieldError, field_of_order
from .search import SearchError, search_optimal
from .tracing import trace
from .verifiers import DEFAULT_MAX_CANDIDATES, ResourceCapExceeded

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

INPUT_ERRORS = (CodeError, FieldError, ConstructionError, CapError, BoundError, SearchError, ValueError, OSError)


def atomic_write(path: str | Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _read_code(path):
    return code_parse(Path(path).read_text())


def _emit_code(code, out):
    if out:
        atomic_write(out, code_serialize(code))
    else:
        sys.stdout.write(code_serialize(code))


# -- construct ----------------------------------------------------------------

def cmd_construct(args) -> int:
    if args.kind == "dm":
        spec = field_of_order(args.q)
        alpha = args.alpha if args.alpha is not None else spec.order - 1
        dm = difference_matrix(spec, alpha)
        code = generate(restrict(dm, range(spec.order)))
        _emit_code(code, args.out)
        print(f"(3, {code.M}, {code.q}) code from the difference matrix with alpha = {dm.alpha.value}",
              file=sys.stderr)
        return EXIT_OK
    if args.q1 is None or args.n is None:
        raise ValueError("construct ssc needs --q1 and --n")
    cap = None
    if args.cap_file:
        cap = capset_parse(Path(args.cap_file).read_text())
    elif args.cap == "exact":
        cap = capset_exact(field_of_order(args.q1), args.n)
    elif args.cap == "parabola":
        cap = capset_greedy(field_of_order(args.q1), args.n, order="parabola")
    code, prov = build_ssc(args.q1, args.n, cap)
    _emit_code(code, args.out)
    record = _dump(prov.to_dict()) + "\n"
    if args.out:
        atomic_write(str(args.out) + ".provenance.json", record)
    else:
        sys.stderr.write(record)
    print(f"(3, {code.M}, {code.q}) code, |S| = {len(prov.S)} from {prov.cap_source}", file=sys.stderr)
    return EXIT_OK


# -- capset -------------------------------------------------------------------

def cmd_capset(args) -> int:
    base = field_of_order(args.q1)
    if args.kind == "greedy":
        cap = capset_greedy(base, args.n, order=args.order, seed=args.seed)
    else:
        cap = capset_exact(base, args.n, budget=args.budget)
    text = capset_serialize(cap)
    if args.out:
        atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    status = {True: "optimal", False: "budget exhausted, not certified", None: "heuristic"}[cap.optimal]
    print(f"cap of size {len(cap)} in AG({args.n}, {args.q1}) ({status})", file=sys.stderr)
    return EXIT_CAP if cap.optimal is False else EXIT_OK


# -- verify -------------------------------------------------------------------

def _describe_witness(w: dict | None) -> str:
    if not w:
        return ""
    return "witness: " + json.dumps(w, sort_keys=True)


def cmd_verify(args) -> int:
    code = _read_code(args.file)
    report = verify(code, args.property, args.t, args.method, args.max_candidates, args.threads)
    d = report.to_dict()
    if args.json:
        print(_dump(d))
    else:
        print(f"{d['property']} t={d['t']} ({d['method']}): {'true' if report.verdict else 'false'}")
        if d["witness"]:
            print(_describe_witness(d["witness"]))
        if d.get("derived"):
            print("derived: " + json.dumps(d["derived"], sort_keys=True))
    return EXIT_OK if report.verdict else EXIT_FALSE


# -- bounds -------------------------------------------------------------------

def cmd_bounds(args) -> int:
    certified = []
    for path in args.construction or ():
        code = _read_code(path)
        if (code.n, code.q) != (args.n, args.q):
            raise ValueError(f"{path}: code is ({code.n}, {code.M}, {code.q}), expected n={args.n}, q={args.q}")
        method = "auto" if fast_applies(code, "ssc", args.t) else "definitional"
        rep = verify(code, "ssc", args.t, method)
        if not rep.verdict:
            raise ValueError(f"{path}: not a strongly {args.t}-separable code")
        certified.append((code.M, f"construction:{Path(path).name}"))
    report = bound_report(args.t, args.n, args.q, certified)
    if args.json:
        print(_dump(report.to_dict()))
    else:
        lo, up = report.lower, report.upper
        print(f"M({args.t}, {args.n}, {args.q})")
        print(f"  lower: {'-' if lo is None else f'{lo.value} ({lo.source})'}")
        print(f"  upper: {'-' if up is None else f'{up.value} ({up.source})'}")
        for b in report.all_bounds:
            note = f"  [{b.note}]" if b.note else ""
            print(f"  {b.kind:5s} {b.value:>8d}  {b.source}{note}")
        for a in report.annotations:
            print(f"  note: {a}")
    return EXIT_OK


# -- search -------------------------------------------------------------------

def cmd_search(args) -> int:
    res = search_optimal(args.t, args.n, args.q, args.property, budget=args.budget)
    if args.out:
        atomic_write(args.out, code_serialize(res.witness))
    print(_dump(res.to_dict()))
    return EXIT_OK if res.exhaustive else EXIT_CAP


# -- trace --------------------------------------------------------------------

def cmd_trace(args) -> int:
    code = _read_code(args.code)
    obs, q = descendant_parse(Path(args.obs).read_text())
    if q != code.q or obs.n != code.n:
        raise ValueError(f"observation is for n={obs.n}, q={q}; code has n={code.n}, q={code.q}")
    res = trace(code, obs, args.t, args.max_candidates)
    if args.json:
        print(_dump(res.to_dict()))
    else:
        d = res.to_dict()
        print(f"candidates: {d['candidates']}")
        print(f"guilty: {d['guilty']}")
        print(f"certified: {'true' if res.certified else 'false'}")
    return EXIT_OK if res.certified else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sepcodes", description="Separable and frameproof code toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code from a difference matrix")
    p.add_argument("kind", choices=("dm", "ssc"))
    p.add_argument("--q", type=int, help="field order for 'dm'")
    p.add_argument("--alpha", type=int, help="row multiplier for 'dm' (default q-1)")
    p.add_argument("--q1", type=int, help="base field order for 'ssc' (1 mod 6)")
    p.add_argument("--n", type=int, help="cap dimension for 'ssc'")
    p.add_argument("--cap", choices=("greedy", "parabola", "exact"), default="greedy")
    p.add_argument("--cap-file", help="cap file ('q1 n k' header) overriding --cap")
    p.add_argument("--out", help="code file; provenance goes to OUT.provenance.json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("capset", help="find a cap in AG(n, q1)")
    p.add_argument("kind", choices=("greedy", "exact"))
    p.add_argument("--q1", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", default="canonical", choices=("canonical", "parabola", "random"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=50_000_000, help="node limit for 'exact'")
    p.add_argument("--out")
    p.set_defaults(func=cmd_capset)

    p = sub.add_parser("verify", help="check FPC / SC / SSC")
    p.add_argument("--property", required=True, choices=("fpc", "sc", "ssc"))
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--method", default="auto", choices=METHODS)
    p.add_argument("--max-candidates", type=int, default=DEFAULT_MAX_CANDIDATES)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="bounds on the largest strongly separable code")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--construction", action="append", help="verified code file giving a lower bound")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="exhaustive search for an optimal code")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--property", required=True, choices=("sc", "ssc", "fpc"))
    p.add_argument("--budget", type=int, default=10_000_000)
    p.add_argument("--out", help="write the witness code here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("trace", help="identify colluders from an observation")
    p.add_argument("--code", required=True)
    p.add_argument("--obs", required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--max-candidates", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trace)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct" and args.kind == "dm" and args.q is None:
        parser.error("construct dm needs --q")
    try:
        return args.func(args)
    except ResourceCapExceeded as e:
        print(f"error: resource cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
