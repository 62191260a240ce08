"""Command-line interface: ``thetalift <verb> ...``.

Exit codes: 0 success, 1 invalid mathematical input (the error class name is
printed on stderr), 2 usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .core import (
    LanglandsParam, ThetaError, fmt_param, infchar_to_json, label_psi, param_from_json,
    param_to_json,
)
from .ktypes import infinitesimal_character, ktype_to_json, lowest_ktypes
from .lifts import theta
from .occurrence import occurrence_grid, picture
from .ostar_dual import OStar2Rep, rep_from_json
from .verify import run_suite

DEFAULT_MAX_CELLS = 10000


class UsageError(Exception):
    pass


def max_cells() -> int:
    raw = os.environ.get("THETA_MAX_CELLS", str(DEFAULT_MAX_CELLS))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"THETA_MAX_CELLS must be an integer, got {raw!r}")


def parse_pair(text: str) -> tuple[int, int]:
    kind, _, rest = text.partition(":")
    if kind.lower() != "sp" or not rest:
        raise argparse.ArgumentTypeError(f"expected sp:P,Q, got {text!r}")
    try:
        p, q = (int(x) for x in rest.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected sp:P,Q, got {text!r}")
    if p < 0 or q < 0:
        raise argparse.ArgumentTypeError("P and Q must be non-negative")
    return p, q


def _json_arg(text: str):
    return json.loads(text)


def _rep(args):
    if args.chi is not None:
        return OStar2Rep(args.chi)
    if args.rep is None:
        raise UsageError("one of --rep or --chi is required")
    return rep_from_json(_json_arg(args.rep))


def _labelled(param: LanglandsParam) -> LanglandsParam:
    psi = label_psi(param.levi, param.lam, param.psi)
    return LanglandsParam(param.group, param.r, param.lam, psi, param.mu, param.nu)


def _grid_guard(size: int):
    if size < 0:
        raise UsageError("--max must be non-negative")
    if (size + 1) ** 2 > max_cells():
        raise UsageError(f"grid of {(size + 1) ** 2} cells exceeds THETA_MAX_CELLS={max_cells()}")


def cmd_lift(args, out):
    rep = _rep(args)
    p, q = args.pair
    res = theta(rep, p, q)
    if res.is_zero:
        doc = {"result": "zero", "pretty": "0", "trace": list(res.trace), "infchar": None}
    else:
        v = _labelled(res.value)
        ic = infinitesimal_character(v)
        doc = {"result": param_to_json(v), "pretty": fmt_param(v), "trace": list(res.trace),
               "infchar": infchar_to_json(ic)["entries"]}
    print(json.dumps(doc, ensure_ascii=False), file=out)


def cmd_occurrence(args, out):
    _grid_guard(args.max)
    rep = _rep(args)
    print(json.dumps({"max": args.max, "grid": occurrence_grid(rep, args.max)}), file=out)


def cmd_picture(args, out):
    _grid_guard(args.max)
    print(picture(_rep(args), args.max), file=out)


def cmd_catalog(args, out):
    which = args.which.upper()
    if which in ("A", "B") and args.p is None:
        raise UsageError(f"catalog {which} needs --p")
    if args.bound < 1:
        raise UsageError("--bound must be positive")
    for e in catalog.enumerate_catalog(which, args.p, args.bound):
        doc = e.to_json()
        doc["pretty"] = str(e)
        print(json.dumps(doc, ensure_ascii=False), file=out)


def cmd_ktypes(args, out):
    param = param_from_json(_json_arg(args.param))
    kts = sorted(lowest_ktypes(param))
    print(json.dumps({"lowest_ktypes": [ktype_to_json(k) for k in kts]}), file=out)


def cmd_infchar(args, out):
    param = param_from_json(_json_arg(args.param))
    print(json.dumps(infchar_to_json(infinitesimal_character(param))), file=out)


def cmd_verify(args, out):
    if args.max_pq < 0 or args.max_param < 0:
        raise UsageError("bounds must be non-negative")
    if (args.max_pq + 1) ** 2 > max_cells():
        raise UsageError(f"grid exceeds THETA_MAX_CELLS={max_cells()}")
    report = run_suite(args.max_pq, args.max_param)
    if args.json:
        print(json.dumps(report.to_json(), default=str), file=out)
    else:
        print(report.to_text(), file=out)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="thetalift",
                                 description="Theta lifts from O*(2) and O*(4) to Sp(p,q).")
    sub = ap.add_subparsers(dest="verb", required=True)

    def source(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--rep", help='O*(4) representation as JSON, e.g. {"family":"D","l1":"5","l2":"1"}')
        g.add_argument("--chi", type=int, help="character k of O*(2)")

    p = sub.add_parser("lift", help="theta lift to Sp(p,q)")
    p.add_argument("--pair", type=parse_pair, required=True, help="target group as sp:P,Q")
    source(p)
    p.set_defaults(func=cmd_lift)

    for verb, func, text in (("occurrence", cmd_occurrence, "occurrence grid as JSON"),
                             ("picture", cmd_picture, "ASCII occurrence picture")):
        p = sub.add_parser(verb, help=text)
        source(p)
        p.add_argument("--max", type=int, default=6, help="largest p and q shown")
        p.set_defaults(func=func)

    p = sub.add_parser("catalog", help="dump a catalog as JSON lines")
    p.add_argument("--which", choices=["A", "B", "C", "a", "b", "c"], required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--bound", type=int, default=6)
    p.set_defaults(func=cmd_catalog)

    for verb, func, text in (("ktypes", cmd_ktypes, "lowest K-types of a parameter"),
                             ("infchar", cmd_infchar, "infinitesimal character of a parameter")):
        p = sub.add_parser(verb, help=text)
        p.add_argument("--param", required=True, help="Langlands parameter as JSON")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run the grid self-checks")
    p.add_argument("--max-pq", type=int, default=4)
    p.add_argument("--max-param", type=int, default=6)
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        code = args.func(args, out)
    except UsageError as e:
        print(f"usage error: {e}", file=err)
        return 2
    except (ThetaError, ValueError, KeyError, TypeError) as e:
        # JSONDecodeError is a ValueError; malformed JSON objects give KeyError
        print(f"{type(e).__name__}: {e}", file=err)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
