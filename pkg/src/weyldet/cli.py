"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors (parse errors, failed
divisions, search bounds), 2 on usage errors.
"""

import argparse
import json
import re
import sys
from functools import reduce

from .det import check_det_one, det_f, gauss_reduce, verify_elementary_product
from .errors import WeylError
from .explorer import ProbeConfig, conjecture_probe
from .matrix import ElementaryDescriptor
from .ore import default_config, left_ore_pair
from .parse import format_symbol, format_weyl, parse_matrix_document, parse_weyl_expr
from .symbols import commutative_det
from .weyl import principal_symbol

COHN = {
    "m": 2,
    "n": 2,
    "label": "Cohn matrix over Q[x1, x2]",
    "entries": [["1 - x1*x2", "-x2^2"], ["x1^2", "1 + x1*x2"]],
}

_WORD_ITEM = re.compile(r"^\s*E?\s*(\d+)\s*,\s*(\d+)\s*:(.*)$", re.S)


class UsageError(Exception):
    pass


def _load_matrix(args):
    if not args.file:
        raise UsageError("--file is required")
    try:
        with open(args.file, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    return parse_matrix_document(data)


def _need_m(args):
    if args.m is None:
        raise UsageError("--m is required for inline expressions")
    return args.m


def _emit(args, payload, lines):
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


def _trace_lines(trace):
    lines = ["trace (p_1 ... p_r * A = T):"]
    for k, step in enumerate(trace.steps, 1):
        lines.append(f"  p_{k}: {step}")
    lines.append("T =")
    lines.extend("  " + line for line in str(trace.triangular).splitlines())
    return lines


def _trace_payload(trace):
    return {
        "steps": [str(s) for s in trace.steps],
        "triangular": [[format_weyl(e) for e in r] for r in trace.triangular.entries],
    }


def _checked_trace(A, trace):
    if not trace.verify(A):
        raise WeylError("reduction trace failed to replay")
    return trace


def cmd_det(args):
    A = _load_matrix(args)
    res = det_f(A, max_bound=args.max_bound)
    payload = {
        "det_F": format_symbol(res.value),
        "numerator": format_symbol(res.numerator),
        "denominator": format_symbol(res.denominator),
    }
    lines = []
    if args.trace:
        _checked_trace(A, res.trace)
        payload["trace"] = _trace_payload(res.trace)
        lines += _trace_lines(res.trace)
        lines.append(f"numerator   = {payload['numerator']}")
        lines.append(f"denominator = {payload['denominator']}")
    lines.append(f"det_F = {payload['det_F']}")
    _emit(args, payload, lines)
    return 0


def cmd_symbol(args):
    m = _need_m(args)
    out = []
    for text in args.exprs:
        out.append(format_symbol(principal_symbol(parse_weyl_expr(text, m))))
    _emit(args, {"symbols": out}, out)
    return 0


def cmd_mul(args):
    m = _need_m(args)
    if not args.exprs:
        raise UsageError("mul needs at least one expression")
    product = reduce(lambda a, b: a * b, (parse_weyl_expr(t, m) for t in args.exprs))
    text = format_weyl(product)
    _emit(args, {"product": text}, [text])
    return 0


def cmd_lcm(args):
    m = _need_m(args)
    if len(args.exprs) != 2:
        raise UsageError("lcm takes exactly two expressions")
    a, b = (parse_weyl_expr(t, m) for t in args.exprs)
    cfg = None if a.is_zero() or b.is_zero() else default_config(a, b, args.max_bound)
    pair = left_ore_pair(a, b, cfg)
    if not pair.holds_for(a, b):
        raise WeylError("Ore identity failed verification")
    u, v, c = (format_weyl(x) for x in (pair.u, pair.v, pair.common_multiple))
    sa, sb = format_weyl(a), format_weyl(b)
    payload = {"a": sa, "b": sb, "u": u, "v": v, "common_multiple": c, "verified": True}
    lines = [
        f"u = {u}",
        f"v = {v}",
        f"verified: ({u})*({sa}) = ({v})*({sb}) = {c}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_reduce(args):
    A = _load_matrix(args)
    trace = _checked_trace(A, gauss_reduce(A, max_bound=args.max_bound))
    _emit(args, _trace_payload(trace), _trace_lines(trace) + ["replay verified"])
    return 0


def _parse_word(items, m, n):
    word = []
    for item in items:
        mt = _WORD_ITEM.match(item)
        if not mt:
            raise UsageError(f"word item {item!r} is not of the form 'i,j:expr'")
        i, j = int(mt.group(1)), int(mt.group(2))
        word.append(ElementaryDescriptor(n, i, j, parse_weyl_expr(mt.group(3), m)))
    return word


def cmd_verify(args):
    A = _load_matrix(args)
    word = _parse_word(args.word, A.m, A.n)
    ok = verify_elementary_product(word, A)
    _emit(args, {"accepted": ok}, ["accepted" if ok else "rejected"])
    return 0


def cmd_invertible(args):
    A = _load_matrix(args)
    value = det_f(A, max_bound=args.max_bound).value
    inv = not value.is_zero() and value.is_constant()
    payload = {"invertible": inv, "det_F": format_symbol(value)}
    _emit(args, payload, [f"det_F = {payload['det_F']}", f"invertible: {str(inv).lower()}"])
    return 0


def cmd_cohn(args):
    A = parse_matrix_document(json.dumps(COHN))
    res = det_f(A)
    classical = commutative_det([[principal_symbol(e) for e in r] for r in A.entries])
    report = check_det_one(A)
    payload = {
        "matrix": COHN["entries"],
        "det_F": format_symbol(res.value),
        "classical_det": format_symbol(classical),
        "agree": res.value == classical,
        "verdict": report.verdict,
    }
    lines = [
        "Cohn matrix in M_2(A_2(Q)):",
        *("  " + line for line in str(A).splitlines()),
        f"det_F = {payload['det_F']}",
        f"classical det over Q[x1, x2] = {payload['classical_det']}",
        f"verdict: {report.verdict}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_explore(args):
    if args.seed is None:
        raise UsageError("explore requires --seed")
    cfg = ProbeConfig(
        n=args.n,
        m=args.m or 1,
        word_length=args.word_length,
        coefficient_degree_bound=args.degree_bound,
        coefficient_height_bound=args.height_bound,
        seed=args.seed,
        trials=args.trials,
    )
    report = conjecture_probe(cfg)
    if args.json:
        print(report.to_json())
    else:
        print(report)
    return 0


COMMANDS = {
    "det": (cmd_det, "det_F of a matrix document"),
    "symbol": (cmd_symbol, "principal symbols of expressions"),
    "mul": (cmd_mul, "product of expressions, left to right"),
    "lcm": (cmd_lcm, "left Ore pair u*a = v*b"),
    "reduce": (cmd_reduce, "Gauss reduction trace"),
    "verify": (cmd_verify, "check a word of elementary matrices against a matrix"),
    "invertible": (cmd_invertible, "invertibility via det_F"),
    "cohn": (cmd_cohn, "built-in Cohn matrix demo"),
    "explore": (cmd_explore, "random probe of elementary products landing in Q[x]"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, help="Weyl index for inline expressions")
    common.add_argument("--file", help="matrix JSON document")
    common.add_argument("--trace", action="store_true", help="print the reduction trace")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, help="seed for randomized subcommands")
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--word-length", type=int, default=5)
    common.add_argument("--max-bound", type=int, help="cap on the Ore search degree")

    parser = argparse.ArgumentParser(prog="weyldet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (func, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        if name in ("symbol", "mul", "lcm"):
            p.add_argument("exprs", nargs="*", metavar="EXPR")
        if name == "verify":
            p.add_argument("word", nargs="*", metavar="I,J:EXPR")
        if name == "explore":
            p.add_argument("--n", type=int, default=2, help="matrix size")
            p.add_argument("--degree-bound", type=int, default=1)
            p.add_argument("--height-bound", type=int, default=2)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except WeylError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
