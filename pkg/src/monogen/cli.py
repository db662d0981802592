"""Command line front end.

    monogen analyze  --cubic a2,a1,a0 (--d N | --d-list a,b,c) [--bound B] [--certified FILE]...
    monogen family   [--t0 N] [--t-max N] [--d-list a,b,c] [--bound B]
    monogen thue     --form c3,c2,c1,c0 --rhs-max m [--bound B]
    monogen build-f  (--cubic a2,a1,a0 --d N | --family)

Exit status: 0 on success, 1 on bad input, 2 when a result rests on a
bounded search (or an inconclusive family proof).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

from .families import example_family, proof_to_dict, prove_family_nonmonogenic, specialized_thue_solutions
from .indexform import build_F, build_F_parametric
from .numberfields import BinaryCubicForm, composite_order, make_cubic_field, make_imaginary_quadratic
from .pipeline import SearchConfig, find_generators, load_certified, report_to_dict
from .thue import DEFAULT_BOUND, format_certified, solve_thue_range

EXIT_OK, EXIT_INPUT, EXIT_BOUNDED = 0, 1, 2
_LIST_FLAGS = ("--cubic", "--form", "--d-list")


class InputError(Exception):
    pass


def _int_list(text: str, n: Optional[int] = None) -> List[int]:
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None
    if n is not None and len(values) != n:
        raise argparse.ArgumentTypeError(f"expected {n} integers, got {len(values)}")
    return values


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _glue_negative_lists(argv: Sequence[str]) -> List[str]:
    # "--cubic -1,-2,1" would otherwise be read as an unknown flag
    out = []
    it = iter(argv)
    for arg in it:
        if arg in _LIST_FLAGS:
            nxt = next(it, None)
            out.append(arg if nxt is None else f"{arg}={nxt}")
        else:
            out.append(arg)
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monogen", description="Power integral bases in composites of real cubic and imaginary quadratic fields.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--json", action="store_true", help="JSON output (default for analyze/family)")
        p.add_argument("--out", help="write the result to this path instead of stdout")

    p = sub.add_parser("analyze", help="enumerate generators of power integral bases")
    p.add_argument("--cubic", type=lambda s: _int_list(s, 3), required=True, metavar="a2,a1,a0")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--d", type=_int)
    g.add_argument("--d-list", type=_int_list)
    p.add_argument("--bound", type=_int, default=DEFAULT_BOUND)
    p.add_argument("--certified", action="append", default=[], metavar="FILE")
    common(p)

    p = sub.add_parser("family", help="non-monogenity of the built-in parametric family")
    p.add_argument("--t0", type=_int, default=2)
    p.add_argument("--t-max", type=_int, help="also analyze the specializations t0..t-max")
    p.add_argument("--d-list", type=_int_list, default=[2, 5, 6], help="d values for the specializations")
    p.add_argument("--bound", type=_int, default=DEFAULT_BOUND)
    common(p)

    p = sub.add_parser("thue", help="solve |F(x, y)| <= m within a box")
    p.add_argument("--form", type=lambda s: _int_list(s, 4), required=True, metavar="c3,c2,c1,c0")
    p.add_argument("--rhs-max", type=_int, required=True)
    p.add_argument("--bound", type=_int, default=DEFAULT_BOUND)
    common(p)

    p = sub.add_parser("build-f", help="print the polynomial F")
    p.add_argument("--cubic", type=lambda s: _int_list(s, 3), metavar="a2,a1,a0")
    p.add_argument("--d", type=_int)
    p.add_argument("--family", action="store_true", help="the built-in family over (t, d)")
    common(p)
    return parser


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("MONOGEN_THREADS", "1")))
    except ValueError:
        return 1


def _analyze_one(cubic_coeffs, d, bound, certified):
    cubic = make_cubic_field(*cubic_coeffs)
    order = composite_order(cubic, make_imaginary_quadratic(d))
    return find_generators(order, SearchConfig(bound=bound, certified=certified))


def _analyze_many(cubic_coeffs, ds, bound, certified):
    ds = sorted(ds)
    workers = min(_threads(), len(ds))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_analyze_one, cubic_coeffs, d, bound, certified) for d in ds]
            return [f.result() for f in futures]
    return [_analyze_one(cubic_coeffs, d, bound, certified) for d in ds]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    if args.bound < 1:
        raise InputError("--bound must be positive")
    cubic = make_cubic_field(*args.cubic)
    ds = [args.d] if args.d is not None else args.d_list
    for d in ds:
        make_imaginary_quadratic(d)
    certified = load_certified(args.certified)
    reports = _analyze_many(cubic.coefficients, ds, args.bound, certified)
    payload = [report_to_dict(r) for r in reports]
    _emit(dumps(payload[0] if args.d is not None else payload), args.out)
    return EXIT_OK if all(r.is_complete for r in reports) else EXIT_BOUNDED


def cmd_family(args) -> int:
    family = example_family()
    proof = prove_family_nonmonogenic(family, args.t0)
    payload = proof_to_dict(proof)
    complete = proof.overall == "NonMonogenic"
    if args.t_max is not None:
        checks = []
        for t in range(args.t0, args.t_max + 1):
            certified = [specialized_thue_solutions(family, t)]
            try:
                cubic = make_cubic_field(*family.specialize(t))
            except ValueError as exc:
                checks.append({"t": str(t), "error": str(exc)})
                complete = False
                continue
            for r in _analyze_many(cubic.coefficients, args.d_list, args.bound, certified):
                complete &= r.is_complete
                checks.append({"t": str(t), **report_to_dict(r)})
        payload["specializations"] = checks
    _emit(dumps(payload), args.out)
    return EXIT_OK if complete else EXIT_BOUNDED


def cmd_thue(args) -> int:
    form = BinaryCubicForm(*args.form)
    if args.rhs_max < 0 or args.bound < 1:
        raise InputError("--rhs-max must be >= 0 and --bound >= 1")
    sols = solve_thue_range(form, args.rhs_max, args.bound)
    if args.json:
        text = dumps(
            {
                "form": [str(c) for c in form.coefficients],
                "rhs_max": str(args.rhs_max),
                "completeness": str(sols.completeness),
                "solutions": [[str(x), str(y), str(v)] for x, y, v in sols.solutions],
            }
        )
    else:
        text = format_certified(sols, comment=f"bounded search, max(|x|,|y|) <= {args.bound}")
    _emit(text, args.out)
    return EXIT_OK if sols.completeness.is_certified else EXIT_BOUNDED


def cmd_build_f(args) -> int:
    if args.family:
        fam = example_family()
        F = build_F_parametric(fam.a2, fam.a1, fam.a0)
    else:
        if args.cubic is None or args.d is None:
            raise InputError("build-f needs --cubic and --d, or --family")
        F = build_F(make_cubic_field(*args.cubic), make_imaginary_quadratic(args.d))
    if args.json:
        text = dumps(
            {
                "vars": list(F.poly.vars),
                "case": F.case,
                "terms": [[str(c), F.poly.monomial_text(m)] for m, c in F.poly],
            }
        )
    else:
        text = F.to_text()
    _emit(text, args.out)
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "family": cmd_family, "thue": cmd_thue, "build-f": cmd_build_f}


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_glue_negative_lists(argv))
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
        return COMMANDS[args.command](args)
    except (InputError, ValueError, OSError) as exc:
        print(f"monogen: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
