"""Command line interface.

One subcommand tree per module: zimin, counters, psi, regular, search,
abelian, verify.  Machine-readable JSON goes to stdout (fixed key order,
byte-identical across runs for identical inputs and budgets); pass
--pretty for human-readable lines on stderr.  --timing adds wall-clock
seconds to the report and is the one switch that breaks byte-identity.

Exit codes: 0 success/PASS, 1 property FAIL, 2 usage error, 3 budget or
resource exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import abelian as ab
from . import verify as vf
from .coding import encoded_counter, is_simple, parses, psi
from .counters import DEFAULT_SYMBOL_CAP, counter, counter_stream
from .errors import ResourceLimitError
from .search import (
    counter_witness_bounds,
    first_moment_threshold,
    longest_avoiding,
    match_count_enumerated,
    match_probability,
)
from .words import DEFAULT_DIGIT_CAP, RankedWord, tau
from .zimin import (
    DEFAULT_INDEX_LENGTH_CAP,
    DEFAULT_ZIMIN_PATTERN_CAP,
    Pattern,
    encounters,
    is_unavoidable,
    zimin_index,
    zimin_type,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

# tower-sized report values (bounded by the digit caps) must survive str()
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(max(sys.get_int_max_str_digits(), 1_100_000))


def _env_int(name, default):
    raw = os.environ.get(name)
    return int(raw) if raw else default


def _jsonable(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int) and abs(x) >= 2**53:
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, range)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (RankedWord, Pattern)):
        return str(x)
    return x


def _word_arg(args):
    if getattr(args, "ranked", False):
        return RankedWord.parse(args.word)
    return args.word


def _checks_report(checks) -> tuple[dict, int]:
    report = {
        "checks": [
            {"name": c.name, "passed": c.passed, "details": c.details} for c in checks
        ],
        "all_passed": all(c.passed for c in checks),
    }
    return report, EXIT_OK if report["all_passed"] else EXIT_FAIL


def _print_check_lines(checks, stream=sys.stderr):
    for c in checks:
        print(c.line(), file=stream)


# ---------------------------------------------------------------------------
# handlers


def _cmd_zimin(args):
    if args.zimin_cmd == "type":
        return {"result": zimin_type(_word_arg(args))}, EXIT_OK
    if args.zimin_cmd == "index":
        cap = args.length_cap or _env_int("ZIMINWORDS_INDEX_CAP", DEFAULT_INDEX_LENGTH_CAP)
        return {"result": zimin_index(_word_arg(args), max_length=cap)}, EXIT_OK
    if args.zimin_cmd == "encounters":
        pattern = Pattern.parse(args.pattern)
        got = encounters(_word_arg(args), pattern)
        if got is None:
            return {"result": False}, EXIT_OK
        offset, witness = got
        return {
            "result": True,
            "offset": offset,
            "witness": {f"x{v}": img for v, img in sorted(witness.assignment.items())},
        }, EXIT_OK
    if args.zimin_cmd == "unavoidable":
        cap = args.pattern_cap or _env_int("ZIMINWORDS_PATTERN_CAP", DEFAULT_ZIMIN_PATTERN_CAP)
        return {"result": is_unavoidable(Pattern.parse(args.pattern), cap=cap)}, EXIT_OK
    raise AssertionError


def _cmd_counters(args):
    if args.counters_cmd == "make":
        if args.stream:
            for s in counter_stream(args.index, args.order):
                sys.stdout.write(f"{s}\n")
            return None, EXIT_OK
        cap = args.symbol_cap or _env_int("ZIMINWORDS_SYMBOL_CAP", DEFAULT_SYMBOL_CAP)
        w = counter(args.index, args.order, symbol_cap=cap)
        return {"result": str(w), "length": len(w)}, EXIT_OK
    if args.counters_cmd == "check":
        checks = vf.check_counter_structure(args.order)
        checks.append(vf.check_counter_roundtrip(args.order, range(min(tau(args.order), 256))))
        checks.append(vf.check_counter_zimin_for_order(args.order))
        _print_check_lines(checks)
        return _checks_report(checks)
    raise AssertionError


def _cmd_psi(args):
    if args.psi_cmd == "encode":
        if args.counter:
            index, order = (int(t) for t in args.counter.split(","))
            return {"result": encoded_counter(index, order)}, EXIT_OK
        return {"result": psi(RankedWord.parse(args.word))}, EXIT_OK
    if args.psi_cmd == "parses":
        found = parses(args.word)
        return {
            "result": [
                {"left": p.left, "center": str(p.center), "right": p.right} for p in found
            ],
            "count": len(found),
        }, EXIT_OK
    if args.psi_cmd == "simple":
        return {"result": is_simple(args.word)}, EXIT_OK
    if args.psi_cmd == "verify-lemmas":
        checks = [vf.check_infix_code(), vf.check_characterization()]
        checks += vf.check_parse_counts_and_uniqueness()
        checks += vf.check_occurrence_bijection()
        checks += vf.check_boundary_theorem((2,) if args.scale == "small" else (2, 3))
        _print_check_lines(checks)
        return _checks_report(checks)
    raise AssertionError


def _cmd_regular(args):
    checks = vf.check_regular_identities()
    _print_check_lines(checks)
    return _checks_report(checks)


def _certificate_report(cert, value_name):
    value = cert.implied_f()
    report = {
        "certificate": cert.to_json(),
        value_name: value,
        f"{value_name}_lower_bound": cert.f_lower_bound(),
    }
    if value is None:
        report["note"] = (
            "search not exhausted: refusing to claim an exact value; "
            f"only {value_name} > {cert.max_avoiding_length} is certified"
        )
        return report, EXIT_RESOURCE
    return report, EXIT_OK


def _cmd_search(args):
    cert = longest_avoiding(
        args.n,
        args.k,
        max_nodes=args.budget_nodes,
        max_seconds=args.budget_seconds,
        mode="zimin-oracle" if args.oracle else "zimin",
        parallel=args.parallel,
        split_depth=args.split_depth,
        checkpoint_path=args.checkpoint,
        checkpoint_every=args.checkpoint_every,
        resume=args.resume,
    )
    return _certificate_report(cert, "f")


def _cmd_abelian(args):
    if args.abelian_cmd == "g":
        value, cert = ab.g_value(
            args.n, args.k, max_nodes=args.budget_nodes, max_seconds=args.budget_seconds
        )
        return _certificate_report(cert, "g")
    if args.abelian_cmd == "bounds":
        cap = args.digit_cap or _env_int("ZIMINWORDS_DIGIT_CAP", DEFAULT_DIGIT_CAP)
        report = {
            "n": args.n,
            "k": args.k,
            "lower_bound": ab.g_lower_bound(args.n, args.k, cap) if args.n >= 2 else None,
            "upper_closed_form": ab.g_upper_bound(args.n, args.k, cap),
            "upper_recurrence": ab.g_upper_recurrence(args.n, args.k, cap),
        }
        return report, EXIT_OK
    if args.abelian_cmd == "oracles":
        checks = vf.check_abelian_suite()
        _print_check_lines(checks)
        return _checks_report(checks)
    raise AssertionError


def _cmd_bounds(args):
    return {
        "report": counter_witness_bounds(
            args.order,
            encoded=args.encoded,
            indices=range(args.indices) if args.indices else None,
        )
    }, EXIT_OK


def _cmd_moment(args):
    cap = args.digit_cap or _env_int("ZIMINWORDS_DIGIT_CAP", DEFAULT_DIGIT_CAP)
    report = {
        "match_probability": match_probability(args.n, args.k),
        "first_moment_threshold": first_moment_threshold(args.n, args.k, cap),
    }
    if args.enumerate:
        count, total = match_count_enumerated(args.n, args.k)
        report["enumeration"] = {"matching": count, "total": total}
    return report, EXIT_OK


def _cmd_verify(args):
    checks = vf.run_suite(args.scale)
    _print_check_lines(checks, stream=sys.stdout if args.lines else sys.stderr)
    return _checks_report(checks)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="ziminwords", description="Zimin patterns, counters, codings, searches."
    )
    top.add_argument("--pretty", action="store_true", help="human-readable lines on stderr")
    top.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("zimin", help="Zimin type/index, encounters, unavoidability")
    zsub = p.add_subparsers(dest="zimin_cmd", required=True)
    for name in ("type", "index"):
        q = zsub.add_parser(name)
        q.add_argument("word")
        q.add_argument("--ranked", action="store_true", help="parse the word as ranked text")
        if name == "index":
            q.add_argument("--length-cap", type=int, default=None)
        q.set_defaults(handler=_cmd_zimin)
    q = zsub.add_parser("encounters")
    q.add_argument("word")
    q.add_argument("pattern")
    q.add_argument("--ranked", action="store_true")
    q.set_defaults(handler=_cmd_zimin)
    q = zsub.add_parser("unavoidable")
    q.add_argument("pattern")
    q.add_argument("--pattern-cap", type=int, default=None)
    q.set_defaults(handler=_cmd_zimin)

    p = sub.add_parser("counters", help="build and check higher-order counters")
    csub = p.add_subparsers(dest="counters_cmd", required=True)
    q = csub.add_parser("make")
    q.add_argument("--order", type=int, required=True)
    q.add_argument("--index", type=int, required=True)
    q.add_argument("--stream", action="store_true", help="stream symbols, one per line")
    q.add_argument("--symbol-cap", type=int, default=None)
    q.set_defaults(handler=_cmd_counters)
    q = csub.add_parser("check")
    q.add_argument("--order", type=int, required=True)
    q.set_defaults(handler=_cmd_counters)

    p = sub.add_parser("psi", help="binary coding and parses")
    psub = p.add_subparsers(dest="psi_cmd", required=True)
    q = psub.add_parser("encode")
    q.add_argument("word", nargs="?", default="")
    q.add_argument("--counter", help="encode a counter, as INDEX,ORDER")
    q.set_defaults(handler=_cmd_psi)
    for name in ("parses", "simple"):
        q = psub.add_parser(name)
        q.add_argument("word")
        q.set_defaults(handler=_cmd_psi)
    q = psub.add_parser("verify-lemmas")
    q.add_argument("--scale", choices=("small", "full"), default="small")
    q.set_defaults(handler=_cmd_psi)

    p = sub.add_parser("regular", help="regular-language identities")
    rsub = p.add_subparsers(dest="regular_cmd", required=True)
    q = rsub.add_parser("check-identities")
    q.set_defaults(handler=_cmd_regular)

    p = sub.add_parser("search", help="exhaustive avoidance search")
    ssub = p.add_subparsers(dest="search_cmd", required=True)
    q = ssub.add_parser("f")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--budget-nodes", type=int, default=None)
    q.add_argument("--budget-seconds", type=float, default=None)
    q.add_argument("--parallel", type=int, default=1)
    q.add_argument("--split-depth", type=int, default=None)
    q.add_argument("--checkpoint", default=None)
    q.add_argument("--checkpoint-every", type=int, default=100_000)
    q.add_argument("--resume", action="store_true")
    q.add_argument("--oracle", action="store_true", help="recompute the index at every node")
    q.set_defaults(handler=_cmd_search)
    q = ssub.add_parser("bounds", help="counter-based lower-bound certificates")
    q.add_argument("--order", type=int, required=True)
    q.add_argument("--encoded", action="store_true")
    q.add_argument("--indices", type=int, default=None, help="check indices 0..N-1")
    q.set_defaults(handler=_cmd_bounds)
    q = ssub.add_parser("moment", help="first-moment quantities")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--enumerate", action="store_true")
    q.add_argument("--digit-cap", type=int, default=None)
    q.set_defaults(handler=_cmd_moment)

    p = sub.add_parser("abelian", help="abelian encounters, g(n,k), bounds")
    asub = p.add_subparsers(dest="abelian_cmd", required=True)
    q = asub.add_parser("g")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--budget-nodes", type=int, default=None)
    q.add_argument("--budget-seconds", type=float, default=None)
    q.set_defaults(handler=_cmd_abelian)
    q = asub.add_parser("bounds")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--digit-cap", type=int, default=None)
    q.set_defaults(handler=_cmd_abelian)
    q = asub.add_parser("oracles")
    q.set_defaults(handler=_cmd_abelian)

    p = sub.add_parser("verify", help="run the lemma/theorem suites")
    p.add_argument("--scale", choices=("small", "full"), default="small")
    p.add_argument("--lines", action="store_true", help="PASS/FAIL lines on stdout")
    p.set_defaults(handler=_cmd_verify)

    return top


def run(argv=None) -> tuple[int, dict | None]:
    """Parse argv, execute, and return (exit code, report dict)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    inputs = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("handler", "pretty", "timing") and not callable(v)
    }
    try:
        result, code = args.handler(args)
    except ResourceLimitError as exc:
        return EXIT_RESOURCE, {"command": args.cmd, "error": str(exc)}
    except (ValueError, OSError) as exc:
        return EXIT_USAGE, {"command": args.cmd, "error": str(exc)}
    if result is None:
        return code, None
    report = {"command": args.cmd, "inputs": _jsonable(inputs)}
    report.update(_jsonable(result))
    if args.timing:
        report["timing_seconds"] = round(time.monotonic() - started, 3)
    return code, report


def main(argv=None) -> int:
    code, report = run(argv)
    if report is not None:
        print(json.dumps(report))
        if "--pretty" in (argv or sys.argv[1:]):
            _pretty(report)
    return code


def _pretty(report, stream=sys.stderr):
    for key, value in report.items():
        if key in ("command", "inputs"):
            continue
        print(f"{key}: {value}", file=stream)


if __name__ == "__main__":
    sys.exit(main())
