"""
Command line front end.

    fixcount analyze  "(1)(2,3)(4,5,6)" --window 12
    fixcount analyze  census.json
    fixcount invert   window.json --method both
    fixcount validate window.txt
    fixcount oracle   "(1,2)(3,4,5)" --window 6
    fixcount period   "(1,2)(3,4,5,6)"

Reports go to stdout as JSON.  Exit codes: 0 ok, 1 internal mismatch,
2 input error, 3 not a counting function, 4 infinite values (census not unique).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Optional, Sequence

from .census import (
    INF,
    CycleCensus,
    FpcfWindow,
    InfiniteValueError,
    NotACountingFunctionError,
    ValidationReport,
    census_from_fpcf,
    classify,
    fpcf_window,
    is_fpcf_infinite_at,
    is_infinite,
    minimal_period_window,
    period_bound,
    validate_fpcf_window,
)
from .permutation import (
    CycleNotationError,
    ExplicitPermutation,
    brute_force_window,
    census_of,
    max_element,
    parse_cycles,
)
from .reconstruct import Status, reconstruct

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_INVALID = 3
EXIT_NONUNIQUE = 4

DEFAULT_WINDOW = 64
MAX_N = 10_000
MAX_WINDOW = 10**6
MAX_ORACLE_WINDOW = 10**4
# brute-force cross-check inside `analyze` only when n*K stays below this
_ANALYZE_ORACLE_WORK = 10**7

NONUNIQUE_MESSAGE = (
    "window contains infinite values: the census is not determined by F. "
    "(1,2)(3,4)..., (1,2,3,4)(5,6)..., (1,2)(3,4,5,6)(7,8)... and an infinite "
    "cycle times (1,2)(4,5)... are pairwise nonconjugate with the same F"
)


class InputError(Exception):
    pass


class InternalMismatch(Exception):
    pass


# ----------------------------------------------------------------- JSON codec

def _count_to_json(c):
    return "inf" if is_infinite(c) else c


def _count_from_json(x, what: str, allow_negative: bool = False):
    if x == "inf":
        return INF
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what}: expected an integer or \"inf\", got {x!r}")
    if x < 0 and not allow_negative:
        raise InputError(f"{what}: counts must be nonnegative, got {x}")
    return x


def census_to_json(census: CycleCensus) -> dict:
    return {
        "cycles": {str(ell): _count_to_json(c) for ell, c in census.cycles.items()},
        "infinite": _count_to_json(census.infinite),
    }


def census_from_json(obj: Any) -> CycleCensus:
    if not isinstance(obj, dict):
        raise InputError("census JSON must be an object")
    unknown = set(obj) - {"cycles", "infinite"}
    if unknown:
        raise InputError(f"unknown census keys: {sorted(unknown)}")
    raw = obj.get("cycles", {})
    if not isinstance(raw, dict):
        raise InputError("census \"cycles\" must be an object")
    cycles = {}
    for key, val in raw.items():
        if not (isinstance(key, str) and key.isdigit() and key[0] != "0"):
            raise InputError(f"cycle length {key!r} is not a positive integer")
        cycles[int(key)] = _count_from_json(val, f"cycles[{key}]")
    infinite = _count_from_json(obj.get("infinite", 0), "infinite")
    return CycleCensus(cycles, infinite)


def window_to_json(window: FpcfWindow) -> dict:
    return {"K": window.bound, "values": [_count_to_json(v) for v in window.values]}


def window_from_json(obj: Any) -> FpcfWindow:
    if isinstance(obj, list):
        obj = {"K": len(obj), "values": obj}
    if not isinstance(obj, dict) or "values" not in obj:
        raise InputError("window JSON must be an object with \"values\"")
    values = obj["values"]
    if not isinstance(values, list) or not values:
        raise InputError("window \"values\" must be a nonempty list")
    K = obj.get("K", len(values))
    if K != len(values):
        raise InputError(f"window declares K={K} but has {len(values)} values")
    return FpcfWindow(tuple(
        _count_from_json(v, f"values[{k}]", allow_negative=True)
        for k, v in enumerate(values, start=1)
    ))


def window_from_text(text: str) -> FpcfWindow:
    """Lines ``k value`` with k = 1, 2, ... in order; ``#`` starts a comment."""
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'k value'")
        try:
            k = int(parts[0])
        except ValueError:
            raise InputError(f"line {lineno}: bad index {parts[0]!r}") from None
        if k != len(values) + 1:
            raise InputError(f"line {lineno}: expected k={len(values) + 1}, got {k}")
        if parts[1].lower() == "inf":
            values.append(INF)
        else:
            try:
                values.append(int(parts[1]))
            except ValueError:
                raise InputError(f"line {lineno}: bad value {parts[1]!r}") from None
    if not values:
        raise InputError("window file has no values")
    return FpcfWindow(tuple(values))


def validation_to_json(report: ValidationReport) -> dict:
    first = report.first_failure
    return {
        "valid": report.valid,
        "K": report.bound,
        "window_limited": True,
        "first_failure": None if first is None else {"reason": first[1].value, "at": first[0]},
        "failing_lengths": report.failing_lengths,
        "monotone": report.monotone,
        "monotonicity_violations": [list(v) for v in report.monotonicity_violations],
        "lengths": [
            {"ell": c.ell, "mobius_sum": c.mobius_sum,
             "nonnegative": c.nonnegative, "divisible": c.divisible}
            for c in report.checks
        ],
    }


# -------------------------------------------------------------------- inputs

def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    return source


def load_permutation(text: str, n: Optional[int]) -> ExplicitPermutation:
    if n is None:
        n = max_element(text)
        if n == 0:
            raise InputError("empty cycle notation needs --n")
    if n > MAX_N:
        raise InputError(f"n={n} exceeds the cap of {MAX_N}")
    try:
        return parse_cycles(text, n)
    except (CycleNotationError, ValueError) as exc:
        raise InputError(str(exc)) from None


def load_census(source: str, n: Optional[int]) -> tuple[CycleCensus, Optional[ExplicitPermutation]]:
    """A census from census JSON, or from cycle notation (then the permutation too)."""
    text = _read_source(source)
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad census JSON: {exc}") from None
        try:
            return census_from_json(obj), None
        except (TypeError, ValueError) as exc:
            raise InputError(str(exc)) from None
    perm = load_permutation(text.strip(), n)
    return census_of(perm), perm


def load_window(source: str) -> FpcfWindow:
    text = _read_source(source)
    try:
        if text.lstrip()[:1] in ("{", "["):
            try:
                obj = json.loads(text)
            except json.JSONDecodeError as exc:
                raise InputError(f"bad window JSON: {exc}") from None
            window = window_from_json(obj)
        else:
            window = window_from_text(text)
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from None
    if window.bound > MAX_WINDOW:
        raise InputError(f"K={window.bound} exceeds the cap of {MAX_WINDOW}")
    return window


def _check_window_arg(K: int, cap: int = MAX_WINDOW) -> None:
    if K < 1:
        raise InputError("--window must be at least 1")
    if K > cap:
        raise InputError(f"--window {K} exceeds the cap of {cap}")


# ------------------------------------------------------------------ analysis

def _period_json(census: CycleCensus, window: FpcfWindow) -> dict:
    try:
        bound = period_bound(census)
    except OverflowError:
        bound = None
    minimal = minimal_period_window(window) if window.bound >= 2 else None
    return {"bound": bound, "minimal_in_window": minimal, "window_limited": True}


def build_report(census: CycleCensus, K: int) -> dict:
    cls = classify(census)
    window = fpcf_window(census, K)
    if window.first_infinite() is None:
        validity = validation_to_json(validate_fpcf_window(window))
    else:
        validity = {"applicable": False, "reason": "window has infinite values",
                    "at": window.first_infinite()}
    return {
        "census": census_to_json(census),
        "classification": {
            "finite_type": cls.finite_type,
            "infinite_type": cls.infinite_type,
            "bounded": cls.bounded,
            "finite_multiplicity": cls.finite_multiplicity,
        },
        "window": window_to_json(window),
        "period": _period_json(census, window),
        "validity": validity,
    }


def check_report(census: CycleCensus, K: int, perm: Optional[ExplicitPermutation] = None) -> None:
    """Recompute everything derivable from the census by a second route."""
    window = fpcf_window(census, K)
    for k, v in enumerate(window.values, start=1):
        if is_infinite(v) != is_fpcf_infinite_at(census, k):
            raise InternalMismatch(f"infinity criterion disagrees at k={k}")
    if classify(census).finite_multiplicity:
        if not validate_fpcf_window(window).valid:
            raise InternalMismatch("forward window rejected by the validator")
        if census_from_fpcf(window) != CycleCensus(census.restrict(K).cycles):
            raise InternalMismatch("Moebius inversion does not return the census")
    try:
        p = period_bound(census)
    except OverflowError:
        p = None
    if p is not None and 2 * p <= K:
        vals = window.values
        if any(vals[i] != vals[i + p] for i in range(K - p)):
            raise InternalMismatch(f"window does not repeat with period {p}")
        minimal = minimal_period_window(window)
        if minimal is None or p % minimal:
            raise InternalMismatch(f"minimal period {minimal} does not divide {p}")
    if perm is not None and perm.n * K <= _ANALYZE_ORACLE_WORK:
        if brute_force_window(perm, K) != list(window.values):
            raise InternalMismatch("brute-force fixed point counts disagree with the formula")


def _summary(report: dict) -> str:
    vals = report["window"]["values"]
    shown = ", ".join(str(v) for v in vals[:12]) + (", ..." if len(vals) > 12 else "")
    cls = report["classification"]
    per = report["period"]
    lines = [
        f"census: {report['census']['cycles']} + {report['census']['infinite']} infinite cycle(s)",
        "type: " + ", ".join(k for k, v in cls.items() if v),
        f"F(1..{len(vals)}): {shown}",
        f"period: lcm bound {per['bound']}, least period seen in window {per['minimal_in_window']}",
    ]
    return "\n".join(lines)


# ------------------------------------------------------------------ commands

def _emit(args, obj: dict) -> None:
    if not args.quiet:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _verbose(args, text: str) -> None:
    if args.verbose:
        print(text, file=sys.stderr)


def cmd_analyze(args) -> int:
    _check_window_arg(args.window)
    census, perm = load_census(args.source, args.n)
    report = build_report(census, args.window)
    check_report(census, args.window, perm)
    _emit(args, report)
    _verbose(args, _summary(report))
    return EXIT_OK


def _nonunique(args, exc: InfiniteValueError) -> int:
    _emit(args, {"status": "non-unique", "at": exc.k, "message": NONUNIQUE_MESSAGE})
    print(f"error: {NONUNIQUE_MESSAGE}", file=sys.stderr)
    return EXIT_NONUNIQUE


def _mobius_json(window: FpcfWindow) -> dict:
    try:
        census = census_from_fpcf(window)
    except NotACountingFunctionError as exc:
        return {"status": "invalid", "reason": exc.reason.value, "at": exc.ell}
    return {"status": "ok", "census": census_to_json(census), "window_limited": True}


def cmd_invert(args) -> int:
    window = load_window(args.source)
    try:
        window.require_finite()
    except InfiniteValueError as exc:
        return _nonunique(args, exc)

    if args.method == "mobius":
        out = _mobius_json(window)
        _emit(args, out)
        return EXIT_INVALID if out["status"] == "invalid" else EXIT_OK

    result = reconstruct(window, truncated=args.truncated)
    greedy = result.as_dict()
    if args.method == "greedy":
        _emit(args, greedy)
        return EXIT_INVALID if result.status == Status.INVALID else EXIT_OK

    mob = _mobius_json(window)
    if mob["status"] == "invalid" or result.status == Status.INVALID:
        agreement = mob["status"] == "invalid" and result.status == Status.INVALID
    else:
        agreement = census_from_json(mob["census"]) == result.census
    _emit(args, {"mobius": mob, "greedy": greedy, "agreement": agreement})
    if not agreement:
        print("error: greedy reconstruction and Moebius inversion disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_INVALID if result.status == Status.INVALID else EXIT_OK


def cmd_validate(args) -> int:
    window = load_window(args.source)
    try:
        report = validate_fpcf_window(window)
    except InfiniteValueError as exc:
        return _nonunique(args, exc)
    _emit(args, validation_to_json(report))
    if not report.valid:
        first = report.first_failure
        _verbose(args, f"invalid: {first[1].value} at {first[0]}")
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_oracle(args) -> int:
    _check_window_arg(args.window, MAX_ORACLE_WINDOW)
    if args.n is not None and args.n > args.max_n:
        raise InputError(f"n={args.n} exceeds the oracle cap of {args.max_n}")
    perm = load_permutation(_read_source(args.source).strip(), args.n)
    if perm.n > args.max_n:
        raise InputError(f"n={perm.n} exceeds the oracle cap of {args.max_n}")
    brute = brute_force_window(perm, args.window)
    formula = list(fpcf_window(census_of(perm), args.window).values)
    match = brute == formula
    _emit(args, {"n": perm.n, "K": args.window, "brute_force": brute,
                 "formula": formula, "match": match})
    if not match:
        print("error: brute-force counts disagree with the divisor-sum formula", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_period(args) -> int:
    if args.from_window:
        window = load_window(args.source)
        if window.bound < 2:
            raise InputError("need K >= 2 to look for a period")
        _emit(args, {"K": window.bound, "minimal_in_window": minimal_period_window(window),
                     "window_limited": True})
        return EXIT_OK
    _check_window_arg(args.window)
    census, _ = load_census(args.source, args.n)
    window = fpcf_window(census, args.window)
    out = {"K": args.window}
    out.update(_period_json(census, window))
    _emit(args, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--window", "-K", type=int, default=DEFAULT_WINDOW,
                        help=f"window bound K (default {DEFAULT_WINDOW})")
    common.add_argument("--json", action="store_true",
                        help="JSON report on stdout (the default; kept for scripts)")
    common.add_argument("--quiet", "-q", action="store_true", help="no report on stdout")
    common.add_argument("--verbose", "-v", action="store_true",
                        help="human-readable summary on stderr")

    parser = argparse.ArgumentParser(
        prog="fixcount",
        description="Cycle censuses and fixed point counting functions of permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="census, classification, F window, period and validity")
    p.add_argument("source", help="cycle notation, census JSON, a file holding either, or -")
    p.add_argument("--n", type=int, help="size of the ground set for cycle notation")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("invert", parents=[common], help="recover the census from a window")
    p.add_argument("source", help="window file (JSON or 'k value' lines) or -")
    p.add_argument("--method", choices=("mobius", "greedy", "both"), default="both")
    p.add_argument("--truncated", action="store_true",
                   help="the window is a prefix of a longer function")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("validate", parents=[common],
                       help="check whether a window can be a fixed point counting function")
    p.add_argument("source")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("oracle", parents=[common],
                       help="brute-force fixed point counts against the formula")
    p.add_argument("source", help="cycle notation (or a file holding it)")
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int, default=MAX_N)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("period", parents=[common], help="period of the fixed point counting function")
    p.add_argument("source")
    p.add_argument("--n", type=int)
    p.add_argument("--from-window", action="store_true",
                   help="treat source as a window file and search it for a period")
    p.set_defaults(func=cmd_period)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalMismatch as exc:
        print(f"internal mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
