"""Command-line front end.

Every compute subcommand parses its set arguments, calls the core package
in-process, and prints either a human-oriented table or machine JSON
(--json). `serve` starts the HTTP service wrapping the same core.

Exit codes: 0 success; 1 malformed input; 2 domain precondition failed
(e.g. the set is not a basis); 3 a property violation was detected — by the
census, or by an internal law check, which would mean a genuine bug.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .basis import analyze, essential_elements, order
from .census import CensusConfig, random_basis, run_census
from .errors import InputError, InvalidInput, LawViolation, PreconditionError
from .essentia import essential_subsets, proof_trace, verify_essentiality
from .intset import PeriodicSet, parse_set
from .oracle import empirical_order, sumset_window

__all__ = ["CensusConfig", "parse_set", "random_basis", "run", "main", "entry"]


def _parse_window(text: str) -> tuple[int, int]:
    lo_text, sep, hi_text = text.partition(":")
    if not sep:
        raise InvalidInput(f"window must look like LO:HI, got {text!r}")
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise InvalidInput(f"window bounds must be integers, got {text!r}") from None
    if lo > hi:
        raise InvalidInput(f"window lo > hi: {text!r}")
    return lo, hi


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _describe(s: PeriodicSet) -> str:
    return str(s)


def _cmd_analyze(args) -> int:
    s = parse_set(args.set)
    report = analyze(s)
    lines = [f"set: {_describe(s)}",
             f"is_basis: {str(report.is_basis).lower()}",
             f"diff_gcd: {report.diff_gcd}"]
    if report.is_basis:
        lines.append(f"order: {report.order}")
    else:
        lines.append(f"failure_reason: {report.failure_reason}")
    _emit(report.to_json_dict(), args.json, lines)
    return 0


def _cmd_order(args) -> int:
    h = order(parse_set(args.set))
    _emit({"order": h}, args.json, [f"order: {h}"])
    return 0


def _cmd_essential_elements(args) -> int:
    elems = essential_elements(parse_set(args.set))
    _emit({"elements": list(elems)}, args.json,
          [f"essential elements: {set(elems) if elems else '{}'}"])
    return 0


def _cmd_essential_subsets(args) -> int:
    family = essential_subsets(parse_set(args.set))
    payload = {"subsets": [es.to_json_dict() for es in family]}
    lines = [f"{len(family)} essential subset(s)"]
    for i, es in enumerate(family, start=1):
        lines.append(f"  P_{i} = {set(es.members)}  d={es.d_value}"
                     f"  witness primes {set(es.witness_primes)}")
    _emit(payload, args.json, lines)
    return 0


def _cmd_verify(args) -> int:
    s = parse_set(args.set)
    p = parse_set(args.p)
    check = verify_essentiality(s, p)
    if check.holds:
        lines = ["true"]
    else:
        reason = check.failure
        if check.witness is not None:
            reason = f"{reason} (witness {check.witness})"
        lines = [f"false ({reason})"]
    _emit(check.to_json_dict(), args.json, lines)
    return 0


def _cmd_trace(args) -> int:
    trace = proof_trace(parse_set(args.set))
    n = len(trace.essential_family)
    lines = [f"{n} essential subset(s); I = {{1..{n}}}" if n else
             "0 essential subsets; degenerate trace"]
    for i, es in enumerate(trace.essential_family, start=1):
        lines.append(f"  P_{i} = {set(es.members)}  d={es.d_value}")
    if trace.alpha is not None:
        lines.append(f"alpha = {trace.alpha}")
        lines.append(f"lambda = {set(trace.lambda_set) if trace.lambda_set else '{}'}")
        for x, i in sorted(trace.choice.items()):
            lines.append(f"  i({x}) = {i}")
        for (x, y), js in sorted(trace.j_sets.items()):
            lines.append(f"  J_({x},{y}) = {set(js) if js else '{}'}")
        lines.append(f"i_tilde = {set(trace.i_tilde)} (covers all {n})")
    _emit(trace.to_json_dict(), args.json, lines)
    return 0


def _cmd_oracle(args) -> int:
    s = parse_set(args.set)
    if args.h is not None:
        if args.window is None:
            raise InvalidInput("--h needs an explicit --window LO:HI")
        lo, hi = _parse_window(args.window)
        win = sumset_window(s, args.h, lo, hi)
        covered = win.covered()
        gaps = win.missing()
        lines = [f"{args.h}-fold sumset on [{lo}, {hi}): "
                 f"{'covers the window' if covered else f'{len(gaps)} gaps'}"]
        if gaps:
            shown = ", ".join(map(str, gaps[:12]))
            lines.append(f"  first gaps: {shown}{' …' if len(gaps) > 12 else ''}")
        payload = win.to_json_dict()
        payload["covered"] = covered
        _emit(payload, args.json, lines)
        return 0
    if args.window is None:
        lo = 10 * s.modulus * args.h_max
        hi = lo + 3 * s.modulus * args.h_max
    else:
        lo, hi = _parse_window(args.window)
    verdict = empirical_order(s, args.h_max, lo, hi)
    if verdict.order is None:
        lines = [f"NoneUpTo({args.h_max}) on [{lo}, {hi})"
                 + (f"; first gap {verdict.first_gap}" if verdict.first_gap is not None
                    else "")]
    else:
        lines = [f"empirical order: {verdict.order} (window [{lo}, {hi}))"]
    _emit(verdict.to_json_dict(), args.json, lines)
    return 0


def _cmd_census(args) -> int:
    config = CensusConfig(trials=args.trials, seed=args.seed,
                          modulus_max=args.m_max, exceptional_max=args.e_max,
                          residue_density=args.density,
                          window=_parse_window(args.window))
    report = run_census(config)
    lines = [f"trials: {report.bases}",
             f"essential subsets found: {report.families_total} "
             f"(largest family {report.max_family_size})"]
    for law in sorted(report.checks):
        lines.append(f"  {law}: {report.checks[law]} checks")
    lines.append(f"violations: {report.violation_count}")
    for v in report.violations:
        lines.append(f"  [{v.law}] trial {v.trial} {v.set_text}: {v.detail}")
    _emit(report.to_json_dict(), args.json, lines)
    return 3 if report.violation_count else 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="addbasis",
        description="Exact analysis of additive bases given as eventually "
                    "periodic integer sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_set_command(name: str, handler, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("set", help="set description: text form "
                                   "'E={1,5}; m=6; R={0}; N0=0', JSON, or one of "
                                   "naturals/evens/odds")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(handler=handler)
        return p

    add_set_command("analyze", _cmd_analyze,
                    "basis verdict, difference gcd, and order")
    add_set_command("order", _cmd_order, "exact order of the basis")
    add_set_command("essential-elements", _cmd_essential_elements,
                    "elements whose removal destroys the basis")
    add_set_command("essential-subsets", _cmd_essential_subsets,
                    "all finite essentialities, with d-values and witness primes")
    verify = add_set_command("verify", _cmd_verify,
                             "check a candidate essentiality (finite or infinite)")
    verify.add_argument("--p", required=True,
                        help="candidate subset, same formats as the set")
    add_set_command("trace", _cmd_trace,
                    "finiteness certificate for the essential-subset family")
    oracle = add_set_command("oracle", _cmd_oracle,
                             "brute-force sumset evidence over a window")
    oracle.add_argument("--h", type=int, default=None,
                        help="compute one h-fold sumset window instead of "
                             "probing for the order")
    oracle.add_argument("--h-max", type=int, default=6,
                        help="largest h to probe (default 6)")
    oracle.add_argument("--window", default=None,
                        help="window LO:HI (default scales with the modulus)")

    census = sub.add_parser("census",
                            help="random corpus of bases; checks every law, "
                                 "expects zero violations")
    census.add_argument("--trials", type=int, default=100)
    census.add_argument("--seed", type=int, default=0)
    census.add_argument("--m-max", type=int, default=60)
    census.add_argument("--e-max", type=int, default=6)
    census.add_argument("--density", type=float, default=0.5)
    census.add_argument("--window", default="0:120", help="pairwise-check window LO:HI")
    census.add_argument("--json", action="store_true")
    census.set_defaults(handler=_cmd_census)

    serve = sub.add_parser("serve", help="start the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(handler=_cmd_serve)
    return parser


def run(argv: Sequence[str]) -> int:
    """Parse argv (without the program name) and execute; returns the exit
    code instead of raising, so both main() and tests can call it."""
    parser = build_parser()
    args = parser.parse_args(list(argv))
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LawViolation as exc:
        print(f"law violation (this is a bug): {exc}", file=sys.stderr)
        return 3


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


def entry() -> None:
    raise SystemExit(main())
