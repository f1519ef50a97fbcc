"""Command-line front end: every decision procedure, machine-readable output.

Inputs come either from flags (for humans) or from a JSON request document
on standard input (for harnesses).  Reports are JSON with exact "num/den"
strings as the authoritative values; decimal fields are annotated
approximations.  Tabular commands (sweep, lorenz) emit CSV with a header
row and LF line endings.

Exit codes: 0 = evaluated (whatever the verdict), 1 = input error,
2 = internal consistency failure (interval theorem and brute-force oracle
disagree, which indicates a bug, never a valid state).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .catalysis import FeasibilityReport, Verdict, analyze, compute_M, compute_m, is_valid_catalyst
from .constructor import construct_states
from .majorization import first_violated_index, lorenz_points, partial_sums
from .oracle import oracle_valid_catalyst, sweep, sweep_grid
from .rationals import ExtendedRational, parse_rational, render_decimal, render_rational
from .spectra import (
    CatalystSpectrum,
    Spectrum4,
    epsilon_decompose,
    make_catalyst,
    make_spectrum,
)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INCONSISTENT = 2


class InputError(Exception):
    """Malformed flags or request document."""


class _Parser(argparse.ArgumentParser):
    # argparse's default error() exits with status 2, which is reserved here
    # for internal consistency failures; route usage errors to exit 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise InputError(message)


def _rational_field(value: ExtendedRational) -> dict:
    decimal, exact = render_decimal(value)
    return {
        "exact": render_rational(value),
        "decimal": decimal,
        "decimal_is_exact": exact,
    }


def _rational_strings(values) -> list[str]:
    return [render_rational(v) for v in values]


def _parse_components(text: str) -> list[Fraction]:
    try:
        return [parse_rational(part.strip()) for part in text.split(",")]
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _spectrum_from_strings(values, label: str) -> Spectrum4:
    if not isinstance(values, (list, tuple)):
        raise InputError(f"{label} must be an array of rational strings")
    try:
        return make_spectrum([parse_rational(str(v)) for v in values])
    except (ValueError, TypeError) as exc:
        raise InputError(f"{label}: {exc}") from None


def _load_document() -> dict:
    if sys.stdin.isatty():
        raise InputError(
            "missing flags and standard input is a terminal; "
            "pass flags or pipe a JSON request document"
        )
    try:
        document = json.load(sys.stdin)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON request document: {exc}") from None
    if not isinstance(document, dict):
        raise InputError("request document must be a JSON object")
    return document


def _emit_json(document: dict) -> None:
    print(json.dumps(document, indent=2))


def _spectrum_pair(args: argparse.Namespace) -> tuple[Spectrum4, Spectrum4, dict]:
    """Source/target from flags, or from a stdin document; returns the
    document too so commands can read their extra optional keys."""
    document: dict = {}
    if args.source is None and args.target is None:
        document = _load_document()
        if "source" not in document or "target" not in document:
            raise InputError("request document needs 'source' and 'target' arrays")
        source = _spectrum_from_strings(document["source"], "source")
        target = _spectrum_from_strings(document["target"], "target")
        return source, target, document
    if args.source is None or args.target is None:
        raise InputError("provide both --source and --target, or neither (stdin document)")
    try:
        source = make_spectrum(_parse_components(args.source))
        target = make_spectrum(_parse_components(args.target))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return source, target, document


def _cmd_check_locc(args: argparse.Namespace) -> int:
    source, target, _ = _spectrum_pair(args)
    violated = first_violated_index(source.alpha, target.alpha)
    _emit_json(
        {
            "possible": violated is None,
            "partial_sums_source": _rational_strings(partial_sums(source.alpha)),
            "partial_sums_target": _rational_strings(partial_sums(target.alpha)),
            "first_violated_index": violated,
        }
    )
    return EXIT_OK


def _report_json(report: FeasibilityReport) -> dict:
    def interval(pair) -> Optional[list]:
        if pair is None:
            return None
        return [_rational_field(pair[0]), _rational_field(pair[1])]

    reason = None
    if report.reason is not None:
        reason = {"kind": report.reason.kind}
        if report.reason.star_violation is not None:
            reason["condition"] = report.reason.star_violation.value
            reason["violated_inequality"] = report.reason.star_violation.inequality
    return {
        "verdict": report.verdict.value,
        "m": None if report.m is None else _rational_field(report.m),
        "M": None if report.M is None else _rational_field(report.M),
        "r_interval": interval(report.r_interval),
        "p_interval": interval(report.p_interval),
        "reason": reason,
    }


def _cmd_analyze(args: argparse.Namespace) -> int:
    source, target, _ = _spectrum_pair(args)
    _emit_json(_report_json(analyze(source, target)))
    return EXIT_OK


def _catalyst_from_args(args: argparse.Namespace, document: dict) -> CatalystSpectrum:
    catalyst_text = args.catalyst
    p_text = args.p
    if catalyst_text is None and p_text is None:
        if "catalyst" in document:
            raw = document["catalyst"]
            if not isinstance(raw, list):
                raise InputError("'catalyst' must be an array of rational strings")
            catalyst_text = ",".join(str(v) for v in raw)
        elif "p" in document:
            p_text = str(document["p"])
    if (catalyst_text is None) == (p_text is None):
        raise InputError("provide exactly one of --catalyst or --p (or a document key)")
    try:
        if catalyst_text is not None:
            return make_catalyst(_parse_components(catalyst_text))
        p = parse_rational(p_text)
        return make_catalyst((p, 1 - p))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _cmd_validate(args: argparse.Namespace) -> int:
    source, target, document = _spectrum_pair(args)
    catalyst = _catalyst_from_args(args, document)
    report = analyze(source, target)
    already_possible = report.verdict is Verdict.LOCC_ALREADY_POSSIBLE
    oracle_verdict = oracle_valid_catalyst(source, target, catalyst)
    theorem_verdict: Optional[bool] = None
    if len(catalyst) == 2:
        if already_possible:
            # Majorization survives pairing with any shared catalyst, so the
            # transformation stays possible; no interval check applies.
            theorem_verdict = True
        else:
            theorem_verdict = is_valid_catalyst(source, target, catalyst[0])
    agree = theorem_verdict is None or theorem_verdict == oracle_verdict
    _emit_json(
        {
            "catalyst": _rational_strings(catalyst),
            "p": render_rational(catalyst[0]) if len(catalyst) == 2 else None,
            "locc_already_possible": already_possible,
            "theorem_verdict": theorem_verdict,
            "oracle_verdict": oracle_verdict,
            "agree": agree,
        }
    )
    if not agree:
        print(
            "internal consistency failure: interval theorem and oracle disagree",
            file=sys.stderr,
        )
        return EXIT_INCONSISTENT
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    source, target, document = _spectrum_pair(args)
    denominator = args.denominator
    if denominator is None:
        denominator = document.get("grid_denominator", 1000)
    if not isinstance(denominator, int) or denominator < 1:
        raise InputError(f"grid denominator must be a positive integer, got {denominator!r}")
    report = analyze(source, target)
    grid = sweep_grid(denominator, report.p_interval)
    print("p,p_decimal,valid")
    for p, valid in sweep(source, target, grid):
        print(f"{render_rational(p)},{render_decimal(p)[0]},{1 if valid else 0}")
    return EXIT_OK


def _cmd_construct(args: argparse.Namespace) -> int:
    m0_text, big_m0_text, mu_text = args.m0, args.M0, args.mu
    if m0_text is None and big_m0_text is None:
        document = _load_document()
        if "m0" not in document or "M0" not in document:
            raise InputError("request document needs 'm0' and 'M0'")
        m0_text = str(document["m0"])
        big_m0_text = str(document["M0"])
        if "mu" in document:
            mu_text = str(document["mu"])
    if m0_text is None or big_m0_text is None:
        raise InputError("provide both --m0 and --M0, or neither (stdin document)")
    try:
        m0 = parse_rational(m0_text)
        big_m0 = parse_rational(big_m0_text)
        mu = None if mu_text is None else parse_rational(mu_text)
        result = construct_states(m0, big_m0, mu)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    eps = epsilon_decompose(result.source, result.target)
    _emit_json(
        {
            "branch": result.branch.value,
            "mu": _rational_field(result.mu),
            "a": _rational_field(result.a),
            "source": _rational_strings(result.source),
            "target": _rational_strings(result.target),
            "epsilon": _rational_strings((eps.eps1, eps.eps2, eps.eps3)),
            "recomputed_m": _rational_field(compute_m(result.source, eps)),
            "recomputed_M": _rational_field(compute_M(result.source, eps)),
        }
    )
    return EXIT_OK


def _cmd_lorenz(args: argparse.Namespace) -> int:
    if args.spectra:
        spectra = []
        for text in args.spectra:
            try:
                spectra.append(make_spectrum(_parse_components(text)))
            except ValueError as exc:
                raise InputError(str(exc)) from None
    else:
        document = _load_document()
        raw = document.get("spectra")
        if raw is None and "source" in document:
            raw = [document["source"]]
        if not isinstance(raw, list) or not raw:
            raise InputError("request document needs a nonempty 'spectra' array")
        spectra = [
            _spectrum_from_strings(values, f"spectra[{i}]") for i, values in enumerate(raw)
        ]
    for index, spectrum in enumerate(spectra):
        if index:
            print()
        print("k_over_n,lambda,lambda_decimal")
        for k_over_n, cumulative in lorenz_points(spectrum.alpha):
            print(
                f"{render_rational(k_over_n)},{render_rational(cumulative)},"
                f"{render_decimal(cumulative)[0]}"
            )
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="qcatalyst",
        description=(
            "Exact decision procedures for four-state LOCC transformations "
            "and two-qubit entanglement catalysis."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_pair_flags(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--source", help="source spectrum, e.g. 0.4,0.4,0.1,0.1")
        sub.add_argument("--target", help="target spectrum, e.g. 0.5,0.25,0.25,0")

    sub = subparsers.add_parser("check-locc", help="decide plain LOCC convertibility")
    add_pair_flags(sub)
    sub.set_defaults(handler=_cmd_check_locc)

    sub = subparsers.add_parser("analyze", help="full catalyzability report")
    add_pair_flags(sub)
    sub.set_defaults(handler=_cmd_analyze)

    sub = subparsers.add_parser("validate", help="check one specific catalyst")
    add_pair_flags(sub)
    sub.add_argument("--catalyst", help="catalyst spectrum, e.g. 0.6,0.4")
    sub.add_argument("--p", help="two-qubit catalyst parameter p in [1/2, 1]")
    sub.set_defaults(handler=_cmd_validate)

    sub = subparsers.add_parser("sweep", help="oracle verdicts over a p grid (CSV)")
    add_pair_flags(sub)
    sub.add_argument("--denominator", type=int, help="grid denominator d (default 1000)")
    sub.set_defaults(handler=_cmd_sweep)

    sub = subparsers.add_parser("construct", help="build a pair with prescribed bounds")
    sub.add_argument("--m0", help="target lower ratio bound, m0 > 0")
    sub.add_argument("--M0", help="target upper ratio bound, 0 < M0 < 1")
    sub.add_argument("--mu", help="pin the perturbation size instead of searching")
    sub.set_defaults(handler=_cmd_construct)

    sub = subparsers.add_parser("lorenz", help="Lorenz curve points (CSV)")
    sub.add_argument("spectra", nargs="*", help="spectra, e.g. 0.4,0.4,0.1,0.1")
    sub.set_defaults(handler=_cmd_lorenz)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
