"""Command-line front end.

Subcommands: exponent (gradient of a germ), ideal (single-ideal and tuple
exponents, nu-bar orders), sigma, matching, transform, corpus.  Human
output prints value, certificate, witness and a trace summary; --json
emits a stable schema with rationals as {"num", "den"} strings.

Exit codes: 0 success, 1 input error, 2 hypothesis warning, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .corpus import run_corpus
from .errors import InputError, LojexError, ResourceCapError
from .exponents import (
    ExponentResult,
    asymptotic_order,
    bound_chain,
    check_w_matching,
    loj_gradient,
    loj_monomial_ideal,
    loj_relative_ideal,
    loj_set,
    matching_coordinate_change,
)
from .ideals import MonomialIdeal
from .multiplicity import IdealTuple, oracle_generic_multiplicity, r_number, sigma
from .parsing import parse_generators, parse_polynomial
from .poly import Polynomial, Weights

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_WARNING = 2
EXIT_RESOURCE = 3


def _rational_json(value):
    if value is None:
        return None
    if value == math.inf:
        return "infinity"
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _rational_text(value) -> str:
    if value == math.inf:
        return "infinity"
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _witness_json(witness):
    if witness is None:
        return None
    return {"tau": list(witness.tau), "i0": witness.i0}


def _trace_json(trace):
    return [
        {"s": t.s, "r": t.r, "ratio": _rational_json(t.ratio)} for t in trace
    ]


def _result_payload(command: str, inputs: dict, result: ExponentResult | None,
                    warnings: list[str], extra: dict | None = None) -> dict:
    payload = {
        "command": command,
        "inputs": inputs,
        "value": _rational_json(result.value) if result else None,
        "certificate": result.certificate if result else None,
        "witness": _witness_json(result.witness) if result else None,
        "trace": _trace_json(result.search_trace) if result else [],
        "warnings": list(warnings),
        "determinacy": result.determinacy if result else None,
    }
    if extra:
        payload["extra"] = extra
    return payload


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in lines:
            print(line)


def _describe_result(result: ExponentResult) -> list[str]:
    lines = [f"value: {_rational_text(result.value)}"]
    lines.append(f"certificate: {result.certificate}")
    if result.witness is not None:
        lines.append(
            f"witness: tau={list(result.witness.tau)} i0={result.witness.i0}"
        )
    if result.determinacy is not None:
        lines.append(f"determinacy: {result.determinacy}")
    if result.bound is not None:
        lines.append(f"upper bound: {_rational_text(result.bound)}")
    if result.search_trace:
        summary = ", ".join(
            f"s={t.s}:r={t.r}" for t in result.search_trace if t.s is not None
        )
        lines.append(f"trace: {summary}")
        best = min(t.ratio for t in result.search_trace)
        lines.append(f"trace minimum: {_rational_text(best)}")
    for note in result.notes:
        lines.append(f"note: {note}")
    return lines


def _parse_weights(text: str) -> Weights:
    return Weights.from_text(text)


def _parse_ideal(text: str, dimension: int | None) -> MonomialIdeal:
    return MonomialIdeal.from_polynomials(parse_generators(text, dimension))


def _parse_ideal_list(text: str, dimension: int | None) -> IdealTuple:
    chunks = [chunk.strip() for chunk in text.split("|")]
    if any(not chunk for chunk in chunks):
        raise InputError("empty ideal in the list")
    if dimension is None:
        dimension = max(
            poly.dim for chunk in chunks for poly in parse_generators(chunk)
        )
    return IdealTuple(tuple(_parse_ideal(chunk, dimension) for chunk in chunks))


def _cmd_exponent(args) -> int:
    w = _parse_weights(args.weights)
    f = parse_polynomial(args.function, dimension=len(w))
    if args.degree is not None and f.weighted_degree(w) != args.degree:
        raise InputError(
            f"declared degree {args.degree} but the weighted degree is "
            f"{f.weighted_degree(w)}"
        )
    result = loj_gradient(
        f,
        w,
        seed=args.seed,
        assume_isolated=args.assume_isolated,
        s_max=args.smax,
        jobs=args.jobs,
    )
    inputs = {"function": str(f), "weights": list(w.entries), "seed": args.seed}
    _emit(
        _result_payload("exponent", inputs, result, []),
        args.json,
        _describe_result(result),
    )
    return EXIT_OK


def _cmd_ideal(args) -> int:
    warnings: list[str] = []
    if args.action == "l0":
        if args.ideals:
            w = _parse_weights(args.weights) if args.weights else None
            tup = _parse_ideal_list(args.ideals, len(w) if w else None)
            j_ideal = (
                _parse_ideal(args.relative_ideal, tup.dim)
                if args.relative_ideal
                else None
            )
            if args.chain:
                if w is None:
                    raise InputError("--chain requires --weights")
                report = bound_chain(tup, w, s_max=args.smax)
                warnings.extend(report.warnings)
                lines = [f"bound: {_rational_text(report.value_bound)}"]
                for name, piece in report.lower_pieces.items():
                    text = (
                        _rational_text(piece.value) if piece is not None else "skipped"
                    )
                    lines.append(f"exponent[{name}]: {text}")
                lines.append(f"exact: {report.exact}")
                lines.extend(f"warning: {note}" for note in report.warnings)
                extra = {
                    "bound": _rational_json(report.value_bound),
                    "exact": report.exact,
                    "pieces": {
                        name: (_rational_json(piece.value) if piece else None)
                        for name, piece in report.lower_pieces.items()
                    },
                }
                inputs = {"ideals": args.ideals, "weights": list(w.entries)}
                _emit(
                    _result_payload("ideal", inputs, None, warnings, extra),
                    args.json,
                    lines,
                )
                return EXIT_WARNING if warnings else EXIT_OK
            result = loj_set(
                tup, j_ideal, weights=w, s_max=args.smax, jobs=args.jobs
            )
            inputs = {"ideals": args.ideals, "seed": args.seed}
        else:
            ideal = _parse_ideal(args.gens, None)
            if args.relative_ideal:
                j_ideal = _parse_ideal(args.relative_ideal, ideal.dim)
                value = loj_relative_ideal(ideal, j_ideal)
                result = ExponentResult(value=value, certificate="ExactByAxis")
            else:
                result = loj_monomial_ideal(ideal)
            inputs = {"gens": args.gens}
        _emit(
            _result_payload("ideal", inputs, result, warnings),
            args.json,
            _describe_result(result),
        )
        return EXIT_OK
    if args.action == "nubar":
        ideal = _parse_ideal(args.gens, None)
        if args.function:
            target = parse_polynomial(args.function, ideal.dim)
        else:
            target = MonomialIdeal.maximal(ideal.dim)
        mode = "plain" if args.plain else "asymptotic"
        value = asymptotic_order(ideal, target, mode)
        inputs = {"gens": args.gens, "function": args.function, "mode": mode}
        payload = _result_payload("ideal", inputs, None, [])
        payload["value"] = _rational_json(value)
        _emit(payload, args.json, [f"order: {_rational_text(value)}"])
        return EXIT_OK
    raise InputError(f"unknown ideal action {args.action!r}")


def _cmd_sigma(args) -> int:
    tup = _parse_ideal_list(args.ideals, None)
    value = sigma(tup, seed=args.seed, cross_check=True)
    warnings = []
    if "oracle saw" in value.detail:
        warnings.append(value.detail)
    lines = [f"sigma: {_rational_text(value.value)} ({value.method})"]
    if value.detail:
        lines.append(f"detail: {value.detail}")
    extra = {"method": value.method, "detail": value.detail}
    if value.is_finite:
        j_ideal = (
            _parse_ideal(args.relative_ideal, tup.dim)
            if args.relative_ideal
            else None
        )
        r_value = r_number(tup, j_ideal, sigma_hint=int(value.value))
        lines.append(f"r: {r_value}")
        extra["r"] = r_value
    else:
        report = oracle_generic_multiplicity(tup, seed=args.seed)
        extra["oracle_trials"] = [
            "infinity" if t == math.inf else t for t in report.trials
        ]
    inputs = {"ideals": args.ideals, "seed": args.seed}
    payload = _result_payload("sigma", inputs, None, warnings, extra)
    payload["value"] = _rational_json(value.value)
    _emit(payload, args.json, lines + [f"warning: {w}" for w in warnings])
    return EXIT_WARNING if warnings else EXIT_OK


def _cmd_matching(args) -> int:
    w = _parse_weights(args.weights)
    tup = _parse_ideal_list(args.ideals, len(w))
    witness = check_w_matching(tup, w)
    inputs = {"ideals": args.ideals, "weights": list(w.entries)}
    payload = _result_payload("matching", inputs, None, [])
    payload["witness"] = _witness_json(witness)
    if witness is None:
        lines = ["no w-matching"]
    else:
        lines = [f"w-matching: tau={list(witness.tau)} i0={witness.i0}"]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _render_substitution(images, shifts) -> list[str]:
    lines = []
    for j, (image, shift) in enumerate(zip(images, shifts), start=1):
        if shift.is_zero():
            continue
        lines.append(f"x{j} = y{j} + {str(shift).replace('x', 'y')}")
    if not lines:
        lines.append("identity change (already convenient)")
    return lines


def _cmd_transform(args) -> int:
    w = _parse_weights(args.weights)
    f = parse_polynomial(args.function, dimension=len(w))
    principal = f.principal_part(w)
    result = matching_coordinate_change(principal, w, seed=args.seed)
    lines = _render_substitution(result.change.images, result.change.shifts)
    lines.append(f"image: {str(result.g).replace('x', 'y')}")
    lines.append(f"convenient: {result.g.is_convenient()}")
    extra = {
        "substitution": {
            f"x{j + 1}": str(img).replace("x", "y")
            for j, img in enumerate(result.change.images)
        },
        "coefficients": {
            f"{j},{i}": c for (j, i), c in sorted(result.change.coefficients.items())
        },
        "image": str(result.g).replace("x", "y"),
        "convenient": result.g.is_convenient(),
    }
    inputs = {"function": str(f), "weights": list(w.entries), "seed": args.seed}
    _emit(_result_payload("transform", inputs, None, [], extra), args.json, lines)
    return EXIT_OK


def _cmd_corpus(args) -> int:
    items = run_corpus(seed=args.seed)
    if args.json:
        payload = {
            "command": "corpus",
            "inputs": {"seed": args.seed},
            "items": [
                {"key": item.key, "passed": item.passed, "detail": item.detail}
                for item in items
            ],
            "passed": all(item.passed for item in items),
        }
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for item in items:
            flag = "PASS" if item.passed else "FAIL"
            print(f"{flag} {item.key}: {item.description}")
            if not item.passed:
                print(f"     {item.detail}")
    return EXIT_OK if all(item.passed for item in items) else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lojex",
        description="Exact Lojasiewicz exponents of monomial ideal tuples "
        "and semi-weighted homogeneous germs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--seed", type=int, default=0, help="random seed")
        p.add_argument("--jobs", type=int, default=1, help="concurrent workers")
        p.add_argument("--smax", type=int, default=None, help="largest power sampled")

    p = sub.add_parser("exponent", help="gradient exponent of a germ")
    p.add_argument("--weights", required=True)
    p.add_argument("--function", required=True)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--assume-isolated", action="store_true")
    common(p)
    p.set_defaults(run=_cmd_exponent)

    p = sub.add_parser("ideal", help="single-ideal or tuple exponents")
    p.add_argument("action", choices=["l0", "nubar"])
    p.add_argument("--gens", help="generators of one ideal")
    p.add_argument("--ideals", help="ideal list separated by |")
    p.add_argument("--weights")
    p.add_argument("--relative-ideal", dest="relative_ideal")
    p.add_argument("--function", help="target of a nubar order")
    p.add_argument("--plain", action="store_true", help="literal power order")
    p.add_argument("--chain", action="store_true", help="filtration bound chain")
    common(p)
    p.set_defaults(run=_cmd_ideal)

    p = sub.add_parser("sigma", help="Rees mixed multiplicity of a tuple")
    p.add_argument("--ideals", required=True)
    p.add_argument("--relative-ideal", dest="relative_ideal")
    common(p)
    p.set_defaults(run=_cmd_sigma)

    p = sub.add_parser("matching", help="search for a w-matching")
    p.add_argument("--weights", required=True)
    p.add_argument("--ideals", required=True)
    common(p)
    p.set_defaults(run=_cmd_matching)

    p = sub.add_parser("transform", help="convenient-making coordinate change")
    p.add_argument("--weights", required=True)
    p.add_argument("--function", required=True)
    common(p)
    p.set_defaults(run=_cmd_transform)

    p = sub.add_parser("corpus", help="run the built-in verification corpus")
    common(p)
    p.set_defaults(run=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LojexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
