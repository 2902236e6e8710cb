"""Command-line interface: ``sphere-closure {closure,sample,verify,embeddings,rhs}``.

Exit codes: 0 ok, 2 bad input, 3 math failure, 4 verification failure.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .closure import compute_closure, rhs_constraints
from .errors import MathError, SchemaError
from .geometry import POINT
from .io import ball_to_json, closure_to_json, dumps, fmt_rational, load_spec, rhs_to_json
from .numberfield import embeddings
from .sampler import density_probe, sample_rational_points, verify_samples

EXIT_OK, EXIT_INPUT, EXIT_MATH, EXIT_VERIFY = 0, 2, 3, 4
DEFAULT_DIGITS = 64


def _default_digits() -> int:
    raw = os.environ.get("SPHERE_CLOSURE_DIGITS")
    if raw is None:
        return DEFAULT_DIGITS
    try:
        return int(raw)
    except ValueError:
        raise SchemaError(f"SPHERE_CLOSURE_DIGITS must be an integer, got {raw!r}", "env") from None


def _read_spec(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SchemaError(f"cannot read {path}: {exc.strerror}", "$") from None
    return load_spec(text)


def _emit(obj, out: str | None) -> None:
    text = dumps(obj)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_closure(args) -> int:
    spec = _read_spec(args.input)
    closure = compute_closure(spec)
    doc = closure_to_json(spec, closure, args.digits)
    doc["rhs"] = rhs_to_json(rhs_constraints(spec, args.digits), args.digits)
    _emit(doc, args.out)
    return EXIT_OK


def cmd_sample(args) -> int:
    spec = _read_spec(args.input)
    pts = sample_rational_points(spec, args.count, args.height, args.seed)
    _emit({"count": len(pts), "samples": [[fmt_rational(v) for v in x] for x in pts]}, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _read_spec(args.input)
    closure = compute_closure(spec)
    pts = sample_rational_points(spec, args.count, args.height, args.seed)
    tol = Fraction(args.tol) if args.tol is not None else None
    report = verify_samples(spec, closure, pts, args.digits, tol)
    doc = {"kind": closure.kind, "dim": closure.dim, "verify": report.to_json(), "probe": None}
    ok = report.passed
    if args.probe_budget > 0 and closure.kind != POINT and closure.dim >= 1:
        probe = density_probe(spec, closure, pts, args.probe_eps, args.probe_budget, args.seed)
        doc["probe"] = probe.to_json()
        ok = ok and probe.passed
    doc["passed"] = ok
    _emit(doc, args.out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_embeddings(args) -> int:
    spec = _read_spec(args.input)
    emb = embeddings(spec.field, args.digits)
    _emit({
        "degree": spec.field.degree,
        "designated_index": emb.designated_index,
        "roots": [ball_to_json(r, args.digits) for r in emb.roots],
    }, args.out)
    return EXIT_OK


def cmd_rhs(args) -> int:
    spec = _read_spec(args.input)
    _emit(rhs_to_json(rhs_constraints(spec, args.digits), args.digits), args.out)
    return EXIT_OK


def build_parser(digits: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sphere-closure",
        description="Closure of the rational points of a sphere with algebraic center.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="problem JSON file, or - for stdin")
        p.add_argument("--out", help="write JSON here instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("closure", cmd_closure, "compute the closure")
    p.add_argument("--digits", type=int, default=digits)

    for name, func, text in (("sample", cmd_sample, "emit exact rational samples"),
                             ("verify", cmd_verify, "sample and verify against the closure")):
        p = add(name, func, text)
        p.add_argument("--count", type=int, default=1000)
        p.add_argument("--height", type=int, default=50)
        p.add_argument("--seed", type=int, default=0)
        if name == "verify":
            p.add_argument("--digits", type=int, default=digits)
            p.add_argument("--tol", default=None, help="numeric tolerance, e.g. 1e-50")
            p.add_argument("--probe-eps", type=float, default=0.05)
            p.add_argument("--probe-budget", type=int, default=100,
                           help="density probe targets; 0 disables the probe")

    p = add("embeddings", cmd_embeddings, "certified roots of the minimal polynomial")
    p.add_argument("--digits", type=int, default=digits)
    p = add("rhs", cmd_rhs, "numeric sphere/hyperplane constraints per embedding")
    p.add_argument("--digits", type=int, default=digits)
    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser(_default_digits())
        args = parser.parse_args(argv)
        return args.func(args)
    except SchemaError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (MathError, ValueError) as exc:
        print(f"math error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
