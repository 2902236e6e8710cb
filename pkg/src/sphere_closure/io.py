"""JSON input parsing and output encoding.

Exact values are written as ``"p/q"`` strings (``"p"`` for integers);
approximate values as scientific-notation decimals with an explicit number
of significant digits.
"""
from __future__ import annotations

import json
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any

import mpmath

from .errors import SchemaError
from .geometry import GENERALIZED, THEOREM, ClosureObject, QuadraticForm, SphereSpec
from .numberfield import FieldElement, embeddings, eval_element, make_field
from .roots import ComplexBall

_KEYS = {"n", "field", "center", "base_point", "form", "mode"}


def parse_rational(value: Any, path: str = "$") -> Fraction:
    """Accept ints and ``"p/q"`` / ``"p"`` strings; floats are rejected."""
    if isinstance(value, bool):
        raise SchemaError("expected a rational, got a boolean", path)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(c in text for c in ".eE") or not text:
            raise SchemaError(f"not an exact rational: {value!r}", path)
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"not an exact rational: {value!r}", path) from None
    if isinstance(value, float):
        raise SchemaError("floating-point literals are not accepted in exact fields", path)
    raise SchemaError(f"expected a rational, got {type(value).__name__}", path)


def _rational_list(value: Any, path: str) -> list[Fraction]:
    if not isinstance(value, list):
        raise SchemaError("expected a list", path)
    return [parse_rational(v, f"{path}[{i}]") for i, v in enumerate(value)]


def _interval(value: Any, path: str) -> tuple[Fraction, Fraction]:
    pair = _rational_list(value, path)
    if len(pair) != 2:
        raise SchemaError("interval must have two endpoints", path)
    if pair[0] > pair[1]:
        raise SchemaError("interval endpoints out of order", path)
    return pair[0], pair[1]


def spec_from_dict(data: Any) -> SphereSpec:
    """Build a :class:`SphereSpec` from the decoded problem JSON."""
    if not isinstance(data, dict):
        raise SchemaError("problem must be a JSON object", "$")
    unknown = set(data) - _KEYS
    if unknown:
        raise SchemaError(f"unknown keys: {sorted(unknown)}", "$")
    for key in ("n", "field", "center", "base_point"):
        if key not in data:
            raise SchemaError(f"missing key {key!r}", "$")
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SchemaError("n must be a positive integer", "$.n")

    fld = data["field"]
    if not isinstance(fld, dict) or "min_poly" not in fld or "root_box" not in fld:
        raise SchemaError("field needs min_poly and root_box", "$.field")
    poly = _rational_list(fld["min_poly"], "$.field.min_poly")
    box = fld["root_box"]
    if not isinstance(box, dict) or set(box) != {"re", "im"}:
        raise SchemaError("root_box needs exactly re and im", "$.field.root_box")
    re_lo, re_hi = _interval(box["re"], "$.field.root_box.re")
    im_lo, im_hi = _interval(box["im"], "$.field.root_box.im")
    try:
        K = make_field(poly, (re_lo, re_hi, im_lo, im_hi))
    except ValueError as exc:
        raise SchemaError(str(exc), "$.field") from None

    center_raw = data["center"]
    if not isinstance(center_raw, list) or len(center_raw) != n:
        raise SchemaError(f"center must list {n} coefficient vectors", "$.center")
    center = []
    for i, coeffs in enumerate(center_raw):
        c = _rational_list(coeffs, f"$.center[{i}]")
        if len(c) > K.degree:
            raise SchemaError(f"at most {K.degree} coefficients allowed", f"$.center[{i}]")
        center.append(K.element(c))

    base = _rational_list(data["base_point"], "$.base_point")
    if len(base) != n:
        raise SchemaError(f"base_point must have {n} coordinates", "$.base_point")

    form = None
    if data.get("form") is not None:
        rows = data["form"]
        if not isinstance(rows, list) or len(rows) != n:
            raise SchemaError(f"form must be an {n}x{n} matrix", "$.form")
        gram = [_rational_list(r, f"$.form[{i}]") for i, r in enumerate(rows)]
        if any(len(r) != n for r in gram):
            raise SchemaError(f"form must be an {n}x{n} matrix", "$.form")
        form = QuadraticForm.definite(gram)

    mode = data.get("mode", THEOREM)
    if mode not in (THEOREM, GENERALIZED):
        raise SchemaError(f"mode must be {THEOREM!r} or {GENERALIZED!r}", "$.mode")
    return SphereSpec(n, K, tuple(center), tuple(base), form, mode)


def load_spec(text: str) -> SphereSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", "$", exc.lineno) from None
    return spec_from_dict(data)


# output

def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_decimal(x, digits: int) -> str:
    """Scientific notation with ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits + 5
        if isinstance(x, Fraction):
            d = Decimal(x.numerator) / Decimal(x.denominator)
        elif isinstance(x, mpmath.mpf):
            d = Decimal(mpmath.nstr(x, digits + 5, min_fixed=1, max_fixed=0))
        else:
            d = Decimal(str(x))
        if d.is_zero():
            return "0." + "0" * (digits - 1) + "e+0" if digits > 1 else "0e+0"
        return format(d, f".{digits - 1}e")


def ball_to_json(ball: ComplexBall, digits: int) -> dict:
    return {
        "re": fmt_decimal(ball.re, digits),
        "im": fmt_decimal(ball.im, digits),
        "rad": fmt_decimal(ball.rad, 3),
    }


def element_to_json(e: FieldElement) -> list[str]:
    return [fmt_rational(c) for c in e.coeffs]


def closure_to_json(spec: SphereSpec, closure: ClosureObject, digits: int) -> dict:
    """Exact closure data plus its value at the designated embedding."""
    emb = embeddings(spec.field, digits)
    j = emb.designated_index
    out = {
        "kind": closure.kind,
        "dim": closure.dim,
        "carrier": {
            "base": [fmt_rational(v) for v in closure.carrier.base],
            "directions": [[fmt_rational(v) for v in d] for d in closure.carrier.directions],
        },
        "center": {
            "exact": [element_to_json(c) for c in closure.center],
            "approx": [fmt_decimal(eval_element(c, emb, j).re, digits) for c in closure.center],
        },
        "radius_sq": {
            "exact": element_to_json(closure.radius_sq),
            "approx": fmt_decimal(eval_element(closure.radius_sq, emb, j).re, digits),
        },
    }
    return out


def rhs_to_json(constraints, digits: int) -> list[dict]:
    return [
        {
            "embedding": c.embedding_index,
            "center_re": [fmt_decimal(v, digits) for v in c.center_re],
            "normal_im": [fmt_decimal(v, digits) for v in c.normal_im],
            "radius_sq": fmt_decimal(c.radius_sq_re, digits),
            "error_bound": fmt_decimal(c.error_bound, 3),
        }
        for c in constraints
    ]


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"
