"""Exact arithmetic in a number field K = Q(alpha) and its complex embeddings.

A field is fixed by a monic irreducible rational polynomial together with a
rational rectangle isolating one complex root, the *designated* root. The
remaining roots describe the other embeddings K -> C: the embedding with
index ``j`` is the substitution ``alpha -> roots[j]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import sympy

from . import poly as P
from .errors import (
    AmbiguousRootBox,
    DivisionByZero,
    EmptyRootBox,
    ReduciblePolynomial,
    UncertifiableIrreducibility,
)
from .roots import ComplexBall, certified_roots, eval_ball

MAX_FACTOR_DEGREE = 24
_MOD_P_TRIALS = 60
_LOCATE_DIGITS = 20
_MAX_LOCATE_DIGITS = 640


@dataclass(frozen=True)
class NumberField:
    """Q(alpha) with ``min_poly`` monic and constant term first.

    ``root_box`` is ``(re_lo, re_hi, im_lo, im_hi)``. Build instances with
    :func:`make_field`, which validates both.
    """

    min_poly: tuple
    root_box: tuple
    designated_index: int = dc_field(default=0, compare=False)

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    @property
    def is_real_box(self) -> bool:
        return self.root_box[2] == 0 and self.root_box[3] == 0

    @cached_property
    def _reduction(self) -> list[tuple]:
        # rows: alpha^(d+k) expressed in the power basis, k = 0 .. d-2
        d = self.degree
        rows = []
        cur = [-c for c in self.min_poly[:d]]
        for _ in range(max(d - 1, 0)):
            rows.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                cur = [c - top * m for c, m in zip(cur, self.min_poly[:d])]
        return rows

    def element(self, coeffs: Iterable) -> "FieldElement":
        c = [Fraction(x) for x in coeffs]
        d = self.degree
        if len(c) > d:
            raise ValueError(f"expected at most {d} coefficients, got {len(c)}")
        return FieldElement(self, tuple(c + [Fraction(0)] * (d - len(c))))

    def const(self, value) -> "FieldElement":
        return self.element([value])

    @property
    def zero(self) -> "FieldElement":
        return self.const(0)

    @property
    def one(self) -> "FieldElement":
        return self.const(1)

    @property
    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self.const(-self.min_poly[0])
        return self.element([0, 1])

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})*t^{i}" for i, c in enumerate(self.min_poly) if c)
        return f"NumberField({terms}, box={tuple(str(x) for x in self.root_box)})"


@dataclass(frozen=True)
class FieldElement:
    """sum(coeffs[j] * alpha**j); always exactly ``degree`` coefficients."""

    field: NumberField
    coeffs: tuple

    def _lift(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return nf_mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero in number field")
            return FieldElement(self.field, tuple(a / other for a in self.coeffs))
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return nf_mul(self, nf_inv(o))

    def __rtruediv__(self, other):
        return nf_inv(self) * other

    def __pow__(self, k: int):
        if k < 0:
            return nf_inv(self) ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self) -> int:
        r = is_rational(self)
        return hash(r) if r is not None else hash(self.coeffs)

    def __repr__(self) -> str:
        r = is_rational(self)
        if r is not None:
            return f"FieldElement({r})"
        terms = [f"{c}*a^{j}" if j else str(c) for j, c in enumerate(self.coeffs) if c]
        return "FieldElement(" + " + ".join(terms) + ")"


# -- construction --------------------------------------------------------------

def _check_irreducible(f: tuple) -> None:
    d = len(f) - 1
    if d == 1:
        return
    if len(P.poly_gcd(f, P.derivative(f))) > 1:
        raise ReduciblePolynomial("minimal polynomial is not squarefree")
    ints = P.primitive_integer(f)
    for p in P.small_primes(_MOD_P_TRIALS):
        if ints[-1] % p and P.irreducible_mod_p(ints, p):
            return
    if d > MAX_FACTOR_DEGREE:
        raise UncertifiableIrreducibility(
            f"degree {d} polynomial has no irreducible reduction among the first "
            f"{_MOD_P_TRIALS} primes and exceeds the factorization limit {MAX_FACTOR_DEGREE}")
    t = sympy.Symbol("t")
    expr = sum(sympy.Integer(c) * t**i for i, c in enumerate(ints))
    _, factors = sympy.factor_list(expr, t)
    if len(factors) != 1 or factors[0][1] != 1:
        raise ReduciblePolynomial(f"{sympy.factor(expr)}")


def _box_relation(ball: ComplexBall, box: tuple) -> str:
    """'in', 'out' or 'edge' for a certified ball against a closed rectangle."""
    re_lo, re_hi, im_lo, im_hi = box
    r = ball.rad
    if ball.re + r < re_lo or ball.re - r > re_hi or ball.im + r < im_lo or ball.im - r > im_hi:
        return "out"
    if im_lo == im_hi == 0:
        # the ball is conjugation-closed iff its midpoint is real; such a ball holds a real root
        if ball.im != 0:
            return "out" if abs(ball.im) > r else "edge"
        return "in" if re_lo <= ball.re - r and ball.re + r <= re_hi else "edge"
    if re_lo <= ball.re - r and ball.re + r <= re_hi and im_lo <= ball.im - r and ball.im + r <= im_hi:
        return "in"
    return "edge"


def _locate(min_poly: tuple, box: tuple, digits: int) -> tuple[list[ComplexBall], int]:
    while True:
        balls = certified_roots(min_poly, digits)
        rel = [_box_relation(b, box) for b in balls]
        inside = [i for i, r in enumerate(rel) if r == "in"]
        if len(inside) > 1:
            raise AmbiguousRootBox(f"root box contains {len(inside)} roots")
        if "edge" not in rel:
            if not inside:
                raise EmptyRootBox("root box contains no root of the minimal polynomial")
            return balls, inside[0]
        if digits >= _MAX_LOCATE_DIGITS:
            raise AmbiguousRootBox("a root lies on (or too close to) the root box boundary")
        digits *= 2


def make_field(poly: Sequence, root_box: Sequence) -> NumberField:
    """Validate ``poly`` (made monic) and ``root_box`` and return the field."""
    f = P.normalize(poly)
    if len(f) < 2:
        raise ValueError("minimal polynomial must have degree >= 1")
    f = P.monic(f)
    box = tuple(Fraction(x) for x in root_box)
    if len(box) != 4 or box[0] > box[1] or box[2] > box[3]:
        raise ValueError("root box must be (re_lo, re_hi, im_lo, im_hi) with lo <= hi")
    _check_irreducible(f)
    if box[2] == box[3] == 0:
        n_real = P.sturm_count(f, box[0], box[1])
        if n_real == 0:
            raise EmptyRootBox("no real root of the minimal polynomial in the root interval")
        if n_real > 1:
            raise AmbiguousRootBox(f"{n_real} real roots in the root interval")
    _, index = _locate(f, box, _LOCATE_DIGITS)
    return NumberField(f, box, index)


def field_from_root(poly: Sequence, index: int, digits: int = 30) -> NumberField:
    """Field whose designated root is ``certified_roots(poly)[index]``.

    The root box is grown from the certified ball, which is convenient for
    generating test fields.
    """
    f = P.monic(P.normalize(poly))
    balls = certified_roots(f, digits)
    b = balls[index]
    r = b.rad if b.rad else Fraction(1, 10**digits)
    if b.im == 0:
        box = (b.re - r, b.re + r, Fraction(0), Fraction(0))
    else:
        box = (b.re - r, b.re + r, b.im - r, b.im + r)
    return make_field(f, box)




# -- arithmetic ------------------------------------------------------------------

def nf_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def nf_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    K = a.field
    if b.field != K:
        raise ValueError("elements belong to different fields")
    d = K.degree
    prod = [Fraction(0)] * (2 * d - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] += x * y
    out = prod[:d]
    for k, c in enumerate(prod[d:]):
        if c:
            row = K._reduction[k]
            for j in range(d):
                out[j] += c * row[j]
    return FieldElement(K, tuple(out))


def nf_inv(a: FieldElement) -> FieldElement:
    """Inverse via the extended Euclidean algorithm against the minimal polynomial."""
    if not a:
        raise DivisionByZero("inverse of zero in number field")
    K = a.field
    r0, r1 = K.min_poly, P.normalize(a.coeffs)
    s0, s1 = (), (Fraction(1),)
    while len(r1) > 1:
        q, r = P.divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, P.sub(s0, P.mul(q, s1))
    # r1 is a nonzero constant because min_poly is irreducible
    inv = P.scale(s1, 1 / r1[0])
    inv = P.divmod_poly(inv, K.min_poly)[1]
    return K.element(inv)


def is_rational(e: FieldElement) -> Fraction | None:
    if any(e.coeffs[1:]):
        return None
    return e.coeffs[0]


def conjugate_quadratic(e: FieldElement) -> FieldElement:
    """The non-trivial automorphism of a quadratic field, alpha -> -c1 - alpha
    for the minimal polynomial t^2 + c1*t + c0."""
    K = e.field
    if K.degree != 2:
        raise ValueError("conjugate_quadratic needs a degree-2 field")
    a0, a1 = e.coeffs
    return K.element([a0 - a1 * K.min_poly[1], -a1])


# -- embeddings ------------------------------------------------------------------

@dataclass(frozen=True)
class EmbeddingSet:
    roots: tuple
    designated_index: int
    digits: int

    def __len__(self) -> int:
        return len(self.roots)


@lru_cache(maxsize=256)
def _embeddings_cached(field: NumberField, digits: int) -> EmbeddingSet:
    balls, index = _locate(field.min_poly, field.root_box, digits)
    return EmbeddingSet(tuple(balls), index, digits)


def embeddings(field: NumberField, digits: int) -> EmbeddingSet:
    """All d embeddings as certified balls of radius <= 10**-digits."""
    if digits < 8:
        raise ValueError("digits must be >= 8")
    return _embeddings_cached(field, digits)


def eval_element(e: FieldElement, emb: EmbeddingSet, j: int) -> ComplexBall:
    if not 0 <= j < len(emb.roots):
        raise IndexError(f"embedding index {j} out of range")
    return eval_ball(e.coeffs, emb.roots[j])


def rationals() -> NumberField:
    """The degree-1 field Q, presented as Q(alpha) with alpha = 0."""
    return NumberField((Fraction(0), Fraction(1)), (Fraction(0),) * 4, 0)
