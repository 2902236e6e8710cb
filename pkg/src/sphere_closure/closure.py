"""Closure of the rational points of a sphere with algebraic center.

A rational point ``x != b`` lies on the sphere iff its inverse image ``y``
under the inversion through ``b`` satisfies ``<gamma - b, y - b> = 1``.
Both sides of that equation live in K = Q(alpha); for rational ``y`` it
splits into one rational equation per power of alpha. The solution set of
this rational system is the plane whose image under the inversion, plus
``b``, is the closure; it is a sphere inside the rational flat through
``b`` spanned by the (form-adjusted) solution directions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import PrecisionExhausted
from .geometry import (
    FULL_SPHERE,
    POINT,
    SUBSPHERE,
    ClosureObject,
    SphereSpec,
)
from .linalg import AffineFrame, project_point, rref, solve_affine
from .numberfield import FieldElement, embeddings, eval_element
from .roots import ComplexBall

_EXTRA_DIGITS = 10


@dataclass(frozen=True)
class ThetaSystem:
    """Rational system ``matrix @ (x - b) = rhs`` (one row per power of alpha)."""

    matrix: tuple
    rhs: tuple

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), len(self.matrix[0]) if self.matrix else 0


def build_theta_system(spec: SphereSpec) -> ThetaSystem:
    d = spec.field.degree
    shifted = spec.shifted_center
    matrix = tuple(tuple(c.coeffs[j] for c in shifted) for j in range(d))
    rhs = (Fraction(1),) + (Fraction(0),) * (d - 1)
    return ThetaSystem(matrix, rhs)


def theta_frame(spec: SphereSpec) -> AffineFrame | None:
    """Rational solutions of the Theta system, in shifted coordinates x - b."""
    system = build_theta_system(spec)
    return solve_affine(system.matrix, system.rhs, ncols=spec.n)


def _canonical_basis(vectors: list[tuple], n: int) -> tuple:
    res = rref(vectors, ncols=n)
    return tuple(res.echelon[:res.rank])


def _as_elements(spec: SphereSpec, v) -> tuple:
    K = spec.field
    return tuple(x if isinstance(x, FieldElement) else K.const(x) for x in v)


def compute_closure(spec: SphereSpec) -> ClosureObject:
    b = spec.base_point
    K = spec.field
    frame = theta_frame(spec)
    if frame is None:
        return ClosureObject(POINT, 0, AffineFrame(b, ()), _as_elements(spec, b), K.zero)
    m = len(frame.directions)
    span = [frame.base, *frame.directions]
    # the inversion for the form sends b + v to b + G^-1 v (up to scale)
    span = [spec.form.apply_inverse(v) for v in span]
    carrier = AffineFrame(b, _canonical_basis(span, spec.n))
    center = _as_elements(spec, project_point(carrier, spec.center, spec.form))
    diff = tuple(bi - ci for bi, ci in zip(b, center))
    radius_sq = spec.form.q(diff)
    if not isinstance(radius_sq, FieldElement):
        radius_sq = K.const(radius_sq)
    kind = FULL_SPHERE if m + 1 == spec.n else SUBSPHERE
    return ClosureObject(kind, m, carrier, center, radius_sq)


# -- numeric right-hand side ------------------------------------------------------

@dataclass(frozen=True)
class RhsConstraint:
    """One conjugate ``sigma(gamma)``: the sphere centred at its real part and
    the hyperplane through ``b`` normal to its imaginary part."""

    embedding_index: int
    center_re: tuple      # mpf
    normal_im: tuple      # mpf
    radius_sq_re: object  # mpf
    error_bound: Fraction


def _embedded_center(spec: SphereSpec, digits: int) -> list[list[ComplexBall]]:
    target = Fraction(1, 10**digits)
    work = digits + _EXTRA_DIGITS
    for _ in range(4):
        emb = embeddings(spec.field, work)
        rows = [[eval_element(c, emb, j) for c in spec.center] for j in range(len(emb))]
        if all(ball.rad <= target for row in rows for ball in row):
            return rows
        work *= 2
    raise PrecisionExhausted(f"embedded center not certified to {digits} digits")


def _mpf(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def rhs_constraints(spec: SphereSpec, digits: int) -> list[RhsConstraint]:
    if digits < 8:
        raise ValueError("digits must be >= 8")
    rows = _embedded_center(spec, digits)
    out = []
    G = spec.form.gram
    with mpmath.workdps(digits + _EXTRA_DIGITS):
        b = [_mpf(v) for v in spec.base_point]
        for j, row in enumerate(rows):
            re = tuple(_mpf(ball.re) for ball in row)
            im = tuple(_mpf(ball.im) for ball in row)
            diff = [bi - ri for bi, ri in zip(b, re)]
            r2 = mpmath.fsum(diff[i] * _mpf(G[i][k]) * diff[k]
                             for i in range(spec.n) for k in range(spec.n) if G[i][k])
            out.append(RhsConstraint(j, re, im, +r2, max(ball.rad for ball in row)))
    return out


def constraint_residuals(spec: SphereSpec, constraints: list[RhsConstraint], x) -> list[tuple]:
    """``(|q(x - Re) - r2|, |B(Im, x - b)|)`` for each constraint, at the
    current mpmath precision."""
    G = spec.form.gram
    n = spec.n
    xs = [v if isinstance(v, mpmath.mpf) else _mpf(Fraction(v)) for v in x]
    b = [_mpf(v) for v in spec.base_point]
    out = []
    for c in constraints:
        u = [xi - ci for xi, ci in zip(xs, c.center_re)]
        v = [xi - bi for xi, bi in zip(xs, b)]
        qs = mpmath.fsum(u[i] * _mpf(G[i][k]) * u[k] for i in range(n) for k in range(n) if G[i][k])
        hb = mpmath.fsum(c.normal_im[i] * _mpf(G[i][k]) * v[k] for i in range(n) for k in range(n) if G[i][k])
        out.append((abs(qs - c.radius_sq_re), abs(hb)))
    return out


def embedded_rows(spec: SphereSpec, digits: int) -> list[list]:
    """Complex matrix whose row ``j`` is ``sigma_j(gamma - b)``."""
    rows = _embedded_center(spec, digits)
    with mpmath.workdps(digits + _EXTRA_DIGITS):
        return [[ball.to_mpc() - _mpf(bi) for ball, bi in zip(row, spec.base_point)] for row in rows]


def numeric_rank(rows: list[list], digits: int) -> int:
    """Number of singular values above ``10**(-digits/2)``."""
    with mpmath.workdps(digits + _EXTRA_DIGITS):
        A = mpmath.matrix(rows)
        s = mpmath.svd_c(A, compute_uv=False)
        thresh = mpmath.mpf(10) ** (-mpmath.mpf(digits) / 2)
        return sum(1 for k in range(len(s)) if abs(s[k]) > thresh)
