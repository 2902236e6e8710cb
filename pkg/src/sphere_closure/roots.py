"""Certified isolation of the complex roots of a squarefree rational polynomial.

Seeds come from the companion-matrix eigenvalues, each seed is polished by
Newton iteration in mpmath, and the polished midpoint is then rounded to a
decimal rational and certified *exactly*: for a polynomial ``p`` of degree
``d`` the disk of radius ``d*|p(z)|/|p'(z)|`` around any ``z`` contains a
root. When the ``d`` disks are pairwise disjoint each holds exactly one root.

A disk whose midpoint has been snapped to the real axis is closed under
complex conjugation, so the single root it holds is real.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from . import poly as P
from .errors import PrecisionExhausted

_GUARD_DIGITS = 10


@dataclass(frozen=True)
class ComplexBall:
    """Closed disk ``{z : |z - (re + i*im)| <= rad}`` with exact rational data."""

    re: Fraction
    im: Fraction
    rad: Fraction

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def to_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(_to_mpf(self.re), _to_mpf(self.im))

    def disjoint(self, other: "ComplexBall") -> bool:
        dre, dim = self.re - other.re, self.im - other.im
        return dre * dre + dim * dim > (self.rad + other.rad) ** 2

    def contains_point(self, re, im) -> bool:
        dre, dim = Fraction(re) - self.re, Fraction(im) - self.im
        return dre * dre + dim * dim <= self.rad * self.rad

    def conjugate(self) -> "ComplexBall":
        return ComplexBall(self.re, -self.im, self.rad)


def _to_mpf(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


def _mpf_to_decimal_fraction(x, places: int) -> Fraction:
    scale = 10**places
    return Fraction(int(mpmath.nint(x * scale)), scale)


def _ceil_decimal(x: Fraction, places: int) -> Fraction:
    scale = 10**places
    num = -((-x.numerator * scale) // x.denominator)
    return Fraction(num, scale)


def gauss_horner(coeffs: Sequence[Fraction], re: Fraction, im: Fraction) -> tuple[Fraction, Fraction]:
    """Exact value of a rational polynomial at the Gaussian rational ``re + i*im``."""
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(coeffs):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def root_radius(coeffs: Sequence[Fraction], re: Fraction, im: Fraction, places: int) -> Fraction | None:
    """Upper bound (rounded up to ``places`` decimals) on the distance from
    ``re + i*im`` to the nearest root, or None if ``p'`` vanishes there."""
    d = len(coeffs) - 1
    pr, pi = gauss_horner(coeffs, re, im)
    if pr == 0 and pi == 0:
        return Fraction(0)
    dr, di = gauss_horner(P.derivative(tuple(coeffs)), re, im)
    lower = max(abs(dr), abs(di))
    if lower == 0:
        return None
    bound = d * (abs(pr) + abs(pi)) / lower
    return _ceil_decimal(bound, places)


def taylor_coefficients(coeffs: Sequence[Fraction], re: Fraction, im: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Coefficients of ``p(z0 + h)`` in powers of ``h`` (repeated synthetic division)."""
    work = [(Fraction(c), Fraction(0)) for c in coeffs]
    out = []
    while work:
        quot = []
        ar, ai = Fraction(0), Fraction(0)
        for cr, ci in reversed(work):
            ar, ai = ar * re - ai * im + cr, ar * im + ai * re + ci
            quot.append((ar, ai))
        out.append(quot.pop())
        work = quot[::-1]
    return out


def eval_ball(coeffs: Sequence[Fraction], ball: ComplexBall) -> ComplexBall:
    """Enclosure of ``{p(z) : z in ball}`` for rational ``p``."""
    if not coeffs:
        return ComplexBall(Fraction(0), Fraction(0), Fraction(0))
    if ball.rad == 0 or len(coeffs) == 1:
        mr, mi = gauss_horner(coeffs, ball.re, ball.im)
        return ComplexBall(mr, mi, Fraction(0))
    tc = taylor_coefficients(coeffs, ball.re, ball.im)
    rad = Fraction(0)
    power = Fraction(1)
    for cr, ci in tc[1:]:
        power *= ball.rad
        rad += (abs(cr) + abs(ci)) * power
    return ComplexBall(tc[0][0], tc[0][1], rad)


# -- root finding ------------------------------------------------------------

def _newton(coeffs_mp, dcoeffs_mp, z, real: bool, tol):
    for _ in range(400):
        pz = mpmath.polyval(coeffs_mp, z)
        dz = mpmath.polyval(dcoeffs_mp, z)
        if dz == 0:
            break
        step = pz / dz
        if real:
            step = mpmath.re(step)
        z = z - step
        if abs(step) <= tol * max(1, abs(z)):
            break
    return z


def _seeds_companion(coeffs: Sequence[Fraction]) -> list[complex]:
    top = [float(c) for c in reversed(coeffs)]
    return [complex(z) for z in np.roots(top)]


def _seeds_polyroots(coeffs: Sequence[Fraction], dps: int) -> list:
    with mpmath.workdps(dps):
        top = [_to_mpf(c) for c in reversed(coeffs)]
        return list(mpmath.polyroots(top, maxsteps=500, extraprec=4 * dps))


def _attempt(coeffs: Sequence[Fraction], seeds, digits: int) -> list[ComplexBall] | None:
    d = len(coeffs) - 1
    places = digits + _GUARD_DIGITS
    target = Fraction(1, 10**digits)
    dps = places + 20
    reals: list[ComplexBall] = []
    uppers: list[ComplexBall] = []
    with mpmath.workdps(dps):
        top = [_to_mpf(c) for c in reversed(coeffs)]
        dtop = [_to_mpf(c) for c in reversed(P.derivative(tuple(coeffs)))]
        tol = mpmath.mpf(10) ** (-(places + 5))
        for s in seeds:
            z = _newton(top, dtop, mpmath.mpc(s), False, tol)
            zr = _mpf_to_decimal_fraction(mpmath.re(z), places)
            zi = _mpf_to_decimal_fraction(mpmath.im(z), places)
            rad = root_radius(coeffs, zr, zi, places)
            if rad is not None and abs(zi) > rad:
                ball = ComplexBall(zr, abs(zi), rad)
                if ball.rad <= target and all(ball.disjoint(u) for u in uppers):
                    uppers.append(ball)
                continue
            # disk touches the real axis: try the conjugation-closed real disk
            x = _newton(top, dtop, mpmath.re(z), True, tol)
            xr = _mpf_to_decimal_fraction(mpmath.re(x), places)
            rad = root_radius(coeffs, xr, Fraction(0), places)
            if rad is None:
                continue
            ball = ComplexBall(xr, Fraction(0), rad)
            if ball.rad <= target and all(ball.disjoint(r) for r in reals):
                reals.append(ball)
    balls = reals + uppers + [u.conjugate() for u in uppers]
    if len(balls) != d:
        return None
    for i in range(d):
        for j in range(i + 1, d):
            if not balls[i].disjoint(balls[j]):
                return None
    return sorted(balls, key=lambda b: (b.re, b.im))


def certified_roots(coeffs: Sequence[Fraction], digits: int) -> list[ComplexBall]:
    """All roots of a squarefree rational polynomial, certified to radius
    ``<= 10**-digits`` and sorted lexicographically by (Re, Im) of midpoints."""
    coeffs = P.monic(P.normalize(coeffs))
    d = len(coeffs) - 1
    if d < 1:
        raise ValueError("polynomial must have degree >= 1")
    if d == 1:
        return [ComplexBall(-coeffs[0], Fraction(0), Fraction(0))]
    balls = _attempt(coeffs, _seeds_companion(coeffs), digits)
    dps = 2 * digits + 20
    tries = 0
    while balls is None and tries < 4:
        balls = _attempt(coeffs, _seeds_polyroots(coeffs, dps), digits)
        dps *= 2
        tries += 1
    if balls is None:
        raise PrecisionExhausted(f"could not certify the {d} roots to {digits} digits")
    return balls
