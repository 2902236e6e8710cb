"""Exact rational points on the sphere and numeric checks of the closure.

Points come from the rational solution frame of the Theta system, pushed
through the inversion through the base point.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from . import kernels
from .closure import _embedded_center, theta_frame
from .errors import DimensionZero
from .geometry import POINT, ClosureObject, SphereSpec
from .numberfield import embeddings, eval_element


def _random_rational(rng: random.Random, height: int) -> tuple[int, int]:
    return rng.randint(-height, height), rng.randint(1, height)


def _int_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale rational rows by their common denominator."""
    den = lcm(*(Fraction(v).denominator for row in rows for v in row)) if rows else 1
    return [[int(Fraction(v) * den) for v in row] for row in rows], den


def _shifted_integer(x: Sequence, b: Sequence) -> tuple[list[int], int]:
    v = [Fraction(xi) - bi for xi, bi in zip(x, b)]
    e = lcm(*(vi.denominator for vi in v))
    return [vi.numerator * (e // vi.denominator) for vi in v], e


def sample_shifted(spec: SphereSpec, count: int, height: int = 50, seed: int = 0) -> tuple[list, list]:
    """Samples as integer pairs ``(V, E)`` with ``x - b = V / E``.

    Sample ``i`` is drawn from ``random.Random(seed + i)`` alone, so any
    sub-range of indices can be generated independently.
    """
    if height < 1:
        raise ValueError("height must be >= 1")
    frame = theta_frame(spec)
    if frame is None:
        return [], []
    (B0, *Bdirs), lb = _int_rows([frame.base, *frame.directions])
    Hi, _ = _int_rows(spec.form.inverse_gram)
    n = spec.n
    Y, D = [], []
    for i in range(count):
        rng = random.Random(seed + i)
        params = [_random_rational(rng, height) for _ in Bdirs]
        Q = 1
        for _, q in params:
            Q *= q
        y = [Q * c for c in B0]
        for (p, q), Bd in zip(params, Bdirs):
            if p:
                f = p * (Q // q)
                y = [y[k] + f * Bd[k] for k in range(n)]
        Y.append(y)
        D.append(Q * lb)
    return kernels.invert_batch(Y, D, Hi)


def sample_rational_points(spec: SphereSpec, count: int, height: int = 50, seed: int = 0) -> list[tuple]:
    """``count`` rational points of the sphere other than the base point.

    Each point is the inversion of ``y = b + beta_0 + sum t_i beta_i`` where
    ``(beta_0; beta_1, ...)`` is the rational frame of the Theta system and
    each ``t_i = p/q`` has ``|p| <= height``, ``1 <= q <= height``.
    """
    V, E = sample_shifted(spec, count, height, seed)
    b = spec.base_point
    return [tuple(bi + Fraction(vi, e) for bi, vi in zip(b, v)) for v, e in zip(V, E)]


@dataclass
class VerifyReport:
    count: int
    digits: int
    tol: Fraction
    on_sphere: list = field(default_factory=list)
    in_closure: list = field(default_factory=list)
    max_sphere_residual: list = field(default_factory=list)      # per embedding
    max_hyperplane_residual: list = field(default_factory=list)  # per embedding
    failing_indices: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failing_indices

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "passed": self.passed,
            "digits": self.digits,
            "tol": f"{float(self.tol):.3e}",
            "exact_on_sphere_failures": sum(1 for f in self.on_sphere if not f),
            "closure_membership_failures": sum(1 for f in self.in_closure if not f),
            "max_sphere_residual": [f"{v:.6e}" for v in self.max_sphere_residual],
            "max_hyperplane_residual": [f"{v:.6e}" for v in self.max_hyperplane_residual],
            "failing_indices": list(self.failing_indices),
        }


def _round_scaled(x: Fraction, P: int) -> int:
    # nearest integer to 2**P * x
    return (2 * x.numerator * (1 << P) + x.denominator) // (2 * x.denominator)


def verify_samples(spec: SphereSpec, closure: ClosureObject, samples: Sequence[Sequence],
                   digits: int = 64, tol=None) -> VerifyReport:
    """Check every sample exactly (on the sphere, in the closure) and
    numerically against each conjugate's sphere and hyperplane.

    The numeric residuals are rigorous upper bounds: conjugate centers are
    certified to ``10**-digits`` and carried in fixed point with ``P`` bits,
    ``2**(P+1) <= 10**digits``.
    """
    if tol is None:
        tol = Fraction(10) ** (14 - digits)
    else:
        tol = Fraction(str(tol)) if isinstance(tol, float) else Fraction(tol)
    if tol < 10 * Fraction(10) ** (-digits):
        raise ValueError("tol must be at least 10 * 10**-digits")
    report = VerifyReport(len(samples), digits, tol)
    b = spec.base_point
    pairs = [_shifted_integer(x, b) for x in samples]
    V = [p[0] for p in pairs]
    E = [p[1] for p in pairs]

    Gi, g = _int_rows(spec.form.gram)
    C, lc = _int_rows([[c.coeffs[k] for c in spec.shifted_center] for k in range(spec.field.degree)])
    normals = [_int_rows([row])[0][0] for row in closure.carrier.equations] if closure.kind != POINT \
        else [[int(i == k) for i in range(spec.n)] for k in range(spec.n)]
    on_sphere, in_carrier = kernels.exact_checks(V, E, Gi, C, lc, normals)

    P = (10**digits).bit_length() - 2
    rows = _embedded_center(spec, digits)
    W = [[_round_scaled(ball.re - bi, P) for ball, bi in zip(row, b)] for row in rows]
    Hn = [[_round_scaled(ball.im, P) for ball in row] for row in rows]
    res_s, res_h, flags = kernels.numeric_residuals(V, E, Gi, g, W, Hn, P, tol.numerator, tol.denominator)

    d = len(rows)
    report.max_sphere_residual = [max((r[j] for r in res_s), default=0.0) for j in range(d)]
    report.max_hyperplane_residual = [max((r[j] for r in res_h), default=0.0) for j in range(d)]
    for idx in range(len(samples)):
        member = on_sphere[idx] and in_carrier[idx]
        report.on_sphere.append(on_sphere[idx])
        report.in_closure.append(member)
        if not (member and flags[idx]):
            report.failing_indices.append(idx)
    return report


@dataclass
class ProbeReport:
    eps: float
    distances: np.ndarray

    @property
    def budget(self) -> int:
        return len(self.distances)

    @property
    def passed(self) -> bool:
        return bool(np.all(self.distances <= self.eps))

    def quantiles(self, qs=(0.5, 0.9, 0.99, 1.0)) -> dict:
        return {str(q): float(np.quantile(self.distances, q)) for q in qs}

    def to_json(self) -> dict:
        return {
            "budget": self.budget,
            "eps": self.eps,
            "passed": self.passed,
            "covered": int(np.sum(self.distances <= self.eps)),
            "max_distance": float(np.max(self.distances)),
            "quantiles": self.quantiles(),
        }


def _closure_geometry(spec: SphereSpec, closure: ClosureObject):
    """Float center, radius and form-orthonormal basis of the closure sphere."""
    emb = embeddings(spec.field, 16)
    j = emb.designated_index
    center = np.array([float(eval_element(c, emb, j).re) for c in closure.center])
    r2 = eval_element(closure.radius_sq, emb, j)
    radius = float(r2.re) ** 0.5
    G = np.array([[float(v) for v in row] for row in spec.form.gram])
    basis = []
    for d in closure.carrier.directions:
        v = np.array([float(x) for x in d])
        for e in basis:
            v = v - (e @ G @ v) * e
        basis.append(v / np.sqrt(v @ G @ v))
    return center, radius, np.array(basis)


def density_probe(spec: SphereSpec, closure: ClosureObject, samples: Sequence[Sequence],
                  eps: float = 0.05, budget: int = 100, seed: int = 0) -> ProbeReport:
    """Distance from ``budget`` random targets on the closure sphere to the
    nearest sample; passes when every target is within ``eps``."""
    if closure.kind == POINT or closure.dim == 0:
        raise DimensionZero("density probe needs a closure of dimension >= 1")
    if eps <= 0:
        raise ValueError("eps must be positive")
    center, radius, basis = _closure_geometry(spec, closure)
    rng = np.random.default_rng(seed)
    u = rng.standard_normal((budget, len(basis)))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    targets = center + radius * (u @ basis)
    pts = np.array([[float(v) for v in x] for x in samples]) if len(samples) else np.empty((0, spec.n))
    if len(pts) == 0:
        return ProbeReport(eps, np.full(budget, np.inf))
    dist = np.empty(budget)
    for k, t in enumerate(targets):
        dist[k] = np.sqrt(np.min(np.sum((pts - t) ** 2, axis=1)))
    return ProbeReport(eps, dist)
