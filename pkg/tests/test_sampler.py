import random
from fractions import Fraction

import mpmath
import pytest

from sphere_closure import SphereSpec, compute_closure, rhs_constraints
from sphere_closure.closure import constraint_residuals, theta_frame
from sphere_closure.errors import DimensionZero
from sphere_closure.geometry import QuadraticForm, closure_membership, invert_point, sphere_residual
from sphere_closure.numberfield import rationals
from sphere_closure.sampler import density_probe, sample_rational_points, verify_samples

F = Fraction


def reference_samples(spec, count, height, seed):
    """Direct construction with Fractions: frame point, then inversion."""
    frame = theta_frame(spec)
    if frame is None:
        return []
    b = spec.base_point
    out = []
    for i in range(count):
        rng = random.Random(seed + i)
        t = []
        for _ in frame.directions:
            p, q = rng.randint(-height, height), rng.randint(1, height)
            t.append(F(p, q))
        y = tuple(bi + v for bi, v in zip(b, frame.point(t)))
        out.append(invert_point(b, y, spec.form))
    return out


def test_example_a_samples(spec_a):
    assert set(sample_rational_points(spec_a, 10, seed=4)) == {(0, 2)}


def test_example_b_samples(spec_b):
    pts = sample_rational_points(spec_b, 200)
    for x in pts:
        assert x[0] == 1 and x[1] ** 2 + x[2] ** 2 == 1
    assert pts == reference_samples(spec_b, 200, 50, 0)


def test_example_c_empty(spec_c):
    assert sample_rational_points(spec_c, 10) == []


def test_form_samples_match_reference(sqrt2):
    form = QuadraticForm(((2, 1), (1, 3)))
    Q = rationals()
    spec = SphereSpec(2, Q, (F(1, 3), F(-2)), (F(1), F(1, 2)), form)
    pts = sample_rational_points(spec, 100, height=7, seed=3)
    assert pts == reference_samples(spec, 100, 7, 3)
    assert all(sphere_residual(spec.center, spec.base_point, x, form) == 0 for x in pts)


def test_determinism_and_counter_rng(spec_b):
    a = sample_rational_points(spec_b, 50, seed=9)
    b = sample_rational_points(spec_b, 50, seed=9)
    assert a == b
    tail = sample_rational_points(spec_b, 20, seed=39)
    assert a[30:] == tail


def test_samples_avoid_base_and_are_distinct(spec_b):
    pts = sample_rational_points(spec_b, 500, height=1000)
    assert spec_b.base_point not in pts
    assert len(set(pts)) == len(pts)


def test_verify_example_b(spec_b):
    c = compute_closure(spec_b)
    pts = sample_rational_points(spec_b, 300)
    rep = verify_samples(spec_b, c, pts, 64, F(1, 10**50))
    assert rep.passed and rep.count == 300
    assert max(rep.max_sphere_residual) < 1e-60


def test_verify_bounds_dominate_mpmath_residuals(spec_b, spec_a):
    # rigorous integer bounds vs a direct high-precision evaluation
    for spec in (spec_a, spec_b):
        c = compute_closure(spec)
        pts = sample_rational_points(spec, 20, height=9)
        rep = verify_samples(spec, c, pts, 40, F(1, 10**30))
        with mpmath.workdps(60):
            cons = rhs_constraints(spec, 40)
            worst = [max(r[k] for x in pts for r in [constraint_residuals(spec, cons, x)[j]])
                     for j in range(len(cons)) for k in (0,)]
        assert all(float(w) <= rep.max_sphere_residual[j] + 1e-38 for j, w in enumerate(worst))


def test_verify_rejects_corruption(spec_b):
    c = compute_closure(spec_b)
    pts = sample_rational_points(spec_b, 10)
    bad = list(pts)
    bad[3] = bad[3][:-1] + (bad[3][-1] + 1,)
    rep = verify_samples(spec_b, c, bad, 64)
    assert rep.failing_indices == [3]
    assert not rep.on_sphere[3] and not rep.in_closure[3]


def test_verify_empty_and_tol_floor(spec_b):
    c = compute_closure(spec_b)
    rep = verify_samples(spec_b, c, [], 32)
    assert rep.passed and rep.count == 0
    with pytest.raises(ValueError):
        verify_samples(spec_b, c, [], 32, F(1, 10**32))


def test_verify_point_closure(spec_c):
    c = compute_closure(spec_c)
    rep = verify_samples(spec_c, c, [(F(1), F(0))], 20)
    assert not rep.passed


def test_density_probe(spec_a, spec_b):
    c = compute_closure(spec_b)
    pts = sample_rational_points(spec_b, 3000)
    probe = density_probe(spec_b, c, pts, 0.1, 50)
    assert probe.passed and probe.budget == 50
    assert set(probe.quantiles()) == {"0.5", "0.9", "0.99", "1.0"}
    assert not density_probe(spec_b, c, pts[:3], 0.01, 50).passed
    with pytest.raises(DimensionZero):
        density_probe(spec_a, compute_closure(spec_a), [(0, 2)], 0.05, 10)


def test_density_probe_full_sphere():
    spec = SphereSpec(2, rationals(), (F(3, 5), F(4, 5)), (0, 0))
    c = compute_closure(spec)
    pts = sample_rational_points(spec, 20000)
    assert all(closure_membership(c, x, spec) for x in pts[:200])
    assert density_probe(spec, c, pts, 0.05, 100).passed


def test_density_probe_scales_with_radius():
    # height-bounded parameters leave gaps that grow with the radius
    spec = SphereSpec(2, rationals(), (2, 0), (0, 0))
    c = compute_closure(spec)
    pts = sample_rational_points(spec, 20000)
    assert density_probe(spec, c, pts, 0.1, 100).passed


def test_form_subsphere_samples_on_carrier(sqrt2):
    a = sqrt2.gen
    form = QuadraticForm(((2, 1, 0), (1, 3, 1), (0, 1, 2)))
    spec = SphereSpec(3, sqrt2, (a, 1 - a, F(1, 2)), (0, 1, 0), form)
    c = compute_closure(spec)
    assert c.dim == 1
    pts = sample_rational_points(spec, 200, height=20)
    assert pts == reference_samples(spec, 200, 20, 0)
    assert all(c.carrier.contains(x) and closure_membership(c, x, spec) for x in pts)
    assert verify_samples(spec, c, pts, 40, F(1, 10**28)).passed
