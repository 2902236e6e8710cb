import random
from fractions import Fraction

import mpmath
import pytest

from sphere_closure.errors import (AmbiguousRootBox, DivisionByZero, EmptyRootBox, PrecisionExhausted,
                                   ReduciblePolynomial)
from sphere_closure.numberfield import (conjugate_quadratic, embeddings, eval_element, field_from_root,
                                        is_rational, make_field, nf_add, nf_inv, nf_mul, rationals)

from conftest import rand_q, random_field


def test_sqrt2_field(sqrt2):
    assert sqrt2.degree == 2 and sqrt2.is_real_box
    emb = embeddings(sqrt2, 16)
    assert emb.designated_index == 1
    assert float(emb.roots[1].re) == pytest.approx(2 ** 0.5, rel=1e-15)


def test_cbrt2_field(cbrt2):
    emb = embeddings(cbrt2, 16)
    assert emb.designated_index == 2
    assert float(eval_element(cbrt2.gen, emb, 2).re) == pytest.approx(2 ** (1 / 3))


@pytest.mark.parametrize("poly", [[-4, 0, 1], [4, 0, 0, 0, 1], [0, 0, 1], [6, 5, 1]])
def test_reducible_rejected(poly):
    with pytest.raises(ReduciblePolynomial):
        make_field(poly, (-10, 10, -10, 10))


def test_box_errors():
    with pytest.raises(EmptyRootBox):
        make_field([-2, 0, 1], (2, 3, 0, 0))
    with pytest.raises(AmbiguousRootBox):
        make_field([-2, 0, 1], (-2, 2, 0, 0))


def test_non_monic_is_normalized():
    K = make_field([-4, 0, 2], (1, 2, 0, 0))
    assert K.min_poly == (-2, 0, 1)


def test_arithmetic_examples(sqrt2):
    a = sqrt2.gen
    assert nf_mul(1 + a, 1 - a) == sqrt2.const(-1)
    assert nf_inv(a) == a / 2
    assert not nf_add(a, -a)
    assert a * a == 2


def test_inverse_of_zero(sqrt2):
    with pytest.raises(DivisionByZero):
        nf_inv(sqrt2.zero)
    with pytest.raises(ZeroDivisionError):
        sqrt2.one / sqrt2.zero


def test_is_rational(sqrt2):
    a = sqrt2.gen
    assert is_rational(sqrt2.element([Fraction(5, 2), 0])) == Fraction(5, 2)
    assert is_rational(a) is None
    assert is_rational((1 + a) + (1 - a)) == 2


def test_eval_examples(sqrt2, cbrt2):
    emb = embeddings(sqrt2, 20)
    c = eval_element(sqrt2.const(Fraction(7, 3)), emb, 0)
    assert (c.re, c.im, c.rad) == (Fraction(7, 3), 0, 0)
    emb3 = embeddings(cbrt2, 20)
    z = eval_element(cbrt2.gen ** 2, emb3, 0)
    assert float(z.re) == pytest.approx(-0.7937005259840998)
    assert abs(float(z.im)) == pytest.approx(1.3747296369986026)


def test_rational_root_field():
    K = make_field([-3, 1], (2, 4, 0, 0))
    emb = embeddings(K, 16)
    assert emb.roots[0].re == 3 and emb.roots[0].rad == 0
    Q = rationals()
    assert Q.degree == 1


def test_embeddings_digits_floor(sqrt2):
    with pytest.raises(ValueError):
        embeddings(sqrt2, 4)


def test_conjugate_quadratic(sqrt2):
    a = sqrt2.gen
    assert conjugate_quadratic(3 + a) == 3 - a
    K = make_field([1, 1, 1], (-1, 0, 0, 1))     # primitive cube root of unity
    w = K.gen
    assert conjugate_quadratic(w) == -1 - w
    assert conjugate_quadratic(w) * w == 1


@pytest.mark.parametrize("seed", range(12))
def test_ring_laws(seed):
    rng = random.Random(seed)
    K = random_field(rng, rng.randint(1, 5))
    d = K.degree

    def rnd():
        return K.element([rand_q(rng) for _ in range(d)])

    for _ in range(20):
        a, b, c = rnd(), rnd(), rnd()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if a:
            assert a * nf_inv(a) == 1


@pytest.mark.parametrize("seed", range(10))
def test_embedding_homomorphism(seed):
    rng = random.Random(100 + seed)
    K = random_field(rng, rng.randint(2, 5))
    emb = embeddings(K, 24)
    for _ in range(10):
        a = K.element([rand_q(rng) for _ in range(K.degree)])
        b = K.element([rand_q(rng) for _ in range(K.degree)])
        for j in range(K.degree):
            ab, ea, eb = eval_element(a * b, emb, j), eval_element(a, emb, j), eval_element(b, emb, j)
            with mpmath.workdps(60):
                diff = ab.to_mpc() - ea.to_mpc() * eb.to_mpc()
                rad = [mpmath.mpf(r.numerator) / r.denominator for r in (ab.rad, ea.rad, eb.rad)]
                bound = rad[0] + rad[1] * (abs(eb.to_mpc()) + rad[2]) + rad[2] * abs(ea.to_mpc())
                assert abs(diff) <= bound + mpmath.mpf(10) ** -50


@pytest.mark.parametrize("seed", range(10))
def test_norm_identity_and_designated_root(seed):
    rng = random.Random(200 + seed)
    K = random_field(rng, rng.randint(1, 5))
    emb = embeddings(K, 24)
    with mpmath.workdps(60):
        prod = mpmath.mpc(1)
        for r in emb.roots:
            prod *= r.to_mpc()
        c0 = K.min_poly[0]
        expect = (-1) ** K.degree * mpmath.mpf(c0.numerator) / c0.denominator
        assert abs(prod - expect) < mpmath.mpf(10) ** -18
    z = emb.roots[emb.designated_index]
    lo_re, hi_re, lo_im, hi_im = K.root_box
    assert lo_re <= z.re <= hi_re and lo_im <= z.im <= hi_im


def test_rational_elements_are_invariant(cbrt2):
    emb = embeddings(cbrt2, 20)
    e = cbrt2.const(Fraction(-5, 7))
    vals = {(eval_element(e, emb, j).re, eval_element(e, emb, j).im) for j in range(3)}
    assert vals == {(Fraction(-5, 7), 0)}


def test_field_from_root_index(cbrt2):
    K = field_from_root([-2, 0, 0, 1], 2)
    assert embeddings(K, 16).designated_index == 2
    assert K.min_poly == cbrt2.min_poly


def test_high_degree_irreducible_accepted():
    # t^8 - 3 has no irreducible reduction pattern shortcut at p=2
    K = field_from_root([-3, 0, 0, 0, 0, 0, 0, 0, 1], 7)
    assert K.degree == 8
