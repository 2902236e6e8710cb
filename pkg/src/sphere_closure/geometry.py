"""Spheres through a rational base point, their hyperplane images under
inversion, and the closure object.

Every sphere here passes through the base point ``b``. With a definite
quadratic form ``q`` (Gram matrix ``G``), the sphere with center ``a`` is
``{x : q(x - a) = q(b - a)}``, and the inversion

    x -> b + 2 * G^-1 (x - b) / q(G^-1 (x - b))

maps the plane ``{<a - b, x - b> = 1}`` onto that sphere minus ``b``. Its
inverse is ``x -> b + 2 * G (x - b) / q(x - b)``. For ``G = I`` both reduce
to the self-inverse map ``x -> b + 2 (x - b) / |x - b|^2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import InvalidSpec, PoleAtBase
from .linalg import AffineFrame, bilinear, rref
from .numberfield import FieldElement, NumberField


@dataclass(frozen=True)
class QuadraticForm:
    """Positive definite form ``q(x) = x^T gram x``; ``gram`` is also the
    matrix of the polar form and of the map L with B(x, y) = <L x, y>."""

    gram: tuple

    def __post_init__(self):
        n = len(self.gram)
        g = tuple(tuple(Fraction(v) for v in row) for row in self.gram)
        if any(len(row) != n for row in g):
            raise InvalidSpec("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise InvalidSpec("Gram matrix must be symmetric")
        if not _leading_minors_positive(g):
            raise InvalidSpec("quadratic form is not positive definite")
        object.__setattr__(self, "gram", g)

    @classmethod
    def identity(cls, n: int) -> "QuadraticForm":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def definite(cls, gram: Sequence[Sequence]) -> "QuadraticForm":
        """Accept a positive or negative definite Gram matrix; a negative
        definite one is negated (both describe the same spheres)."""
        g = tuple(tuple(Fraction(v) for v in row) for row in gram)
        if g and g[0][0] < 0:
            g = tuple(tuple(-v for v in row) for row in g)
        return cls(g)

    @property
    def n(self) -> int:
        return len(self.gram)

    @cached_property
    def is_identity(self) -> bool:
        return all(self.gram[i][j] == (i == j) for i in range(self.n) for j in range(self.n))

    @cached_property
    def inverse_gram(self) -> tuple:
        n = self.n
        cols = []
        for k in range(n):
            e = [Fraction(int(i == k)) for i in range(n)]
            res = rref(self.gram, e)
            col = [Fraction(0)] * n
            for row, c in enumerate(res.pivots):
                col[c] = res.rhs[row]
            cols.append(col)
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def q(self, x: Sequence):
        return bilinear(None if self.is_identity else self.gram, x, x)

    def B(self, x: Sequence, y: Sequence):
        return bilinear(None if self.is_identity else self.gram, x, y)

    def apply(self, x: Sequence) -> tuple:
        if self.is_identity:
            return tuple(x)
        return tuple(sum((g * v for g, v in zip(row, x)), Fraction(0)) for row in self.gram)

    def apply_inverse(self, x: Sequence) -> tuple:
        if self.is_identity:
            return tuple(x)
        return tuple(sum((g * v for g, v in zip(row, x)), Fraction(0)) for row in self.inverse_gram)


def _leading_minors_positive(g: tuple) -> bool:
    # Elimination without row exchanges: the k-th pivot is M_k / M_{k-1},
    # so all pivots are positive iff all leading principal minors are.
    a = [list(row) for row in g]
    n = len(a)
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return True


def _form(form: QuadraticForm | None, n: int) -> QuadraticForm:
    return form if form is not None else QuadraticForm.identity(n)


def invert_point(b: Sequence, x: Sequence, form: QuadraticForm | None = None,
                 inverse: bool = False) -> tuple:
    """Inversion through ``b``. ``inverse=False`` maps planes onto spheres;
    ``inverse=True`` is its inverse. Identical for the identity form."""
    b = tuple(Fraction(v) for v in b)
    v = tuple(Fraction(xi) - bi for xi, bi in zip(x, b))
    if not any(v):
        raise PoleAtBase("inversion is undefined at the base point")
    F = _form(form, len(b))
    if inverse:
        w = F.apply(v)
        s = 2 / F.q(v)
    else:
        w = F.apply_inverse(v)
        s = 2 / F.q(w)
    return tuple(bi + s * wi for bi, wi in zip(b, w))


def pi_residual(a: Sequence, b: Sequence, x: Sequence):
    """``<a - b, x - b> - 1`` (standard inner product)."""
    return sum(((ai - bi) * (xi - bi) for ai, bi, xi in zip(a, b, x)), Fraction(0)) - 1


def sphere_residual(a: Sequence, b: Sequence, x: Sequence, form: QuadraticForm | None = None):
    """``q(x - a) - q(b - a)``, evaluated as ``q(x - b) - 2 B(a - b, x - b)``."""
    F = _form(form, len(b))
    v = [Fraction(xi) - Fraction(bi) for xi, bi in zip(x, b)]
    Gv = F.apply(v)
    return F.q(v) - 2 * sum(((ai - bi) * g for ai, bi, g in zip(a, b, Gv)), Fraction(0))


def hyperplane_residual(a: Sequence, b: Sequence, x: Sequence, form: QuadraticForm | None = None):
    """``B(a, x - b)``; identically zero when ``a = 0``."""
    F = _form(form, len(b))
    v = [Fraction(xi) - Fraction(bi) for xi, bi in zip(x, b)]
    return F.B(tuple(a), v)


THEOREM = "theorem"
GENERALIZED = "generalized"


@dataclass(frozen=True)
class SphereSpec:
    """Sphere through the rational point ``base_point`` centred at ``center``
    (coordinates in ``field``). In theorem mode the designated root must be
    real, so the center is a real point."""

    n: int
    field: NumberField
    center: tuple
    base_point: tuple
    form: QuadraticForm | None = None
    mode: str = THEOREM

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpec("dimension must be >= 1")
        center = tuple(c if isinstance(c, FieldElement) else self.field.const(c) for c in self.center)
        base = tuple(Fraction(v) for v in self.base_point)
        if len(center) != self.n or len(base) != self.n:
            raise InvalidSpec("center and base point must have n coordinates")
        if any(c.field != self.field for c in center):
            raise InvalidSpec("center coordinates must lie in the given field")
        if all(c == bi for c, bi in zip(center, base)):
            raise InvalidSpec("degenerate sphere: center equals base point")
        if self.mode not in (THEOREM, GENERALIZED):
            raise InvalidSpec(f"unknown mode {self.mode!r}")
        if self.mode == THEOREM and not self.field.is_real_box:
            raise InvalidSpec("theorem mode requires a real designated root (root box with im = [0, 0])")
        form = self.form if self.form is not None else QuadraticForm.identity(self.n)
        if form.n != self.n:
            raise InvalidSpec("quadratic form dimension does not match n")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "base_point", base)
        object.__setattr__(self, "form", form)

    @property
    def shifted_center(self) -> tuple:
        return tuple(c - bi for c, bi in zip(self.center, self.base_point))


POINT = "point"
SUBSPHERE = "subsphere"
FULL_SPHERE = "full_sphere"


@dataclass(frozen=True)
class ClosureObject:
    """Closure of the rational points of a sphere.

    ``kind == POINT``: just the base point. Otherwise the sphere of
    dimension ``dim`` cut from the input sphere by the rational flat
    ``carrier`` (through the base point, ``dim + 1`` directions), with the
    given exact center and squared radius (measured with the form).
    """

    kind: str
    dim: int
    carrier: AffineFrame
    center: tuple
    radius_sq: FieldElement

    @property
    def base_point(self) -> tuple:
        return self.carrier.base


def closure_membership(c: ClosureObject, x: Sequence, spec: SphereSpec) -> bool:
    x = tuple(Fraction(v) for v in x)
    if c.kind == POINT:
        return x == spec.base_point
    if not c.carrier.contains(x):
        return False
    return not sphere_residual(spec.center, spec.base_point, x, spec.form)
