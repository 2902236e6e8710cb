"""Exact linear algebra over Q and over a number field.

Entries may be :class:`fractions.Fraction` or
:class:`~sphere_closure.numberfield.FieldElement`; the routines only use the
field operations and comparison with zero. Column indices are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Sequence

from .errors import InconsistentSystem, SingularGram
from .numberfield import FieldElement, is_rational


def _is_zero(x) -> bool:
    return not x


@dataclass(frozen=True)
class RrefResult:
    echelon: tuple       # rows of the reduced coefficient matrix
    rhs: tuple
    pivots: tuple        # pivot column of each nonzero row, increasing
    rank: int
    consistent: bool

    @property
    def ncols(self) -> int:
        return len(self.echelon[0]) if self.echelon else 0

    @property
    def free(self) -> tuple:
        piv = set(self.pivots)
        return tuple(c for c in range(self.ncols) if c not in piv)


def rref(A: Sequence[Sequence], rhs: Sequence | None = None, ncols: int | None = None) -> RrefResult:
    """Reduced row echelon form of ``[A | rhs]``, pivoting on the leftmost
    nonzero entry of each column (no other pivoting)."""
    rows = [list(r) for r in A]
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    b = list(rhs) if rhs is not None else [Fraction(0)] * len(rows)
    if len(b) != len(rows) or any(len(r) != n for r in rows):
        raise ValueError("inconsistent shapes")
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if not _is_zero(rows[i][c])), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        b[r], b[p] = b[p], b[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        b[r] = b[r] * inv
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if not _is_zero(f):
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
                    b[i] = b[i] - f * b[r]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    consistent = all(_is_zero(b[i]) for i in range(r, len(rows)))
    return RrefResult(tuple(tuple(x) for x in rows), tuple(b), tuple(pivots), r, consistent)


def rank(A: Sequence[Sequence]) -> int:
    return rref(A).rank if A else 0


@dataclass(frozen=True)
class AffineFrame:
    """``base + span(directions)``; directions are linearly independent."""

    base: tuple
    directions: tuple = ()

    @property
    def n(self) -> int:
        return len(self.base)

    def point(self, t: Sequence) -> tuple:
        if len(t) != len(self.directions):
            raise ValueError("parameter count does not match frame dimension")
        x = list(self.base)
        for ti, d in zip(t, self.directions):
            x = [xi + ti * di for xi, di in zip(x, d)]
        return tuple(x)

    def coordinates(self, x: Sequence) -> tuple | None:
        """Parameters ``t`` with ``point(t) == x``, or None when x is off the frame."""
        m = len(self.directions)
        if m == 0:
            return () if tuple(x) == tuple(self.base) else None
        # columns are directions: solve D t = x - base
        A = [[self.directions[k][i] for k in range(m)] for i in range(self.n)]
        res = rref(A, [xi - bi for xi, bi in zip(x, self.base)])
        if not res.consistent:
            return None
        t = [Fraction(0)] * m
        for row, c in enumerate(res.pivots):
            t[c] = res.rhs[row]
        return tuple(t)

    @cached_property
    def equations(self) -> tuple:
        """Rows ``N`` with ``N (x - base) = 0`` exactly on the frame."""
        if not self.directions:
            return tuple(tuple(Fraction(int(i == k)) for i in range(self.n)) for k in range(self.n))
        return tuple(_kernel_vectors(rref(self.directions, ncols=self.n)))

    def contains(self, x: Sequence) -> bool:
        diff = [xi - bi for xi, bi in zip(x, self.base)]
        return all(not sum((a * v for a, v in zip(row, diff) if a), Fraction(0)) for row in self.equations)


def _kernel_vectors(res: RrefResult) -> list[tuple]:
    n = res.ncols
    out = []
    for f in res.free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, c in enumerate(res.pivots):
            v[c] = -res.echelon[row][f]
        out.append(tuple(v))
    return out


def solve_affine(A: Sequence[Sequence], rhs: Sequence, ncols: int | None = None) -> AffineFrame | None:
    """Solution set of ``A x = rhs`` as a frame, or None when inconsistent.

    The base point sets every free variable to zero; each direction is the
    kernel vector with a single unit free coordinate.
    """
    res = rref(A, rhs, ncols)
    if not res.consistent:
        return None
    base = [Fraction(0)] * res.ncols
    for row, c in enumerate(res.pivots):
        base[c] = res.rhs[row]
    return AffineFrame(tuple(base), tuple(_kernel_vectors(res)))


@dataclass(frozen=True)
class DefiningPair:
    """Pivot coordinates as an affine function of the free coordinates:
    ``x[pivots] = matrix @ x[free] + offset``."""

    n: int
    free: tuple
    pivots: tuple
    matrix: tuple    # len(pivots) rows of len(free) entries
    offset: tuple

    def apply(self, y: Sequence) -> tuple:
        return tuple(o + sum((a * v for a, v in zip(row, y)), Fraction(0))
                     for row, o in zip(self.matrix, self.offset))

    def assemble(self, y: Sequence) -> tuple:
        x = [Fraction(0)] * self.n
        for i, v in zip(self.free, y):
            x[i] = v
        for i, v in zip(self.pivots, self.apply(y)):
            x[i] = v
        return tuple(x)

    def contains(self, x: Sequence) -> bool:
        y = [x[i] for i in self.free]
        return all(x[i] == v for i, v in zip(self.pivots, self.apply(y)))

    def entries(self):
        for row in self.matrix:
            yield from row
        yield from self.offset


def defining_pair_from_rref(res: RrefResult) -> DefiningPair:
    if not res.consistent:
        raise InconsistentSystem("system has no solution")
    free = res.free
    matrix = tuple(tuple(-res.echelon[row][f] for f in free) for row in range(res.rank))
    offset = tuple(res.rhs[:res.rank])
    return DefiningPair(res.ncols, free, res.pivots, matrix, offset)


def _rational_value(x) -> Fraction | None:
    if isinstance(x, FieldElement):
        return is_rational(x)
    return Fraction(x)


def is_rational_over_Q(pair: DefiningPair) -> bool:
    return all(_rational_value(x) is not None for x in pair.entries())


def rational_points(pair: DefiningPair) -> AffineFrame | None:
    """The rational points of the subspace described by ``pair``.

    A rational point is fixed by its free coordinates ``y`` in Q^M, which
    must satisfy ``pair.apply(y)`` in Q^{M^c}: every power-basis coefficient
    of degree >= 1 must vanish. That is a rational linear system in ``y``.
    """
    m = len(pair.free)

    def coeffs(x):
        return x.coeffs if isinstance(x, FieldElement) else (Fraction(x),)

    rows, rhs = [], []
    for row, o in zip(pair.matrix, pair.offset):
        width = max([len(coeffs(a)) for a in row] + [len(coeffs(o))])
        for j in range(1, width):
            rows.append([coeffs(a)[j] if j < len(coeffs(a)) else Fraction(0) for a in row])
            rhs.append(-(coeffs(o)[j] if j < len(coeffs(o)) else Fraction(0)))
    if rows:
        yframe = solve_affine(rows, rhs, ncols=m)
        if yframe is None:
            return None
    else:
        yframe = AffineFrame(tuple([Fraction(0)] * m), tuple(
            tuple(Fraction(int(i == k)) for i in range(m)) for k in range(m)))

    def lift(y, affine: bool):
        x = [Fraction(0)] * pair.n
        for i, v in zip(pair.free, y):
            x[i] = v
        for i, row, o in zip(pair.pivots, pair.matrix, pair.offset):
            val = sum((a * v for a, v in zip(row, y)), Fraction(0))
            if affine:
                val = val + o
            x[i] = coeffs(val)[0] if isinstance(val, FieldElement) else Fraction(val)
        return tuple(x)

    base = lift(yframe.base, True)
    dirs = tuple(lift(d, False) for d in yframe.directions)
    return AffineFrame(base, dirs)


def frame_span_dim(frame: AffineFrame) -> int:
    if not frame.directions:
        return 0
    return rank(frame.directions)


def bilinear(gram: Sequence[Sequence] | None, x: Sequence, y: Sequence):
    """``x^T gram y``; ``gram=None`` means the standard inner product."""
    if gram is None:
        return sum((a * b for a, b in zip(x, y)), Fraction(0))
    total = Fraction(0)
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = gram[i]
        s = sum((row[j] * yj for j, yj in enumerate(y) if row[j]), Fraction(0))
        total = total + xi * s
    return total


def project_point(carrier: AffineFrame, p: Sequence, form=None) -> tuple:
    """Orthogonal projection of ``p`` onto the carrier with respect to the
    bilinear form of ``form`` (standard inner product when None)."""
    gram = form.gram if form is not None else None
    dirs = carrier.directions
    m = len(dirs)
    if m == 0:
        return tuple(carrier.base)
    G = [[bilinear(gram, dirs[k], dirs[l]) for l in range(m)] for k in range(m)]
    diff = [pi - bi for pi, bi in zip(p, carrier.base)]
    w = [bilinear(gram, d, diff) for d in dirs]
    res = rref(G, w)
    if res.rank < m:
        raise SingularGram("Gram matrix of carrier directions is singular")
    t = [None] * m
    for row, c in enumerate(res.pivots):
        t[c] = res.rhs[row]
    out = list(carrier.base)
    for tk, d in zip(t, dirs):
        out = [o + tk * di for o, di in zip(out, d)]
    return tuple(out)
