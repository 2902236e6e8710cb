"""Dense univariate polynomials over Q and over small prime fields.

Polynomials are tuples of coefficients, constant term first, with no
trailing zeros (the zero polynomial is the empty tuple).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Poly = tuple  # tuple[Fraction, ...]


def normalize(coeffs: Iterable) -> Poly:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Sequence) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return normalize((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def sub(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return normalize((p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return normalize(out)


def scale(p: Poly, c) -> Poly:
    return normalize(c * a for a in p)


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    for k in range(len(p) - 1 - dq, -1, -1):
        c = r[k + dq] / lead
        quot[k] = c
        if c:
            for j in range(dq + 1):
                r[k + j] -= c * q[j]
    return normalize(quot), normalize(r[:dq])


def monic(p: Poly) -> Poly:
    if not p:
        return p
    return scale(p, 1 / p[-1])


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over Q."""
    a, b = normalize(p), normalize(q)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def derivative(p: Poly) -> Poly:
    return normalize(i * p[i] for i in range(1, len(p)))


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def primitive_integer(p: Poly) -> list[int]:
    """Scale ``p`` to a primitive integer polynomial with positive leading coefficient."""
    den = lcm(*(c.denominator for c in p)) if p else 1
    ints = [int(c * den) for c in p]
    g = 0
    for v in ints:
        g = gcd(g, v)
    g = g or 1
    if ints and ints[-1] < 0:
        g = -g
    return [v // g for v in ints]


# -- arithmetic modulo a prime -------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_p(a: Sequence[int], p: int) -> list[int]:
    return _trim([x % p for x in a])


def _divmod_p(a: list[int], b: list[int], p: int) -> list[int]:
    r = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        if c:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % p
    return _trim(r[:db])


def _mulmod_p(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _divmod_p(_mod_p(out, p), f, p)


def _gcd_p(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _divmod_p(a, b, p)
    return a


def _frobenius_power(f: list[int], p: int, k: int) -> list[int]:
    """x^(p^k) mod f over GF(p)."""
    x = _divmod_p([0, 1], f, p)
    for _ in range(k):
        result, base, e = [1], x, p
        while e:
            if e & 1:
                result = _mulmod_p(result, base, f, p)
            base = _mulmod_p(base, base, f, p)
            e >>= 1
        x = result
    return x


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    """Rabin's test: is the integer polynomial irreducible over GF(p)?

    Returns False when the leading coefficient vanishes mod ``p`` (the
    reduction changes degree and says nothing about the polynomial over Q).
    """
    f = _mod_p(coeffs, p)
    d = len(coeffs) - 1
    if len(f) - 1 != d:
        return False
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    if d == 1:
        return True
    x = [0, 1]
    if _frobenius_power(f, p, d) != _divmod_p(x, f, p):
        return False
    for q in _prime_factors(d):
        h = _frobenius_power(f, p, d // q)
        diff = _trim([(h[i] if i < len(h) else 0) - (x[i] if i < len(x) else 0) for i in range(max(len(h), 2))])
        diff = [c % p for c in diff]
        g = _gcd_p(f, _trim(diff), p)
        if len(g) > 1:
            return False
    return True


def small_primes(count: int) -> list[int]:
    out, k = [], 2
    while len(out) < count:
        if all(k % q for q in out if q * q <= k):
            out.append(k)
        k += 1
    return out


# -- Sturm sequences -----------------------------------------------------------

def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [normalize(p), derivative(normalize(p))]
    while seq[-1]:
        r = divmod_poly(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(scale(r, -1))
    return seq


def _sign_changes(seq: list[Poly], x: Fraction) -> int:
    signs = [v for v in (evaluate(s, x) for s in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def sturm_count(p: Poly, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in the closed interval [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        return 0
    seq = sturm_sequence(p)
    n = _sign_changes(seq, lo) - _sign_changes(seq, hi)
    if evaluate(p, lo) == 0:
        n += 1
    return n
