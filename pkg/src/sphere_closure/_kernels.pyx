# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``; same signatures and results.

Values stay Python integers (they are unbounded); the gain comes from
C-level loops and list indexing.
"""
from math import gcd


def invert_batch(list Y, list D, list Hi):
    cdef Py_ssize_t n = len(Hi)
    cdef Py_ssize_t i, j, k, count = len(Y)
    cdef list V_out = [], E_out = [], Yk, HY, num, row
    cdef object S, g, acc, Dk
    for k in range(count):
        Yk = <list>Y[k]
        Dk = D[k]
        HY = [None] * n
        for i in range(n):
            row = <list>Hi[i]
            acc = 0
            for j in range(n):
                acc += row[j] * Yk[j]
            HY[i] = acc
        S = 0
        for i in range(n):
            S += Yk[i] * HY[i]
        if S == 0:
            raise ZeroDivisionError("inversion pole: point equals the base point")
        num = [None] * n
        for i in range(n):
            num[i] = 2 * Dk * HY[i]
        if S < 0:
            S = -S
            for i in range(n):
                num[i] = -num[i]
        g = S
        for i in range(n):
            g = gcd(g, num[i])
        for i in range(n):
            num[i] = num[i] // g
        V_out.append(num)
        E_out.append(S // g)
    return V_out, E_out


cdef list _gram_apply(list Gi, list Vk, Py_ssize_t n):
    cdef list out = [None] * n, row
    cdef Py_ssize_t i, j
    cdef object acc
    for i in range(n):
        row = <list>Gi[i]
        acc = 0
        for j in range(n):
            acc += row[j] * Vk[j]
        out[i] = acc
    return out


cdef object _dot(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t i
    cdef object acc = 0
    for i in range(n):
        acc += a[i] * b[i]
    return acc


def exact_checks(list V, list E, list Gi, list C, object lc, list normals):
    cdef Py_ssize_t n = len(Gi)
    cdef Py_ssize_t k, idx, count = len(V)
    cdef list on_sphere = [], in_carrier = [], Vk, GV
    cdef object qv, r, Ek
    cdef bint ok
    for idx in range(count):
        Vk = <list>V[idx]
        Ek = E[idx]
        GV = _gram_apply(Gi, Vk, n)
        qv = _dot(Vk, GV, n)
        ok = True
        for k in range(len(C)):
            r = -2 * Ek * _dot(<list>C[k], GV, n)
            if k == 0:
                r += lc * qv
            if r != 0:
                ok = False
                break
        on_sphere.append(ok)
        ok = True
        for k in range(len(normals)):
            if _dot(<list>normals[k], Vk, n) != 0:
                ok = False
                break
        in_carrier.append(ok)
    return on_sphere, in_carrier


def numeric_residuals(list V, list E, list Gi, object g, list W, list Hn, int P,
                      object tol_num, object tol_den):
    cdef Py_ssize_t n = len(Gi)
    cdef Py_ssize_t i, j, idx, count = len(V), m = len(W)
    cdef object scale = (<object>1) << P
    cdef list res_s = [], res_h = [], flags = [], Vk, GV, rs, rh
    cdef object qv, s1, den_s, den_h, ts, th, Ek
    cdef bint ok
    for idx in range(count):
        Vk = <list>V[idx]
        Ek = E[idx]
        GV = _gram_apply(Gi, Vk, n)
        qv = _dot(Vk, GV, n)
        s1 = 0
        for i in range(n):
            s1 += abs(GV[i])
        den_s = scale * g * Ek * Ek
        den_h = scale * g * Ek
        rs = [None] * m
        rh = [None] * m
        ok = True
        for j in range(m):
            ts = abs(scale * qv - 2 * Ek * _dot(<list>W[j], GV, n)) + 2 * Ek * s1
            th = abs(_dot(<list>Hn[j], GV, n)) + s1
            rs[j] = ts / den_s
            rh[j] = th / den_h
            if tol_den * ts > tol_num * den_s or tol_den * th > tol_num * den_h:
                ok = False
        res_s.append(rs)
        res_h.append(rh)
        flags.append(ok)
    return res_s, res_h, flags
