"""Integer kernels for the per-sample loops (pure-Python implementation).

Every routine here has a twin with the same signature in the compiled
``_kernels`` extension; :mod:`sphere_closure.kernels` picks one at import.

Samples are passed as shifted points ``x - b = V / E`` with ``V`` an integer
vector and ``E`` a positive integer. Matrices are integer row lists.
"""
from math import gcd


def invert_batch(Y, D, Hi):
    """Inversion through the base point for points ``y - b = Y[k] / D[k]``.

    With ``Hi`` an integer multiple of the inverse Gram matrix the image is
    ``x - b = 2 D Hi Y / (Y^T Hi Y)``. Returns ``(V, E)`` lists, each result
    reduced so that gcd(V..., E) = 1 and E > 0.
    """
    n = len(Hi)
    V_out = []
    E_out = []
    for Yk, Dk in zip(Y, D):
        HY = [sum(Hi[i][j] * Yk[j] for j in range(n)) for i in range(n)]
        S = sum(Yk[i] * HY[i] for i in range(n))
        if S == 0:
            raise ZeroDivisionError("inversion pole: point equals the base point")
        num = [2 * Dk * h for h in HY]
        if S < 0:
            S = -S
            num = [-v for v in num]
        g = S
        for v in num:
            g = gcd(g, v)
        V_out.append([v // g for v in num])
        E_out.append(S // g)
    return V_out, E_out


def exact_checks(V, E, Gi, C, lc, normals):
    """Exact sphere and carrier membership for shifted samples ``V / E``.

    ``Gi`` is the integer-scaled Gram matrix, ``C[k]`` the integer-scaled
    power-basis coefficients (degree ``k``) of the shifted center, with
    common scale ``lc``. The sample is on the sphere iff, for every ``k``,
    ``[k == 0] * lc * V^T Gi V - 2 E * C[k] . (Gi V) == 0``.
    ``normals`` are integer rows whose kernel is the carrier direction space.
    """
    n = len(Gi)
    on_sphere = []
    in_carrier = []
    for Vk, Ek in zip(V, E):
        GV = [sum(Gi[i][j] * Vk[j] for j in range(n)) for i in range(n)]
        qv = sum(Vk[i] * GV[i] for i in range(n))
        ok = True
        for k, Ck in enumerate(C):
            r = -2 * Ek * sum(Ck[i] * GV[i] for i in range(n))
            if k == 0:
                r += lc * qv
            if r:
                ok = False
                break
        on_sphere.append(ok)
        in_carrier.append(all(sum(row[i] * Vk[i] for i in range(n)) == 0 for row in normals))
    return on_sphere, in_carrier


def numeric_residuals(V, E, Gi, g, W, Hn, P, tol_num, tol_den):
    """Fixed-point residuals against each conjugate's sphere and hyperplane.

    ``W[j]`` and ``Hn[j]`` are ``2**P`` times the real part of the ``j``-th
    conjugate center minus ``b`` and its imaginary part, rounded so that each
    entry is within 1 of the exact value. For ``v = V / E``:

        sphere:     q(v) - 2 B(Re - b, v)  ~  Ts / (2**P g E^2)
        hyperplane: B(Im, v)               ~  Th / (2**P g E)

    and ``2 E sum|Gi V|`` (resp. ``sum|Gi V|``) bounds the numerator error.
    Returns per-sample lists of float upper bounds for both residuals and a
    flag that every bound is ``<= tol_num / tol_den`` (compared exactly).
    """
    n = len(Gi)
    scale = 1 << P
    res_s = []
    res_h = []
    flags = []
    for Vk, Ek in zip(V, E):
        GV = [sum(Gi[i][j] * Vk[j] for j in range(n)) for i in range(n)]
        qv = sum(Vk[i] * GV[i] for i in range(n))
        s1 = sum(abs(x) for x in GV)
        den_s = scale * g * Ek * Ek
        den_h = scale * g * Ek
        rs = []
        rh = []
        ok = True
        for Wj, Hj in zip(W, Hn):
            ts = abs(scale * qv - 2 * Ek * sum(Wj[i] * GV[i] for i in range(n))) + 2 * Ek * s1
            th = abs(sum(Hj[i] * GV[i] for i in range(n))) + s1
            rs.append(ts / den_s)
            rh.append(th / den_h)
            if tol_den * ts > tol_num * den_s or tol_den * th > tol_num * den_h:
                ok = False
        res_s.append(rs)
        res_h.append(rh)
        flags.append(ok)
    return res_s, res_h, flags
