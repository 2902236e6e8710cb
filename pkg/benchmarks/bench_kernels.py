"""Compare the compiled and pure-Python sample kernels on a circle workload.

    python3 benchmarks/bench_kernels.py [--count 20000] [--repeat 3]
"""
import argparse
import time
from fractions import Fraction

from sphere_closure import _kernels_py, compute_closure, field_from_root, SphereSpec
from sphere_closure.sampler import _int_rows, sample_shifted

try:
    from sphere_closure import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def workload(count):
    K = field_from_root([-2, 0, 1], 1)
    spec = SphereSpec(3, K, (K.gen, 0, 0), (1, 1, 0))
    closure = compute_closure(spec)
    V, E = sample_shifted(spec, count)
    Gi, g = _int_rows(spec.form.gram)
    C, lc = _int_rows([[c.coeffs[k] for c in spec.shifted_center] for k in range(2)])
    normals = [_int_rows([row])[0][0] for row in closure.carrier.equations]
    # any integer points serve as inversion input
    Y, D = V, E
    P = 211
    W = [[int(Fraction(1414213562373095, 10**15) * 2**P) - (1 << P), -(1 << P), 0]] * 2
    Hn = [[0, 0, 0]] * 2
    return dict(inv=(Y, D, Gi), exact=(V, E, Gi, C, lc, normals),
                num=(V, E, Gi, g, W, Hn, P, 1, 10**50))


def bench(mod, args, repeat):
    out = {}
    for name, fn in (("invert_batch", mod.invert_batch), ("exact_checks", mod.exact_checks),
                     ("numeric_residuals", mod.numeric_residuals)):
        key = {"invert_batch": "inv", "exact_checks": "exact", "numeric_residuals": "num"}[name]
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn(*args[key])
            best = min(best, time.perf_counter() - t0)
        out[name] = best
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args()
    args = workload(a.count)
    py = bench(_kernels_py, args, a.repeat)
    c = bench(_kernels_c, args, a.repeat) if _kernels_c else None
    print(f"{'kernel':<20}{'python [s]':>12}{'cython [s]':>12}{'speedup':>10}")
    for k in py:
        if c:
            print(f"{k:<20}{py[k]:>12.4f}{c[k]:>12.4f}{py[k] / c[k]:>9.2f}x")
        else:
            print(f"{k:<20}{py[k]:>12.4f}{'n/a':>12}{'':>10}")


if __name__ == "__main__":
    main()
