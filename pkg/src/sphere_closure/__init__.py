"""Exact closure of the rational points on a sphere whose center has
algebraic coordinates.

Typical use::

    from sphere_closure import field_from_root, SphereSpec, compute_closure
    K = field_from_root([-2, 0, 1], 1)          # Q(sqrt 2), positive root
    spec = SphereSpec(2, K, (K.gen, K.const(1)), (0, 0))
    compute_closure(spec)                        # two points: (0, 0), (0, 2)
"""
from .closure import compute_closure, rhs_constraints
from .errors import MathError, SchemaError, SphereClosureError
from .geometry import (FULL_SPHERE, GENERALIZED, POINT, SUBSPHERE, THEOREM, ClosureObject,
                       QuadraticForm, SphereSpec, closure_membership, invert_point)
from .io import load_spec, spec_from_dict
from .numberfield import FieldElement, NumberField, embeddings, field_from_root, make_field
from .sampler import density_probe, sample_rational_points, verify_samples

__version__ = "0.1.0"

__all__ = [
    "ClosureObject", "FieldElement", "FULL_SPHERE", "GENERALIZED", "MathError", "NumberField",
    "POINT", "QuadraticForm", "SchemaError", "SphereClosureError", "SphereSpec", "SUBSPHERE",
    "THEOREM", "closure_membership", "compute_closure", "density_probe", "embeddings",
    "field_from_root", "invert_point", "load_spec", "make_field", "rhs_constraints",
    "sample_rational_points", "spec_from_dict", "verify_samples",
]
