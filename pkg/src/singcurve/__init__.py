"""Singular curves over finite fields glued from Frobenius orbits of a smooth normalization."""

from .curve import (
    ClosedPoint,
    CurveModel,
    Extremality,
    GeometricPoint,
    PointCountTable,
    ZetaNumerator,
    closed_points_of_degree,
    count_points,
    enumerate_points,
    extremality_of_C,
    zeta_numerator_from_counts,
)
from .gf import FieldDesc, FieldElement, enumerate_field, frobenius_q, make_field, minimal_degree
from .glue import (
    SingularCurve,
    SingularFiber,
    UnibranchThickening,
    build_glued_curve,
    build_selective_glued_curve,
    genus_and_delta,
    random_profile,
)
from .intpoly import IntPolynomial, power_sums
from .zeta import (
    ZetaReport,
    all_roots_minus_one,
    all_roots_plus_one,
    count_points_direct,
    count_points_singular,
    extremality_report,
    lemma_e0_structural,
    singular_factor,
)

__version__ = "0.1.0"
