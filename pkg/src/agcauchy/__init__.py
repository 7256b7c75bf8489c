"""Decoding one-point AG codes through the Cauchy problem of the syndrome array."""

from .agcode import (
    CodeSpec,
    CurveSpec,
    SyndromeArray,
    build_code,
    enumerate_points,
    gt,
    hermitian,
    known_syndromes,
    projective_line,
)
from .cauchy import CauchyProblem, LinearRecurringSeries, consistency_check, solve_box, solve_coefficient
from .decoder import (
    DecodeResult,
    Status,
    bms,
    complete_syndromes,
    decode,
    error_patterns,
    locate_errors,
    solve_error_values,
    validated_radius,
)
from .gf import GF, Field, FieldElement, field_new
from .groebner import DeltaSet, GroebnerBasis, buchberger, delta_set, normal_form, vanishing_ideal
from .kernels import BACKEND
from .polyring import MonomialOrder, MultiPoly, PolyRing, leading_exponent, vanishing_product
from .series import TruncatedSeries, Verdict, act, act_matrix, is_in_kernel, orthogonal_test

__version__ = "0.1.0"
