"""Exact pseudo-effective and effective cones of Grassmann bundles over curves."""

from .bundle import (
    BundleDescriptor,
    CharZero,
    HNBlock,
    HNType,
    Split,
    SplitBundle,
    Strong,
    StrongHNData,
    bundle_lambda,
    dual_split,
    exterior_power_split,
    frobenius_split,
    hn_of_split,
    lambda_char0,
    lambda_strong,
    shift_strong,
    slope,
)
from .certificate import (
    CertificateChecks,
    CoverModel,
    EffectivityCertificate,
    build_certificate,
    verify_certificate,
)
from .cone import Cone2D, NSClass, Ray, contains, on_boundary, pseff_cone, pullback_class
from .documents import parse_input
from .errors import GrassconeError, RangeError, ValidationError
from .oracle import (
    OracleReport,
    h0_line_genus0,
    h0_taut_twist,
    max_subset_sum,
    verify_theorem_split,
)

__version__ = "0.1.0"
