"""Exact certificates for secant and weak defectiveness of Segre-Veronese varieties."""

from .bounds import (
    BoundReport,
    h_m,
    one_s_threshold,
    one_wd_classify,
    twd_bound_linear_factor,
    wd_bound,
)
from .contact import (
    ContactReport,
    contact_kernel_dims,
    hs_twd_check,
    osculating_hypothesis_check,
    random_containing_space,
    tangent_span,
    twd_check,
    wd_check,
)
from .embedding import (
    AffinePoint,
    ambient_dim,
    coordinate_osculating_span,
    embed,
    hessian_of_form,
    osculating_cone_basis,
)
from .exactla import Span, annihilator, contains, kernel_basis, rank
from .multiindex import Format, MultiIndex, ball, distance, enumerate_indices, tuple_distance
from .terracini import (
    PointConfig,
    SecantVerdict,
    expected_secant_dim,
    sample_config,
    secant_defect_check,
    terracini_rank,
)

__version__ = "0.1.0"
