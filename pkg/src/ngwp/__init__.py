"""ngwp: non-gaussian wave packets, evaluated two independent ways.

Free-particle packets built from sech-type momentum amplitudes are computed
both as oscillatory half-line integrals (rotated-contour adaptive quadrature)
and as convergent character / parabolic-cylinder series, and every identity
in the catalog is certified by comparing the two routes under a declared
tolerance.  Ambiguous normalization constants are resolved numerically: each
checker evaluates every candidate convention and reports which one closes.

Layout:

  specfun     special functions (complex erfc, Tricomi U, D_v, kernels' math)
  kernels     hot vectorized kernels; numba backend with numpy fallback
  oscquad     adaptive G7-K15 engine, Fresnel rotation plans, 2D iteration
  laplace     forward transforms, fixed-Talbot inversion, certified pairs
  identities  the identity catalog and per-identity checkers
  cli         `ngwp` command-line tool (verify / eval / list)
"""

__version__ = "0.1.0"

from .errors import (
    ContourError,
    ConvergenceError,
    DivergenceError,
    DomainError,
    NgwpError,
    PoleError,
    RotationInvalidError,
    UnknownIdentityError,
)
from .reporting import QuadResult, SeriesResult, VerificationReport, make_report
from .backends import backend_name, set_backend
from .specfun import (
    ab_split,
    chi,
    erfc_complex,
    erfc_complex_scaled,
    eta3_series,
    faddeeva_w,
    g_closed,
    glaisher_kernel,
    hermite,
    pcf_d,
    tricomi_u,
)
from .oscquad import (
    RotationPlan,
    fresnel_plan,
    integrate_2d,
    integrate_finite,
    integrate_fresnel,
    integrate_semi_infinite,
)
from .laplace import (
    PAIR_IDS,
    TransformCase,
    TransformPair,
    get_pair,
    laplace_forward,
    talbot_invert,
    verify_pair,
)
from .identities import (
    CATALOG_DESCRIPTIONS,
    DEFAULT_TOLS,
    IDENTITY_IDS,
    ReducedTime,
    Thm21Params,
    Thm31Params,
    TwoParticleParams,
    char_lorentz_sum,
    default_grid,
    eq22_check,
    eq23_check,
    eq33_check,
    eq43_check,
    eq44_check,
    kernel_resolvent_check,
    run_suite,
    sec3_final_check,
    thm21_check,
    thm21_lhs,
    thm21_rhs,
    thm31_check,
    thm31_hermite_series,
    thm31_lhs,
    thm31_rhs,
    thm31_v0_closed,
    thm31_v0_series,
    thm41_check,
    thm41_lhs,
    thm41_rhs,
)

__all__ = [name for name in dir() if not name.startswith("_")]
