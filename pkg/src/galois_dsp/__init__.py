"""Complex arithmetic, Cesàro sums and Fourier transforms over finite fields."""

from .cesaro import Convergent, Divergent, DivergenceReason, cesaro, cesaro_oracle, cesaro_sum, partial_sum_profile
from .complex_field import (
    GlElement,
    PolarContext,
    PolarForm,
    conjugate,
    find_polar_context,
    from_polar,
    gl_inv,
    gl_modulus,
    gl_order,
    gl_pow,
    quadratic_norm,
    to_polar,
)
from .extension_field import ComplexExt, ExtElement, ExtField, build_complex_ext, element_of_order, ext_order
from .ffdtft import Spectrum, fdtft, fdtft_closed_form_exponential, inverse_fdtft, orthogonality_sum
from .ffft import FfftPlan, cyclic_convolution, ffft, iffft, length_catalogue, plan, pollard_special_case
from .filters import FirFilter, IirFilter, fir_apply_ffft, fir_apply_time, iir_frequency_response
from .prime_field import (
    FpElement,
    PrimeModulus,
    inv,
    is_quadratic_residue,
    modulus_signed,
    multiplicative_order,
    sqrt_qr,
)
from .sequences import (
    ExponentialRight,
    FiniteSupport,
    LeftSidedPeriodic,
    RightSidedPeriodic,
    TwoSidedPeriodic,
    Window,
    exponential,
    impulse,
    minimal_period,
    unit_step,
    window,
)

__version__ = "0.1.0"
