"""NFFT with compactly supported windows and measured error constants.

Submodules
----------
specfun
    Bessel functions, cardinal B-splines and a few helpers.
windows
    The window kinds, their Fourier transforms and pass-band coefficients.
transform
    Forward and adjoint NFFT plus direct NDFT oracles.
analysis
    Error constants by two methods and the matching theoretical bounds.
cli
    The ``compact-nfft`` command.
"""

from .analysis import (
    BoundReport,
    DecayProfile,
    ErrorConstantResult,
    error_constant_aliasing,
    error_constant_periodization,
    theoretical_bound,
    verify_bound,
)
from .transform import (
    NfftPlan,
    NodeSet,
    TrigPolynomial,
    ndft_adjoint,
    ndft_forward,
    nfft_adjoint,
    nfft_forward,
)
from .windows import (
    Kind,
    NonpositiveCoefficient,
    WideWindowWarning,
    Window,
    WindowParams,
    make_window,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "DecayProfile",
    "ErrorConstantResult",
    "Kind",
    "NfftPlan",
    "NodeSet",
    "NonpositiveCoefficient",
    "TrigPolynomial",
    "WideWindowWarning",
    "Window",
    "WindowParams",
    "error_constant_aliasing",
    "error_constant_periodization",
    "make_window",
    "ndft_adjoint",
    "ndft_forward",
    "nfft_adjoint",
    "nfft_forward",
    "theoretical_bound",
    "verify_bound",
]
