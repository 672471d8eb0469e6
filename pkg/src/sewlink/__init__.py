"""Surface-electromagnetic-wave link toolkit.

Models radio transmission through conductive enclosures via surface
waves: Drude material response, surface-mode dispersion, subwavelength
aperture transmission, a desk-scale 2D field simulator, a helical-antenna
lumped model, and an end-to-end enclosure link budget.
"""

from ._version import __version__
from .aperture import ApertureSpec, TransmissionEstimate, bethe_sew, bethe_tem, sew_enhancement
from .dispersion import (
    DispersionPoint,
    Interface,
    NoBoundMode,
    SewMode,
    dispersion_curve,
    dispersion_curve_rows,
    sew_mode_from_permittivity,
    sew_wavelength_ratio,
    sew_wavevector,
    surface_mode_asymptote,
)
from .errors import NotConverged, UnstableSimulation, ValidationError
from .materials import (
    Dielectric,
    DrudeMedium,
    Frequency,
    drude_permittivity,
    drude_re_lowfreq,
    skin_depth,
)

__all__ = [
    "__version__",
    "ApertureSpec",
    "TransmissionEstimate",
    "bethe_tem",
    "bethe_sew",
    "sew_enhancement",
    "Interface",
    "SewMode",
    "DispersionPoint",
    "NoBoundMode",
    "sew_wavevector",
    "sew_mode_from_permittivity",
    "sew_wavelength_ratio",
    "surface_mode_asymptote",
    "dispersion_curve",
    "dispersion_curve_rows",
    "Dielectric",
    "DrudeMedium",
    "Frequency",
    "drude_permittivity",
    "drude_re_lowfreq",
    "skin_depth",
    "ValidationError",
    "NotConverged",
    "UnstableSimulation",
]
