"""Relative power transmission through subwavelength openings.

Two fourth-power estimators: the classical small-aperture law (a/lambda)^4
for a conventional TEM wave, and the surface-wave variant with the (much
shorter) surface wavelength substituted.  Both are proportionalities with
the prefactor fixed to 1, so results are *relative* transmission factors;
absolute calibration lives in the link-budget coupling constants.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

__all__ = [
    "ApertureSpec",
    "TransmissionEstimate",
    "bethe_tem",
    "bethe_sew",
    "sew_enhancement",
]


@dataclass(frozen=True)
class ApertureSpec:
    """A subwavelength opening in a conducting wall.

    wall_thickness and periodic are carried as metadata only; any
    thickness-dependent tunneling attenuation is a link-budget fitting
    parameter, not computed here.
    """

    a: float
    wall_thickness: float = 0.0
    periodic: bool = False

    def __post_init__(self) -> None:
        if not self.a > 0:
            raise ValueError(f"aperture size must be > 0, got {self.a}")
        if self.wall_thickness < 0:
            raise ValueError(f"wall thickness must be >= 0, got {self.wall_thickness}")


@dataclass(frozen=True)
class TransmissionEstimate:
    """Relative transmission factor t_rel >= 0 under a named model."""

    t_rel: float
    model: str  # "TEM-Bethe" or "SEW-Bethe"


def bethe_tem(ap: ApertureSpec, lambda_free: float) -> TransmissionEstimate:
    """Relative TEM transmission (a/lambda)^4 through a small aperture."""
    if not lambda_free > 0:
        raise ValueError(f"free-space wavelength must be > 0, got {lambda_free}")
    return TransmissionEstimate(t_rel=(ap.a / lambda_free) ** 4, model="TEM-Bethe")


def bethe_sew(ap: ApertureSpec, lambda_sew: float) -> TransmissionEstimate:
    """Relative surface-wave transmission (a/lambda_sew)^4.

    Identical in form to :func:`bethe_tem` but with the surface wavelength,
    which can be far shorter than free space, hence far higher transmission.
    """
    if not lambda_sew > 0:
        raise ValueError(f"surface wavelength must be > 0, got {lambda_sew}")
    return TransmissionEstimate(t_rel=(ap.a / lambda_sew) ** 4, model="SEW-Bethe")


def sew_enhancement(lambda_free: float, lambda_sew: float) -> float:
    """Transmission enhancement (lambda_free/lambda_sew)^4 of the surface-wave path.

    Equals bethe_sew/bethe_tem for any common aperture size.  Bound surface
    modes have lambda_sew <= lambda_free; a longer surface wavelength is
    accepted but warned about.
    """
    if not lambda_free > 0:
        raise ValueError(f"free-space wavelength must be > 0, got {lambda_free}")
    if not lambda_sew > 0:
        raise ValueError(f"surface wavelength must be > 0, got {lambda_sew}")
    if lambda_sew > lambda_free:
        warnings.warn(
            f"lambda_sew={lambda_sew:.6g} exceeds lambda_free={lambda_free:.6g}; "
            "not a bound surface mode",
            stacklevel=2,
        )
    return (lambda_free / lambda_sew) ** 4
