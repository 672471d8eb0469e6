"""Frequency-dependent material response of conductors and dielectrics.

Provides the free-electron (Drude) permittivity of a metal, its
low-frequency real-part limit, and the RF skin depth of a conductor.

Sign convention: fields vary as exp(-i*omega*t), so a lossy metal has a
*positive* imaginary permittivity.  All quantities are SI; conversion
between cyclic frequency nu [Hz] and angular frequency omega [rad/s]
happens only inside :class:`Frequency`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import EPS0, MU0, TWO_PI

__all__ = [
    "DrudeMedium",
    "Dielectric",
    "Frequency",
    "drude_permittivity",
    "drude_re_lowfreq",
    "skin_depth",
]

# Declared relation between the DC conductivity and the Drude parameters;
# a supplied sigma_dc must agree with eps0*omega_p**2/gamma to this
# relative tolerance.
SIGMA_DC_CONSISTENCY_RTOL = 0.01


@dataclass(frozen=True)
class DrudeMedium:
    """Free-electron metal described by a plasma frequency and damping rate.

    Attributes:
        omega_p: Angular plasma frequency (rad/s), > 0.
        gamma: Damping factor (rad/s), >= 0.  Zero means a lossless metal.
        sigma_dc: Optional DC conductivity (S/m).  When given together with
            gamma > 0 it must satisfy sigma_dc = eps0*omega_p**2/gamma
            within 1% (a derived bookkeeping relation, used as a
            consistency check on hand-entered parameters).
    """

    omega_p: float
    gamma: float = 0.0
    sigma_dc: float | None = None

    def __post_init__(self) -> None:
        if not self.omega_p > 0:
            raise ValueError(f"omega_p must be > 0, got {self.omega_p}")
        if self.gamma < 0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")
        if self.sigma_dc is not None:
            if not self.sigma_dc > 0:
                raise ValueError(f"sigma_dc must be > 0, got {self.sigma_dc}")
            if self.gamma > 0:
                implied = EPS0 * self.omega_p**2 / self.gamma
                if abs(self.sigma_dc - implied) > SIGMA_DC_CONSISTENCY_RTOL * implied:
                    raise ValueError(
                        f"sigma_dc={self.sigma_dc:.6g} inconsistent with "
                        f"eps0*omega_p**2/gamma={implied:.6g} (tolerance 1%)"
                    )

    @classmethod
    def from_conductivity(cls, sigma_dc: float, gamma: float) -> "DrudeMedium":
        """Build a medium with the given DC conductivity and damping rate.

        Uses omega_p = sqrt(sigma_dc*gamma/eps0), the inverse of the DC
        relation above.
        """
        if not sigma_dc > 0:
            raise ValueError(f"sigma_dc must be > 0, got {sigma_dc}")
        if not gamma > 0:
            raise ValueError(f"gamma must be > 0, got {gamma}")
        return cls(omega_p=math.sqrt(sigma_dc * gamma / EPS0), gamma=gamma, sigma_dc=sigma_dc)

    @classmethod
    def matching_permittivity(cls, eps: complex, f: "Frequency") -> "DrudeMedium":
        """Build the medium whose permittivity equals ``eps`` at frequency f.

        Inverts eps = 1 - omega_p^2/(omega^2 + i*omega*gamma); handy for
        scaled test media ("the metal that is -5 + 0.5j at 1 GHz").
        Requires Re(eps) < 1 and Im(eps) >= 0.
        """
        u = 1.0 / (1.0 - eps)
        if not (u.real > 0 and u.imag >= 0):
            raise ValueError(f"permittivity {eps} is not reachable by a passive Drude medium")
        w = f.omega
        omega_p = w / math.sqrt(u.real)
        gamma = w * u.imag / u.real
        return cls(omega_p=omega_p, gamma=gamma)


@dataclass(frozen=True)
class Dielectric:
    """Lossless dielectric half-space with relative permittivity eps1 >= 1."""

    eps1: float = 1.0

    def __post_init__(self) -> None:
        if not self.eps1 >= 1.0:
            raise ValueError(f"eps1 must be >= 1, got {self.eps1}")


@dataclass(frozen=True)
class Frequency:
    """Communication frequency, stored cyclic (Hz), exposed angular too."""

    nu: float

    def __post_init__(self) -> None:
        if not self.nu > 0:
            raise ValueError(f"frequency must be > 0 Hz, got {self.nu}")

    @property
    def omega(self) -> float:
        """Angular frequency (rad/s)."""
        return TWO_PI * self.nu

    @classmethod
    def from_omega(cls, omega: float) -> "Frequency":
        return cls(nu=omega / TWO_PI)


def drude_permittivity(medium: DrudeMedium, f: Frequency) -> complex:
    """Complex relative permittivity eps(omega) = 1 - omega_p^2/(omega^2 + i*omega*gamma).

    With the exp(-i*omega*t) convention the imaginary part is >= 0 for
    gamma >= 0 (passive, lossy metal).
    """
    w = f.omega
    return 1.0 - medium.omega_p**2 / (w * w + 1j * w * medium.gamma)


def drude_re_lowfreq(medium: DrudeMedium) -> float:
    """Low-frequency limit of the real permittivity, 1 - omega_p^2/gamma^2.

    Large and negative for any good conductor (omega_p >> gamma).

    Raises:
        ValueError: If gamma == 0 (the limit is -infinity, undefined here).
    """
    if medium.gamma == 0:
        raise ValueError("low-frequency limit undefined for gamma = 0 (lossless metal)")
    return 1.0 - (medium.omega_p / medium.gamma) ** 2


def skin_depth(sigma: float, f: Frequency) -> float:
    """RF skin depth delta = sqrt(1/(pi*mu0*sigma*nu)) of a good conductor (m).

    Strictly decreasing in both conductivity and frequency; quadrupling
    either halves the depth.

    Args:
        sigma: Medium conductivity (S/m), > 0.
        f: Communication frequency.
    """
    if not sigma > 0:
        raise ValueError(f"conductivity must be > 0, got {sigma}")
    return math.sqrt(1.0 / (math.pi * MU0 * sigma * f.nu))
