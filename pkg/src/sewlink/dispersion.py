"""Surface-electromagnetic-wave dispersion at a metal/dielectric interface.

Solves the single-interface bound-mode relation

    k = (omega/c) * sqrt(eps1*eps_m / (eps1 + eps_m))

for the complex in-plane wavevector, together with the transverse decay
constants kappa_i = sqrt(k^2 - eps_i*omega^2/c^2) on each side.  A bound
mode exists only while Re eps_m < -eps1; above the surface-mode asymptote
frequency omega_p/sqrt(1 + eps1) (lossless case) :class:`NoBoundMode` is
raised.  The existence gate uses Re eps_m only; lossy quasi-bound modes
above the asymptote are out of scope.

Branch choice: principal square root, with the sign flipped if needed so
that Re(k) > 0 and, independently per side, Re(kappa_i) > 0 (fields decay
away from the interface).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .constants import C0, TWO_PI
from .materials import Dielectric, DrudeMedium, Frequency, drude_permittivity

__all__ = [
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
]

# Im(k) below this is treated as lossless: infinite propagation length.
_LOSSLESS_IM_K = 1e-300


class NoBoundMode(ValueError):
    """No bound surface mode: Re eps_m >= -eps1 at the requested frequency.

    Attributes:
        asymptote_hz: The surface-mode asymptote frequency (Hz) below which
            bound modes exist, or None if the metal never supports one.
    """

    def __init__(self, message: str, asymptote_hz: float | None = None):
        super().__init__(message)
        self.asymptote_hz = asymptote_hz


@dataclass(frozen=True)
class Interface:
    """A dielectric half-space against a Drude metal; the SEW host."""

    dielectric: Dielectric
    metal: DrudeMedium

    def supports_bound_mode(self, f: Frequency) -> bool:
        eps_m = drude_permittivity(self.metal, f)
        return eps_m.real < -self.dielectric.eps1


@dataclass(frozen=True)
class SewMode:
    """Bound surface-mode descriptors at one frequency.

    Attributes:
        k: Complex in-plane wavevector (rad/m), Re(k) > 0, Im(k) >= 0.
        lambda_sew: Surface-wave wavelength 2*pi/Re(k) (m).
        prop_length: 1/e intensity propagation length 1/(2*Im(k)) (m);
            +inf for a lossless metal.
        decay_dielectric: 1/e field decay length into the dielectric (m).
        decay_metal: 1/e field decay length into the metal (m).
        frequency: The evaluation frequency.
    """

    k: complex
    lambda_sew: float
    prop_length: float
    decay_dielectric: float
    decay_metal: float
    frequency: Frequency


@dataclass(frozen=True)
class DispersionPoint:
    """One row of a dispersion curve; k fields are NaN when not bound."""

    omega: float
    re_k: float
    im_k: float
    lambda_sew: float
    bound: bool


def surface_mode_asymptote(iface: Interface) -> float | None:
    """Frequency (Hz) of the bound-mode asymptote, where Re eps_m = -eps1.

    For a Drude metal this is sqrt(omega_p^2/(1+eps1) - gamma^2)/(2*pi);
    returns None when gamma is too large for any bound mode to exist.
    """
    m, eps1 = iface.metal, iface.dielectric.eps1
    w2 = m.omega_p**2 / (1.0 + eps1) - m.gamma**2
    if w2 <= 0:
        return None
    return math.sqrt(w2) / TWO_PI


def sew_mode_from_permittivity(eps1: float, eps_m: complex, f: Frequency) -> SewMode:
    """Solve the interface relation for explicitly given permittivities.

    This is the computational core of :func:`sew_wavevector`; it is also
    useful directly when a test or caller wants an exact eps_m rather
    than one evaluated from Drude parameters.

    Raises:
        NoBoundMode: If Re eps_m >= -eps1.
    """
    if not eps_m.real < -eps1:
        raise NoBoundMode(
            f"no bound surface mode: Re eps_m = {eps_m.real:.6g} >= -eps1 = {-eps1:.6g}"
        )
    w = f.omega
    k0 = w / C0
    k = k0 * cmath.sqrt(eps1 * eps_m / (eps1 + eps_m))
    if k.real < 0:
        k = -k
    kappa1 = cmath.sqrt(k * k - eps1 * k0 * k0)
    if kappa1.real < 0:
        kappa1 = -kappa1
    kappa2 = cmath.sqrt(k * k - eps_m * k0 * k0)
    if kappa2.real < 0:
        kappa2 = -kappa2
    im_k = k.imag
    prop = math.inf if im_k < _LOSSLESS_IM_K else 1.0 / (2.0 * im_k)
    return SewMode(
        k=k,
        lambda_sew=TWO_PI / k.real,
        prop_length=prop,
        decay_dielectric=1.0 / kappa1.real,
        decay_metal=1.0 / kappa2.real,
        frequency=f,
    )


def sew_wavevector(iface: Interface, f: Frequency) -> SewMode:
    """Bound-mode descriptors for the interface at frequency f.

    Raises:
        NoBoundMode: Above the surface-mode asymptote (the exception
            carries the asymptote frequency in Hz).
    """
    eps1 = iface.dielectric.eps1
    eps_m = drude_permittivity(iface.metal, f)
    if not eps_m.real < -eps1:
        asym = surface_mode_asymptote(iface)
        detail = f"; bound modes exist below {asym:.6g} Hz" if asym else ""
        raise NoBoundMode(
            f"no bound surface mode at {f.nu:.6g} Hz: Re eps_m = {eps_m.real:.6g} "
            f">= -eps1 = {-eps1:.6g}{detail}",
            asymptote_hz=asym,
        )
    return sew_mode_from_permittivity(eps1, eps_m, f)


def sew_wavelength_ratio(iface: Interface, f: Frequency) -> float:
    """Free-space-to-surface wavelength ratio lambda/lambda_sew = Re(k)*c/omega.

    Always >= sqrt(eps1) for a bound mode; this is the confinement factor
    that feeds the surface-wave aperture-transmission estimate.
    """
    mode = sew_wavevector(iface, f)
    return mode.k.real * C0 / f.omega


def dispersion_curve_rows(
    iface: Interface, omega_grid: Sequence[float] | Iterable[float]
) -> list[DispersionPoint]:
    """Evaluate the bound-mode relation across an angular-frequency grid.

    Grid values must be strictly increasing and positive.  Rows above the
    asymptote are returned flagged bound=False with NaN wavevector fields
    rather than dropped.
    """
    omegas = list(omega_grid)
    if not omegas:
        raise ValueError("omega grid must not be empty")
    prev = 0.0
    for w in omegas:
        if not w > prev:
            raise ValueError("omega grid must be strictly increasing and positive")
        prev = w
    rows = []
    for w in omegas:
        f = Frequency.from_omega(w)
        try:
            mode = sew_wavevector(iface, f)
        except NoBoundMode:
            rows.append(DispersionPoint(w, math.nan, math.nan, math.nan, False))
        else:
            rows.append(DispersionPoint(w, mode.k.real, mode.k.imag, mode.lambda_sew, True))
    return rows


def dispersion_curve(
    iface: Interface, omega_grid: Sequence[float] | Iterable[float]
) -> tuple[list[str], list[list[float]]]:
    """Dispersion curve as (header, rows) ready for CSV serialization.

    Columns: omega_rad_s, re_k_rad_m, im_k_rad_m, lambda_sew_m, bound (0/1).
    """
    header = ["omega_rad_s", "re_k_rad_m", "im_k_rad_m", "lambda_sew_m", "bound"]
    table = [
        [p.omega, p.re_k, p.im_k, p.lambda_sew, 1 if p.bound else 0]
        for p in dispersion_curve_rows(iface, omega_grid)
    ]
    return header, table
