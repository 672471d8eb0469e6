"""Field excitations: soft current sources and the hard-driven tip line.

Kinds:

* ``point-dipole``: additive current density at one E node (soft; does not
  scatter incident fields).
* ``sheet``: a grid-spanning line of additive current, radiating plane
  waves both ways (orientation "x": horizontal row of Jx radiating +-y;
  orientation "y": vertical column of Jy radiating +-x).
* ``tip``: a short vertical hard-driven Ey line ending just above a
  surface; the per-cell drive amplitude tapers toward the free end and is
  strongest at the tip cell, mimicking the charge crowding of a sharpened
  apex.

Waveforms: ``cw`` (sinusoid with a raised-cosine turn-on over
ramp_periods), ``pulse`` (Gaussian-modulated sinusoid), ``gaussian``
(baseband Gaussian, width_periods wide).  Pulse-family sources are
effectively off after ``off_time()``; cw sources never switch off.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import ValidationError
from .grid import Grid2D

__all__ = ["SourceSpec"]

KINDS = ("point-dipole", "sheet", "tip")
WAVEFORMS = ("cw", "pulse", "gaussian")


@dataclass(frozen=True)
class SourceSpec:
    """One excitation; positions are in cells on the E-node lattice."""

    kind: str
    frequency: float
    amplitude: float = 1.0
    i: int = 0
    j: int = 0
    orientation: str = "y"
    waveform: str = "cw"
    ramp_periods: float = 5.0
    width_periods: float = 3.0
    length_cells: int = 4
    taper: bool = True
    apex: str = "low"  # which end of a tip line is the sharpened apex

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValidationError("source.kind", f"must be one of {KINDS}, got {self.kind!r}")
        if self.waveform not in WAVEFORMS:
            raise ValidationError(
                "source.waveform", f"must be one of {WAVEFORMS}, got {self.waveform!r}"
            )
        if not self.frequency > 0:
            raise ValidationError("source.frequency", "must be > 0")
        if self.orientation not in ("x", "y"):
            raise ValidationError("source.orientation", "must be 'x' or 'y'")
        if self.kind == "tip" and not 3 <= self.length_cells <= 5:
            raise ValidationError("source.length_cells", "tip line must be 3-5 cells")
        if self.apex not in ("low", "high"):
            raise ValidationError("source.apex", "must be 'low' or 'high'")

    @property
    def period(self) -> float:
        return 1.0 / self.frequency

    def value(self, t: float) -> float:
        """Drive waveform at time t (shared by all cells of the source)."""
        w = 2.0 * math.pi * self.frequency
        if self.waveform == "cw":
            t_ramp = self.ramp_periods * self.period
            if t <= 0.0:
                return 0.0
            env = 1.0 if t >= t_ramp else 0.5 * (1.0 - math.cos(math.pi * t / t_ramp))
            return self.amplitude * env * math.sin(w * t)
        tau = self.width_periods * self.period
        t0 = 4.0 * tau
        env = math.exp(-(((t - t0) / tau) ** 2))
        if self.waveform == "gaussian":
            return self.amplitude * env
        return self.amplitude * env * math.sin(w * (t - t0))

    def off_time(self) -> float | None:
        """Time after which a pulse-family source is numerically silent."""
        if self.waveform == "cw":
            return None
        tau = self.width_periods * self.period
        return 4.0 * tau + 6.0 * tau

    def tip_weights(self) -> list[float]:
        """Per-cell drive weights, lowest node first; strongest at the apex."""
        n = self.length_cells
        if not self.taper:
            return [1.0] * n
        w = [1.0 - k / n for k in range(n)]
        return w if self.apex == "low" else w[::-1]

    def validate_in_grid(self, grid: Grid2D) -> None:
        """Source nodes must lie inside the grid and clear of the PML."""
        p = grid.pml_cells
        if self.kind == "sheet":
            # spans the full transverse extent by construction; only the
            # line position must clear the PML
            if self.orientation == "x" and not p <= self.j <= grid.ny - p:
                raise ValidationError("source.j", "sheet row inside PML")
            if self.orientation == "y" and not p <= self.i <= grid.nx - p:
                raise ValidationError("source.i", "sheet column inside PML")
            return
        j_top = self.j + (self.length_cells if self.kind == "tip" else 0)
        if not (p <= self.i < grid.nx - p and p <= self.j and j_top < grid.ny - p):
            raise ValidationError(
                "source.position", f"({self.i}, {self.j}) not inside the PML-free interior"
            )
