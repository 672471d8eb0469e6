"""Probes sampled between steps: point series, line amplitudes, flux lines.

Probes read state only after a completed step; they never mutate fields.
"""

from __future__ import annotations

import numpy as np

from ..errors import ValidationError
from .grid import Grid2D
from .solver import FieldState

__all__ = ["PointProbe", "AmplitudeLineProbe", "FluxLineProbe", "poynting_flux_y", "poynting_flux_x"]

_FIELDS = ("ex", "ey", "hz")


def _field(state: FieldState, name: str) -> np.ndarray:
    if name not in _FIELDS:
        raise ValidationError("probe.field", f"must be one of {_FIELDS}, got {name!r}")
    return getattr(state, name)


class PointProbe:
    """Time series of one field component at one node."""

    def __init__(self, field: str, i: int, j: int):
        self.field = field
        self.i = i
        self.j = j
        self.times: list[float] = []
        self.values: list[float] = []

    def sample(self, grid: Grid2D, state: FieldState) -> None:
        self.times.append(state.time)
        self.values.append(float(_field(state, self.field)[self.i, self.j]))

    def series(self) -> tuple[np.ndarray, np.ndarray]:
        return np.asarray(self.times), np.asarray(self.values)


class AmplitudeLineProbe:
    """Running max |field| along an axis-aligned line, within a step window.

    axis "x": horizontal line at constant j over i in [lo, hi);
    axis "y": vertical line at constant i over j in [lo, hi).
    Used for steady-state amplitude-vs-distance profiles: enable the window
    over an integer number of late periods and the profile is the envelope.
    """

    def __init__(self, field: str, axis: str, fixed: int, lo: int, hi: int,
                 start_step: int = 0, stop_step: int | None = None):
        if axis not in ("x", "y"):
            raise ValidationError("probe.axis", "must be 'x' or 'y'")
        self.field = field
        self.axis = axis
        self.fixed = fixed
        self.lo = lo
        self.hi = hi
        self.start_step = start_step
        self.stop_step = stop_step
        self.amplitude = np.zeros(hi - lo)

    def sample(self, grid: Grid2D, state: FieldState) -> None:
        if state.step < self.start_step:
            return
        if self.stop_step is not None and state.step > self.stop_step:
            return
        arr = _field(state, self.field)
        line = arr[self.lo : self.hi, self.fixed] if self.axis == "x" else arr[self.fixed, self.lo : self.hi]
        np.maximum(self.amplitude, np.abs(line), out=self.amplitude)

    def positions_cells(self) -> np.ndarray:
        return np.arange(self.lo, self.hi)


def poynting_flux_y(state: FieldState, j: int, i_lo: int, i_hi: int, dx: float) -> float:
    """Instantaneous power through the horizontal line y=j*dx, +y positive (W/m).

    Sy = -Ex*Hz with Hz averaged to the Ex row; integrate over i in [i_lo, i_hi).
    """
    ex_row = state.ex[i_lo:i_hi, j]
    hz_avg = 0.5 * (state.hz[i_lo:i_hi, j - 1] + state.hz[i_lo:i_hi, j])
    return float(np.sum(-ex_row * hz_avg) * dx)


def poynting_flux_x(state: FieldState, i: int, j_lo: int, j_hi: int, dx: float) -> float:
    """Instantaneous power through the vertical line x=i*dx, +x positive (W/m).

    Sx = Ey*Hz with Hz averaged to the Ey column.
    """
    ey_col = state.ey[i, j_lo:j_hi]
    hz_avg = 0.5 * (state.hz[i - 1, j_lo:j_hi] + state.hz[i, j_lo:j_hi])
    return float(np.sum(ey_col * hz_avg) * dx)


class FluxLineProbe:
    """Time series of Poynting flux through an axis-aligned line.

    normal "y": horizontal line at row j (flux positive toward +y);
    normal "x": vertical line at column i (positive toward +x).
    """

    def __init__(self, normal: str, fixed: int, lo: int, hi: int):
        if normal not in ("x", "y"):
            raise ValidationError("probe.normal", "must be 'x' or 'y'")
        if normal == "y" and fixed < 1:
            raise ValidationError("probe.fixed", "horizontal flux line needs j >= 1")
        if normal == "x" and fixed < 1:
            raise ValidationError("probe.fixed", "vertical flux line needs i >= 1")
        self.normal = normal
        self.fixed = fixed
        self.lo = lo
        self.hi = hi
        self.times: list[float] = []
        self.values: list[float] = []

    def sample(self, grid: Grid2D, state: FieldState) -> None:
        if self.normal == "y":
            p = poynting_flux_y(state, self.fixed, self.lo, self.hi, grid.dx)
        else:
            p = poynting_flux_x(state, self.fixed, self.lo, self.hi, grid.dx)
        self.times.append(state.time)
        self.values.append(p)

    def series(self) -> tuple[np.ndarray, np.ndarray]:
        return np.asarray(self.times), np.asarray(self.values)
