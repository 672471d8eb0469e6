"""2D transverse-magnetic field simulator with dispersive-metal media."""

from .grid import Grid2D
from .measure import (
    fit_exponential_decay,
    mean_tail,
    peak_time,
    periodic_drift,
    zero_crossing_wavelength,
)
from .probes import AmplitudeLineProbe, FluxLineProbe, PointProbe
from .scenarios import (
    SlitStudyResult,
    SlitWall,
    SurfaceLaunchResult,
    measure_conductor_skin_depth,
    measure_vacuum_pulse_speed,
    resolve_workers,
    run_slit_study,
    run_slit_transmission,
    run_surface_launch,
)
from .snapshots import read_snapshot, write_snapshot
from .solver import FieldState, run, step
from .sources import SourceSpec

__all__ = [
    "Grid2D",
    "FieldState",
    "SourceSpec",
    "PointProbe",
    "AmplitudeLineProbe",
    "FluxLineProbe",
    "step",
    "run",
    "run_surface_launch",
    "run_slit_transmission",
    "run_slit_study",
    "measure_vacuum_pulse_speed",
    "measure_conductor_skin_depth",
    "SlitWall",
    "SlitStudyResult",
    "SurfaceLaunchResult",
    "resolve_workers",
    "write_snapshot",
    "read_snapshot",
    "zero_crossing_wavelength",
    "fit_exponential_decay",
    "peak_time",
    "periodic_drift",
    "mean_tail",
]
