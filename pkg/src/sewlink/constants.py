"""Physical constants used throughout the toolkit.

Values are CODATA 2018, written out as literals so golden outputs are
deterministic and independent of any third-party constants table.
All quantities are SI.
"""

C0: float = 299792458.0
"""Speed of light in vacuum (m/s, exact)."""

MU0: float = 1.25663706212e-6
"""Vacuum permeability (H/m)."""

EPS0: float = 8.8541878128e-12
"""Vacuum permittivity (F/m)."""

ETA0: float = 376.730313668
"""Impedance of free space (ohm)."""

TWO_PI: float = 6.283185307179586
"""2*pi, for cyclic <-> angular frequency conversion."""
