"""Uniform 2D staggered grid with per-cell media for the TM field solver.

Layout (square cells, spacing dx):

* Ex at (i+1/2, j)  -> array shape (nx, ny+1)
* Ey at (i, j+1/2)  -> array shape (nx+1, ny)
* Hz at (i+1/2, j+1/2) -> array shape (nx, ny)

Media are painted per cell (vacuum, dielectric, or Drude metal); edge
coefficients average the two adjacent cells, which places a flat material
interface exactly on a grid line.  The time step obeys the 2D Courant
bound dt <= 0.99*dx/(c*sqrt(2)); when Drude cells are present the bound
tightens to dt <= 2/sqrt(omega_p_max^2 + 8 c^2/dx^2) (plasma oscillation
folded into the magic-step limit), which is enforced at coefficient build.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..constants import C0, EPS0, MU0
from ..errors import ValidationError
from ..materials import Dielectric, DrudeMedium

__all__ = ["Grid2D", "VACUUM"]

VACUUM = 0  # medium index 0 is always vacuum

MAX_COURANT = 0.99
MIN_PML_CELLS = 8


@dataclass
class _CpmlAxis:
    """CPML recursion coefficients along one axis, at integer and half nodes."""

    b_int: np.ndarray
    c_int: np.ndarray
    b_half: np.ndarray
    c_half: np.ndarray


class Grid2D:
    """Mutable during setup (paint media), effectively frozen once stepped."""

    def __init__(
        self,
        nx: int,
        ny: int,
        dx: float,
        courant: float = 0.7,
        pml_cells: int = 12,
    ):
        if nx < 16 or ny < 16:
            raise ValidationError("grid.nx/ny", f"grid too small: {nx}x{ny} (need >= 16)")
        if not dx > 0:
            raise ValidationError("grid.dx", f"must be > 0, got {dx}")
        if not 0 < courant <= MAX_COURANT:
            raise ValidationError("grid.courant", f"must be in (0, {MAX_COURANT}], got {courant}")
        if pml_cells < MIN_PML_CELLS:
            raise ValidationError("grid.pml_cells", f"need >= {MIN_PML_CELLS}, got {pml_cells}")
        if 2 * pml_cells >= min(nx, ny) - 4:
            raise ValidationError("grid.pml_cells", "PML layers leave no interior")
        self.nx = nx
        self.ny = ny
        self.dx = float(dx)
        self.dt = courant * dx / (C0 * math.sqrt(2.0))
        self.pml_cells = pml_cells
        self.cell_medium = np.zeros((nx, ny), dtype=np.int16)
        self._media: list[object] = ["vacuum"]
        self._coeffs: _Coefficients | None = None

    # -- media -------------------------------------------------------------

    def add_medium(self, medium: Dielectric | DrudeMedium) -> int:
        """Register a medium, returning its paint index."""
        if not isinstance(medium, (Dielectric, DrudeMedium)):
            raise ValidationError("grid.medium", f"unsupported medium type {type(medium).__name__}")
        self._media.append(medium)
        self._coeffs = None
        return len(self._media) - 1

    def paint_rect(self, i0: int, i1: int, j0: int, j1: int, medium_index: int) -> None:
        """Fill the half-open cell rectangle [i0:i1) x [j0:j1)."""
        if not 0 <= medium_index < len(self._media):
            raise ValidationError("grid.medium_index", f"unknown medium {medium_index}")
        self.cell_medium[max(i0, 0) : i1, max(j0, 0) : j1] = medium_index
        self._coeffs = None

    def medium_tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Per-index (eps_r, omega_p^2, gamma) lookup tables."""
        n = len(self._media)
        eps = np.ones(n)
        wp2 = np.zeros(n)
        gam = np.zeros(n)
        for k, m in enumerate(self._media):
            if isinstance(m, Dielectric):
                eps[k] = m.eps1
            elif isinstance(m, DrudeMedium):
                wp2[k] = m.omega_p**2
                gam[k] = m.gamma
        return eps, wp2, gam

    # -- derived coefficient bundle -----------------------------------------

    def coefficients(self) -> "_Coefficients":
        if self._coeffs is None:
            self._coeffs = _Coefficients.build(self)
        return self._coeffs

    def in_interior(self, i: int, j: int) -> bool:
        """True if the cell lies strictly outside all PML layers."""
        p = self.pml_cells
        return p <= i < self.nx - p and p <= j < self.ny - p


def _edge_average_y(cell_field: np.ndarray) -> np.ndarray:
    """Cell-centered (nx, ny) -> Ex-node (nx, ny+1) by averaging in y."""
    nx, ny = cell_field.shape
    out = np.empty((nx, ny + 1))
    out[:, 1:ny] = 0.5 * (cell_field[:, :-1] + cell_field[:, 1:])
    out[:, 0] = cell_field[:, 0]
    out[:, ny] = cell_field[:, ny - 1]
    return out


def _edge_average_x(cell_field: np.ndarray) -> np.ndarray:
    """Cell-centered (nx, ny) -> Ey-node (nx+1, ny) by averaging in x."""
    nx, ny = cell_field.shape
    out = np.empty((nx + 1, ny))
    out[1:nx, :] = 0.5 * (cell_field[:-1, :] + cell_field[1:, :])
    out[0, :] = cell_field[0, :]
    out[nx, :] = cell_field[nx - 1, :]
    return out


def _weighted_gamma(wp2_a: np.ndarray, gam_a: np.ndarray, wp2_b: np.ndarray, gam_b: np.ndarray):
    """Average damping over two adjacent cells, weighted by plasma strength."""
    wsum = wp2_a + wp2_b
    num = wp2_a * gam_a + wp2_b * gam_b
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.where(wsum > 0, num / np.where(wsum > 0, wsum, 1.0), 0.0)
    return out


class _Coefficients:
    """Precomputed update coefficients; rebuilt whenever media change."""

    def __init__(self) -> None:
        self.c_h: float = 0.0
        self.c_ex: np.ndarray
        self.c_ey: np.ndarray
        self.beta_ex: np.ndarray | None = None
        self.kj_ex: np.ndarray | None = None
        self.beta_ey: np.ndarray | None = None
        self.kj_ey: np.ndarray | None = None
        self.cpml_x: _CpmlAxis
        self.cpml_y: _CpmlAxis

    @staticmethod
    def build(grid: Grid2D) -> "_Coefficients":
        eps_t, wp2_t, gam_t = grid.medium_tables()
        epsc = eps_t[grid.cell_medium]
        wp2c = wp2_t[grid.cell_medium]
        gamc = gam_t[grid.cell_medium]
        dt = grid.dt

        wp2_max = float(wp2c.max(initial=0.0))
        if wp2_max > 0:
            dt_bound = 2.0 / math.sqrt(wp2_max + 8.0 * C0**2 / grid.dx**2)
            if dt > 0.995 * dt_bound:
                raise ValidationError(
                    "grid.dt",
                    f"time step {dt:.3e}s exceeds the dispersive stability bound "
                    f"{0.995 * dt_bound:.3e}s; lower courant or omega_p",
                )

        co = _Coefficients()
        co.c_h = dt / MU0
        co.c_ex = dt / (EPS0 * _edge_average_y(epsc))
        co.c_ey = dt / (EPS0 * _edge_average_x(epsc))

        # Drude auxiliary current, semi-implicit (bilinear) in the damping:
        #   J(n+1/2) = beta*J(n-1/2) + kj*E(n)
        #   beta = (1-g*dt/2)/(1+g*dt/2), kj = eps0*wp^2*dt/(1+g*dt/2)
        # |beta| <= 1 for all gamma >= 0; combined with the tightened Courant
        # bound above this keeps the coupled update stable.
        nx, ny = grid.nx, grid.ny
        wp2_ex = _edge_average_y(wp2c)
        wp2_ey = _edge_average_x(wp2c)
        if wp2_max > 0:
            gam_ex = np.empty((nx, ny + 1))
            gam_ex[:, 1:ny] = _weighted_gamma(wp2c[:, :-1], gamc[:, :-1], wp2c[:, 1:], gamc[:, 1:])
            gam_ex[:, 0] = gamc[:, 0]
            gam_ex[:, ny] = gamc[:, ny - 1]
            gam_ey = np.empty((nx + 1, ny))
            gam_ey[1:nx, :] = _weighted_gamma(wp2c[:-1, :], gamc[:-1, :], wp2c[1:, :], gamc[1:, :])
            gam_ey[0, :] = gamc[0, :]
            gam_ey[nx, :] = gamc[nx - 1, :]
            co.beta_ex = (1.0 - gam_ex * dt / 2.0) / (1.0 + gam_ex * dt / 2.0)
            co.kj_ex = EPS0 * wp2_ex * dt / (1.0 + gam_ex * dt / 2.0)
            co.beta_ey = (1.0 - gam_ey * dt / 2.0) / (1.0 + gam_ey * dt / 2.0)
            co.kj_ey = EPS0 * wp2_ey * dt / (1.0 + gam_ey * dt / 2.0)

        co.cpml_x = _build_cpml_axis(grid.nx, grid.pml_cells, grid.dx, dt)
        co.cpml_y = _build_cpml_axis(grid.ny, grid.pml_cells, grid.dx, dt)
        return co


# CPML grading: cubic conductivity profile up to 0.8*(m+1)/(eta0*dx), linear
# complex-frequency-shift alpha from ALPHA_MAX at the interior edge to 0 at
# the outer wall.  kappa = 1 (no coordinate stretching).
CPML_ORDER = 3
CPML_SIGMA_SCALE = 0.8
CPML_ALPHA_MAX = 0.05  # S/m


def _cpml_profiles(n_nodes: int, offset: float, npml: int, dx: float, dt: float):
    """b, c arrays for node positions (index + offset) along an axis of n cells."""
    eta0 = math.sqrt(MU0 / EPS0)
    sigma_max = CPML_SIGMA_SCALE * (CPML_ORDER + 1) / (eta0 * dx)
    pos = np.arange(n_nodes) + offset
    n_cells = n_nodes if offset > 0 else n_nodes - 1
    depth_lo = (npml - pos) / npml
    depth_hi = (pos - (n_cells - npml)) / npml
    u = np.maximum(np.maximum(depth_lo, depth_hi), 0.0)
    u = np.minimum(u, 1.0)
    sigma = sigma_max * u**CPML_ORDER
    alpha = CPML_ALPHA_MAX * (1.0 - u)
    b = np.exp(-(sigma + alpha) * dt / EPS0)
    with np.errstate(invalid="ignore", divide="ignore"):
        c = np.where(sigma > 0, sigma / np.where(sigma + alpha > 0, sigma + alpha, 1.0) * (b - 1.0), 0.0)
    # outside the PML the recursion must be inert
    b = np.where(u > 0, b, 1.0)
    return b, c


def _build_cpml_axis(n_cells: int, npml: int, dx: float, dt: float) -> _CpmlAxis:
    b_int, c_int = _cpml_profiles(n_cells + 1, 0.0, npml, dx, dt)
    b_half, c_half = _cpml_profiles(n_cells, 0.5, npml, dx, dt)
    return _CpmlAxis(b_int=b_int, c_int=c_int, b_half=b_half, c_half=c_half)
