"""Leapfrog TM update with Drude auxiliary currents and CPML absorbers.

Update order per step (state holds E at step n, H at n-1/2):

1. Hz(n+1/2) from curl E(n), with CPML corrections in the boundary strips;
2. J(n+1/2) = beta*J(n-1/2) + kj*E(n) on Drude edges;
3. E(n+1) from curl Hz(n+1/2) minus J(n+1/2), with CPML corrections;
4. soft sources add current at t(n+1/2); the hard tip line overwrites Ey
   at t(n+1).

The outermost E lines are never updated (PEC backing behind the PML).
One simulation owns its state exclusively; all updates are plain numpy
with a fixed evaluation order, so identical inputs give bit-identical
fields.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import UnstableSimulation
from .grid import Grid2D
from .sources import SourceSpec

__all__ = ["FieldState", "step", "run"]

_FINITE_CHECK_EVERY = 25


@dataclass
class FieldState:
    """Field arrays plus the CPML recursion accumulators.

    ex/ey are V/m at E nodes, hz is A/m at cell centers, jx/jy are the
    Drude polarization currents (A/m^2) co-located with ex/ey.
    """

    ex: np.ndarray
    ey: np.ndarray
    hz: np.ndarray
    jx: np.ndarray
    jy: np.ndarray
    psi_exy: np.ndarray
    psi_eyx: np.ndarray
    psi_hzx: np.ndarray
    psi_hzy: np.ndarray
    step: int = 0
    time: float = field(default=0.0)

    @classmethod
    def zeros(cls, grid: Grid2D) -> "FieldState":
        nx, ny = grid.nx, grid.ny
        return cls(
            ex=np.zeros((nx, ny + 1)),
            ey=np.zeros((nx + 1, ny)),
            hz=np.zeros((nx, ny)),
            jx=np.zeros((nx, ny + 1)),
            jy=np.zeros((nx + 1, ny)),
            psi_exy=np.zeros((nx, ny + 1)),
            psi_eyx=np.zeros((nx + 1, ny)),
            psi_hzx=np.zeros((nx, ny)),
            psi_hzy=np.zeros((nx, ny)),
        )

    def energy(self, grid: Grid2D) -> float:
        """Total field energy per unit out-of-plane length (J/m).

        Electric + magnetic + the kinetic energy stored in the Drude
        currents, J^2/(2*eps0*wp^2), evaluated on painted Drude edges.
        """
        from ..constants import EPS0, MU0

        co = grid.coefficients()
        eps_ex = grid.dt / (EPS0 * co.c_ex)  # recover eps_r arrays
        eps_ey = grid.dt / (EPS0 * co.c_ey)
        u = 0.5 * EPS0 * (
            float(np.sum(eps_ex * self.ex**2)) + float(np.sum(eps_ey * self.ey**2))
        )
        u += 0.5 * MU0 * float(np.sum(self.hz**2))
        if co.kj_ex is not None:
            # kinetic term: J^2/(2*eps0*wp^2); wp^2 = kj*(1+g*dt/2)/(eps0*dt)
            for jarr, kj, beta in (
                (self.jx, co.kj_ex, co.beta_ex),
                (self.jy, co.kj_ey, co.beta_ey),
            ):
                mask = kj > 0
                if np.any(mask):
                    wp2 = kj[mask] * 2.0 / (1.0 + beta[mask]) / (EPS0 * grid.dt)
                    u += float(np.sum(jarr[mask] ** 2 / (2.0 * EPS0 * wp2)))
        return u * grid.dx**2


def step(grid: Grid2D, state: FieldState, sources: tuple[SourceSpec, ...] = ()) -> FieldState:
    """Advance the fields one time step in place; returns the same state."""
    co = grid.coefficients()
    dx = grid.dx
    p = grid.pml_cells
    nx, ny = grid.nx, grid.ny
    ex, ey, hz = state.ex, state.ey, state.hz

    # ---- Hz(n+1/2) ----
    curl_x = (ey[1:, :] - ey[:-1, :]) / dx          # dEy/dx at Hz nodes, (nx, ny)
    curl_y = (ex[:, 1:] - ex[:, :-1]) / dx          # dEx/dy at Hz nodes, (nx, ny)
    bx, cx = co.cpml_x.b_half, co.cpml_x.c_half
    for sl in (slice(0, p), slice(nx - p, nx)):
        state.psi_hzx[sl, :] = bx[sl, None] * state.psi_hzx[sl, :] + cx[sl, None] * curl_x[sl, :]
        curl_x[sl, :] += state.psi_hzx[sl, :]
    by, cy = co.cpml_y.b_half, co.cpml_y.c_half
    for sl in (slice(0, p), slice(ny - p, ny)):
        state.psi_hzy[:, sl] = by[None, sl] * state.psi_hzy[:, sl] + cy[None, sl] * curl_y[:, sl]
        curl_y[:, sl] += state.psi_hzy[:, sl]
    hz -= co.c_h * (curl_x - curl_y)

    # ---- J(n+1/2) on Drude edges ----
    if co.kj_ex is not None:
        state.jx *= co.beta_ex
        state.jx += co.kj_ex * ex
        state.jy *= co.beta_ey
        state.jy += co.kj_ey * ey

    # ---- E(n+1) ----
    t_half = state.time + 0.5 * grid.dt
    dhz_dy = (hz[:, 1:] - hz[:, :-1]) / dx          # (nx, ny-1) at Ex j=1..ny-1
    by_i, cy_i = co.cpml_y.b_int, co.cpml_y.c_int
    for sl in (slice(1, p + 1), slice(ny - p, ny)):
        psl = state.psi_exy[:, sl]
        psl *= by_i[None, sl]
        psl += cy_i[None, sl] * dhz_dy[:, _shift(sl, -1)]
        dhz_dy[:, _shift(sl, -1)] += psl
    ex[:, 1:ny] += co.c_ex[:, 1:ny] * dhz_dy
    if co.kj_ex is not None:
        ex[:, 1:ny] -= co.c_ex[:, 1:ny] * state.jx[:, 1:ny]

    dhz_dx = (hz[1:, :] - hz[:-1, :]) / dx          # (nx-1, ny) at Ey i=1..nx-1
    bx_i, cx_i = co.cpml_x.b_int, co.cpml_x.c_int
    for sl in (slice(1, p + 1), slice(nx - p, nx)):
        psl = state.psi_eyx[sl, :]
        psl *= bx_i[sl, None]
        psl += cx_i[sl, None] * dhz_dx[_shift(sl, -1), :]
        dhz_dx[_shift(sl, -1), :] += psl
    ey[1:nx, :] -= co.c_ey[1:nx, :] * dhz_dx
    if co.kj_ey is not None:
        ey[1:nx, :] -= co.c_ey[1:nx, :] * state.jy[1:nx, :]

    # ---- sources ----
    t_new = state.time + grid.dt
    for src in sources:
        _inject(grid, state, src, t_half, t_new)

    state.step += 1
    state.time = t_new

    if state.step % _FINITE_CHECK_EVERY == 0:
        s = float(hz.sum())
        if not np.isfinite(s):
            raise UnstableSimulation(
                f"non-finite fields at step {state.step} (t={state.time:.3e}s); "
                "check Courant factor and medium parameters"
            )
    return state


def _shift(sl: slice, delta: int) -> slice:
    return slice(sl.start + delta, sl.stop + delta)


def _inject(grid: Grid2D, state: FieldState, src: SourceSpec, t_half: float, t_new: float) -> None:
    co = grid.coefficients()
    if src.kind == "tip":
        v = src.value(t_new)
        for k, wgt in enumerate(src.tip_weights()):
            state.ey[src.i, src.j + k] = wgt * v
        return
    v = src.value(t_half)
    if src.kind == "sheet":
        if src.orientation == "x":
            state.ex[:, src.j] -= co.c_ex[:, src.j] * v
        else:
            state.ey[src.i, :] -= co.c_ey[src.i, :] * v
        return
    # point-dipole
    if src.orientation == "x":
        state.ex[src.i, src.j] -= co.c_ex[src.i, src.j] * v
    else:
        state.ey[src.i, src.j] -= co.c_ey[src.i, src.j] * v


def run(
    grid: Grid2D,
    state: FieldState,
    n_steps: int,
    sources: tuple[SourceSpec, ...] = (),
    probes: tuple = (),
) -> FieldState:
    """Step n_steps, sampling every probe after each step."""
    for src in sources:
        src.validate_in_grid(grid)
    for _ in range(n_steps):
        step(grid, state, sources)
        for probe in probes:
            probe.sample(grid, state)
    return state
