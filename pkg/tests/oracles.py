"""Independent numerical oracles used to freeze or cross-check expected values.

These deliberately avoid the package's own code paths:

* :func:`spp_k_direct`: direct complex evaluation of the bound-mode
  wavevector from permittivities (cmath, no package imports).
* :func:`spheroid_boss_apex_enhancement`: brute-force electrostatic solve
  of a grounded plane with a conducting prolate-spheroid boss in a uniform
  perpendicular field, on a graded axisymmetric finite-difference grid
  with Shortley-Weller boundary-fitted arms at the curved conductor.
  The apex field over the applied field is the lightning-rod enhancement
  the antenna model must reproduce.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.sparse
import scipy.sparse.linalg


def spp_k_direct(eps1: float, eps_m: complex, omega: float, c: float = 299792458.0) -> complex:
    """Bound-mode wavevector by direct evaluation, principal branch, Re > 0."""
    k = (omega / c) * cmath.sqrt(eps1 * eps_m / (eps1 + eps_m))
    return -k if k.real < 0 else k


def _graded_axis(segments: list[tuple[float, float, float]]) -> np.ndarray:
    """Concatenate linspace segments (start, stop, step) into one node array."""
    chunks = []
    for start, stop, step in segments:
        n = max(1, int(round((stop - start) / step)))
        chunks.append(np.linspace(start, stop, n + 1))
    return np.unique(np.concatenate(chunks))


def spheroid_boss_apex_enhancement(aspect: float) -> float:
    """Apex field enhancement of a grounded hemispheroidal boss, by FD solve.

    ``aspect`` is boss height over apex curvature radius (>= 1).  The boss
    has height 1 and semi-minor axis b = 1/sqrt(aspect), so its apex
    curvature radius is b^2 = 1/aspect.  Solves Laplace's equation in
    cylindrical (rho, z) coordinates with phi = 0 on the conductor and the
    z = 0 plane and phi = -z (unit applied field) on the far boundaries;
    arms of nodes next to the curved surface are shortened to the exact
    surface intersection (the conductor is convex, so only the -rho and -z
    arms can be cut).  Returns E_z at the apex, the enhancement factor.
    """
    if aspect < 1.0:
        raise ValueError("aspect must be >= 1")
    b = 1.0 / math.sqrt(aspect)
    tip_curvature = b * b
    h_fine = min(tip_curvature / 4.0, 0.02)
    h_mid = max(0.01, h_fine)
    far = 5.0

    z_nodes = _graded_axis([
        (0.0, 0.5, 0.04),
        (0.5, 0.88, h_mid),
        (0.88, 1.12, h_fine),
        (1.12, 1.6, h_mid),
        (1.6, far, 0.08),
    ])
    if not np.any(np.isclose(z_nodes, 1.0, atol=1e-12)):
        z_nodes = np.unique(np.append(z_nodes, 1.0))
    r1 = max(1.5 * b, 0.1)
    r2 = max(2.5 * b, r1 + 0.2)
    r3 = max(1.4, r2 + 0.2)
    rho_nodes = _graded_axis([
        (0.0, r1, h_fine),
        (r1, r2, h_mid),
        (r2, r3, 0.04),
        (r3, far, 0.1),
    ])

    nr, nz = rho_nodes.size, z_nodes.size
    idx = np.arange(nr * nz).reshape(nr, nz)

    inside = (rho_nodes[:, None] / b) ** 2 + (z_nodes[None, :]) ** 2 <= 1.0 + 1e-12
    dirichlet = inside.copy()
    phi_fixed = np.zeros((nr, nz))
    dirichlet[:, 0] = True
    dirichlet[:, -1] = True
    phi_fixed[:, -1] = -z_nodes[-1]
    dirichlet[-1, :] = True
    phi_fixed[-1, :] = -z_nodes

    def surface_z(rho: float) -> float:
        return math.sqrt(max(1.0 - (rho / b) ** 2, 0.0))

    def surface_rho(z: float) -> float:
        return b * math.sqrt(max(1.0 - z * z, 0.0))

    rows: list[int] = []
    cols: list[int] = []
    vals: list[float] = []
    rhs = np.zeros(nr * nz)

    def add(n: int, m: int, v: float) -> None:
        rows.append(n)
        cols.append(m)
        vals.append(v)

    for i in range(nr):
        for j in range(nz):
            n = idx[i, j]
            if dirichlet[i, j]:
                add(n, n, 1.0)
                rhs[n] = phi_fixed[i, j]
                continue
            diag = 0.0

            # z arms (conductor can only cut the -z arm; its phi is 0)
            hzp = z_nodes[j + 1] - z_nodes[j]
            hzm = z_nodes[j] - z_nodes[j - 1]
            zm_cut = inside[i, j - 1]
            if zm_cut:
                hzm = max(z_nodes[j] - surface_z(rho_nodes[i]), 0.05 * hzm)
            czm = 2.0 / (hzm * (hzm + hzp))
            czp = 2.0 / (hzp * (hzm + hzp))
            if not zm_cut:
                add(n, idx[i, j - 1], czm)
            add(n, idx[i, j + 1], czp)
            diag -= czm + czp

            # rho arms
            if i == 0:
                hp = rho_nodes[1] - rho_nodes[0]
                add(n, idx[1, j], 4.0 / hp**2)
                diag -= 4.0 / hp**2
            else:
                hrp = rho_nodes[i + 1] - rho_nodes[i]
                hrm = rho_nodes[i] - rho_nodes[i - 1]
                rm_cut = inside[i - 1, j]
                if rm_cut:
                    hrm = max(rho_nodes[i] - surface_rho(z_nodes[j]), 0.05 * hrm)
                crm = 2.0 / (hrm * (hrm + hrp))
                crp = 2.0 / (hrp * (hrm + hrp))
                dm = -hrp / (hrm * (hrm + hrp))
                dp = hrm / (hrp * (hrm + hrp))
                d0 = (hrp - hrm) / (hrm * hrp)
                inv_r = 1.0 / rho_nodes[i]
                if not rm_cut:
                    add(n, idx[i - 1, j], crm + inv_r * dm)
                add(n, idx[i + 1, j], crp + inv_r * dp)
                diag -= crm + crp
                diag += inv_r * d0
            add(n, n, diag)

    mat = scipy.sparse.csr_matrix((vals, (rows, cols)), shape=(nr * nz, nr * nz))
    phi = scipy.sparse.linalg.spsolve(mat, rhs).reshape(nr, nz)

    j_apex = int(np.argmin(np.abs(z_nodes - 1.0)))
    h1 = z_nodes[j_apex + 1] - z_nodes[j_apex]
    h2 = z_nodes[j_apex + 2] - z_nodes[j_apex + 1]
    assert abs(h1 - h2) < 1e-9, "apex difference stencil needs uniform spacing"
    # second-order one-sided derivative; phi(apex) = 0 on the conductor
    dphi_dz = (4.0 * phi[0, j_apex + 1] - phi[0, j_apex + 2]) / (2.0 * h1)
    return -dphi_dz
