import math

import pytest

from sewlink.dispersion import Interface
from sewlink.materials import Dielectric, DrudeMedium, Frequency


def scaled_interface(eps_m_at_f0: float, f0: float = 1.0e9, eps1: float = 1.0) -> Interface:
    """Lossless Drude interface whose permittivity at f0 equals eps_m_at_f0."""
    omega_p = 2.0 * math.pi * f0 * math.sqrt(1.0 - eps_m_at_f0)
    return Interface(Dielectric(eps1), DrudeMedium(omega_p=omega_p, gamma=0.0))


@pytest.fixture(scope="session")
def surface_launch_run():
    """One shared tip-launch run on the eps = -2.5 scaled metal at 1 GHz."""
    from sewlink.fdtd import SourceSpec, run_surface_launch

    f0 = 1.0e9
    iface = scaled_interface(-2.5, f0)
    src = SourceSpec(kind="tip", frequency=f0, amplitude=1.0)
    result = run_surface_launch(iface, src)
    return iface, Frequency(f0), result


@pytest.fixture(scope="session")
def slit_study_run():
    """Shared slit-transmission study: lossy scaled wall, widths 0/4/8 cells."""
    from sewlink.fdtd import SlitWall, SourceSpec, run_slit_study

    f0 = 1.0e9
    metal = DrudeMedium.matching_permittivity(-5.0 + 0.6j, Frequency(f0))
    wall = SlitWall(medium=metal, thickness_cells=32, slit_width_cells=8)
    src = SourceSpec(kind="sheet", frequency=f0, amplitude=1.0)
    return run_slit_study(wall, src, tem_widths=(0, 4, 8), sew_widths=(8,))
