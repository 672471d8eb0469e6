import cmath
import math

import numpy as np
import pytest

from oracles import spp_k_direct
from sewlink.constants import C0, TWO_PI
from sewlink.dispersion import (
    Interface,
    NoBoundMode,
    dispersion_curve,
    dispersion_curve_rows,
    sew_mode_from_permittivity,
    sew_wavelength_ratio,
    sew_wavevector,
    surface_mode_asymptote,
)
from sewlink.materials import Dielectric, DrudeMedium, Frequency

F1G = Frequency(1.0e9)

# frozen from a 50-digit complex evaluation of sqrt(eps/(1+eps)):
#   eps = -999996.6303135987 + 649610473.2432286j (omega_p=1e16, gamma=1e13, 2.45 GHz)
LOSSY_RATIO_RE_MINUS_1 = 1.1848439348751765e-12
LOSSY_RATIO_IM = 7.69690200135883e-10
# eps_m = -1e6 exactly, lossless
LOSSLESS_1E6_RATIO_MINUS_1 = 5.000003750003125e-07
# eps_m = -1.01, lossless: sqrt(1.01/0.01)
RATIO_EPS_101 = 10.04987562112089


def lossless_interface(eps_m: float, f: Frequency, eps1: float = 1.0) -> Interface:
    """Drude metal whose permittivity at f is exactly eps_m (< 0)."""
    omega_p = f.omega * math.sqrt(1.0 - eps_m)
    return Interface(Dielectric(eps1), DrudeMedium(omega_p=omega_p, gamma=0.0))


class TestWavevector:
    def test_eps_minus_two_closed_form(self):
        mode = sew_mode_from_permittivity(1.0, -2.0 + 0.0j, F1G)
        k0 = F1G.omega / C0
        assert abs(mode.k.real - math.sqrt(2.0) * k0) <= 1e-12 * math.sqrt(2.0) * k0
        assert mode.k.imag == 0.0
        assert mode.prop_length == math.inf
        # kappa1 = k0, kappa2 = 2*k0 for this case
        assert abs(mode.decay_dielectric - 1.0 / k0) < 1e-12 / k0
        assert abs(mode.decay_metal - 0.5 / k0) < 1e-12 / k0

    def test_eps_minus_two_via_drude(self):
        mode = sew_wavevector(lossless_interface(-2.0, F1G), F1G)
        k0 = F1G.omega / C0
        assert abs(mode.k.real - math.sqrt(2.0) * k0) <= 1e-9 * k0

    def test_light_line_limit(self):
        mode = sew_mode_from_permittivity(1.0, -1e8 + 0.0j, F1G)
        ratio = mode.k.real * C0 / F1G.omega
        assert 0.0 < ratio - 1.0 < 2.0 / 1e8

    def test_lossless_1e6_ratio(self):
        mode = sew_mode_from_permittivity(1.0, -1e6 + 0.0j, F1G)
        ratio = mode.k.real * C0 / F1G.omega
        assert abs(ratio - 1.0 - LOSSLESS_1E6_RATIO_MINUS_1) < 1e-8 * LOSSLESS_1E6_RATIO_MINUS_1

    def test_lossy_metal_at_wifi_frequency(self):
        f = Frequency(2.45e9)
        iface = Interface(Dielectric(1.0), DrudeMedium(omega_p=1e16, gamma=1e13))
        mode = sew_wavevector(iface, f)
        ratio = mode.k * C0 / f.omega
        # the -1 subtraction amplifies float error; 2e-3 relative on the excess
        assert abs(ratio.real - 1.0 - LOSSY_RATIO_RE_MINUS_1) < 2e-3 * LOSSY_RATIO_RE_MINUS_1
        assert abs(ratio.imag - LOSSY_RATIO_IM) < 1e-9 * LOSSY_RATIO_IM
        assert mode.prop_length > 0

    def test_matches_direct_complex_oracle(self):
        for eps_m in (-2.0 + 0.0j, -3.7 + 0.4j, -1.5 + 2.0j, -1e6 + 6.5e8j):
            mode = sew_mode_from_permittivity(1.0, eps_m, F1G)
            k_direct = spp_k_direct(1.0, eps_m, F1G.omega)
            assert cmath.isclose(mode.k, k_direct, rel_tol=1e-12)

    def test_wavelength_times_re_k_is_two_pi(self):
        mode = sew_mode_from_permittivity(1.0, -2.5 + 0.1j, F1G)
        assert mode.lambda_sew * mode.k.real == pytest.approx(TWO_PI, rel=1e-15)


class TestBoundModeGate:
    def test_no_bound_mode_above_asymptote(self):
        iface = lossless_interface(-2.0, F1G)  # omega_p = sqrt(3)*omega(1 GHz)
        asym_hz = surface_mode_asymptote(iface)
        assert asym_hz == pytest.approx(1.0e9 * math.sqrt(3.0 / 2.0), rel=1e-12)
        with pytest.raises(NoBoundMode) as exc:
            sew_wavevector(iface, Frequency(asym_hz * 1.0001))
        assert exc.value.asymptote_hz == pytest.approx(asym_hz, rel=1e-12)
        # just below the asymptote a mode exists
        sew_wavevector(iface, Frequency(asym_hz * 0.9999))

    def test_exactly_at_minus_eps1_raises(self):
        with pytest.raises(NoBoundMode):
            sew_mode_from_permittivity(1.0, -1.0 + 0.0j, F1G)

    def test_supports_bound_mode_helper(self):
        iface = lossless_interface(-2.0, F1G)
        assert iface.supports_bound_mode(F1G)
        assert not iface.supports_bound_mode(Frequency(2.0e9))


class TestWavelengthRatio:
    def test_eps_minus_two(self):
        r = sew_wavelength_ratio(lossless_interface(-2.0, F1G), F1G)
        assert r == pytest.approx(math.sqrt(2.0), rel=1e-9)

    def test_eps_minus_101(self):
        r = sew_wavelength_ratio(lossless_interface(-1.01, F1G), F1G)
        assert r == pytest.approx(RATIO_EPS_101, rel=1e-9)

    def test_large_negative_eps_approaches_unity(self):
        r = sew_wavelength_ratio(lossless_interface(-1e8, F1G), F1G)
        assert r == pytest.approx(1.0, abs=1e-7)

    def test_at_least_sqrt_eps1(self):
        for eps1 in (1.0, 2.25, 4.0):
            iface = lossless_interface(-3.0 * eps1, F1G, eps1=eps1)
            assert sew_wavelength_ratio(iface, F1G) > math.sqrt(eps1)


class TestInvariants:
    def test_momentum_excess(self):
        for eps1 in (1.0, 2.0):
            for eps_m in (-1.3 * eps1 - 0.2, -5.0, -50.0):
                mode = sew_mode_from_permittivity(eps1, complex(eps_m, 0.1), F1G)
                assert mode.k.real > (F1G.omega / C0) * math.sqrt(eps1)

    @pytest.mark.parametrize("mag", [1e3, 1e4, 1e5])
    def test_light_line_convergence_bound(self, mag):
        mode = sew_mode_from_permittivity(1.0, complex(-mag, 0.0), F1G)
        assert abs(mode.k.real * C0 / F1G.omega - 1.0) < 2.0 / mag

    def test_decay_constant_identity_lossless(self):
        # kappa real for a lossless bound mode: (1/d1)^2 - (1/d2)^2 = (eps_m - eps1)*k0^2
        k0 = F1G.omega / C0
        for eps1, eps_m in [(1.0, -2.0), (1.0, -7.3), (2.25, -9.0)]:
            mode = sew_mode_from_permittivity(eps1, complex(eps_m, 0.0), F1G)
            lhs = 1.0 / mode.decay_dielectric**2 - 1.0 / mode.decay_metal**2
            rhs = (eps_m - eps1) * k0 * k0
            assert abs(lhs - rhs) <= 1e-10 * abs(rhs)

    def test_branch_sanity_kappas_decay_both_sides(self):
        k0 = F1G.omega / C0
        for eps_m in (-2.0 + 0.0j, -2.5 + 0.3j, -40.0 + 5.0j):
            mode = sew_mode_from_permittivity(1.0, eps_m, F1G)
            kappa1 = cmath.sqrt(mode.k**2 - k0 * k0)
            kappa2 = cmath.sqrt(mode.k**2 - eps_m * k0 * k0)
            # the stored decay lengths must come from Re > 0 branches
            assert mode.decay_dielectric > 0
            assert mode.decay_metal > 0
            assert abs(mode.decay_dielectric - 1.0 / abs(kappa1.real)) <= 1e-9 / abs(kappa1.real)
            assert abs(mode.decay_metal - 1.0 / abs(kappa2.real)) <= 1e-9 / abs(kappa2.real)


class TestCurve:
    def test_single_point_matches_wavevector(self):
        iface = lossless_interface(-2.0, F1G)
        rows = dispersion_curve_rows(iface, [F1G.omega])
        mode = sew_wavevector(iface, F1G)
        assert rows[0].bound
        assert rows[0].re_k == mode.k.real
        assert rows[0].im_k == mode.k.imag

    def test_grid_straddling_asymptote_partitions(self):
        iface = lossless_interface(-2.0, F1G)
        w_asym = TWO_PI * surface_mode_asymptote(iface)
        grid = list(np.linspace(0.3 * w_asym, 1.4 * w_asym, 61))
        rows = dispersion_curve_rows(iface, grid)
        assert len(rows) == 61
        for p in rows:
            if p.omega < w_asym:
                assert p.bound, f"omega {p.omega} below asymptote flagged unbound"
            else:
                assert not p.bound
                assert math.isnan(p.re_k)

    def test_monotone_re_k_below_asymptote_brute_force(self):
        # brute-force oracle over 1e4 points, then the module rows must agree
        f_p = 1.0e9
        omega_p = TWO_PI * f_p
        iface = Interface(Dielectric(1.0), DrudeMedium(omega_p=omega_p, gamma=0.0))
        w_asym = omega_p / math.sqrt(2.0)
        grid = np.linspace(0.01 * w_asym, 0.999 * w_asym, 10_000)
        eps = 1.0 - (omega_p / grid) ** 2
        k_direct = np.array([spp_k_direct(1.0, e, w).real for e, w in zip(eps, grid)])
        assert np.all(np.diff(k_direct) > 0), "oracle curve not monotone"
        rows = dispersion_curve_rows(iface, list(grid))
        re_k = np.array([p.re_k for p in rows])
        assert np.all([p.bound for p in rows])
        np.testing.assert_allclose(re_k, k_direct, rtol=1e-12)

    def test_rejects_bad_grids(self):
        iface = lossless_interface(-2.0, F1G)
        with pytest.raises(ValueError):
            dispersion_curve_rows(iface, [])
        with pytest.raises(ValueError):
            dispersion_curve_rows(iface, [2.0, 1.0])
        with pytest.raises(ValueError):
            dispersion_curve_rows(iface, [-1.0, 1.0])

    def test_csv_table_layout(self):
        iface = lossless_interface(-2.0, F1G)
        header, table = dispersion_curve(iface, [F1G.omega, 2.1 * F1G.omega])
        assert header == ["omega_rad_s", "re_k_rad_m", "im_k_rad_m", "lambda_sew_m", "bound"]
        assert table[0][4] == 1
        assert table[1][4] == 0
