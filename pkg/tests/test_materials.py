import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sewlink.constants import EPS0
from sewlink.materials import (
    Dielectric,
    DrudeMedium,
    Frequency,
    drude_permittivity,
    drude_re_lowfreq,
    skin_depth,
)

F_2G45 = Frequency(2.45e9)

# frozen from a 50-digit scalar evaluation of the corresponding closed forms
SKIN_DEPTH_COPPER_2G45 = 1.3351285799119215e-06   # sigma = 5.8e7 S/m
EPS_RE_COPPERISH = -999996.6303135987             # omega_p = 1e16, gamma = 1e13
EPS_IM_COPPERISH = 649610473.2432286


def rel(a, b):
    return abs(a - b) / abs(b)


class TestDrudePermittivity:
    def test_zero_crossing_at_plasma_frequency(self):
        f = Frequency(1.0e9)
        m = DrudeMedium(omega_p=f.omega, gamma=0.0)
        assert drude_permittivity(m, f) == 0.0

    def test_vacuum_limit_for_vanishing_plasma_frequency(self):
        m = DrudeMedium(omega_p=1e-12, gamma=0.0)
        assert drude_permittivity(m, Frequency(1e10)) == 1.0

    def test_copperish_parameters(self):
        m = DrudeMedium(omega_p=1e16, gamma=1e13)
        eps = drude_permittivity(m, F_2G45)
        assert rel(eps.real, EPS_RE_COPPERISH) < 1e-12
        assert rel(eps.imag, EPS_IM_COPPERISH) < 1e-12

    @given(
        omega_p=st.floats(1e6, 1e18),
        gamma=st.floats(0.0, 1e16),
        nu=st.floats(1e3, 1e12),
    )
    @settings(max_examples=300, deadline=None)
    def test_real_part_identity(self, omega_p, gamma, nu):
        # Re of the complex form must equal the explicit real-part formula;
        # near the zero crossing 1 - X with X ~ 1 the honest scale is the
        # subtraction operand, not the cancelled result
        m = DrudeMedium(omega_p=omega_p, gamma=gamma)
        f = Frequency(nu)
        x = omega_p**2 / (f.omega**2 + gamma**2)
        explicit = 1.0 - x
        scale = max(1.0, x, abs(explicit))
        assert abs(drude_permittivity(m, f).real - explicit) <= 1e-12 * scale

    @given(
        omega_p=st.floats(1e8, 1e16),
        gamma=st.floats(0.0, 1e14),
        nu=st.floats(1e3, 1e11),
        factor=st.floats(1.001, 100.0),
    )
    @settings(max_examples=200, deadline=None)
    def test_real_part_never_decreases_with_frequency(self, omega_p, gamma, nu, factor):
        # monotone up to float rounding; a strict check runs on a resolved grid
        m = DrudeMedium(omega_p=omega_p, gamma=gamma)
        lo = drude_permittivity(m, Frequency(nu)).real
        hi = drude_permittivity(m, Frequency(nu * factor)).real
        assert hi >= lo - 1e-12 * max(1.0, abs(lo))

    def test_real_part_strictly_increases_on_resolved_grid(self):
        m = DrudeMedium(omega_p=1e12, gamma=1e10)
        values = [drude_permittivity(m, Frequency(nu)).real for nu in (1e8, 3e8, 1e9, 3e9, 1e10)]
        assert all(b > a for a, b in zip(values, values[1:]))

    @given(
        ratio=st.floats(10.0, 1e4),         # omega_p/gamma; keeps the limit away from 0
        gamma=st.floats(1e9, 1e14),
        scale=st.floats(1e-6, 1e-2),        # omega = scale*gamma/100 stays below gamma/100
    )
    @settings(max_examples=200, deadline=None)
    def test_low_frequency_limit(self, ratio, gamma, scale):
        m = DrudeMedium(omega_p=ratio * gamma, gamma=gamma)
        limit = drude_re_lowfreq(m)
        omega = scale * gamma / 100.0
        eps = drude_permittivity(m, Frequency.from_omega(omega))
        assert abs(eps.real - limit) / abs(limit) < 1e-4

    def test_positive_imaginary_part_for_lossy_metal(self):
        m = DrudeMedium(omega_p=1e12, gamma=1e10)
        assert drude_permittivity(m, Frequency(1e9)).imag > 0


class TestLowFrequencyLimitValue:
    def test_equal_parameters_cancel(self):
        assert drude_re_lowfreq(DrudeMedium(omega_p=5e9, gamma=5e9)) == 0.0

    def test_double_plasma_frequency(self):
        assert drude_re_lowfreq(DrudeMedium(omega_p=2e9, gamma=1e9)) == -3.0

    def test_copperish(self):
        assert rel(drude_re_lowfreq(DrudeMedium(omega_p=1e16, gamma=1e13)), -999999.0) < 1e-12

    def test_lossless_rejected(self):
        with pytest.raises(ValueError):
            drude_re_lowfreq(DrudeMedium(omega_p=1e16, gamma=0.0))


class TestSkinDepth:
    def test_copper_at_wifi_frequency(self):
        assert rel(skin_depth(5.8e7, F_2G45), SKIN_DEPTH_COPPER_2G45) < 1e-12

    @given(sigma=st.floats(1e-2, 1e9), nu=st.floats(1e1, 1e12))
    @settings(max_examples=200, deadline=None)
    def test_quadrupling_conductivity_halves_depth(self, sigma, nu):
        f = Frequency(nu)
        assert rel(skin_depth(4.0 * sigma, f), skin_depth(sigma, f) / 2.0) < 1e-12

    @given(sigma=st.floats(1e-2, 1e9), nu=st.floats(1e1, 1e12))
    @settings(max_examples=200, deadline=None)
    def test_quadrupling_frequency_halves_depth(self, sigma, nu):
        assert rel(skin_depth(sigma, Frequency(4 * nu)), skin_depth(sigma, Frequency(nu)) / 2) < 1e-12

    def test_rejects_nonpositive_inputs(self):
        with pytest.raises(ValueError):
            skin_depth(0.0, F_2G45)
        with pytest.raises(ValueError):
            skin_depth(-1.0, F_2G45)


class TestTypes:
    def test_frequency_angular_conversion(self):
        f = Frequency(1.0e9)
        assert f.omega == 2.0 * math.pi * 1.0e9
        assert rel(Frequency.from_omega(f.omega).nu, 1.0e9) < 1e-15

    def test_frequency_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Frequency(0.0)

    def test_dielectric_rejects_sub_unity(self):
        with pytest.raises(ValueError):
            Dielectric(0.5)

    def test_drude_invariants(self):
        with pytest.raises(ValueError):
            DrudeMedium(omega_p=0.0)
        with pytest.raises(ValueError):
            DrudeMedium(omega_p=1e10, gamma=-1.0)
        with pytest.raises(ValueError):
            DrudeMedium(omega_p=1e10, gamma=1e9, sigma_dc=-5.0)

    def test_sigma_dc_consistency_enforced(self):
        omega_p, gamma = 1e16, 1e13
        implied = EPS0 * omega_p**2 / gamma
        DrudeMedium(omega_p=omega_p, gamma=gamma, sigma_dc=implied)          # exact: fine
        DrudeMedium(omega_p=omega_p, gamma=gamma, sigma_dc=implied * 1.005)  # within 1%
        with pytest.raises(ValueError):
            DrudeMedium(omega_p=omega_p, gamma=gamma, sigma_dc=implied * 1.02)

    def test_from_conductivity_round_trip(self):
        m = DrudeMedium.from_conductivity(5.8e7, 1e13)
        assert rel(EPS0 * m.omega_p**2 / m.gamma, 5.8e7) < 1e-12

    def test_matching_permittivity_round_trip(self):
        f = Frequency(1e9)
        target = -5.0 + 0.6j
        m = DrudeMedium.matching_permittivity(target, f)
        assert abs(drude_permittivity(m, f) - target) < 1e-9
        with pytest.raises(ValueError):
            DrudeMedium.matching_permittivity(2.0 + 0.0j, f)  # Re >= 1 unreachable
