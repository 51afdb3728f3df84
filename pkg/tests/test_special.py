import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from hadamard_fp.special import (ConvergenceError, DomainError, hyp2f1_b1,
                                 kummer_m_series, psi_alpha, psi_alpha_connection)


def cauchy_kernel_quad(alpha, z):
    """int_0^1 x**(alpha-1)/(z-x) dx with QUADPACK's algebraic weight."""
    opts = dict(weight="alg", wvar=(alpha - 1.0, 0.0), epsabs=1e-14, epsrel=1e-13, limit=200)
    re, _ = integrate.quad(lambda x: (1.0 / (z - x)).real, 0.0, 1.0, **opts)
    im, _ = integrate.quad(lambda x: (1.0 / (z - x)).imag, 0.0, 1.0, **opts)
    return complex(re, im)


def laurent_psi(alpha, z, terms=60):
    return sum(z ** (-k - 1) / (alpha + k) for k in range(terms + 1))


class TestHyp2f1:
    def test_zero_argument(self):
        assert hyp2f1_b1(0.1, 1.1, 0.0) == 1.0

    def test_log_closed_form(self):
        # F(1,1;2;z) = -log(1-z)/z
        assert hyp2f1_b1(1.0, 2.0, 0.5) == pytest.approx(-math.log(0.5) / 0.5, rel=1e-14)

    def test_arctan_closed_form(self):
        # F(1/2,1;3/2;-z^2) = arctan(z)/z
        assert hyp2f1_b1(0.5, 1.5, -1.0) == pytest.approx(math.pi / 4, rel=1e-14)

    @pytest.mark.parametrize("z", [0.3 + 0.4j, -5 + 2j, 2j, -30.0, 3 + 1j])
    @pytest.mark.parametrize("a,c", [(0.1, 1.1), (0.7, 1.7), (0.6, 1.6), (0.9, 0.4)])
    def test_against_mpmath(self, a, c, z):
        mpmath = pytest.importorskip("mpmath")
        mpmath.mp.dps = 30
        ref = complex(mpmath.hyp2f1(a, 1, c, z))
        assert abs(hyp2f1_b1(a, c, z) - ref) <= 1e-13 * abs(ref)

    # negative a: cancellation grows with |z|, so only moderate arguments
    @pytest.mark.parametrize("z", [0.3 + 0.4j, 1j, 2j, -3 + 2j])
    @pytest.mark.parametrize("a", [-0.9, -1.9, -3.9])
    def test_negative_parameter_against_mpmath(self, a, z):
        mpmath = pytest.importorskip("mpmath")
        mpmath.mp.dps = 30
        ref = complex(mpmath.hyp2f1(a, 1, a + 1, z))
        assert abs(hyp2f1_b1(a, a + 1, z) - ref) <= 1e-11 * abs(ref)

    def test_vectorized_matches_scalar(self):
        z = np.array([0.5j, -2.0, 1 - 1j, 0.1])
        vec = hyp2f1_b1(0.3, 1.3, z)
        assert vec.shape == z.shape
        for zi, vi in zip(z, vec):
            assert vi == pytest.approx(hyp2f1_b1(0.3, 1.3, zi), rel=1e-15)

    @pytest.mark.parametrize("z", [1.0, 2.5, 1e6])
    def test_branch_cut_rejected(self, z):
        with pytest.raises(DomainError):
            hyp2f1_b1(0.2, 1.2, z)

    def test_bad_c(self):
        with pytest.raises(DomainError):
            hyp2f1_b1(0.5, -2.0, 0.1)

    def test_divergence_reports_iterations(self):
        with pytest.raises(ConvergenceError) as info:
            hyp2f1_b1(0.1, 1.1, 5 + 1e-3j, max_iter=20)
        assert info.value.iterations == 20


class TestKummer:
    def test_exponential(self):
        assert kummer_m_series(1.0, 1.0, 1.0) == pytest.approx(math.e, rel=1e-15)

    def test_zero_argument(self):
        assert kummer_m_series(0.5, 1.5, 0.0) == 1.0

    def test_partial_sum_oracle(self):
        a, b = -0.9, 0.1
        term, total = 1.0, 1.0
        for m in range(50):
            term *= (a + m) / ((b + m) * (m + 1))
            total += term
        assert kummer_m_series(a, b, 1.0) == pytest.approx(total, rel=1e-14)

    def test_bad_b(self):
        with pytest.raises(DomainError):
            kummer_m_series(1.0, -1.0, 1.0)


class TestPsi:
    def test_half_at_two(self):
        # x = t^2 turns the kernel into 2 int_0^1 dt/(2 - t^2)
        assert psi_alpha(0.5, 2.0) == pytest.approx(math.sqrt(2) * math.log(1 + math.sqrt(2)), rel=1e-14)

    def test_far_field(self):
        z = 1e6
        val = psi_alpha(0.1, z)
        assert val.real == pytest.approx(1 / (0.1 * z), rel=2e-6)

    def test_negative_real_axis(self):
        val = psi_alpha(0.3, -1.0)
        assert abs(val.imag) < 1e-15
        assert val.real == pytest.approx(cauchy_kernel_quad(0.3, -1.0).real, rel=1e-10)

    @pytest.mark.parametrize("z", [2.0, 1 + 1j, -1.0, 3j])
    @pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
    def test_cauchy_kernel_property(self, alpha, z):
        assert abs(psi_alpha(alpha, z) - cauchy_kernel_quad(alpha, z)) <= 1e-9

    @pytest.mark.parametrize("z", [0.0, 0.5, 1.0, 0.3 + 1e-14j])
    def test_segment_rejected(self, z):
        with pytest.raises(DomainError):
            psi_alpha(0.5, z)

    @pytest.mark.parametrize("alpha", [0.0, 1.0, -0.5])
    def test_alpha_range(self, alpha):
        with pytest.raises(DomainError):
            psi_alpha(alpha, 2.0)

    def test_connection_on_negative_axis(self):
        assert abs(psi_alpha_connection(0.5, -1.0) - psi_alpha(0.5, -1.0)) <= 1e-12

    def test_connection_near_segment(self):
        z = -0.5 + 0.1j
        assert psi_alpha_connection(0.3, z) == pytest.approx(psi_alpha(0.3, z), rel=1e-12)

    def test_connection_decays(self):
        vals = [abs(psi_alpha_connection(0.5, -t)) for t in (1e1, 1e2, 1e4)]
        assert vals[0] > vals[1] > vals[2]
        assert vals[2] < 1e-3

    @pytest.mark.parametrize("z", [0.0, 0.5, 3.0])
    def test_connection_cut_rejected(self, z):
        with pytest.raises(DomainError):
            psi_alpha_connection(0.5, z)


@settings(max_examples=60, deadline=None)
@given(alpha=st.floats(0.05, 0.95),
       r=st.floats(2.05, 1e3),
       theta=st.floats(-math.pi, math.pi))
def test_laurent_series_agreement(alpha, r, theta):
    z = r * complex(math.cos(theta), math.sin(theta))
    ref = laurent_psi(alpha, z)
    assert abs(psi_alpha(alpha, z) - ref) <= 1e-12 * abs(ref)


@settings(max_examples=60, deadline=None)
@given(alpha=st.floats(0.05, 0.95),
       x=st.floats(-20, 20), y=st.floats(1e-3, 20))
def test_conjugate_symmetry(alpha, x, y):
    z = complex(x, y)
    if abs(z - 0.5) < 0.6:
        z = 0.5 + 0.6 * z / abs(z) if z != 0 else 2.0
    a = psi_alpha(alpha, z.conjugate())
    b = psi_alpha(alpha, z).conjugate()
    assert abs(a - b) <= 1e-15 * max(1.0, abs(b))


def sample_off_cuts(rng, count):
    pts = []
    while len(pts) < count:
        z = complex(rng.uniform(-6, 6), rng.uniform(-6, 6))
        if abs(z - 0.5) > 0.75 and abs(np.angle(-z)) < math.pi - 0.1:
            pts.append(z)
    return np.array(pts)


@pytest.mark.parametrize("alpha", [0.1, 0.37, 0.5, 0.9])
def test_representation_identity(alpha):
    z = sample_off_cuts(np.random.default_rng(7), 200)
    ext = psi_alpha(alpha, z)
    con = psi_alpha_connection(alpha, z)
    assert np.max(np.abs(ext - con) / np.abs(ext)) <= 1e-10
