import dataclasses
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sclife.conductivity import (
    ModelKind,
    depths_from_sigma,
    gorter_casimir_sigma,
    mb_sigma1_ratio,
    two_fluid_sigma,
)
from sclife.core import MU0, NIOBIUM, ComplexConductivity, Depths, DomainError
from sclife.lifetime import (
    coherence_peak,
    depth_form,
    lifetime_proxy,
    lifetime_ratio,
    sigma1_model_discrepancy,
)

NB = NIOBIUM
TC = NB.tc
OMEGA = 2 * math.pi * 560e3
GC = ModelKind.GORTER_CASIMIR

# Closed Gorter-Casimir forms: (1 - t^4)^1.5 / t^4, ratio between T_c/2 and 0.99 T_c
GC_RATIO = (0.9375**1.5 / 0.0625) / ((1 - 0.99**4) ** 1.5 / 0.99**4)


def test_proxy_from_depths_identity():
    d = Depths(2e-5, 40e-9)
    sigma = two_fluid_sigma(d, OMEGA)
    p = lifetime_proxy(sigma)
    expected = d.skin_depth**2 / (2 * d.london_depth**3 * math.sqrt(OMEGA * MU0))
    assert p.value == pytest.approx(expected, rel=1e-12)
    assert p.regime_valid


def test_proxy_zero_sigma2():
    p = lifetime_proxy(ComplexConductivity(1.0, 0.0))
    assert p.value == 0.0 and not p.regime_valid


def test_proxy_undefined_without_sigma1():
    with pytest.raises(DomainError):
        lifetime_proxy(ComplexConductivity(0.0, 1.0))


def test_regime_threshold():
    assert lifetime_proxy(ComplexConductivity(1.0, 100.0)).regime_valid
    assert not lifetime_proxy(ComplexConductivity(1.0, 99.9)).regime_valid


@settings(max_examples=300, deadline=None)
@given(
    s1=st.floats(1e-3, 1e12),
    s2=st.floats(1e-3, 1e18),
    omega=st.floats(1.0, 1e12),
)
def test_proxy_two_form_identity(s1, s2, omega):
    sigma = ComplexConductivity(s1, s2)
    d = depths_from_sigma(sigma, omega)
    assert lifetime_proxy(sigma).value == pytest.approx(
        depth_form(d.skin_depth, d.london_depth, omega), rel=1e-10
    )


def test_gc_proxy_ratio_closed_form():
    p1 = lifetime_proxy(gorter_casimir_sigma(TC / 2, NB, OMEGA)).value
    p2 = lifetime_proxy(gorter_casimir_sigma(0.99 * TC, NB, OMEGA)).value
    assert p1 / p2 == pytest.approx(1.78e3, rel=5e-3)
    assert p1 / p2 == pytest.approx(GC_RATIO, rel=1e-12)


def test_lifetime_ratio_examples():
    same = lifetime_ratio(GC, 0.7 * TC, 0.7 * TC, OMEGA, NB)
    assert same.value == 1.0
    r = lifetime_ratio(GC, TC / 2, 0.99 * TC, OMEGA, NB)
    assert r.value == pytest.approx(GC_RATIO, rel=1e-2)
    assert r.regime_valid


def test_lifetime_ratio_depth_identity():
    r = lifetime_ratio(GC, TC / 2, 0.99 * TC, OMEGA, NB).value
    d1 = depths_from_sigma(gorter_casimir_sigma(TC / 2, NB, OMEGA), OMEGA)
    d2 = depths_from_sigma(gorter_casimir_sigma(0.99 * TC, NB, OMEGA), OMEGA)
    via_depths = (d1.skin_depth**2 * d2.london_depth**3) / (d2.skin_depth**2 * d1.london_depth**3)
    assert r == pytest.approx(via_depths, rel=1e-10)


@settings(max_examples=100, deadline=None)
@given(t1=st.floats(0.01, 0.999), t2=st.floats(0.01, 0.999))
def test_lifetime_ratio_antisymmetric(t1, t2):
    a = lifetime_ratio(GC, t1 * TC, t2 * TC, OMEGA, NB).value
    b = lifetime_ratio(GC, t2 * TC, t1 * TC, OMEGA, NB).value
    assert a * b == pytest.approx(1.0, rel=1e-12)


def test_lifetime_ratio_sigma_n_invariant_for_gc():
    a = lifetime_ratio(GC, 0.4 * TC, 0.9 * TC, OMEGA, NB).value
    b = lifetime_ratio(GC, 0.4 * TC, 0.9 * TC, OMEGA, dataclasses.replace(NB, sigma_n=10 * NB.sigma_n)).value
    assert b == pytest.approx(a, rel=1e-12)


def test_lifetime_ratio_flag_is_and_of_endpoints():
    # at 0.999 T_c the GC sigma2 is far below 100 sigma1 for this sigma_n
    m = dataclasses.replace(NB, sigma_n=1e12)
    assert not lifetime_proxy(gorter_casimir_sigma(0.999 * TC, m, OMEGA)).regime_valid
    assert not lifetime_ratio(GC, 0.5 * TC, 0.999 * TC, OMEGA, m).regime_valid


def test_gc_proxy_strictly_decreasing():
    temps = [TC * (i + 1) / 101 for i in range(100)]
    proxies = [lifetime_proxy(gorter_casimir_sigma(T, NB, OMEGA)).value for T in temps]
    assert all(a > b for a, b in zip(proxies, proxies[1:]))


@pytest.fixture(scope="module")
def peak_560k():
    return coherence_peak(NB, OMEGA, 0.0)


def test_coherence_peak_height(peak_560k):
    assert 3.5 <= peak_560k.height <= 7.0
    assert peak_560k.height < 100
    assert 0 < peak_560k.t_peak < 1
    assert peak_560k.height == mb_sigma1_ratio(OMEGA, peak_560k.t_peak * TC, NB)


def test_coherence_peak_lowered_by_broadening(peak_560k):
    assert coherence_peak(NB, OMEGA, 0.1).height <= peak_560k.height


def test_coherence_peak_lowered_at_higher_frequency(peak_560k):
    assert coherence_peak(NB, 10 * OMEGA, 0.0).height < peak_560k.height


def test_coherence_peak_sigma_n_invariant(peak_560k):
    other = coherence_peak(dataclasses.replace(NB, sigma_n=1.0), OMEGA, 0.0)
    assert other.height == peak_560k.height


def test_coherence_peak_rejects_negative_gamma():
    with pytest.raises(DomainError):
        coherence_peak(NB, OMEGA, -0.1)


def mb_over_gc(t):
    return mb_sigma1_ratio(OMEGA, t * TC, NB) / t**4


def test_discrepancy_near_tc_is_order_one():
    assert mb_over_gc(0.999) == pytest.approx(1.0, abs=1.0)


def test_discrepancy_below_one_at_low_temperature():
    assert mb_over_gc(0.1) < 1


def test_discrepancy_maximum():
    worst = sigma1_model_discrepancy(NB, OMEGA)
    # the maximum dominates every sampled point, including the reference value at t = 0.3
    assert worst >= MB_AT_03 / 0.3**4
    assert worst >= max(mb_over_gc(t) for t in (0.3, 0.35, 0.4, 0.5))
    assert worst == pytest.approx(56.0, rel=1e-2)


MB_AT_03 = 0.412615658875457  # mpmath reference, tests/oracles/mpmath_reference.py
