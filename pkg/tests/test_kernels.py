import math

import numpy as np
import pytest

from airyherm.kernels import (
    DomainError,
    KernelParams,
    airy,
    airy_contour,
    airy_heat,
    airy_series,
    canonical_a,
    convolve,
    heat_kernel,
    higher_airy,
    kernel_window,
    scaled_kernel,
)
from airyherm.quadrature import QuadSpec, QuadratureError, find_cutoff, integrate

# Independent reference values (scipy.special.airy, mpmath.quad).
AIRY_REF = {
    -2.0: 0.22740742820168564,
    -1.0: 0.5355608832923522,
    0.0: 0.3550280538878172,
    1.0: 0.13529241631288147,
    2.5: 0.015725923380470484,
    4.0: 0.0009515638512048024,
}
QUARTIC_REF = {0.7: 0.26533532642595326, 2.0: 0.1356088589343108, -3.0: 0.031877798487844326}


@pytest.mark.parametrize("x,ref", sorted(AIRY_REF.items()))
def test_airy_reference(x, ref):
    assert airy(x) == pytest.approx(ref, rel=1e-12)
    assert airy_series(x) == pytest.approx(ref, rel=1e-12)


def test_airy_window():
    with pytest.raises(DomainError):
        airy(8.5)
    assert airy(8.0) > 0


def test_airy_contour_vectorized():
    xs = np.array([-1.0, 0.0, 1.0])
    vals = airy_contour(xs)
    assert vals.shape == (3,)
    assert vals[1] == pytest.approx(AIRY_REF[0.0], rel=1e-13)


@pytest.mark.parametrize("x,ref", sorted(QUARTIC_REF.items()))
def test_quartic_kernel(x, ref):
    assert higher_airy(4, -1.0, x) == pytest.approx(ref, rel=1e-12)


def test_quintic_kernel_at_origin():
    ref = math.gamma(1.2) * 5 ** 0.2 * math.cos(math.pi / 10) / math.pi
    assert higher_airy(5, canonical_a(5), 0.0) == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("x,ref", [(12.0, -6.8314543008887961e-05), (20.0, -3.4486508251067004e-07)])
def test_quartic_tail_is_relatively_accurate(x, ref):
    # mpmath reference at 40 digits; tail values keep relative accuracy
    assert higher_airy(4, -1.0, x) == pytest.approx(ref, rel=1e-10)
    assert scaled_kernel(4, -1.0, 1.0, x) == pytest.approx(ref, rel=1e-10)


@pytest.mark.parametrize("m,expected", [(3, -1 / 3), (5, 1 / 5), (4, -1.0), (6, 1.0)])
def test_canonical_a(m, expected):
    assert canonical_a(m) == pytest.approx(expected)


def test_second_order_reduces_to_heat_kernel():
    v = airy_heat(KernelParams(1.0, 2, 0.0, 1.0), 0.5)
    assert v == pytest.approx(heat_kernel(2.0, 0.5), rel=1e-13)


def test_pure_diffusion():
    v = airy_heat(KernelParams(0.0, 3, 1.0, 2.0), 0.5)
    assert v == pytest.approx(heat_kernel(2.0, 0.5), rel=1e-13)


def test_real_and_contour_methods_agree():
    p = KernelParams(-1 / 3, 3, 1.0, 1.0)
    assert airy_heat(p, 0.4, method="real") == pytest.approx(airy_heat(p, 0.4, method="contour"),
                                                            rel=1e-11)


@pytest.mark.parametrize("kwargs", [
    dict(a=-1.0, m=1, s=0.0, t=1.0),
    dict(a=-1.0, m=3, s=0.0, t=0.0),
    dict(a=-1.0, m=3, s=-1.0, t=1.0),
    dict(a=1.0, m=4, s=0.0, t=1.0),
    dict(a=0.0, m=3, s=0.0, t=1.0),
])
def test_kernel_params_validation(kwargs):
    with pytest.raises(ValueError):
        KernelParams(**kwargs)


def test_kernel_window_grows_with_time():
    assert kernel_window(4, -1.0, 16.0) > kernel_window(4, -1.0, 1.0)


def test_heat_kernel_rejects_nonpositive_variance():
    with pytest.raises(ValueError):
        heat_kernel(0.0, 1.0)


def test_convolution_of_gaussians():
    v = convolve(lambda y: heat_kernel(1.0, y), lambda y: heat_kernel(2.0, y), 0.3, 15.0)
    assert v == pytest.approx(heat_kernel(3.0, 0.3), rel=1e-12)


def test_integrate_polynomial_exactly():
    r = integrate(lambda x: x ** 5 - x, 0.0, 2.0)
    assert r.value == pytest.approx(64 / 6 - 2, rel=1e-14)


def test_integrate_reports_nonconvergence():
    with pytest.raises(QuadratureError):
        integrate(lambda x: np.sin(1e6 * x ** 2), 0.0, 50.0, QuadSpec(max_panels=2))


def test_find_cutoff():
    r = find_cutoff(lambda r: -r * r)
    assert 6.4 < r < 6.6


def test_env_tolerance(monkeypatch):
    monkeypatch.setenv("AIRYHERM_QUAD_TOL", "1e-6")
    assert QuadSpec.from_env().rel_tol == 1e-6
    assert QuadSpec.from_env(rel_tol=1e-3).rel_tol == 1e-3
