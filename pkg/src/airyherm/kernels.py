"""Airy function, generalized Airy-heat integrals, higher-order Airy kernels.

Every kernel here is an inverse Fourier integral

    (1/2pi) int exp(E(lambda) + i lambda x) P(lambda) d lambda

whose integrand is Hermitian, so it equals ``(1/pi) Re int_0^inf ...``.  When the
phase has an odd-order term the half-line is rotated to the ray
``lambda = r exp(i theta)`` with ``theta = +-pi/(2m)``, which turns the oscillating
factor into an exponentially damped one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .quadrature import LOG_CUTOFF, QuadratureError, QuadSpec, find_cutoff, integrate

AIRY_WINDOW = 8.0
AIRY_OVERLAP = (-2.0, 4.0)
AIRY_AGREEMENT = 1e-9
# largest tolerated log-size of the integrand before cancellation eats the digits
MAX_LOG_PEAK = 18.0
_X_BLOCK = 256


class DomainError(ValueError):
    """Argument outside the documented validity window of an evaluator."""


@dataclass(frozen=True)
class KernelParams:
    """Parameters of ``exp(a (i lambda)^m t - s lambda^2 t / 2)``."""

    a: float
    m: int
    s: float
    t: float

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("m must be >= 2")
        if self.t <= 0:
            raise ValueError("t must be positive")
        if self.s < 0:
            raise ValueError("s must be non-negative")
        if self.m % 2 == 0 and self.even_growth() > 0:
            raise ValueError(
                f"a (i lambda)^{self.m} grows along the real axis for a={self.a}; "
                "need a*(-1)^(m/2) <= 0")
        if self.a == 0 and self.s == 0:
            raise ValueError("a = s = 0 gives a delta function, not a kernel")

    def even_growth(self) -> float:
        """Real coefficient of ``lambda^m`` in ``a (i lambda)^m`` (m even)."""
        return self.a * (-1) ** (self.m // 2)

    def odd_phase(self) -> float:
        """``c`` in ``a (i lambda)^m = i c lambda^m`` (m odd)."""
        return self.a * (-1) ** ((self.m - 1) // 2)

    def exponent(self, lam):
        return self.a * (1j * lam) ** self.m * self.t - 0.5 * self.s * self.t * lam ** 2

    def contour_angle(self) -> float:
        if self.m % 2 == 1 and self.a != 0:
            return math.copysign(math.pi / (2 * self.m), self.odd_phase())
        return 0.0


def canonical_a(m: int) -> float:
    """Coefficient giving the phase ``+i lambda^m / m`` for odd ``m``, damping for even ``m``.

    ``m = 3`` gives ``-1/3`` (the classical Airy phase); even ``m`` gives ``-(-1)^(m/2)``
    so that ``a (i lambda)^m = -lambda^m``.
    """
    if m % 2 == 1:
        return (-1) ** ((m - 1) // 2) / m
    return -((-1) ** (m // 2))


def _fourier_half_line(exponent: Callable, x, theta: float, quad: QuadSpec,
                       prefactor: Optional[Callable] = None, prefactor_power: int = 0,
                       shift: Optional[Callable] = None):
    """``(1/pi) Re int_0^inf f(lam) e^{i theta} dr`` on ``lam = r e^{i theta} + i eta(x)``.

    ``f(lam) = exp(exponent(lam) + i lam x) prefactor(lam)``; ``shift`` maps the
    ``x`` array to the offsets ``eta`` (zero when omitted).
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.size > _X_BLOCK:
        return np.concatenate([
            _fourier_half_line(exponent, x[lo:lo + _X_BLOCK], theta, quad, prefactor,
                               prefactor_power, shift)
            for lo in range(0, x.size, _X_BLOCK)])
    rot = np.exp(1j * theta)
    eta = np.zeros_like(x) if shift is None else np.asarray(shift(x), dtype=float)

    def path(r):
        return r[:, None] * rot + 1j * eta[None, :]

    def raw_log_modulus(r):
        lam = path(r)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            lm = np.real(exponent(lam) + 1j * lam * x[None, :])
            if prefactor_power:
                lm = lm + prefactor_power * np.log(np.abs(lam))
        return lm

    def log_modulus(r):
        # each column measured against its own peak, so small results keep their digits
        lm = raw_log_modulus(r)
        return np.max(lm - np.max(lm, axis=0, keepdims=True), axis=1)

    r_max = find_cutoff(log_modulus, quad.cutoff_log)
    peak = float(np.max(raw_log_modulus(np.linspace(0.0, r_max, 2049))))
    if peak > MAX_LOG_PEAK:
        raise DomainError(
            f"integrand reaches exp({peak:.1f}); cancellation would swamp the result")

    def f(r):
        lam = path(r)
        v = np.exp(exponent(lam) + 1j * lam * x[None, :]) * rot
        if prefactor is not None:
            v = v * prefactor(lam)
        return v.real

    return integrate(f, 0.0, r_max, quad).value / np.pi


def _scalar_or_array(x, values):
    return float(values[0]) if np.ndim(x) == 0 else values


def airy_heat(p: KernelParams, x, q: QuadSpec = QuadSpec(), method: str = "auto"):
    """``(1/2pi) int exp(a (i lambda)^m t - s lambda^2 t/2 + i lambda x) d lambda``.

    ``method`` is ``"real"`` (real half-line), ``"contour"`` (rotated ray, odd ``m``)
    or ``"auto"`` (contour whenever an odd-order phase is present).  ``x`` may be a
    scalar or an array.
    """
    if method == "real":
        theta = 0.0
        if p.s == 0 and p.m % 2 == 1:
            raise ValueError("real-axis quadrature needs Gaussian damping (s > 0) for odd m")
    elif method == "contour":
        if p.m % 2 == 0 or p.a == 0:
            raise ValueError("contour rotation applies to odd m with a != 0")
        theta = p.contour_angle()
    elif method == "auto":
        theta = p.contour_angle()
    else:
        raise ValueError(f"unknown method {method!r}")
    vals = _fourier_half_line(p.exponent, x, theta, q)
    return _scalar_or_array(x, vals)


def higher_airy(m: int, a: float, x, q: QuadSpec = QuadSpec()):
    """``(1/2pi) int exp(a (i lambda)^m + i lambda x) d lambda``.

    Even ``m`` needs ``a (-1)^(m/2) < 0`` and uses the damped cosine transform on the
    real axis; odd ``m`` accepts any nonzero ``a`` and rotates the contour.
    """
    if m < 3:
        raise ValueError("higher_airy needs m >= 3")
    if a == 0:
        raise ValueError("higher_airy needs a != 0")
    if m % 2 == 0 and a * (-1) ** (m // 2) >= 0:
        raise ValueError(f"m={m}, a={a}: integrand grows along the real axis")
    if m % 2 == 1:
        return airy_heat(KernelParams(a, m, 0.0, 1.0), x, q)
    p = KernelParams(a, m, 0.0, 1.0)
    vals = _fourier_half_line(p.exponent, x, 0.0, q, shift=lambda xs: saddle_height(m, a, xs))
    return _scalar_or_array(x, vals)


def saddle_height(m: int, a: float, x):
    """Imaginary part of the saddle of ``a (i l)^m + i l x`` for even ``m`` (decaying).

    Shifting the real line to this height makes the integrand's size comparable
    to the result, so tails come out with relative rather than absolute accuracy.
    """
    b = -a * (-1) ** (m // 2)
    x = np.asarray(x, dtype=float)
    return np.sign(x) * (np.abs(x) / (m * b)) ** (1.0 / (m - 1)) * math.sin(math.pi / (2 * (m - 1)))


def kernel_window(m: int, a: float, t: float = 1.0, drop: float = -LOG_CUTOFF) -> float:
    """Half-width beyond which the even-order kernel is ``exp(-drop)`` below its peak.

    From the saddle-point envelope
    ``log|w(1, z)| ~ -((m-1)/m) sin(pi/(2(m-1))) (m b)^(-1/(m-1)) |z|^(m/(m-1))``.
    """
    if m % 2:
        raise ValueError("kernel_window applies to even m")
    b = -a * (-1) ** (m // 2)
    if b <= 0:
        raise ValueError("kernel must decay")
    kappa = (m - 1) / m * math.sin(math.pi / (2 * (m - 1))) * (m * b) ** (-1.0 / (m - 1))
    return (drop / kappa) ** ((m - 1) / m) * t ** (1.0 / m)


def scaled_kernel(m: int, a: float, t: float, y, q: QuadSpec = QuadSpec()):
    """Fundamental solution of ``u_t = a u^(m)`` at time ``t``, by self-similarity."""
    scale = t ** (-1.0 / m)
    return scale * higher_airy(m, a, np.asarray(y, dtype=float) * scale, q)


def airy_contour(x, q: QuadSpec = QuadSpec()):
    """Ai(x) from the rotated-contour integral of ``exp(i(lambda^3/3 + lambda x))``."""
    vals = _fourier_half_line(lambda lam: 1j * lam ** 3 / 3.0, x, math.pi / 6.0, q)
    return _scalar_or_array(x, vals)


AI0 = 3.0 ** (-2.0 / 3.0) / math.gamma(2.0 / 3.0)
AIP0 = -(3.0 ** (-1.0 / 3.0)) / math.gamma(1.0 / 3.0)


def airy_series(x: float) -> float:
    """Ai(x) from the Maclaurin series of ``y'' = x y``."""
    coeffs = [AI0, AIP0, 0.0]
    terms = [AI0, AIP0 * x, 0.0]
    k = 0
    while True:
        c = coeffs[k] / ((k + 3) * (k + 2))
        coeffs.append(c)
        term = c * x ** (k + 3)
        terms.append(term)
        k += 1
        if k > 12 and all(abs(t) < 1e-18 * max(1.0, abs(terms[0])) for t in terms[-3:]):
            break
        if k > 2000:
            raise QuadratureError("Airy series failed to converge")
    return math.fsum(terms)


def airy(x: float, q: QuadSpec = QuadSpec()) -> float:
    """Ai(x) on ``|x| <= 8``.

    Returns the contour value; on ``[-2, 4]`` the power series is evaluated as well
    and the two must agree to 1e-9 relative.
    """
    x = float(x)
    if abs(x) > AIRY_WINDOW:
        raise DomainError(f"airy: |x| = {abs(x)} outside the window |x| <= {AIRY_WINDOW}")
    value = airy_contour(x, q)
    if AIRY_OVERLAP[0] <= x <= AIRY_OVERLAP[1]:
        other = airy_series(x)
        if abs(other - value) > AIRY_AGREEMENT * abs(value):
            raise QuadratureError(
                f"airy({x}): series {other!r} and contour {value!r} disagree",
                previous=other, last=value)
    return value


def heat_kernel(variance: float, x):
    """Gaussian density with the given variance."""
    if variance <= 0:
        raise ValueError("heat_kernel needs variance > 0")
    x = np.asarray(x, dtype=float)
    out = np.exp(-x * x / (2.0 * variance)) / math.sqrt(2.0 * math.pi * variance)
    return float(out) if out.ndim == 0 else out


def heat_window(variance: float, x: float = 0.0, sigmas: float = 12.0) -> float:
    return sigmas * math.sqrt(variance) + abs(x)


def convolve(f: Callable, g: Callable, x: float, window: float,
             q: QuadSpec = QuadSpec(), tail_variance: Optional[float] = None) -> float:
    """``int_{-window}^{window} f(y) g(x - y) dy``; ``f`` and ``g`` take arrays.

    With ``tail_variance`` set, ``f`` is taken to be a Gaussian of that variance and
    the mass it leaves outside the window is checked against ``q.rel_tol``.
    """
    if tail_variance is not None:
        tail = math.erfc(window / math.sqrt(2.0 * tail_variance))
        if tail > q.rel_tol:
            raise ValueError(f"window {window} leaves Gaussian tail mass {tail:.3g}")
    res = integrate(lambda y: f(y) * g(x - y), -window, window, q)
    return float(res.value)


def derived_heat_quadrature(n: int, t: float, x, q: QuadSpec = QuadSpec()):
    """``(1/2pi) int exp(i lambda x - lambda^2 t/2) (-i lambda)^n d lambda``."""
    if t <= 0:
        raise ValueError("derived_heat_quadrature requires t > 0")
    vals = _fourier_half_line(lambda lam: -0.5 * t * lam ** 2, x, 0.0, q,
                              prefactor=lambda lam: (-1j * lam) ** n, prefactor_power=n)
    return _scalar_or_array(x, vals)
