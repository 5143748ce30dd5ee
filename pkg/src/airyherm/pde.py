"""Numerical checks of the higher-order heat equation and its kernel identities.

The equation is ``u_t = a d^m u/dx^m + (s/2) u_xx``.  Each ``verify_*`` function
returns a :class:`~airyherm.report.Case`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from .hermite import derived_heat_poly, derived_heat_poly_printed, gould_hopper_value
from .kernels import (
    KernelParams,
    airy,
    airy_heat,
    canonical_a,
    convolve,
    derived_heat_quadrature,
    heat_kernel,
    heat_window,
    higher_airy,
    kernel_window,
    scaled_kernel,
)
from .quadrature import QuadSpec, integrate
from .report import Case

T_STEP = 1e-4
# Base step for the m-th difference.  The finest step h/2^levels keeps round-off
# (~2^m eps / step^m) below ~1e-8; the O(h^6) remainder after two
# Richardson levels stays below that as well for |d/dx| <~ 1.
X_STEP = {2: 0.04, 3: 0.08, 4: 0.2, 5: 0.4, 6: 0.6}
RICHARDSON_LEVELS = 3


def default_x_step(m: int) -> float:
    return X_STEP.get(m, 0.8)


class ProbeError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Equation:
    """Coefficients of ``u_t = a d^m u/dx^m + (s/2) u_xx``.

    Unlike :class:`KernelParams` this places no decay condition on ``a``: pointwise
    residuals make sense for any real coefficients.
    """

    a: float
    m: int
    s: float

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("m must be >= 2")


@dataclass(frozen=True)
class FieldProbe:
    """A field ``u(t, x)``; ``evaluator(t, xs)`` takes a scalar ``t`` and an array ``xs``."""

    evaluator: Callable[[float, np.ndarray], np.ndarray]
    t_step: float = T_STEP
    x_step: Optional[float] = None

    def __post_init__(self):
        if self.t_step <= 0 or (self.x_step is not None and self.x_step <= 0):
            raise ValueError("steps must be positive")

    def __call__(self, t: float, xs) -> np.ndarray:
        vals = np.asarray(self.evaluator(t, np.asarray(xs, dtype=float)))
        bad = ~np.isfinite(vals)
        if np.any(bad):
            where = np.asarray(xs, dtype=float)[np.nonzero(bad)[0][0]]
            raise ProbeError(f"probe returned a non-finite value at (t={t}, x={where})")
        return vals


def _central_weights(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Offsets (in units of h) and weights of the central difference ``delta^order``.

    Odd orders sit on half-integer offsets; the stencil has ``order + 1`` points.
    """
    k = np.arange(order + 1)
    offsets = order / 2.0 - k
    weights = np.array([(-1) ** i * math.comb(order, i) for i in k], dtype=float)
    return offsets, weights


def richardson(estimates: list, ratio: float = 2.0) -> complex:
    """Extrapolate estimates at steps ``h, h/ratio, h/ratio^2, ...`` with even-power errors."""
    table = list(estimates)
    for level in range(1, len(table)):
        f = ratio ** (2 * level)
        table = [(f * table[i + 1] - table[i]) / (f - 1.0) for i in range(len(table) - 1)]
    return table[0]


def spatial_derivatives(probe: FieldProbe, t: float, x: float, orders, h: float,
                        levels: Optional[int] = None) -> dict:
    """Central differences of ``u(t, .)`` at ``x``, Richardson-extrapolated over ``levels`` halvings."""
    if levels is None:
        levels = RICHARDSON_LEVELS
    steps = [h / 2 ** k for k in range(levels + 1)]
    plan = []
    xs: list[float] = []
    for order in orders:
        offsets, weights = _central_weights(order)
        for step in steps:
            plan.append((order, step, len(xs), weights))
            xs.extend(x + offsets * step)
    vals = probe(t, np.array(xs))
    raw: dict = {}
    for order, step, lo, weights in plan:
        seg = vals[lo:lo + len(weights)]
        raw.setdefault(order, []).append(np.dot(weights, seg) / step ** order)
    return {order: richardson(raw[order]) for order in orders}


def time_derivative(probe: FieldProbe, t: float, x: float) -> complex:
    ht = probe.t_step
    ests = [(probe(t + h, [x])[0] - probe(t - h, [x])[0]) / (2.0 * h) for h in (ht, ht / 2)]
    return richardson(ests)


def residual_fd(probe: FieldProbe, p: Equation | KernelParams, t: float, x: float) -> float:
    """``|u_t - a u^(m) - (s/2) u_xx|`` at ``(t, x)`` by finite differences."""
    h = probe.x_step or default_x_step(p.m)
    u_t = time_derivative(probe, t, x)
    orders = sorted({p.m, 2})
    d = spatial_derivatives(probe, t, x, orders, h)
    return float(abs(u_t - p.a * d[p.m] - 0.5 * p.s * d[2]))


# -- particular solutions -------------------------------------------------------------

def exponential_solution(p: Equation | KernelParams, lam: float) -> FieldProbe:
    """``exp((a lam^m + s lam^2/2) t + lam x)``."""
    rate = p.a * lam ** p.m + 0.5 * p.s * lam ** 2
    return FieldProbe(lambda t, x: np.exp(rate * t + lam * x))


def fourier_mode(p: Equation | KernelParams, lam: float) -> complex:
    """Growth rate ``a (i lam)^m - s lam^2 / 2`` of the mode ``exp(i lam x)``."""
    return p.a * (1j * lam) ** p.m - 0.5 * p.s * lam ** 2


def complex_exponential_solution(p: Equation | KernelParams, lam: float, part: str = "real") -> FieldProbe:
    """Real or imaginary part of ``exp((a (i lam)^m - s lam^2/2) t + i lam x)``."""
    rate = fourier_mode(p, lam)
    take = np.real if part == "real" else np.imag
    return FieldProbe(lambda t, x: take(np.exp(rate * t + 1j * lam * x)))


def trig_solution(p: Equation | KernelParams, lam: float, kind: str = "sin") -> FieldProbe:
    """``exp((a (i lam)^m - s lam^2/2) t) sin(lam x)`` (or ``cos``).

    This separable form solves the equation only for even ``m``, where
    ``(i lam)^m`` is real.  For odd ``m`` use :func:`complex_exponential_solution`.
    """
    rate = fourier_mode(p, lam)
    trig = np.sin if kind == "sin" else np.cos
    return FieldProbe(lambda t, x: np.exp(rate * t) * trig(lam * x))


def heat_solution(s: float) -> FieldProbe:
    return FieldProbe(lambda t, x: heat_kernel(s * t, x))


def airy_heat_field(a: float, m: int, s: float, q: Optional[QuadSpec] = None) -> FieldProbe:
    q = q or QuadSpec(rel_tol=1e-13)
    return FieldProbe(lambda t, x: airy_heat(KernelParams(a, m, s, t), x, q))


# -- separated solutions ----------------------------------------------------------------

class RootFindingError(ArithmeticError):
    pass


def _characteristic_poly(m: int, a: float, s: float, lambda_sep: float) -> np.ndarray:
    """Coefficients, highest degree first, of ``a r^m + (s/2) r^2 - lambda_sep``."""
    c = np.zeros(m + 1, dtype=complex)
    c[0] += a
    c[m - 2] += 0.5 * s
    c[m] -= lambda_sep
    return c


def characteristic_roots(m: int, a: float, s: float, lambda_sep: float,
                         max_sweeps: int = 200) -> list[complex]:
    """All roots of ``a r^m + (s/2) r^2 = lambda_sep`` by Durand-Kerner iteration."""
    if a == 0:
        raise ValueError("characteristic_roots needs a != 0")
    if m < 2:
        raise ValueError("m must be >= 2")
    poly = _characteristic_poly(m, a, s, lambda_sep)
    if poly[0] == 0:
        raise ValueError("leading coefficient a + s/2 vanishes")
    monic = poly / poly[0]
    radius = 1.0 + float(np.max(np.abs(monic[1:])))
    z = [radius * (0.4 + 0.9j) ** k for k in range(m)]

    def p(r):
        acc = 0j
        for c in monic:
            acc = acc * r + c
        return acc

    for _ in range(max_sweeps):
        biggest = 0.0
        for i in range(m):
            denom = 1.0 + 0j
            for j in range(m):
                if j != i:
                    denom *= z[i] - z[j]
            step = p(z[i]) / denom
            z[i] -= step
            biggest = max(biggest, abs(step))
        if biggest < 1e-15 * radius:
            break
    residuals = [abs(np.polyval(poly, r)) for r in z]
    bound = 1e-10 * (1.0 + abs(lambda_sep))
    if max(residuals) >= bound:
        raise RootFindingError(
            f"Durand-Kerner did not converge: residuals {residuals} (bound {bound})")
    return sorted(z, key=lambda r: (round(r.real, 12), round(r.imag, 12)))


def separated_solution(lambda_sep: float, r: complex) -> FieldProbe:
    """``exp(lambda_sep t + r x)``, complex-valued."""
    return FieldProbe(lambda t, x: np.exp(lambda_sep * t + r * x))


# -- closed-form checks -----------------------------------------------------------------

def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b)


def cube_completion_closed_form(t: float, x: float, q: QuadSpec = QuadSpec()) -> float:
    return math.exp(t ** 3 / 12.0 + t * x / 2.0) * airy(x + t * t / 4.0, q)


def verify_cube_completion(t: float, x: float, q: QuadSpec = QuadSpec(),
                           tol: float = 1e-7) -> Case:
    """``(1/2pi) int exp(i l^3/3 - l^2 t/2 + i l x) dl`` against ``e^{t^3/12 + tx/2} Ai(x + t^2/4)``."""
    if t <= 0:
        raise ValueError("t must be positive")
    lhs = airy_heat(KernelParams(-1.0 / 3.0, 3, t, 1.0), x, q)
    rhs = cube_completion_closed_form(t, x, q)
    return Case.check(f"cube/t={t:g}/x={x:g}", _rel(lhs, rhs), tol, t=t, x=x,
                      quadrature=lhs, closed_form=rhs)


def damped_airy_closed_form(t: float, s: float, x: float, q: QuadSpec = QuadSpec()) -> float:
    c = t ** (-1.0 / 3.0)
    arg = c * x + s * s * t ** (2.0 / 3.0) / 4.0
    return math.exp(s ** 3 * t / 12.0 + s * x / 2.0) * c * airy(arg, q)


def verify_damped_airy(t: float, s: float, x: float, q: QuadSpec = QuadSpec(),
                tol: float = 1e-6) -> Case:
    """``(1/2pi) int exp((i l^3/3 - s l^2/2) t + i l x) dl`` against its Airy closed form."""
    if t <= 0:
        raise ValueError("t must be positive")
    lhs = airy_heat(KernelParams(-1.0 / 3.0, 3, s, t), x, q)
    rhs = damped_airy_closed_form(t, s, x, q)
    return Case.check(f"eq10/t={t:g}/s={s:g}/x={x:g}", _rel(lhs, rhs), tol,
                      t=t, s=s, x=x, quadrature=lhs, closed_form=rhs)


def verify_scaling(m: int, t: float, x: float, a: Optional[float] = None,
                   q: QuadSpec = QuadSpec(), tol: float = 1e-6) -> Case:
    """``(1/2pi) int exp(a (i l)^m t + i l x) dl`` against ``t^{-1/m} Ai^(m)(x t^{-1/m})``."""
    a = canonical_a(m) if a is None else a
    # a different rule on the direct side, so t = 2^(mk) cannot reproduce the
    # scaled computation node for node
    lhs = airy_heat(KernelParams(a, m, 0.0, t), x, replace(q, nodes=q.nodes - 8))
    rhs = t ** (-1.0 / m) * higher_airy(m, a, x * t ** (-1.0 / m), q)
    return Case.check(f"scaling/m={m}/t={t:g}/x={x:g}", _rel(lhs, rhs), tol,
                      m=m, a=a, t=t, x=x, direct=lhs, scaled=rhs)


def gamma_quartic_spot(t: float, q: QuadSpec = QuadSpec(), tol: float = 1e-8) -> Case:
    """m=4, a=-1 at x=0: ``t^{-1/4} Gamma(5/4) / pi``."""
    lhs = airy_heat(KernelParams(-1.0, 4, 0.0, t), 0.0, q)
    exact = t ** -0.25 * math.gamma(1.25) / math.pi
    return Case.check(f"scaling/gamma/m=4/t={t:g}", _rel(lhs, exact), tol,
                      t=t, direct=lhs, closed_form=exact)


def heat_convolution(m: int, a: float, t: float, tau: float, x: float,
                     q: QuadSpec = QuadSpec()) -> float:
    """``int v(tau, y) w(t, x - y) dy``: Gaussian of variance ``tau`` against the
    order-``m`` kernel, integrated over the narrower factor's window."""
    def gauss(y):
        return heat_kernel(tau, y)

    def kernel(z):
        return scaled_kernel(m, a, t, z, q)

    hw = heat_window(tau, x)
    if m % 2 == 0:
        kw = kernel_window(m, a, t)
        if kw + abs(x) < hw:
            return convolve(kernel, gauss, x, kw, q)
    return convolve(gauss, kernel, x, hw, q, tail_variance=tau)


def verify_convolution(m: int, tau: float, t: float, x: float, a: Optional[float] = None,
                       q: QuadSpec = QuadSpec(), tol: float = 1e-6) -> Case:
    """Gaussian of variance ``tau`` convolved with the order-``m`` kernel at time ``t``,
    against the direct Fourier integral with ``s = tau / t``."""
    a = canonical_a(m) if a is None else a
    conv = heat_convolution(m, a, t, tau, x, q)
    direct = airy_heat(KernelParams(a, m, tau / t, t), x, q)
    return Case.check(f"convolution/m={m}/tau={tau:g}/t={t:g}/x={x:g}", abs(conv - direct), tol,
                      m=m, a=a, tau=tau, t=t, x=x, convolution=conv, direct=direct)


def verify_omega(n: int, t: float, x: float, q: QuadSpec = QuadSpec(),
                 tol: float = 1e-8) -> Case:
    """Derived heat polynomial: quadrature against the closed form.

    Relative error, except where the closed form is exactly zero (odd ``n`` at
    ``x = 0``); there the absolute error is measured against the integral of
    ``|lambda|^n exp(-lambda^2 t/2)`` / 2pi.
    """
    quad = derived_heat_quadrature(n, t, x, q)
    closed = derived_heat_poly(n, t, x)
    if closed != 0.0:
        metric = _rel(quad, closed)
    else:
        scale = 2 ** ((n - 1) / 2.0) * math.gamma((n + 1) / 2.0) * t ** (-(n + 1) / 2.0) / math.pi
        metric = abs(quad) / scale
    return Case.check(f"omega/n={n}/t={t:g}/x={x:g}", metric, tol, n=n, t=t, x=x,
                      quadrature=quad, closed_form=closed)


def omega_printed_ratio(n: int, t: float, x: float, tol: float = 1e-12) -> Case:
    """Ratio of the physicists'-convention printed normalization to the adopted one.

    The metric is the relative distance of that ratio from ``2^{n/2}``.
    """
    ratio = derived_heat_poly_printed(n, t, x) / derived_heat_poly(n, t, x)
    expected = 2.0 ** (n / 2.0)
    return Case.check(f"omega/printed_ratio/n={n}/t={t:g}/x={x:g}", _rel(ratio, expected), tol,
                      n=n, t=t, x=x, ratio=ratio, expected=expected)


# -- moments and the duality series --------------------------------------------------------

def kernel_moment(m: int, a: float, j: int, t: float, x: float, q: QuadSpec = QuadSpec(),
                  tol: float = 1e-9) -> float:
    """``int y^j w(t, x - y) dy`` for the order-``m`` kernel ``w``, by quadrature.

    Integrates ``(x - z)^j w(t, z)`` over ``|z| <= L``.  ``L`` starts where the
    kernel envelope has dropped by ``e^-28`` and doubles until the added shell is
    below ``tol * max(1, |value|)``; the polynomial weight can keep the tail alive
    past the envelope estimate.
    """
    half = kernel_window(m, a, t, drop=28.0)
    prev = None
    for _ in range(8):
        val = float(np.real(integrate_moment(m, a, j, t, x, half, q)))
        if prev is not None and abs(val - prev) <= tol * max(1.0, abs(val)):
            return val
        prev = val
        half *= 2.0
    raise ArithmeticError("moment integral did not settle as the window grew")


def integrate_moment(m: int, a: float, j: int, t: float, x: float, half: float,
                     q: QuadSpec):
    res = integrate(lambda z: (x - z) ** j * scaled_kernel(m, a, t, z, q), -half, half, q)
    return res.value


def moment_identity(m: int, a: float, j: int, t: float, x: float, q: QuadSpec = QuadSpec(),
                    tol: float = 1e-5) -> Case:
    """Kernel moment against the Gould-Hopper value ``H^{(m)}_j(a t, x)``."""
    if m % 2 or m < 4:
        raise ValueError("moment_identity needs an even m >= 4")
    if a * (-1) ** (m // 2) >= 0:
        raise ValueError("moment_identity needs a decaying kernel")
    if not 0 <= j <= 8:
        raise ValueError("moment_identity supports 0 <= j <= 8")
    quad = kernel_moment(m, a, j, t, x, q)
    exact = gould_hopper_value(m, j, a * t, x)
    return Case.check(f"moments/m={m}/j={j}/t={t:g}/x={x:g}", abs(quad - exact), tol,
                      m=m, a=a, j=j, t=t, x=x, quadrature=quad, gould_hopper=exact)


@dataclass(frozen=True)
class DualityScan:
    m: int
    t: float
    tau: float
    x: float
    j_max: int
    a: Optional[float] = None
    partial_sums: tuple[float, ...] = ()
    errors: tuple[float, ...] = ()
    oracle: Optional[float] = None
    best_index: Optional[int] = None

    def __post_init__(self):
        if self.tau <= 0 or self.t <= 0:
            raise ValueError("tau and t must be positive")
        if self.j_max < 0:
            raise ValueError("j_max must be non-negative")

    @property
    def kernel_a(self) -> float:
        return canonical_a(self.m) if self.a is None else self.a

    @property
    def best_relative_error(self) -> float:
        return self.errors[self.best_index] / abs(self.oracle)


def duality_oracle(scan: DualityScan, q: QuadSpec = QuadSpec()) -> float:
    """Heat kernel of variance ``tau`` convolved with the order-``m`` kernel.

    Even ``m`` integrates the convolution directly.  For odd ``m`` the kernel's
    oscillating tail leaves the Airy evaluator's window, so the equivalent single
    Fourier integral with ``s = tau / t`` is used instead.
    """
    a = scan.kernel_a
    if scan.m % 2 == 0:
        return heat_convolution(scan.m, a, scan.t, scan.tau, scan.x, q)
    return airy_heat(KernelParams(a, scan.m, scan.tau / scan.t, scan.t), scan.x, q)


def duality_partial_sums(scan: DualityScan, q: QuadSpec = QuadSpec()) -> DualityScan:
    """Partial sums ``(2 pi tau)^{-1/2} sum_{j<=J} (-1/(2tau))^j / j! H^{(m)}_{2j}(a t, x)``.

    Returns a copy of ``scan`` with partial sums, absolute errors against the
    oracle, and the optimal truncation index (smallest error).
    """
    a = scan.kernel_a
    oracle = duality_oracle(scan, q)
    pref = 1.0 / math.sqrt(2.0 * math.pi * scan.tau)
    sums, errors = [], []
    total = 0.0
    for j in range(scan.j_max + 1):
        term = (-1.0 / (2.0 * scan.tau)) ** j / math.factorial(j) \
            * gould_hopper_value(scan.m, 2 * j, a * scan.t, scan.x)
        total += term
        sums.append(pref * total)
        errors.append(abs(pref * total - oracle))
    best = int(np.argmin(errors))
    return replace(scan, partial_sums=tuple(sums), errors=tuple(errors), oracle=oracle,
                   best_index=best)
