"""Hermite families, derived heat polynomials and Gould-Hopper polynomials."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import BivariatePolynomial, RationalPolynomial


class HermiteConvention(enum.Enum):
    """Normalization of the Hermite family, named by exponential generating function.

    COMBINATORIAL  exp(u z + z^2/2)
    PROBABILISTS   exp(u z - z^2/2)
    PHYSICISTS     exp(2 u z - z^2)
    """

    COMBINATORIAL = "combinatorial"
    PROBABILISTS = "probabilists"
    PHYSICISTS = "physicists"


# H_{n+1} = (alpha u) H_n + beta n H_{n-1}
_RECURRENCE = {
    HermiteConvention.COMBINATORIAL: (1, 1),
    HermiteConvention.PROBABILISTS: (1, -1),
    HermiteConvention.PHYSICISTS: (2, -2),
}


@lru_cache(maxsize=None)
def _hermite_family(conv: HermiteConvention, n: int) -> tuple[RationalPolynomial, ...]:
    alpha, beta = _RECURRENCE[conv]
    polys = [RationalPolynomial([1]), RationalPolynomial([0, alpha])]
    u = RationalPolynomial([0, alpha])
    for k in range(1, n):
        polys.append(u * polys[k] + polys[k - 1] * (beta * k))
    return tuple(polys[: n + 1])


def hermite_poly(conv: HermiteConvention, n: int) -> RationalPolynomial:
    """Degree-``n`` Hermite polynomial of the given convention, exact."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _hermite_family(conv, n)[n]


def hermite_value(conv: HermiteConvention, n: int, u: float) -> float:
    """Float evaluation of ``H_n(u)`` by the three-term recurrence."""
    alpha, beta = _RECURRENCE[conv]
    h_prev, h = 1.0, alpha * u
    if n == 0:
        return h_prev
    for k in range(1, n):
        h_prev, h = h, alpha * u * h + beta * k * h_prev
    return h


def heat_kernel_density(t: float, x: float) -> float:
    return math.exp(-x * x / (2.0 * t)) / math.sqrt(2.0 * math.pi * t)


def derived_heat_poly(n: int, t: float, x: float) -> float:
    """``omega_n(t, x) = (-d/dx)^n k(t, x)`` for the Gaussian kernel of variance ``t``.

    Closed form ``t**(-n/2) He_n(x / sqrt(t)) k(t, x)`` with probabilists' ``He``.
    """
    if t <= 0:
        raise ValueError("derived_heat_poly requires t > 0")
    if n < 0:
        raise ValueError("n must be non-negative")
    rt = math.sqrt(t)
    he = hermite_value(HermiteConvention.PROBABILISTS, n, x / rt)
    return t ** (-n / 2.0) * he * heat_kernel_density(t, x)


def derived_heat_poly_printed(n: int, t: float, x: float) -> float:
    """The alternative normalization ``t**(-n/2) k(t,x) H_n(x / sqrt(2t))`` with physicists' ``H``.

    Differs from :func:`derived_heat_poly` by the constant factor ``2**(n/2)``.
    """
    if t <= 0:
        raise ValueError("derived_heat_poly_printed requires t > 0")
    h = hermite_value(HermiteConvention.PHYSICISTS, n, x / math.sqrt(2.0 * t))
    return t ** (-n / 2.0) * h * heat_kernel_density(t, x)


@dataclass(frozen=True)
class GouldHopperPoly:
    """``H^{(n)}_j(t, x) = exp(t d^n/dx^n) x^j`` held exactly."""

    n: int
    j: int
    poly_in_x_t: BivariatePolynomial

    def __call__(self, t, x):
        return self.poly_in_x_t(t, x)

    def at_t(self, t) -> RationalPolynomial:
        return self.poly_in_x_t.at_t(t)


def gould_hopper(n: int, j: int) -> GouldHopperPoly:
    """``j! sum_{k <= j/n} x^{j-nk} t^k / ((j-nk)! k!)``."""
    if n < 2:
        raise ValueError("Gould-Hopper order n must be >= 2")
    if j < 0:
        raise ValueError("degree j must be non-negative")
    cols = [RationalPolynomial() for _ in range(j + 1)]
    fj = math.factorial(j)
    for k in range(j // n + 1):
        c = Fraction(fj, math.factorial(j - n * k) * math.factorial(k))
        cols[j - n * k] = cols[j - n * k] + RationalPolynomial.monomial(k, c)
    return GouldHopperPoly(n, j, BivariatePolynomial(cols))


def gould_hopper_value(n: int, j: int, t: float, x: float) -> float:
    """Float evaluation of the finite Gould-Hopper sum."""
    total = 0.0
    for k in range(j // n + 1):
        total += (math.factorial(j) / (math.factorial(j - n * k) * math.factorial(k))
                  * x ** (j - n * k) * t ** k)
    return total


def gh_pde_residual_exact(n: int, j: int) -> BivariatePolynomial:
    """``d_t H - d_x^n H`` for ``H = H^{(n)}_j``; identically zero."""
    p = gould_hopper(n, j).poly_in_x_t
    return p.d_t() - p.d_x(n)


def gh_initial_condition(n: int, j: int) -> RationalPolynomial:
    """``H^{(n)}_j(0, x)``, which is the monomial ``x^j``."""
    return gould_hopper(n, j).at_t(0)
