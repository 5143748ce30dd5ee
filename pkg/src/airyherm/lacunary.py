"""Exact check of the triple lacunary Hermite generating function.

    sum_n H_{3n}(u) z^n / n!
        = exp((w-u)(3u-w)/6) / sqrt(1 - 6wz) * 2F0(1/6, 5/6; -; 54 z^2 / (1-6wz)^3)

with ``w = (1 - sqrt(1 - 12uz)) / (6z) = u C(3uz)`` and ``H`` in the combinatorial
convention.  Both sides are built as truncated series at a rational ``u`` and
compared coefficient by coefficient.  The coefficient of ``z^n`` on either side is
a polynomial in ``u`` of degree at most ``3n``, so agreement at ``3N - 2`` or more
distinct points certifies the identity through ``z^(N-1)``; the report asks for
``3N + 1`` to leave margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .exactnum import (
    SeriesError,
    TruncatedSeries,
    catalan_series,
    pochhammer,
    ts_compose,
    ts_div,
    ts_exp,
    ts_mul,
    ts_shift_div,
    ts_sqrt,
)
from .hermite import HermiteConvention, hermite_poly


@dataclass(frozen=True)
class LacunaryCase:
    u: Fraction
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        object.__setattr__(self, "u", Fraction(self.u))


@dataclass(frozen=True)
class LacunaryVerdict:
    case: LacunaryCase
    lhs: TruncatedSeries
    rhs: TruncatedSeries
    first_mismatch: Optional[int]

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None


def lhs_series(case: LacunaryCase,
               conv: HermiteConvention = HermiteConvention.COMBINATORIAL) -> TruncatedSeries:
    return TruncatedSeries(
        Fraction(hermite_poly(conv, 3 * n)(case.u), math.factorial(n))
        for n in range(case.order)
    )


def w_series(case: LacunaryCase) -> TruncatedSeries:
    """``(1 - sqrt(1 - 12uz)) / (6z)`` to order ``case.order``."""
    n = case.order + 1
    root = ts_sqrt(TruncatedSeries([1, -12 * case.u], n))
    return ts_shift_div(1 - root, 1).scale(Fraction(1, 6))


def w_series_catalan(case: LacunaryCase) -> TruncatedSeries:
    """``u C(3uz)``, built independently from the Catalan recurrence."""
    inner = TruncatedSeries([0, 3 * case.u], case.order)
    return ts_compose(catalan_series(case.order), inner).scale(case.u)


def hyp2f0_formal(a, b, arg: TruncatedSeries) -> TruncatedSeries:
    """Formal ``sum_k (a)_k (b)_k / k! arg^k`` for ``arg`` of valuation >= 2.

    Term ``k`` starts at ``z^(2k)``, so only ``k < order/2`` contribute.
    """
    n = arg.order
    if arg.valuation() < 2 and arg.valuation() < n:
        raise SeriesError("hyp2f0_formal needs an argument of valuation >= 2")
    total = TruncatedSeries.one(n)
    power = TruncatedSeries.one(n)
    k = 0
    while 2 * (k + 1) < n:
        k += 1
        power = ts_mul(power, arg)
        coeff = pochhammer(a, k) * pochhammer(b, k) / math.factorial(k)
        total = total + power.scale(coeff)
    return total


def rhs_factors(case: LacunaryCase) -> dict[str, TruncatedSeries]:
    """The three factors of the right side, each to order ``case.order``."""
    n = case.order
    u = case.u
    w = w_series(case)
    exponent = ts_mul(w - u, (-w) + 3 * u).scale(Fraction(1, 6))
    one_minus = 1 - w.mul_z(1).scale(6)
    prefactor = ts_div(TruncatedSeries.one(n), ts_sqrt(one_minus))
    cube = ts_mul(ts_mul(one_minus, one_minus), one_minus)
    arg = ts_div(TruncatedSeries.monomial(2, n, 54), cube)
    return {
        "exp": ts_exp(exponent),
        "prefactor": prefactor,
        "hyp2f0": hyp2f0_formal(Fraction(1, 6), Fraction(5, 6), arg),
    }


def rhs_series(case: LacunaryCase) -> TruncatedSeries:
    f = rhs_factors(case)
    return ts_mul(ts_mul(f["exp"], f["prefactor"]), f["hyp2f0"])


def verify_lacunary(case: LacunaryCase) -> LacunaryVerdict:
    lhs = lhs_series(case)
    rhs = rhs_series(case)
    mismatch = next((k for k in range(case.order) if lhs[k] != rhs[k]), None)
    return LacunaryVerdict(case, lhs, rhs, mismatch)


def default_points(count: int, denominator: int = 7) -> list[Fraction]:
    """``count`` consecutive multiples of ``1/denominator`` centred on zero."""
    lo = -(count // 2)
    return [Fraction(k, denominator) for k in range(lo, lo + count)]


def certify(order: int, points: Iterable[Fraction]) -> tuple[list[LacunaryVerdict], bool]:
    """Run the identity at every point.

    Returns the verdicts sorted by ``u`` and whether the polynomial-identity
    certificate holds (all pass and at least ``3*order + 1`` distinct points).
    """
    pts = sorted(set(Fraction(p) for p in points))
    verdicts = [verify_lacunary(LacunaryCase(u, order)) for u in pts]
    ok = all(v.passed for v in verdicts) and len(pts) >= 3 * order + 1
    return verdicts, ok


def detect_convention(u, conventions: Iterable[HermiteConvention] = tuple(HermiteConvention)
                      ) -> list[HermiteConvention]:
    """Conventions whose ``H_3(u)`` matches the ``z^1`` coefficient of the right side."""
    rhs = rhs_series(LacunaryCase(Fraction(u), 2))
    return [c for c in conventions if hermite_poly(c, 3)(Fraction(u)) == rhs[1]]
