"""Exact rational arithmetic: truncated power series and dense polynomials.

Scalars are :class:`fractions.Fraction`, which keeps every value in lowest
terms with a positive denominator.  Nothing in this module touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

BigRational = Fraction
Scalar = Union[int, Fraction]


class SeriesError(ArithmeticError):
    """Raised when a series operation falls outside its algebraic domain."""


def _frac(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum(coeffs[k] * z**k) + O(z**order)`` with rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = (cs + [Fraction(0)] * order)[:order]
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff: Scalar = 1) -> TruncatedSeries:
        cs = [Fraction(0)] * order
        if k < order:
            cs[k] = _frac(coeff)
        return cls(cs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise SeriesError("cannot raise the truncation order")
        return TruncatedSeries(self.coeffs[:order])

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (``order`` if none)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order

    def scale(self, c: Scalar) -> TruncatedSeries:
        c = _frac(c)
        return TruncatedSeries(c * a for a in self.coeffs)

    def mul_z(self, k: int = 1) -> TruncatedSeries:
        """Multiply by ``z**k`` keeping the same truncation order."""
        n = self.order
        return TruncatedSeries(([Fraction(0)] * k + list(self.coeffs))[:n])

    def __add__(self, other: TruncatedSeries | Scalar) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], self.order)
        n = min(self.order, other.order)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-a for a in self.coeffs)

    def __sub__(self, other: TruncatedSeries | Scalar) -> TruncatedSeries:
        return self + (-other)

    def __rsub__(self, other: Scalar) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other: TruncatedSeries | Scalar) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return ts_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other: TruncatedSeries | Scalar) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return ts_div(self, other)
        return self.scale(Fraction(1) / _frac(other))

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{terms}], order={self.order})"


def ts_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller of the two orders."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n):
        out.append(sum((ac[i] * bc[k - i] for i in range(k + 1) if ac[i] and bc[k - i]),
                       Fraction(0)))
    return TruncatedSeries(out)


def ts_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``a / b``; ``b`` must be a unit (nonzero constant term)."""
    if b.order == 0 or b.coeffs[0] == 0:
        raise SeriesError("non-unit divisor: constant term of divisor is zero")
    n = min(a.order, b.order)
    b0 = b.coeffs[0]
    q: list[Fraction] = []
    for k in range(n):
        acc = a.coeffs[k] - sum((q[i] * b.coeffs[k - i] for i in range(k)), Fraction(0))
        q.append(acc / b0)
    return TruncatedSeries(q)


def ts_shift_div(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Divide by ``z**k``; the order drops by ``k``."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    if k > a.order:
        raise SeriesError("valuation too small: shift exceeds truncation order")
    if any(a.coeffs[:k]):
        raise SeriesError(f"valuation too small: series not divisible by z^{k}")
    return TruncatedSeries(a.coeffs[k:])


def ts_sqrt(a: TruncatedSeries) -> TruncatedSeries:
    """Square root with constant term 1.

    Uses ``2 s_0 s_k = a_k - sum_{i=1}^{k-1} s_i s_{k-i}``.
    """
    if a.order == 0:
        return a
    if a.coeffs[0] != 1:
        raise SeriesError("ts_sqrt requires constant term 1")
    s = [Fraction(1)]
    for k in range(1, a.order):
        acc = a.coeffs[k] - sum((s[i] * s[k - i] for i in range(1, k)), Fraction(0))
        s.append(acc / 2)
    return TruncatedSeries(s)


def ts_exp(a: TruncatedSeries) -> TruncatedSeries:
    """``exp(a)`` for ``a`` with zero constant term.

    From ``E' = a' E``: ``k e_k = sum_{i=1}^{k} i a_i e_{k-i}``.
    """
    if a.order == 0:
        return a
    if a.coeffs[0] != 0:
        raise SeriesError("ts_exp requires zero constant term")
    e = [Fraction(1)]
    for k in range(1, a.order):
        acc = sum((i * a.coeffs[i] * e[k - i] for i in range(1, k + 1) if a.coeffs[i]),
                  Fraction(0))
        e.append(acc / k)
    return TruncatedSeries(e)


def ts_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(z))``, truncated to ``outer.order`` (and ``inner.order``)."""
    if inner.order and inner.coeffs[0] != 0:
        raise SeriesError("ts_compose requires inner series with zero constant term")
    n = min(outer.order, inner.order) if inner.order else outer.order
    if n == 0:
        return TruncatedSeries([])
    inner = TruncatedSeries(inner.coeffs, n)
    # Horner: o_0 + inner*(o_1 + inner*(o_2 + ...))
    acc = TruncatedSeries([outer.coeffs[n - 1]], n)
    for k in range(n - 2, -1, -1):
        acc = ts_mul(acc, inner) + outer.coeffs[k]
    return acc


def catalan_series(order: int) -> TruncatedSeries:
    """Catalan generating function ``C(x) = 1 + x C(x)^2`` by convolution recurrence."""
    c = [Fraction(1)]
    for n in range(order - 1):
        c.append(sum((c[i] * c[n - i] for i in range(n + 1)), Fraction(0)))
    return TruncatedSeries(c[:order], order)


def pochhammer(a: Scalar, k: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+k-1)``."""
    a = _frac(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense univariate polynomial, lowest degree first, no trailing zeros."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, k: int, coeff: Scalar = 1) -> RationalPolynomial:
        return cls([0] * k + [coeff])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: RationalPolynomial | Scalar) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: RationalPolynomial | Scalar) -> RationalPolynomial:
        return self + (-other)

    def __rsub__(self, other: Scalar) -> RationalPolynomial:
        return (-self) + other

    def __mul__(self, other: RationalPolynomial | Scalar) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            c = _frac(other)
            return RationalPolynomial(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def derivative(self, times: int = 1) -> RationalPolynomial:
        cs = list(self.coeffs)
        for _ in range(times):
            cs = [k * c for k, c in enumerate(cs)][1:]
        return RationalPolynomial(cs)

    def __call__(self, u):
        """Horner evaluation; exact for rational input, float otherwise."""
        acc = 0 * u
        for c in reversed(self.coeffs):
            acc = acc * u + (c if isinstance(u, (int, Fraction)) else float(c))
        return acc

    def to_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, order)

    def __repr__(self) -> str:
        return f"RationalPolynomial([{', '.join(str(c) for c in self.coeffs)}])"


@dataclass(frozen=True)
class BivariatePolynomial:
    """Polynomial in ``x`` whose coefficients are polynomials in ``t``.

    ``x_coeffs[k]`` multiplies ``x**k``.  Trailing zero entries are dropped.
    """

    x_coeffs: tuple[RationalPolynomial, ...]

    def __init__(self, x_coeffs: Sequence[RationalPolynomial] = ()):
        cs = list(x_coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "x_coeffs", tuple(cs))

    @property
    def degree_x(self) -> int:
        return len(self.x_coeffs) - 1

    def is_zero(self) -> bool:
        return not self.x_coeffs

    def coeff_x(self, k: int) -> RationalPolynomial:
        if 0 <= k < len(self.x_coeffs):
            return self.x_coeffs[k]
        return RationalPolynomial()

    def coefficient(self, i: int, k: int) -> Fraction:
        """Coefficient of ``x**i * t**k``."""
        return self.coeff_x(i).coeff(k)

    def __add__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        n = max(len(self.x_coeffs), len(other.x_coeffs))
        return BivariatePolynomial([self.coeff_x(k) + other.coeff_x(k) for k in range(n)])

    def __neg__(self) -> BivariatePolynomial:
        return BivariatePolynomial([-c for c in self.x_coeffs])

    def __sub__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        return self + (-other)

    def d_x(self, times: int = 1) -> BivariatePolynomial:
        cs = list(self.x_coeffs)
        for _ in range(times):
            cs = [c * k for k, c in enumerate(cs)][1:]
        return BivariatePolynomial(cs)

    def d_t(self) -> BivariatePolynomial:
        return BivariatePolynomial([c.derivative() for c in self.x_coeffs])

    def at_t(self, t: Scalar) -> RationalPolynomial:
        """Substitute a rational ``t``; the result is a polynomial in ``x``."""
        return RationalPolynomial(c(_frac(t)) for c in self.x_coeffs)

    def __call__(self, t, x):
        acc = 0 * x
        for c in reversed(self.x_coeffs):
            acc = acc * x + c(t)
        return acc
