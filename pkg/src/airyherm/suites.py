"""Verification suites: each builds a :class:`VerificationReport` from fixed cases."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from . import pde
from .hermite import (
    HermiteConvention,
    gh_initial_condition,
    gh_pde_residual_exact,
    gould_hopper,
    hermite_poly,
)
from .kernels import AI0, airy, airy_contour, airy_series
from .lacunary import certify, default_points
from .exactnum import RationalPolynomial
from .quadrature import QuadSpec
from .report import Case, VerificationReport

CUBE_T = (0.25, 0.5, 1.0, 2.0)
CUBE_X = tuple(np.round(np.arange(-2.0, 2.0001, 0.5), 12))

DAMPED_AIRY_TRIPLES = (
    (1.0, 0.25, 0.0), (1.0, 1.0, 0.5), (1.0, 2.0, -1.0),
    (2.0, 0.0, 1.0), (0.5, 0.0, -1.0), (8.0, 0.0, 0.5),
    (2.0, 0.5, 0.3), (4.0, 0.3, -1.0), (0.25, 1.5, 0.2),
    (3.0, 0.7, -0.5), (0.5, 2.0, 1.0), (8.0, 0.3, -1.0),
)

SCALING_CASES = tuple((3, t, x) for t in (1.0, 8.0) for x in (-1.5, 0.0, 1.0)) + \
    tuple((4, t, x) for t in (1.0, 16.0) for x in (-2.0, 0.0, 0.7))

CONVOLUTION_CASES = (
    (3, 0.25, 1.0, 0.5), (3, 0.1, 2.0, -0.3), (3, 0.2, 0.5, 1.0), (3, 0.05, 8.0, -1.0),
    (4, 1.0, 1.0, 0.5), (4, 2.0, 0.5, -1.0), (4, 0.5, 2.0, 0.0), (4, 50.0, 1.0, 0.3),
)

OMEGA_POINTS = ((1.0, 0.7), (0.5, -1.2), (2.0, 0.0))

AIRY_GRID = tuple(np.round(np.arange(-2.0, 4.0001, 0.25), 12))


def lacunary_suite(order: int = 12, points: int = 40, **_) -> VerificationReport:
    rep = VerificationReport("lacunary")
    verdicts, ok = certify(order, default_points(points))
    for v in verdicts:
        mismatches = sum(a != b for a, b in zip(v.lhs.coeffs, v.rhs.coeffs))
        rep.cases.append(Case.check(
            f"lacunary/u={v.case.u}", mismatches, 0, u=v.case.u, order=order,
            first_mismatch="none" if v.passed else v.first_mismatch))
    distinct = len(verdicts)
    needed = 3 * order + 1
    rep.cases.append(Case.check(
        "lacunary/certificate", 0 if ok else 1, 0,
        order=order, points=distinct, points_needed=needed,
        argument="z^n coefficient has degree <= 3n in u; exact agreement at "
                 f"{needed} points fixes it through z^{order - 1}"))
    return rep


def gould_hopper_suite(n_range: Sequence[int] = range(2, 7), j_range: Sequence[int] = range(25),
                       **_) -> VerificationReport:
    rep = VerificationReport("gould-hopper")
    for n in n_range:
        for j in j_range:
            res = gh_pde_residual_exact(n, j)
            nonzero = sum(1 for col in res.x_coeffs for c in col.coeffs if c)
            rep.cases.append(Case.check(f"gould-hopper/residual/n={n}/j={j:02d}", nonzero, 0,
                                        n=n, j=j))
            init = gh_initial_condition(n, j)
            rep.cases.append(Case.check(
                f"gould-hopper/initial/n={n}/j={j:02d}",
                0 if init == RationalPolynomial.monomial(j) else 1, 0, n=n, j=j))
    for j in range(21):
        he = hermite_poly(HermiteConvention.PROBABILISTS, j)
        gh = gould_hopper(2, j).at_t(Fraction(-1, 2))
        rep.cases.append(Case.check(f"gould-hopper/probabilists/j={j:02d}",
                                    0 if he == gh else 1, 0, j=j))
    return rep


def omega_suite(q: QuadSpec = QuadSpec(), **_) -> VerificationReport:
    rep = VerificationReport("omega")
    for t, x in OMEGA_POINTS:
        for n in range(9):
            rep.cases.append(pde.verify_omega(n, t, x, q))
    for n in range(9):
        rep.cases.append(pde.omega_printed_ratio(n, 1.0, 0.7))
    return rep


def cube_suite(q: QuadSpec = QuadSpec(), t_values: Sequence[float] = CUBE_T,
               x_values: Sequence[float] = CUBE_X, **_) -> VerificationReport:
    rep = VerificationReport("cube")
    for t in t_values:
        for x in x_values:
            rep.cases.append(pde.verify_cube_completion(float(t), float(x), q))
    return rep


def damped_airy_suite(q: QuadSpec = QuadSpec(), **_) -> VerificationReport:
    rep = VerificationReport("eq10")
    rep.extend(pde.verify_damped_airy(t, s, x, q) for t, s, x in DAMPED_AIRY_TRIPLES)
    return rep


def scaling_suite(q: QuadSpec = QuadSpec(), **_) -> VerificationReport:
    rep = VerificationReport("scaling")
    rep.extend(pde.verify_scaling(m, t, x, q=q) for m, t, x in SCALING_CASES)
    rep.extend(pde.gamma_quartic_spot(t, q) for t in (1.0, 16.0))
    return rep


def convolution_suite(q: QuadSpec = QuadSpec(), **_) -> VerificationReport:
    rep = VerificationReport("convolution")
    rep.extend(pde.verify_convolution(m, tau, t, x, q=q) for m, tau, t, x in CONVOLUTION_CASES)
    return rep


def moments_suite(q: QuadSpec = QuadSpec(), **_) -> VerificationReport:
    rep = VerificationReport("moments")
    rep.extend(pde.moment_identity(4, -1.0, j, 0.5, 0.3, q) for j in range(7))
    rep.cases.append(pde.moment_identity(4, -1.0, 4, 0.5, 0.0, q))
    return rep


def _closed_form_probes(eq: pde.Equation, lam: float) -> dict[str, pde.FieldProbe]:
    probes = {
        "exponential": pde.exponential_solution(eq, lam),
        "complex_real": pde.complex_exponential_solution(eq, lam, "real"),
        "complex_imag": pde.complex_exponential_solution(eq, lam, "imag"),
    }
    if eq.m % 2 == 0:
        probes["sin"] = pde.trig_solution(eq, lam, "sin")
        probes["cos"] = pde.trig_solution(eq, lam, "cos")
    return probes


def residual_suite(q: QuadSpec = QuadSpec(), seed: int = 0, **_) -> VerificationReport:
    rep = VerificationReport("residual")
    rng = np.random.default_rng(seed)
    points = [(float(t), float(x)) for t, x in
              zip(rng.uniform(0.5, 2.0, 10), rng.uniform(-2.0, 2.0, 10))]
    for eq in (pde.Equation(1.0, 3, 1.0), pde.Equation(-1.0, 4, 1.0)):
        for label, probe in _closed_form_probes(eq, 0.5).items():
            for k, (t, x) in enumerate(points):
                rep.cases.append(Case.check(
                    f"residual/closed/{label}/m={eq.m}/p{k}",
                    pde.residual_fd(probe, eq, t, x), 1e-6,
                    a=eq.a, m=eq.m, s=eq.s, lam=0.5, t=t, x=x, seed=seed))
    for k, (t, x) in enumerate(points):
        eq = pde.Equation(0.0, 3, 1.0)
        rep.cases.append(Case.check(f"residual/closed/heat/p{k}",
                                    pde.residual_fd(pde.heat_solution(1.0), eq, t, x), 1e-6,
                                    s=1.0, t=t, x=x, seed=seed))
    for m, a, s, lam_sep in ((3, 1.0, 0.0, 1.0), (2, 0.5, 1.0, 2.0), (5, 1.0, 1.0, 0.7)):
        roots = pde.characteristic_roots(m, a, s, lam_sep)
        eq = pde.Equation(a, m, s)
        for i, r in enumerate(roots):
            rep.cases.append(Case.check(
                f"residual/separated/m={m}/root{i}",
                pde.residual_fd(pde.separated_solution(lam_sep, r), eq, 1.0, 0.2), 1e-6,
                m=m, a=a, s=s, lambda_sep=lam_sep, root=f"{r.real:.17g}{r.imag:+.17g}j"))
    fq = QuadSpec(rel_tol=min(q.rel_tol, 1e-13), max_panels=q.max_panels)
    for a, m in ((-1.0 / 3.0, 3), (-1.0, 4)):
        field = pde.airy_heat_field(a, m, 1.0, fq)
        eq = pde.Equation(a, m, 1.0)
        for t, x in ((1.0, 0.5), (0.5, -1.0), (2.0, 1.5)):
            rep.cases.append(Case.check(f"residual/airy_heat/m={m}/t={t:g}/x={x:g}",
                                        pde.residual_fd(field, eq, t, x), 1e-4,
                                        a=a, m=m, s=1.0, t=t, x=x))
    return rep


def airy_suite(q: QuadSpec = QuadSpec(), **_) -> VerificationReport:
    rep = VerificationReport("airy")
    for x in AIRY_GRID:
        x = float(x)
        c = airy_contour(x, q)
        s = airy_series(x)
        rep.cases.append(Case.check(f"airy/dual/x={x:+.2f}", abs(s - c) / abs(c), 1e-9,
                                    x=x, series=s, contour=c))
    c0 = airy_contour(0.0, q)
    rep.cases.append(Case.check("airy/gamma_value", abs(c0 - AI0) / AI0, 1e-12,
                                contour=c0, gamma_formula=AI0))
    h = 1e-3
    x = 0.5
    second = (airy(x + h, q) - 2 * airy(x, q) + airy(x - h, q)) / h ** 2
    rep.cases.append(Case.check("airy/ode", abs(second - x * airy(x, q)), 1e-6, x=x, h=h))
    return rep


def duality_case(m: int = 4, tau: float = 50.0, t: float = 1.0, x: float = 0.5, j_max: int = 8,
                 q: QuadSpec = QuadSpec(), tol: Optional[float] = 1e-3) -> Case:
    """Best partial sum against the oracle.

    Odd ``m`` is a demonstration only: its tolerance is infinite so it is recorded,
    never asserted.
    """
    scan = pde.duality_partial_sums(pde.DualityScan(m, t, tau, x, j_max), q)
    if tol is None or m % 2 == 1:
        tol = math.inf
    return Case.check(
        f"duality/m={m}/tau={tau:g}/t={t:g}/x={x:g}", scan.best_relative_error, tol,
        m=m, a=scan.kernel_a, tau=tau, t=t, x=x, j_max=j_max, oracle=scan.oracle,
        best_index=scan.best_index,
        abs_errors=",".join(format(e, ".17g") for e in scan.errors),
        partial_sums=",".join(format(v, ".17g") for v in scan.partial_sums))


def duality_suite(q: QuadSpec = QuadSpec(), **_) -> VerificationReport:
    rep = VerificationReport("duality")
    rep.cases.append(duality_case(4, 50.0, 1.0, 0.5, 8, q))
    rep.cases.append(duality_case(4, 1e4, 1.0, 0.5, 0, q, tol=1e-2))
    rep.cases.append(duality_case(3, 2.0, 1.0, 0.5, 8, q, tol=None))
    return rep


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "lacunary": lacunary_suite,
    "gould-hopper": gould_hopper_suite,
    "omega": omega_suite,
    "cube": cube_suite,
    "eq10": damped_airy_suite,
    "scaling": scaling_suite,
    "convolution": convolution_suite,
    "moments": moments_suite,
    "residual": residual_suite,
    "airy": airy_suite,
    "duality": duality_suite,
}
