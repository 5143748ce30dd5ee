"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines.
"""

import time
from functools import lru_cache

import pytest

from airyherm.cli import run
from airyherm.report import Case, VerificationReport
from airyherm.suites import SUITES


@lru_cache(maxsize=None)
def suite(name: str) -> VerificationReport:
    return SUITES[name]()


def line(number: int, title: str, ok: bool, detail: str) -> None:
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} ({detail})")


def worst(cases: list[Case]) -> Case:
    return max(cases, key=lambda c: c.metric)


def select(report: VerificationReport, prefix: str) -> list[Case]:
    return [c for c in report.cases if c.name.startswith(prefix)]


def test_01_lacunary_identity():
    t0 = time.perf_counter()
    rep = SUITES["lacunary"](order=12, points=40)
    elapsed = time.perf_counter() - t0
    points = select(rep, "lacunary/u=")
    cert = select(rep, "lacunary/certificate")[0]
    ok = rep.ok and len(points) == 40 and elapsed < 10.0
    line(1, "lacunary identity through z^12 at 40 rational points", ok,
         f"{sum(c.passed for c in points)}/40 exact, certificate={cert.passed}, {elapsed:.2f}s")
    assert ok


def test_02_gould_hopper_exact_residual():
    cases = select(suite("gould-hopper"), "gould-hopper/residual/")
    ok = len(cases) == 125 and all(c.metric == 0 for c in cases)
    line(2, "Gould-Hopper residual exactly zero, n 2..6 x j 0..24", ok,
         f"{sum(c.passed for c in cases)}/{len(cases)} zero polynomials")
    assert ok


def test_03_derived_heat_polynomials():
    rep = suite("omega")
    cases = [c for c in rep.cases if c.name.startswith("omega/") and c.tol == 1e-8]
    ratios = select(rep, "omega/printed_ratio/")
    ok = len(cases) == 27 and all(c.passed for c in cases) and ratios and all(c.passed for c in ratios)
    line(3, "derived heat polynomials, quadrature vs closed form", ok,
         f"max rel err {worst(cases).metric:.2e}, printed form off by 2^(n/2) in {len(ratios)} cases")
    assert ok


def test_04_cube_completion():
    cases = suite("cube").cases
    ok = len(cases) == 36 and all(c.metric < 1e-7 for c in cases)
    line(4, "cube completion grid", ok, f"max rel err {worst(cases).metric:.2e} over {len(cases)} points")
    assert ok


def test_05_damped_airy_closed_form():
    cases = suite("eq10").cases
    ok = len(cases) == 12 and all(c.metric < 1e-6 for c in cases)
    line(5, "Gaussian-damped Airy closed form", ok, f"max rel err {worst(cases).metric:.2e}")
    assert ok


def test_06_scaling_law():
    cases = suite("scaling").cases
    ms = {c.params.get("m") for c in cases}
    ok = all(c.metric < 1e-6 for c in cases) and {"3", "4"} <= ms and any(
        c.name.startswith("scaling/gamma") for c in cases)
    line(6, "self-similar scaling and Gamma(5/4)/pi spot", ok, f"max rel err {worst(cases).metric:.2e}")
    assert ok


def test_07_convolution():
    cases = suite("convolution").cases
    ok = len(cases) == 8 and all(c.metric < 1e-6 for c in cases)
    line(7, "heat-kernel convolution factorization", ok, f"max abs err {worst(cases).metric:.2e}")
    assert ok


def test_08_moments():
    cases = suite("moments").cases
    ok = all(c.metric <= 1e-5 for c in cases) and {c.params["j"] for c in cases} >= {
        str(j) for j in range(7)}
    line(8, "moment identities, m=4 damped kernel, j<=6", ok, f"max abs err {worst(cases).metric:.2e}")
    assert ok


def test_09_residuals():
    rep = suite("residual")
    closed = [c for c in rep.cases if c.name.startswith(("residual/closed", "residual/separated"))]
    fields = select(rep, "residual/airy_heat")
    ok = all(c.metric < 1e-6 for c in closed) and all(c.metric < 1e-4 for c in fields)
    line(9, "finite-difference PDE residuals", ok,
         f"closed forms max {worst(closed).metric:.2e}, quadrature fields max {worst(fields).metric:.2e}")
    assert ok


def test_10_airy_dual_method():
    cases = select(suite("airy"), "airy/dual/")
    ok = len(cases) == 25 and all(c.metric < 1e-9 for c in cases)
    line(10, "Airy series vs rotated contour on [-2, 4]", ok, f"max rel err {worst(cases).metric:.2e}")
    assert ok


def test_11_duality_series():
    case = next(c for c in suite("duality").cases if c.name == "duality/m=4/tau=50/t=1/x=0.5")
    ok = case.metric < 1e-3 and len(case.params["abs_errors"].split(",")) == 9
    line(11, "duality series best partial sum, m=4 tau=50", ok,
         f"best J={case.params['best_index']}, rel err {case.metric:.2e}")
    assert ok


@pytest.mark.parametrize("argv", [
    ["report", "--json"],
    ["eval", "kernel", "--m", "4", "--grid", "t=0.5,1;x=-1:1:0.25", "--csv"],
])
def test_12_determinism(tmp_path, argv):
    outs = []
    for k in range(2):
        path = tmp_path / f"out{k}"
        assert run(argv + [str(path)]) == 0
        outs.append(path.read_bytes())
    ok = outs[0] == outs[1] and len(outs[0]) > 0
    line(12, f"byte-identical output for `{argv[0]}`", ok, f"{len(outs[0])} bytes")
    assert ok
