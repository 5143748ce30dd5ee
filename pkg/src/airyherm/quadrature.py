"""Composite Gauss-Legendre quadrature with panel doubling."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

ENV_QUAD_TOL = "AIRYHERM_QUAD_TOL"
DEFAULT_REL_TOL = 1e-10
# exp(-41.45) ~ 1e-18
LOG_CUTOFF = math.log(1e-18)
_CHUNK = 1 << 16


class QuadratureError(ArithmeticError):
    """Panel doubling did not converge; carries the last two estimates."""

    def __init__(self, message: str, previous=None, last=None):
        super().__init__(message)
        self.previous = previous
        self.last = last


@dataclass(frozen=True)
class QuadSpec:
    rel_tol: float = DEFAULT_REL_TOL
    max_panels: int = 20  # number of doublings allowed
    nodes: int = 32
    min_panels: int = 4
    cutoff_log: float = LOG_CUTOFF

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_panels < 1:
            raise ValueError("max_panels must be >= 1")

    @classmethod
    def from_env(cls, **overrides) -> QuadSpec:
        """Default settings, with ``rel_tol`` taken from ``AIRYHERM_QUAD_TOL`` if set."""
        raw = os.environ.get(ENV_QUAD_TOL)
        if raw and "rel_tol" not in overrides:
            overrides["rel_tol"] = float(raw)
        return cls(**overrides)

    def tightened(self, factor: float = 10.0) -> QuadSpec:
        return QuadSpec(self.rel_tol / factor, self.max_panels, self.nodes,
                        self.min_panels, self.cutoff_log)


@dataclass(frozen=True)
class QuadResult:
    value: np.ndarray | float | complex
    error: np.ndarray | float
    panels: int


@lru_cache(maxsize=8)
def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def _panel_sum(f, a: float, b: float, panels: int, x_nodes, x_weights):
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    pts = (mid[:, None] + half[:, None] * x_nodes[None, :]).ravel()
    wts = (half[:, None] * x_weights[None, :]).ravel()
    total = None
    total_abs = None
    for lo in range(0, pts.size, _CHUNK):
        vals = np.asarray(f(pts[lo:lo + _CHUNK]))
        w = wts[lo:lo + _CHUNK]
        s = np.tensordot(w, vals, axes=(0, 0))
        sa = np.tensordot(w, np.abs(vals), axes=(0, 0))
        total = s if total is None else total + s
        total_abs = sa if total_abs is None else total_abs + sa
    return total, total_abs


def integrate(f: Callable[[np.ndarray], np.ndarray], a: float, b: float,
              spec: QuadSpec = QuadSpec()) -> QuadResult:
    """Integrate ``f`` over ``[a, b]``.

    ``f`` maps a 1-D node array of shape ``(P,)`` to values of shape ``(P,)`` or
    ``(P, k)``; vector-valued integrands converge jointly.  The panel count
    doubles until successive estimates agree to ``rel_tol`` relative, or to a
    round-off floor proportional to the integral of ``|f|``.
    """
    xn, xw = gauss_legendre(spec.nodes)
    panels = spec.min_panels
    prev, _ = _panel_sum(f, a, b, panels, xn, xw)
    for _ in range(spec.max_panels):
        panels *= 2
        est, est_abs = _panel_sum(f, a, b, panels, xn, xw)
        diff = np.abs(est - prev)
        bound = np.maximum(spec.rel_tol * np.abs(est), 64 * np.finfo(float).eps * est_abs)
        if np.all(diff <= bound):
            return QuadResult(est, diff, panels)
        prev = est
    raise QuadratureError(
        f"panel doubling did not converge on [{a}, {b}] after {panels} panels",
        previous=prev, last=est)


def find_cutoff(log_modulus: Callable[[np.ndarray], np.ndarray], drop: float = LOG_CUTOFF,
                start: float = 1.0, limit: float = 1e6) -> float:
    """Smallest ``R`` past which ``log_modulus`` stays ``-drop`` below its peak.

    ``log_modulus`` maps an array of radii to the log of the integrand size (or an
    upper envelope of it); it must eventually decrease.
    """
    r_max = start
    while r_max <= limit:
        r = np.linspace(0.0, r_max, 4097)
        lm = np.asarray(log_modulus(r), dtype=float)
        peak = np.max(lm)
        above = np.nonzero(lm >= peak + drop)[0]
        last = above[-1]
        if last < r.size - 64 and lm[-1] < lm[-2]:
            return float(r[min(last + 1, r.size - 1)])
        r_max *= 2.0
    raise QuadratureError(f"integrand does not decay before r = {limit}")
