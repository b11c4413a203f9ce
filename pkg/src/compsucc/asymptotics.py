"""Dominant-root growth estimates for compositions with no congruence
successions, plus the sampled-circle certificate used to localize the root.

The number of compositions of n with no (m, 0)-succession grows like
amplitude * growth_rate^n where growth_rate = 1/rho and rho is the smallest
positive zero of the characteristic function

    C_m(x) = 1 - sum_{a=1}^m x^a / (1 + x^a - x^m),

the reciprocal of the y = 1, q = 0 specialization of the counting series;
the amplitude is the residue factor 1 / (-rho * C_m'(rho)).  As m grows the
rate falls toward the equal-adjacent-parts (Carlitz) rate ~1.7502, the root
of the limiting characteristic 1 - sum_a x^a / (1 + x^a).

`circle_scan` certifies a lower bound on |segment| over a whole circle from
finitely many samples: every circle point lies within arc distance
pi * radius / num_points of a sample, and a triangle-inequality bound on the
derivative turns that spacing into a Lipschitz correction.  Floating point
lives only in this module; exact counts are converted at the comparison
boundary.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from scipy.optimize import brentq


class RootBracketError(RuntimeError):
    """A root bracket that the theory guarantees failed to hold numerically."""


_DENOM_FLOOR = 1e-9

# reported first-order diagonal constants for the direction size = 2*parts
# = 4*successions, checked against the exact coefficient in the tests
_DIAGONAL_AMPLITUDE = 0.379867842273
_DIAGONAL_BASE = 15.8273658508862


def _fmt15(x: float) -> float:
    return float(f"{x:.15g}")


@dataclass(frozen=True)
class AsymptoticEstimate:
    """Dominant root rho, residue amplitude and exponential growth rate."""

    m: int
    rho: float
    amplitude: float
    growth_rate: float
    tolerance: float

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "rho": _fmt15(self.rho),
            "amplitude": _fmt15(self.amplitude),
            "growth_rate": _fmt15(self.growth_rate),
            "tolerance": _fmt15(self.tolerance),
        }


@dataclass(frozen=True)
class CircleScanReport:
    """Sampled minimum of |segment| on a circle plus the certified bound.

    certified_lower_bound = sample_min - derivative_bound * spacing_bound,
    where spacing_bound = pi * radius / num_points is the worst-case arc
    distance from any circle point to its nearest sample.  argmin_index
    reports where the sampled minimum occurred (not asserted to be the true
    minimizer).
    """

    truncation: int
    radius: float
    num_points: int
    sample_min: float
    argmin_index: int
    derivative_bound: float
    spacing_bound: float
    certified_lower_bound: float

    def to_json_dict(self) -> dict:
        return {
            "truncation": self.truncation,
            "radius": _fmt15(self.radius),
            "num_points": self.num_points,
            "sample_min": _fmt15(self.sample_min),
            "argmin_index": self.argmin_index,
            "derivative_bound": _fmt15(self.derivative_bound),
            "spacing_bound": _fmt15(self.spacing_bound),
            "certified_lower_bound": _fmt15(self.certified_lower_bound),
        }


def characteristic(m: int, z: complex | float) -> complex | float:
    """C_m(z) = 1 - sum_{a=1}^m z^a / (1 + z^a - z^m).

    Evaluates the exact formula; near-vanishing denominators (impossible for
    |z| <= 0.7, where |z^a - z^m| < 1) are signalled rather than divided by.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    zm = z**m
    za: complex | float = 1
    total: complex | float = 0
    for _ in range(m):
        za = za * z
        den = 1 + za - zm
        if abs(den) < _DENOM_FLOOR:
            raise ArithmeticError(f"denominator 1 + z^a - z^m nearly vanishes at z={z!r}")
        total += za / den
    return 1 - total


def characteristic_deriv(m: int, x: float) -> float:
    """Closed-form termwise derivative of `characteristic` at real x."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    total = 0.0
    xm = x**m
    for a in range(1, m + 1):
        xa = x**a
        den = 1 + xa - xm
        if abs(den) < _DENOM_FLOOR:
            raise ArithmeticError(f"denominator 1 + x^a - x^m nearly vanishes at x={x!r}")
        total += (a * x ** (a - 1) + (m - a) * x ** (a + m - 1)) / den**2
    return -total


def dominant_root(m: int, tol: float = 1e-12) -> float:
    """Smallest positive zero of the characteristic: exactly 1.0 for m = 1,
    otherwise refined inside the guaranteed bracket [0.5, 0.69].

    The sign conditions C_m(0.5) > 0 > C_m(0.69) are asserted at runtime; a
    failure would indicate an implementation bug, not a mathematical
    possibility.  The result satisfies |C_m(result)| < tol.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if m == 1:
        return 1.0
    lo, hi = 0.5, 0.69
    flo, fhi = characteristic(m, lo), characteristic(m, hi)
    if not (flo > 0 > fhi):
        raise RootBracketError(f"bracket [{lo}, {hi}] failed for m={m}: C({lo})={flo}, C({hi})={fhi}")
    root = brentq(lambda x: characteristic(m, x), lo, hi, xtol=1e-15, rtol=8.9e-16)
    residual = characteristic(m, root)
    if abs(residual) >= tol:
        raise RootBracketError(f"residual {residual} exceeds tolerance {tol} for m={m}")
    return float(root)


def dominant_estimate(m: int, tol: float = 1e-12) -> AsymptoticEstimate:
    """Root, amplitude 1/(-rho * C_m'(rho)) and growth rate 1/rho."""
    rho = dominant_root(m, tol)
    amplitude = 1.0 / (-rho * characteristic_deriv(m, rho))
    return AsymptoticEstimate(m=m, rho=rho, amplitude=amplitude, growth_rate=1.0 / rho, tolerance=tol)


def asymptotic_estimate(m: int, n: int, tol: float = 1e-12) -> float:
    """First-order estimate amplitude * growth_rate^n of the number of
    compositions of n with no (m, 0)-succession."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    est = dominant_estimate(m, tol)
    return est.amplitude * est.growth_rate**n


def carlitz_segment(truncation: int, z: complex | float) -> complex | float:
    """The truncation-term initial segment 1 - sum_{a<=truncation} z^a/(1+z^a)
    of the equal-adjacent-parts characteristic."""
    if truncation < 1:
        raise ValueError(f"truncation must be >= 1, got {truncation}")
    za: complex | float = 1
    total: complex | float = 0
    for _ in range(truncation):
        za = za * z
        den = 1 + za
        if abs(den) < _DENOM_FLOOR:
            raise ArithmeticError(f"denominator 1 + z^a nearly vanishes at z={z!r}")
        total += za / den
    return 1 - total


def carlitz_root(tol: float = 1e-12, truncation: int = 60) -> float:
    """Positive zero of the truncated equal-adjacent-parts characteristic,
    bracketed in [0.5, 0.68]; 1/result is the Carlitz growth rate ~1.7502.

    truncation = 60 keeps the discarded tail below ~1e-13 on the bracket, so
    any tol down to ~1e-12 is meaningful.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    lo, hi = 0.5, 0.68
    f = lambda x: carlitz_segment(truncation, x)
    flo, fhi = f(lo), f(hi)
    if not (flo > 0 > fhi):
        raise RootBracketError(f"bracket [{lo}, {hi}] failed: S({lo})={flo}, S({hi})={fhi}")
    root = brentq(f, lo, hi, xtol=1e-15, rtol=8.9e-16)
    if abs(f(root)) >= tol:
        raise RootBracketError(f"residual {f(root)} exceeds tolerance {tol}")
    return float(root)


def segment_positive_root(truncation: int) -> float:
    """Real positive zero of the truncated characteristic inside (0, 1).

    Exists for truncation >= 3 (the 1- and 2-term segments stay positive on
    the open interval); smaller truncations are rejected.
    """
    hi = 1 - 1e-9
    if truncation < 3 or carlitz_segment(truncation, hi) >= 0:
        raise ValueError(f"segment with {truncation} terms has no zero inside (0, 1)")
    return float(brentq(lambda x: carlitz_segment(truncation, x), 1e-9, hi, xtol=1e-15, rtol=8.9e-16))


def circle_scan(truncation: int, radius: float, num_points: int) -> CircleScanReport:
    """Sample |segment| at num_points equally spaced points on |z| = radius
    and certify a lower bound over the whole circle.

    The derivative bound sums a * radius^(a-1) / (1 - radius^a)^2 over the
    segment terms (triangle inequality with |1 + z^a| >= 1 - radius^a).
    """
    if truncation < 1:
        raise ValueError(f"truncation must be >= 1, got {truncation}")
    if not 0 < radius < 1:
        raise ValueError(f"radius must lie in (0, 1), got {radius}")
    if num_points < 8:
        raise ValueError(f"need at least 8 sample points, got {num_points}")
    sample_min = math.inf
    argmin_index = 0
    step = 2 * math.pi / num_points
    for j in range(num_points):
        value = abs(carlitz_segment(truncation, cmath.rect(radius, j * step)))
        if value < sample_min:
            sample_min, argmin_index = value, j
    derivative_bound = sum(
        a * radius ** (a - 1) / (1 - radius**a) ** 2 for a in range(1, truncation + 1)
    )
    spacing_bound = math.pi * radius / num_points
    return CircleScanReport(
        truncation=truncation,
        radius=radius,
        num_points=num_points,
        sample_min=sample_min,
        argmin_index=argmin_index,
        derivative_bound=derivative_bound,
        spacing_bound=spacing_bound,
        certified_lower_bound=sample_min - derivative_bound * spacing_bound,
    )


def tail_bound(radius: float, start: int) -> float:
    """Closed form of sum_{a>=start} radius^a / (1 - radius^start), the bound
    on the terms dropped when the characteristic is truncated before `start`."""
    if not 0 < radius < 1:
        raise ValueError(f"radius must lie in (0, 1), got {radius}")
    if start < 1:
        raise ValueError(f"start must be >= 1, got {start}")
    return radius**start / ((1 - radius) * (1 - radius**start))


def diagonal_check(t: int) -> tuple[int, float, float]:
    """Exact number of compositions of 4t with 2t parts and t parity
    successions, the first-order diagonal estimate, and the relative error."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    from .series import coefficient, gf_parity

    exact = coefficient(gf_parity(4 * t), 4 * t, 2 * t, t)
    approx = _DIAGONAL_AMPLITUDE * _DIAGONAL_BASE**t / (math.pi * t)
    return exact, approx, abs(approx - exact) / exact
