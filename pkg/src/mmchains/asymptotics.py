"""Dominant poles of rational generating functions and simple-pole growth.

For ``A(x) = N(x)/D(x)`` with a simple pole ``w`` of smallest modulus,
``a_n ~ C * lambda^n`` with ``lambda = 1/w`` and ``C = -N(w) / (w D'(w))``.

The root is bracketed by bisection on exact rational evaluation of the
integer denominator, so the final interval carries a sign-change certificate;
Newton steps in mpmath only polish inside that interval.  The full root set
(numpy) is used only to measure how strongly ``w`` dominates.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from . import poly
from .recurrences import RationalGF

__all__ = [
    "DominanceError",
    "RootDomainError",
    "GrowthEstimate",
    "dominant_root",
    "growth",
    "empirical_growth_check",
    "META_ROOT",
]


class DominanceError(ArithmeticError):
    """Several singularities share the smallest modulus, or the pole is not simple."""


class RootDomainError(ArithmeticError):
    """The denominator has no root in (0, 1)."""


def META_ROOT(dps: int = 50):
    """Closed form ``(1 + 3^(1/3) - 9^(1/3)) / 2`` of the meta-chain pole."""
    with mpmath.workdps(dps):
        return (1 + mpmath.cbrt(3) - mpmath.cbrt(9)) / 2


@dataclass(frozen=True)
class GrowthEstimate:
    w: mpmath.mpf
    lam: mpmath.mpf
    C: mpmath.mpf
    alpha: int
    dominance_margin: float
    bracket: tuple[Fraction, Fraction]
    precision: int

    def to_json(self) -> str:
        digits = self.precision
        return json.dumps(
            {
                "w": mpmath.nstr(self.w, digits),
                "lambda": mpmath.nstr(self.lam, digits),
                "C": mpmath.nstr(self.C, digits),
                "alpha": self.alpha,
                "dominance_margin": repr(self.dominance_margin),
            },
            sort_keys=True,
        )


def _sign(p, x: Fraction) -> int:
    v = poly.evaluate(p, x)
    return (v > 0) - (v < 0)


def _bracket(den, precision: int) -> tuple[Fraction, Fraction]:
    """Bisect to width ``10^-precision`` around the smallest root in (0, 1)."""
    # locate the first sign change on a grid, then bisect exactly
    grid = 1024
    lo = Fraction(0)
    s_lo = _sign(den, lo)
    for k in range(1, grid + 1):
        hi = Fraction(k, grid)
        s_hi = _sign(den, hi)
        if s_hi == 0:
            return hi, hi
        if s_hi != s_lo:
            break
        lo, s_lo = hi, s_hi
    else:
        raise RootDomainError("denominator has no sign change in (0, 1]")
    width = Fraction(1, 10**precision)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = _sign(den, mid)
        if s_mid == 0:
            return mid, mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def dominant_root(gf: RationalGF, precision: int = 30) -> tuple[mpmath.mpf, tuple[Fraction, Fraction], float]:
    """Smallest positive pole ``w``, its certified bracket, and the dominance margin."""
    if not 1 <= precision <= 60:
        raise ValueError("precision must lie in 1..60 digits")
    gf = gf.reduced()
    den = list(gf.denominator)
    lo, hi = _bracket(den, precision)
    dden = poly.derivative(den)
    with mpmath.workdps(precision + 20):
        x = mpmath.mpf(lo.numerator) / lo.denominator + (
            mpmath.mpf(hi.numerator) / hi.denominator - mpmath.mpf(lo.numerator) / lo.denominator
        ) / 2
        for _ in range(60):
            step = mpmath.polyval(den[::-1], x) / mpmath.polyval(dden[::-1], x)
            x -= step
            if abs(step) < mpmath.mpf(10) ** (-(precision + 15)):
                break
        lo_f = mpmath.mpf(lo.numerator) / lo.denominator
        hi_f = mpmath.mpf(hi.numerator) / hi.denominator
        if not lo_f <= x <= hi_f:
            x = (lo_f + hi_f) / 2
        if mpmath.polyval(dden[::-1], x) == 0:
            raise DominanceError("pole is not simple")
        w = +x
    roots = np.roots(np.array(den[::-1], dtype=float))
    mods = sorted(abs(r) for r in roots)
    wf = float(w)
    others = [m for m in mods if abs(m - wf) > 1e-9 * max(1.0, wf)]
    if len(others) < len(mods) - 1:
        raise DominanceError("several roots share the smallest modulus")
    if others and others[0] <= wf * (1 + 1e-9):
        raise DominanceError("a root of modulus <= w competes with the real pole")
    margin = float(others[0] / wf) if others else float("inf")
    return w, (lo, hi), margin


def growth(gf: RationalGF, precision: int = 30) -> GrowthEstimate:
    w, bracket, margin = dominant_root(gf, precision)
    g = gf.reduced()
    with mpmath.workdps(precision + 20):
        num = mpmath.polyval(list(g.numerator)[::-1], w)
        dd = mpmath.polyval(poly.derivative(g.denominator)[::-1], w)
        C = -num / (w * dd)
        lam = 1 / w
    return GrowthEstimate(w, lam, C, -1, margin, bracket, precision)


def empirical_growth_check(seq, est: GrowthEstimate, n_lo: int, n_hi: int) -> float:
    """``max |a_n / (C lambda^n) - 1|`` over ``n_lo <= n <= n_hi``."""
    if n_hi >= len(seq) or n_lo > n_hi:
        raise ValueError("sequence too short for the requested window")
    with mpmath.workdps(max(est.precision, 30) + 10):
        worst = mpmath.mpf(0)
        for n in range(n_lo, n_hi + 1):
            dev = abs(mpmath.mpf(seq[n]) / (est.C * est.lam**n) - 1)
            worst = max(worst, dev)
        return float(worst)
