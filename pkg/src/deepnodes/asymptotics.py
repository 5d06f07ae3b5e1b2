"""Convergence of the average number of deepest nodes to 5/3.

Two kinds of evidence:

* exact ratios ``[z^n] D(z) / [z^n] A(z)`` from the series layer, and
* a floating-point look at ``F(v) = (1-v^2)^2 / ((v+2) v (2v+1)) *
  sum_k k v^(2k) q^k / (1 - q^k)`` near ``v = 1``, whose coefficient of
  ``(1 - v)`` is ``-1/3``.  Dividing by the ``-1/5`` of ``A = z(1 + v)`` gives
  the limit 5/3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .genfun import gf_A, gf_dG

__all__ = [
    "LIMIT",
    "DomainError",
    "InsufficientOrder",
    "SingularSystem",
    "RatioRow",
    "NumericPoint",
    "GapReport",
    "format_fraction",
    "ratio_table",
    "limit_gap_check",
    "numeric_point",
    "eval_sum_F",
    "singular_coefficient_fit",
]

LIMIT = Fraction(5, 3)


class DomainError(ValueError):
    pass


class InsufficientOrder(ValueError):
    pass


class SingularSystem(ValueError):
    pass


def format_fraction(x: Fraction, digits: int = 6) -> str:
    """Fixed-point decimal of a fraction, rounded half away from zero."""
    scale = 10**digits
    num = abs(x.numerator) * scale
    q, r = divmod(num, x.denominator)
    if 2 * r >= x.denominator:
        q += 1
    sign = "-" if x < 0 and q else ""
    whole, frac = divmod(q, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class RatioRow:
    n: int
    deepest_total: int
    trees: int
    digits: int = 6

    @property
    def exact(self) -> Fraction:
        return Fraction(self.deepest_total, self.trees)

    @property
    def ratio(self) -> str:
        return format_fraction(self.exact, self.digits)

    def csv(self) -> str:
        return f"{self.n},{self.deepest_total},{self.trees},{self.ratio}"


def ratio_table(max_n: int, digits: int = 6) -> list[RatioRow]:
    """Exact average number of deepest nodes for ``n = 1..max_n``."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    D = gf_dG(max_n, "closed_sum")
    A = gf_A(max_n)
    return [
        RatioRow(n, int(D[n]), int(A[n]), digits)
        for n in range(1, max_n + 1)
    ]


@dataclass(frozen=True)
class GapReport:
    n_small: int
    n_large: int
    gap_small: Fraction
    gap_large: Fraction

    @property
    def passed(self) -> bool:
        return self.gap_large < self.gap_small


def limit_gap_check(table: Sequence[RatioRow], n_small: int, n_large: int) -> GapReport:
    """Compare ``|ratio(n) - 5/3|`` at two sizes; the larger must be closer."""
    if not 1 <= n_small < n_large:
        raise ValueError("need 1 <= n_small < n_large")
    if n_large > len(table):
        raise InsufficientOrder(f"table stops at n={len(table)}, need {n_large}")
    small = abs(table[n_small - 1].exact - LIMIT)
    large = abs(table[n_large - 1].exact - LIMIT)
    report = GapReport(n_small, n_large, small, large)
    if not report.passed:
        raise AssertionError(
            f"gap at n={n_large} ({float(large):.3g}) is not below "
            f"gap at n={n_small} ({float(small):.3g})"
        )
    return report


@dataclass(frozen=True)
class NumericPoint:
    v: float
    q: float
    delta: float
    w: float


def numeric_point(v: float) -> NumericPoint:
    if not 0.0 < v < 1.0:
        raise DomainError(f"v must lie in (0, 1), got {v}")
    q = v * (2 + v) / (1 + 2 * v)
    delta = v * (2 * v + 1) / (v + 2)
    return NumericPoint(v, q, delta, -math.log(q))


def eval_sum_F(v: float, eps: float = 1e-14) -> float:
    """``F(v)``; the ``k``-sum stops once a term drops below ``eps`` times the
    partial sum."""
    p = numeric_point(v)
    if eps <= 0:
        raise ValueError("eps must be positive")
    pref = (1 - v * v) ** 2 / ((v + 2) * v * (2 * v + 1))
    ratio = v * v * p.q
    total = 0.0
    k = 1
    a_k = ratio
    while True:
        # 1 - q^k loses digits for q near 1; -expm1(-k w) does not
        term = k * a_k / -math.expm1(-k * p.w)
        total += term
        k += 1
        a_k *= ratio
        nxt = k * a_k / -math.expm1(-k * p.w)
        if nxt < eps * total:
            break
    return pref * total


def singular_coefficient_fit(points: Sequence[float], func=None) -> tuple[float, float, float]:
    """Fit ``func(v) = c0 + c1 (1 - v) + c2 (1 - v)^2`` through three points.

    ``func`` defaults to :func:`eval_sum_F`.  Returns ``(c0, c1, c2)``.
    """
    func = eval_sum_F if func is None else func
    pts = sorted(float(x) for x in points)
    if len(pts) != 3:
        raise ValueError("exactly three points are needed")
    if len(set(pts)) != 3:
        raise SingularSystem("interpolation points must be distinct")
    e = np.array([1.0 - x for x in pts])
    M = np.vander(e, 3, increasing=True)
    y = np.array([func(x) for x in pts])
    c0, c1, c2 = np.linalg.solve(M, y)
    return float(c0), float(c1), float(c2)
