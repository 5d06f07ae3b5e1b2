"""Generating functions for marked ordered trees and their deepest nodes.

Every object is computed as a truncated exact series, usually along two or
three independent routes so the routes can check one another:

* ``A(z)``: closed square-root form, and ``z (1 + v)`` via the kernel
  substitution ``z = v / (1 + 3v + v^2)``.
* ``A_h(z)`` (height at most ``h``): the continued-fraction recursion and
  the closed form in ``v``.
* ``p_h(z, t)`` (``t`` marks nodes on level ``h``): recursion and closed form
  through the auxiliary series ``R``.
* ``G(z, t)`` (``t`` marks deepest nodes): telescoped sum over heights, and
  the explicit binomial double sum in ``v``, ``q`` and ``delta``.
* ``D(z) = dG/dt |_{t=1}`` (total deepest nodes): derivative of ``G``, the
  closed ``k``-sum, and a differentiated level recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .series import (
    BiSeries,
    Series,
    bi_zt,
    d_dt,
    eval_t,
    series_z,
    solve_v,
    t_times,
)

__all__ = [
    "ClosedFormRange",
    "KernelBundle",
    "HeightPair",
    "kernel",
    "height_pairs",
    "gf_A",
    "gf_A_h",
    "gf_p_h",
    "series_R",
    "series_R_summed",
    "p_h_lambda_mu",
    "gf_G",
    "gf_dG",
    "dG_kernel_sum",
    "IdentityResult",
    "identity_suite",
]


class ClosedFormRange(ValueError):
    pass


def _poly(coeffs, order: int) -> Series:
    return Series(coeffs, order)


@dataclass(frozen=True)
class KernelBundle:
    order: int
    z: Series
    v: Series
    S: Series
    lam: Series
    mu: Series
    q: Series
    delta: Series


@lru_cache(maxsize=16)
def kernel(order: int) -> KernelBundle:
    """The auxiliary series ``v, S, lambda, mu, q, delta`` to ``order``."""
    z = series_z(order)
    v = solve_v(order)
    S = _poly([1, -6, 5], order).sqrt()
    one_plus_z = 1 + z
    lam = (one_plus_z + S) / 2
    mu = (one_plus_z - S) / 2
    q = v * (2 + v) / (1 + 2 * v)
    delta = v * (2 * v + 1) / (v + 2)
    return KernelBundle(order, z, v, S, lam, mu, q, delta)


@dataclass(frozen=True)
class HeightPair:
    """Numerator and denominator of ``A_h = f / g``."""

    h: int
    f: Series
    g: Series


def height_pairs(h_max: int, order: int) -> list[HeightPair]:
    """``(f_h, g_h)`` for ``h = 1..h_max`` from the linear recurrence."""
    z = series_z(order)
    out = [HeightPair(1, z, Series.constant(1, order))]
    if h_max >= 2:
        out.append(HeightPair(2, z, 1 - z))
    while len(out) < h_max:
        prev = out[-1]
        f = z * prev.f + z * (1 - z) * prev.g
        g = prev.g - prev.f
        out.append(HeightPair(prev.h + 1, f, g))
    return out[:h_max]


def _assert_integral(s, what: str) -> None:
    if not s.is_integral():
        raise AssertionError(f"{what} has non-integer coefficients")


def gf_A(order: int) -> Series:
    """``A(z) = (1 - z - sqrt(1 - 6z + 5z^2)) / 2``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    z = series_z(order)
    A = (1 - z - _poly([1, -6, 5], order).sqrt()) / 2
    _assert_integral(A, "A(z)")
    return A


def gf_A_h(h: int, order: int, route: str = "recursive") -> Series:
    """Trees of height at most ``h`` counted by size."""
    if h < 1 or order < 1:
        raise ValueError("h and order must be at least 1")
    z = series_z(order)
    if route == "recursive":
        A = z
        for _ in range(h - 1):
            A = -z + z * (2 - z) / (1 - A)
        return A
    if route == "pair":
        pair = height_pairs(h, order)[-1]
        return pair.f / pair.g
    if route == "closed":
        v = kernel(order).v
        a = (1 + 2 * v) ** (h - 1)
        b = (v + 2) ** (h - 1)
        num = a - v**h * b
        den = a - v ** (h + 1) * b
        return z * (1 + v) * num / den
    raise ValueError(f"unknown route {route!r}")


def series_R(order: int) -> BiSeries:
    """``R = 1 + ((v - 1)/v) t (1 + v) z / (1 - t (1 + v) z)``.

    ``[z^0] R = 1 - t`` so ``R`` sits one above the usual ``t``-degree cap;
    it is returned with ``slack = 1``.
    """
    # one extra order is consumed by the division by v
    v = kernel(order + 1).v
    zt = bi_zt(order + 1)
    tz1v = zt * (1 + v)
    # (v - 1)/v has a pole at z = 0: divide the product, not the factor
    X = ((v - 1) * tz1v).div(v, slack=1) / (1 - tz1v)
    return (1 + X).truncate(order)


def series_R_summed(order: int) -> BiSeries:
    """``R`` via the geometric expansion ``sum_k (1 + v)^k t^k z^k``."""
    v = kernel(order + 1).v
    zt = bi_zt(order + 1)
    base = zt * (1 + v)
    total = BiSeries([[0]], order + 1)
    power = base
    for _ in range(order + 1):
        total = total + power
        power = power * base
    return (1 + ((v - 1) * total).div(v, slack=1)).truncate(order)


def _X(order: int) -> BiSeries:
    return series_R(order) - 1


def gf_p_h(h: int, order: int, route: str = "recursive") -> BiSeries:
    """``p_h(z, t)``: height at most ``h``, ``t`` marking nodes on level ``h``."""
    if h < 1 or order < 1:
        raise ValueError("h and order must be at least 1")
    if route == "recursive":
        return _p_chain(h, order)[h - 1]
    if route == "closed":
        if h < 2:
            raise ClosedFormRange("closed form of p_h needs h >= 2")
        K = kernel(order)
        R = series_R(order)
        qh = K.q ** (h - 2)
        Rvq = R * (K.v * qh)
        num = 1 - Rvq
        den = 1 - Rvq * K.v
        return (K.z * (1 + K.v) * num / den).tighten(0)
    raise ValueError(f"unknown route {route!r}")


def _p_chain(h: int, order: int) -> list[BiSeries]:
    z = series_z(order)
    zt = bi_zt(order)
    p = [zt]
    if h >= 2:
        p.append(BiSeries.lift(z) / (1 - zt))
    two_z = z * (2 - z)
    while len(p) < h:
        p.append(-z + two_z / (1 - p[-1]))
    return p


def p_h_lambda_mu(h: int, order: int) -> BiSeries:
    """Closed ``p_h`` written with ``lambda^(h-2)`` and ``mu^(h-2)``."""
    if h < 2:
        raise ClosedFormRange("closed form of p_h needs h >= 2")
    K = kernel(order)
    v = K.v
    v2 = v * v
    # alpha = v^2 t - v^2 + v t - 3v - 1, beta = -v^2 + v t - 3v + t - 1
    alpha = t_times(v2 + v) - (v2 + 3 * v + 1)
    beta = t_times(v + 1) - (v2 + 3 * v + 1)
    lam = K.lam ** (h - 2)
    mu = K.mu ** (h - 2)
    num = alpha * lam - beta * (v * mu)
    den = alpha * lam - beta * (v2 * mu)
    return (K.z * (1 + v) * num / den).tighten(0)


def gf_G(order: int, route: str = "recursive") -> BiSeries:
    """``G(z, t)``: ``[z^n t^i]`` counts trees with ``n`` nodes, ``i`` deepest."""
    if order < 1:
        raise ValueError("order must be at least 1")
    zt = bi_zt(order)
    if route == "recursive":
        G = zt
        for h, p in enumerate(_p_chain(order, order)[1:], start=2):
            term = p - eval_t(p, 0)
            val = term.valuation()
            assert val is None or val >= h, (h, val)
            G = G + term
        return G.tighten(0)
    if route == "explicit":
        # the prefactor divides by v, so work one order higher
        N = order + 1
        K = kernel(N)
        X = _X(N)
        Xpow = [BiSeries([[1]], N)]
        total = BiSeries([[0]], N)
        dq = K.delta * K.q
        dq_k = Series.constant(1, N)
        q_k = Series.constant(1, N)
        for k in range(1, N + 1):
            dq_k = dq_k * dq
            q_k = q_k * K.q
            c_k = dq_k / (1 - q_k)
            val = c_k.valuation()
            assert val is None or val >= 2 * k, (k, val)
            if val is None:
                break
            while len(Xpow) <= k:
                Xpow.append(Xpow[-1] * X)
            Y = BiSeries([[0]], N)
            for i in range(1, k + 1):
                Y = Y + Xpow[i] * comb(k, i)
            total = total + (Y * c_k).tighten(0)
        pref = K.z * (K.v * K.v - 1) / K.v
        return (zt + total * pref).tighten(0)
    raise ValueError(f"unknown route {route!r}")


def dG_kernel_sum(order: int, form: str = "delta") -> Series:
    """``sum_k k delta^k q^(2k) / (1 - q^k)`` (``form="delta"``) or the same sum
    written as ``sum_k k v^(2k) q^k / (1 - q^k)`` (``form="v"``)."""
    K = kernel(order)
    if form == "delta":
        a, b = K.delta * K.q * K.q, K.q
    elif form == "v":
        a, b = K.v * K.v * K.q, K.q
    else:
        raise ValueError(f"unknown form {form!r}")
    total = Series.constant(0, order)
    a_k = Series.constant(1, order)
    b_k = Series.constant(1, order)
    for k in range(1, order + 1):
        a_k = a_k * a
        b_k = b_k * b
        val = a_k.valuation()
        if val is None:
            break
        # a has valuation 3, so later terms only matter below the order
        total = total + k * a_k / (1 - b_k)
    return total


def gf_dG(order: int, route: str = "closed_sum") -> Series:
    """``D(z) = dG/dt`` at ``t = 1``: total deepest nodes by tree size."""
    if order < 1:
        raise ValueError("order must be at least 1")
    z = series_z(order)
    if route == "derivative":
        D = eval_t(d_dt(gf_G(order, "recursive")), 1)
    elif route == "closed_sum":
        # one extra order: the prefactor divides by v
        K = kernel(order + 1)
        v = K.v
        s = dG_kernel_sum(order + 1)
        D = z + ((1 - v * v) ** 2 * s / ((v + 2) * (2 * v + 1)) / v)
    elif route == "level_recursion":
        A_h = z / (1 - z)
        b = z * z / (1 - z) ** 2
        D = z + b
        two_z = z * (2 - z)
        for _ in range(3, order + 1):
            b = two_z * b / (1 - A_h) ** 2
            A_h = -z + two_z / (1 - A_h)
            D = D + b
    else:
        raise ValueError(f"unknown route {route!r}")
    _assert_integral(D, f"D(z) via {route}")
    return D


@dataclass(frozen=True)
class IdentityResult:
    name: str
    passed: bool
    order: int


def identity_suite(order: int, bundle: KernelBundle | None = None) -> list[IdentityResult]:
    """Exact checks of the algebraic relations among the kernel series.

    ``bundle`` can replace the computed kernel (used for fault injection).
    """
    K = bundle if bundle is not None else kernel(order)
    z, v, lam, mu, q, delta = K.z, K.v, K.lam, K.mu, K.q, K.delta

    def same(a: Series, b: Series) -> bool:
        n = min(a.order, b.order)
        return a.truncate(n) == b.truncate(n)

    checks = [
        ("lambda + mu = 1 + z", lambda: same(lam + mu, 1 + z)),
        ("lambda * mu = z(2 - z)", lambda: same(lam * mu, z * (2 - z))),
        ("mu / lambda = q", lambda: same(mu / lam, q)),
        ("(1+z)/((2-z)z) * mu - 1 = q", lambda: same((1 + z) * mu / ((2 - z) * z) - 1, q)),
        ("delta * q = v^2", lambda: same(delta * q, v * v)),
        ("A = z(1 + v)", lambda: same(gf_A(K.order), z * (1 + v))),
        ("v - q = v(v-1)/(1+2v)", lambda: same(v - q, v * (v - 1) / (1 + 2 * v))),
        (
            "v^2 - q^2 = 3v^2(v-1)(1+v)/(1+2v)^2",
            lambda: same(v**2 - q**2, 3 * v**2 * (v - 1) * (1 + v) / (1 + 2 * v) ** 2),
        ),
        (
            "v^3 - q^3 = v^3(v-1)(7v^2+13v+7)/(1+2v)^3",
            lambda: same(
                v**3 - q**3,
                v**3 * (v - 1) * (7 * v**2 + 13 * v + 7) / (1 + 2 * v) ** 3,
            ),
        ),
    ]
    out = []
    for name, check in checks:
        try:
            ok = bool(check())
        except ArithmeticError:
            ok = False
        out.append(IdentityResult(name, ok, K.order))
    return out
