"""Cross-route and brute-force consistency checks, as one runnable suite."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Iterator

from . import genfun
from .paths import (
    decorated_to_skew,
    decorated_to_tree,
    skew_to_decorated,
    tree_to_decorated,
    validate_skew,
)
from .series import eval_t
from .trees import deepest_polynomial, generate, stats

__all__ = ["Check", "run_checks", "FAULTS"]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _misdefined_delta(K: genfun.KernelBundle) -> genfun.KernelBundle:
    # delta with the factors of q swapped in: v(v+2)/(2v+1)
    return replace(K, delta=K.v * (K.v + 2) / (2 * K.v + 1))


FAULTS: dict[str, Callable[[genfun.KernelBundle], genfun.KernelBundle]] = {
    "delta": _misdefined_delta,
}


def _poly_list(p) -> list[int]:
    out = [int(c) for c in p]
    while out and not out[-1]:
        out.pop()
    return out


def _brute_force(order: int, bound: int) -> Iterator[Check]:
    top = min(order, bound)
    A = genfun.gf_A(top)
    G = {route: genfun.gf_G(top, route) for route in ("recursive", "explicit")}
    D = genfun.gf_dG(top, "closed_sum")
    hmax = min(top, 9)
    Ah = {h: genfun.gf_A_h(h, top) for h in range(1, hmax + 1)}
    ok_count = ok_poly = ok_total = ok_height = True
    for n in range(1, top + 1):
        trees = generate(n, bound)
        st = [stats(t) for t in trees]
        ok_count &= len(trees) == A[n]
        poly = list(deepest_polynomial(n, bound))
        ok_poly &= all(_poly_list(G[r][n]) == poly for r in G)
        ok_total &= sum(s.deepest for s in st) == D[n]
        for h in Ah:
            ok_height &= sum(s.height <= h for s in st) == Ah[h][n]
    yield Check(f"tree counts = [z^n]A, n <= {top}", ok_count)
    yield Check(f"deepest polynomials = [z^n]G (both routes), n <= {top}", ok_poly)
    yield Check(f"deepest totals = [z^n]D, n <= {top}", ok_total)
    yield Check(f"height-bounded counts = [z^n]A_h, n <= {top}, h <= {hmax}", ok_height)


def _bijections(bound: int) -> Iterator[Check]:
    top = min(bound, 10)
    ok_tree = ok_skew = ok_len = ok_valid = True
    for n in range(1, top + 1):
        for t in generate(n, bound):
            d = tree_to_decorated(t)
            s = decorated_to_skew(d)
            ok_tree &= decorated_to_tree(d) == t
            ok_skew &= skew_to_decorated(s) == d
            ok_len &= len(d) == 2 * (n - 1) and d.red_steps == stats(t).marks
            ok_valid &= bool(validate_skew(s.steps))
    yield Check(f"tree -> decorated -> tree, n <= {top}", ok_tree)
    yield Check(f"decorated -> skew -> decorated, n <= {top}", ok_skew)
    yield Check(f"path length 2(n-1) and red steps = marks, n <= {top}", ok_len)
    yield Check(f"skew images valid, n <= {top}", ok_valid)


def _routes(order: int) -> Iterator[Check]:
    hmax = min(order, 12)
    A_ok = all(
        genfun.gf_A_h(h, order, "recursive")
        == genfun.gf_A_h(h, order, "closed")
        == genfun.gf_A_h(h, order, "pair")
        for h in range(1, hmax + 1)
    )
    yield Check(f"A_h recursive = closed = pair, h <= {hmax}", A_ok)

    chain = [genfun.gf_p_h(h, order) for h in range(1, hmax + 1)]
    p_ok = all(
        chain[h - 1] == genfun.gf_p_h(h, order, "closed") == genfun.p_h_lambda_mu(h, order)
        for h in range(2, hmax + 1)
    )
    yield Check(f"p_h recursive = closed = lambda/mu form, 2 <= h <= {hmax}", p_ok)
    yield Check(
        f"p_h(z,0) = p_(h-1)(z,1), h <= {hmax}",
        all(eval_t(chain[h - 1], 0) == eval_t(chain[h - 2], 1) for h in range(2, hmax + 1)),
    )
    yield Check(
        f"p_h(z,1) = A_h, h <= {hmax}",
        all(eval_t(chain[h - 1], 1) == genfun.gf_A_h(h, order) for h in range(1, hmax + 1)),
    )
    yield Check("R rational form = summed form", genfun.series_R(order) == genfun.series_R_summed(order))
    yield Check(
        "G recursive = G explicit",
        genfun.gf_G(order, "recursive") == genfun.gf_G(order, "explicit"),
    )
    D = [genfun.gf_dG(order, r) for r in ("derivative", "closed_sum", "level_recursion")]
    yield Check("dG derivative = closed_sum = level_recursion", D[0] == D[1] == D[2])
    yield Check(
        "k-sum with delta^k q^2k = k-sum with v^2k q^k",
        genfun.dG_kernel_sum(order, "delta") == genfun.dG_kernel_sum(order, "v"),
    )


def run_checks(order: int = 30, bound: int = 11, fault: str | None = None) -> list[Check]:
    """Run every check; ``fault`` names a deliberate kernel mutation."""
    K = genfun.kernel(order)
    if fault is not None:
        K = FAULTS[fault](K)
    results = [
        Check(f"identity: {r.name}", r.passed)
        for r in genfun.identity_suite(order, bundle=K)
    ]
    results.extend(_routes(order))
    results.extend(_brute_force(order, bound))
    results.extend(_bijections(bound))
    return results
