"""Hecke operators on tensor coordinates via Heilbronn-Merel matrices.

Merel's alternative sets S_n, S_n' are kept as an independent cross-check.

Hecke columns live in tensor coordinates ``M (x) P^1_chi``: the monomial
``x^j y^(k-2-j)`` attached to coset ``r`` sits at flat index ``r*(k-1) + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import Mat2Z, divisors
from .cohomology import ModularContext
from .p1cosets import coset_decompose
from .polyaction import act


@dataclass(frozen=True)
class KernelElement:
    """``m (x) gamma_r`` with ``m`` a coefficient list of length k-1."""

    m: tuple
    r: int


@lru_cache(maxsize=None)
def heilbronn_merel(n: int) -> tuple[Mat2Z, ...]:
    """All (a b; c d) with ad - bc = n, a > b >= 0, d > c >= 0."""
    if n < 1:
        raise ValueError("Heilbronn-Merel matrices need n >= 1")
    out = []
    # bc <= (a-1)(d-1) forces a + d <= n + 1
    for a in range(1, n + 1):
        for d in range(max(1, -(-n // a)), n + 2 - a):
            rem = a * d - n
            if rem == 0:
                out.append(Mat2Z(a, 0, 0, d))
                out.extend(Mat2Z(a, 0, c, d) for c in range(1, d))
                out.extend(Mat2Z(a, b, 0, d) for b in range(1, a))
                continue
            for b in divisors(rem):
                if b >= a:
                    break
                c = rem // b
                if c < d:
                    out.append(Mat2Z(a, b, c, d))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def merel_sets(n: int) -> tuple[tuple[Mat2Z, ...], tuple[Mat2Z, ...]]:
    """Merel's ``(S_n, S_n')`` for the right action used throughout the package.

    S_n: determinant-n matrices with a > |b|, d > |c| and bc < 0, or b = 0 and
    |c| < d/2, or c = 0 and |b| < a/2.  S_n': b = 0 and |c| = d/2, or c = 0
    and |b| = a/2.  T_n is the sum over S_n plus half the sum over S_n'.
    (With matrices acting on the left the sign condition reads bc > 0.)
    """
    if n < 1:
        raise ValueError("Merel sets need n >= 1")
    s_main = set()
    s_half = set()
    for a in range(1, n + 1):
        # first family: ad = n - |b||c| < n
        for d in range(1, -(-n // a)):
            rem = n - a * d
            for b in divisors(rem):
                if b >= a:
                    break
                c = rem // b
                if c < d:
                    s_main.add(Mat2Z(a, b, -c, d))
                    s_main.add(Mat2Z(a, -b, c, d))
    for a in divisors(n):
        d = n // a
        for c in range(-d, d + 1):
            if 2 * abs(c) < d:
                s_main.add(Mat2Z(a, 0, c, d))
            elif 2 * abs(c) == d:
                s_half.add(Mat2Z(a, 0, c, d))
        for b in range(-a, a + 1):
            if 2 * abs(b) < a:
                s_main.add(Mat2Z(a, b, 0, d))
            elif 2 * abs(b) == a:
                s_half.add(Mat2Z(a, b, 0, d))
    return tuple(sorted(s_main)), tuple(sorted(s_half))


def sturm_bound(ctx: ModularContext) -> int:
    return ctx.mu * ctx.k // 12


def _accumulate(ctx: ModularContext, t: list, r: int, m, A: Mat2Z, weight) -> None:
    table, k = ctx.table, ctx.k
    dec = coset_decompose(table, table.lifts[r] @ A, ctx.chi)
    if dec is None:
        return
    s, _, chival = dec
    _add_block(t, s * (k - 1), act(A, list(m), k), chival * weight if weight != 1 else chival)


def _add_block(t: list, base: int, image: list, factor) -> None:
    for j, v in enumerate(image):
        if v:
            t[base + j] = t[base + j] + factor * v


def _hecke_terms_cached(ctx: ModularContext, n: int, r: int, use_cache: bool) -> list:
    """``[(A, s, chi value)]`` for the terms of T_n that survive at coset ``r``."""
    key = ("hecke", n, r)
    if use_cache and key in ctx._cache:
        return ctx._cache[key]
    table = ctx.table
    g = table.lifts[r]
    out = []
    for A in heilbronn_merel(n):
        dec = coset_decompose(table, g @ A, ctx.chi)
        if dec is not None:
            out.append((A, dec[0], dec[2]))
    if use_cache:
        ctx._cache[key] = out
    return out


def hecke_column(ctx: ModularContext, n: int, ke: KernelElement, use_cache: bool = True) -> list:
    """T_n (m (x) gamma_r) in tensor coordinates, summed over H_n."""
    k = ctx.k
    t = [0] * ctx.dimW
    m = list(ke.m)
    for A, s, chival in _hecke_terms_cached(ctx, n, ke.r, use_cache):
        _add_block(t, s * (k - 1), act(A, m, k), chival)
    return t


def hecke_on_vector(ctx: ModularContext, n: int, v: list, use_cache: bool = True) -> list:
    """T_n applied to an arbitrary tensor-coordinate vector."""
    k = ctx.k
    w = k - 1
    t = [0] * ctx.dimW
    for r in range(ctx.mu):
        m = v[r * w:(r + 1) * w]
        if not any(m):
            continue
        for A, s, chival in _hecke_terms_cached(ctx, n, r, use_cache):
            _add_block(t, s * w, act(A, m, k), chival)
    return t


def hecke_column_merel(ctx: ModularContext, n: int, ke: KernelElement) -> list:
    """Same operator through Merel's sets: sum over S_n plus half the sum over S_n'."""
    t = [0] * ctx.dimW
    s_main, s_half = merel_sets(n)
    for A in s_main:
        _accumulate(ctx, t, ke.r, ke.m, A, 1)
    for A in s_half:
        _accumulate(ctx, t, ke.r, ke.m, A, Fraction(1, 2))
    return t


def hecke_terms(ctx: ModularContext, n: int, ke: KernelElement) -> list[tuple[Mat2Z, int, list]]:
    """Per-matrix contributions ``(A, r_A, A.m)``, skipped terms omitted."""
    out = []
    for A in heilbronn_merel(n):
        dec = coset_decompose(ctx.table, ctx.table.lifts[ke.r] @ A, ctx.chi)
        if dec is not None:
            out.append((A, dec[0], act(A, list(ke.m), ctx.k)))
    return out
