"""Homogeneous polynomials of degree k-2 and the action of 2x2 integer matrices.

A polynomial of weight ``k`` is a list ``p`` of length ``k - 1`` where
``p[j]`` is the coefficient of ``x^j y^(k-2-j)``.  Coefficients may be any
exact scalars (rationals or CycloNums).
"""

from __future__ import annotations

from functools import lru_cache

from .arith import Mat2Z


@lru_cache(maxsize=None)
def _pascal_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _pascal_row(n - 1)
    return (1,) + tuple(prev[i] + prev[i + 1] for i in range(n - 1)) + (1,)


def binomial(n: int, m: int) -> int:
    if n < 0 or m < 0 or m > n:
        raise ValueError(f"binomial({n}, {m}) undefined")
    return _pascal_row(n)[m]


def _linear_power(u: int, v: int, e: int) -> list[int]:
    """Coefficients of (u*x + v*y)^e indexed by the power of x."""
    row = _pascal_row(e)
    upow = [1] * (e + 1)
    vpow = [1] * (e + 1)
    for i in range(1, e + 1):
        upow[i] = upow[i - 1] * u
        vpow[i] = vpow[i - 1] * v
    return [row[p] * upow[p] * vpow[e - p] for p in range(e + 1)]


@lru_cache(maxsize=65536)
def monomial_images(delta: Mat2Z, k: int) -> tuple[tuple[int, ...], ...]:
    """Row ``j`` holds the coefficients of ``delta . x^j y^(k-2-j)``."""
    w = k - 2
    a, b, c, d = delta
    rows = []
    for j in range(w + 1):
        left = _linear_power(a, b, j)
        right = _linear_power(c, d, w - j)
        out = [0] * (w + 1)
        for p, lp in enumerate(left):
            if lp:
                for q, rq in enumerate(right):
                    out[p + q] += lp * rq
        rows.append(tuple(out))
    return tuple(rows)


def act(delta: Mat2Z, p: list, k: int | None = None) -> list:
    """(a b; c d) . x^j y^(k-2-j) = (ax + by)^j (cx + dy)^(k-2-j), extended linearly."""
    if k is None:
        k = len(p) + 1
    if len(p) != k - 1 or k < 2:
        raise ValueError("polynomial length must be k - 1 with k >= 2")
    images = monomial_images(delta, k)
    out = [0] * (k - 1)
    for j, coeff in enumerate(p):
        if coeff:
            for t, v in enumerate(images[j]):
                if v:
                    out[t] = out[t] + coeff * v
    return out


def evaluate(p: list, x0, y0):
    """Exact value of the polynomial at (x0, y0)."""
    w = len(p) - 1
    total = 0
    for j, coeff in enumerate(p):
        if coeff:
            total = total + coeff * (x0 ** j) * (y0 ** (w - j))
    return total


def monomial(j: int, k: int) -> list:
    p = [0] * (k - 1)
    p[j] = 1
    return p


def format_poly(p: list) -> str:
    w = len(p) - 1
    terms = []
    for j in range(w, -1, -1):
        c = p[j]
        if not c:
            continue
        parts = []
        if j:
            parts.append("x" if j == 1 else f"x^{j}")
        if w - j:
            parts.append("y" if w - j == 1 else f"y^{w - j}")
        mono = "*".join(parts)
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"
