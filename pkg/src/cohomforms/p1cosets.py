"""P^1(Z/NZ) and coset representatives of Gamma_0(N) in SL2(Z).

Indices are 0-based.  The scan order of the elements is part of the
contract: ``(1, d)`` for ``d = 0..N-1``, then ``(0, 1)``, then ``(c, d)`` for
each proper divisor ``1 < c < N`` in increasing order and ``d = 1..N-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import Mat2Z, divisors, prime_factors, xgcd


def p1_size(N: int) -> int:
    """Index of Gamma_0(N) in SL2(Z): N * prod_{p | N} (1 + 1/p)."""
    mu = N
    for p in prime_factors(N):
        mu = mu // p * (p + 1)
    return mu


def lift_to_sl2(c: int, d: int, N: int) -> Mat2Z:
    """An SL2(Z) matrix whose bottom row is congruent to (c, d) mod N."""
    if N == 1:
        return Mat2Z(0, -1, 1, 0)
    c %= N
    d %= N
    if c == 1:
        return Mat2Z(0, -1, 1, d)
    if c == 0 and d == 1:
        return Mat2Z(1, 0, 0, 1)
    c_lift = c if c else N
    d_lift = d
    while gcd(c_lift, d_lift) != 1:
        d_lift += N
    _, u, v = xgcd(c_lift, d_lift)
    # u*c + v*d = 1, so (v -u; c d) has determinant 1
    return Mat2Z(v, -u, c_lift, d_lift)


@dataclass
class CosetTable:
    N: int
    elems: list[tuple[int, int]]
    lifts: list[Mat2Z]
    # (c*N + d) -> (index, lambda) with (c, d) = lambda * elems[index] mod N
    _lookup: dict[int, tuple[int, int]] = field(repr=False)

    @property
    def mu(self) -> int:
        return len(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def lookup_unit(self, c: int, d: int) -> tuple[int, int]:
        """Return ``(i, lam)`` with ``(c, d) = lam * elems[i] (mod N)``."""
        N = self.N
        try:
            return self._lookup[(c % N) * N + d % N]
        except KeyError:
            raise ValueError(f"({c}, {d}) is not in P^1(Z/{N}Z)") from None

    def contains(self, c: int, d: int) -> bool:
        N = self.N
        return (c % N) * N + d % N in self._lookup


def build_p1(N: int) -> CosetTable:
    if N < 1:
        raise ValueError("level must be positive")
    elems: list[tuple[int, int]] = []

    def equivalent_to_known(c, d):
        return any((c * d2 - c2 * d) % N == 0 for c2, d2 in elems)

    if N == 1:
        elems.append((0, 0))
    else:
        for d in range(N):
            elems.append((1, d))
        elems.append((0, 1))
        for c in divisors(N)[1:-1]:
            for d in range(1, N):
                if gcd(gcd(c, d), N) != 1:
                    continue
                if not equivalent_to_known(c, d):
                    elems.append((c, d))

    units = [u for u in range(N) if gcd(u, N) == 1] if N > 1 else [0]
    lookup: dict[int, tuple[int, int]] = {}
    for i, (c, d) in enumerate(elems):
        for u in units:
            key = (u * c % N) * N + u * d % N
            if key not in lookup:
                lookup[key] = (i, u)
    lifts = [lift_to_sl2(c, d, N) for c, d in elems]
    table = CosetTable(N, elems, lifts, lookup)
    if len(elems) != p1_size(N):
        raise AssertionError(f"P^1 scan found {len(elems)} elements, expected {p1_size(N)}")
    return table


def p1_lookup(table: CosetTable, c: int, d: int, chi):
    """Return ``(i, chi(lam))`` with ``(c, d) = lam * elems[i] (mod N)``."""
    i, lam = table.lookup_unit(c, d)
    return i, chi(lam)


def coset_decompose(table: CosetTable, g: Mat2Z, chi=None):
    """Write ``g = delta0 * lifts[s]`` with delta0 in Delta_0(N).

    Returns ``(s, delta0, chi(delta0))`` or ``None`` when the bottom row of
    ``g`` is not in P^1(Z/NZ).  With ``chi=None`` the third entry is the unit
    ``lam`` itself.
    """
    N = table.N
    key = (g.c % N) * N + g.d % N
    hit = table._lookup.get(key)
    if hit is None:
        return None
    s, lam = hit
    delta0 = g @ table.lifts[s].adjugate()
    return s, delta0, (lam if chi is None else chi(lam))


def in_delta0(m: Mat2Z, N: int) -> bool:
    return m.c % N == 0
