"""Exact scalar substrate: rationals, cyclotomic numbers, 2x2 integer matrices.

Rationals are :class:`fractions.Fraction`.  Elements of Q(zeta_m) for m > 2
are :class:`CycloNum`; for m <= 2 every character value is rational and no
cyclotomic wrapper is used at all.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import NamedTuple

BigRat = Fraction


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g == gcd(a, b) > 0``."""
    if a == 0 and b == 0:
        raise ValueError("gcd undefined for (0, 0)")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def euler_phi(n: int) -> int:
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` by trial division."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# --- integer polynomials, coefficient lists low degree first ---------------

def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, rem = divmod(num[i + len(den) - 1], lead)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        poly = _poly_divexact(poly, list(_cyclotomic(d)))
    return tuple(poly)


def cyclotomic_poly(m: int) -> list[int]:
    """Integer coefficients of the m-th cyclotomic polynomial, constant term first."""
    if m < 1:
        raise ValueError("cyclotomic polynomial needs m >= 1")
    return list(_cyclotomic(m))


# --- Q(zeta_m) --------------------------------------------------------------

def _reduce(coeffs: list, modulus: tuple[int, ...]) -> list:
    # modulus is monic
    deg = len(modulus) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(deg):
                if modulus[j]:
                    coeffs[i - deg + j] -= c * modulus[j]
    coeffs = coeffs[:deg]
    coeffs += [Fraction(0)] * (deg - len(coeffs))
    return coeffs


def _trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _qpoly_divmod(a: list, b: list) -> tuple[list, list]:
    a = _trim(a)
    b = _trim(b)
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = Fraction(a[i + len(b) - 1]) / lead
        q[i] = c
        if c:
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    return q, _trim(a[: len(b) - 1])


def _qpoly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qpoly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


class CycloNum:
    """Element of Q(zeta_m) stored as coefficients of 1, zeta, ..., zeta^(phi(m)-1)."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise ValueError("order must be positive")
        modulus = _cyclotomic(order)
        self.order = order
        self.coeffs = tuple(_reduce([Fraction(c) for c in coeffs], modulus))
        self._hash = None

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CycloNum":
        power %= order
        return cls(order, [0] * power + [1])

    @classmethod
    def from_rational(cls, order: int, value) -> "CycloNum":
        return cls(order, [value])

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise ValueError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.order, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.order, [x + y for x, y in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.order, [x - y for x, y in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.order, [x * other for x in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.order, _qpoly_mul(list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        return cyclo_inv(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycloNum(self.order, [x / other for x in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * cyclo_inv(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * cyclo_inv(self)

    def __pow__(self, e: int):
        if e < 0:
            return cyclo_inv(self) ** (-e)
        result = CycloNum(self.order, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, CycloNum) else other
        if o is None:
            return NotImplemented
        return self.order == o.order and self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            if all(c == 0 for c in self.coeffs[1:]):
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __repr__(self):
        return f"CycloNum({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def cyclo_mul(a: CycloNum, b: CycloNum) -> CycloNum:
    if a.order != b.order:
        raise ValueError(f"mixed cyclotomic orders {a.order} and {b.order}")
    return a * b


def cyclo_inv(a: CycloNum) -> CycloNum:
    """Inverse via the extended Euclidean algorithm in Q[x] modulo Phi_m."""
    if not a:
        raise ZeroDivisionError("inverse of zero in cyclotomic field")
    modulus = [Fraction(c) for c in _cyclotomic(a.order)]
    # invariant: s * a == r  (mod Phi_m)
    r0, r1 = modulus, _trim(list(a.coeffs))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, rem = _qpoly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
    c = r1[0]
    return CycloNum(a.order, [x / c for x in s1])


# --- 2x2 integer matrices ---------------------------------------------------

class Mat2Z(NamedTuple):
    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, o: "Mat2Z") -> "Mat2Z":
        return Mat2Z(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def adjugate(self) -> "Mat2Z":
        return Mat2Z(self.d, -self.b, -self.c, self.a)

    def inverse(self) -> "Mat2Z":
        """Integer inverse; only defined for determinant +-1."""
        det = self.det()
        if det == 1:
            return self.adjugate()
        if det == -1:
            return Mat2Z(-self.d, self.b, self.c, -self.a)
        raise ValueError(f"matrix {tuple(self)} is not invertible over Z")

    def __pow__(self, e: int) -> "Mat2Z":
        if e < 0:
            return self.inverse() ** (-e)
        out = I
        for _ in range(e):
            out = out @ self
        return out

    def __neg__(self) -> "Mat2Z":
        return Mat2Z(-self.a, -self.b, -self.c, -self.d)


I = Mat2Z(1, 0, 0, 1)
S = Mat2Z(0, -1, 1, 0)
Q = Mat2Z(0, -1, 1, 1)
EPS = Mat2Z(-1, 0, 0, 1)
T = Mat2Z(1, 1, 0, 1)
