"""Dirichlet characters mod N as lookup tables."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .arith import CycloNum, Mat2Z


@dataclass(frozen=True)
class DirichletChar:
    """Character on (Z/NZ)* extended by zero.

    ``values[d]`` is the value at the residue ``d``: a Fraction when the
    order is at most 2, otherwise a :class:`CycloNum` of that order.
    ``angles[d]`` holds the same value as an exponent ``e`` in ``exp(2*pi*i*e)``
    (``None`` at non-units).
    """

    modulus: int
    values: tuple
    angles: tuple
    order: int
    label: str = ""

    def __call__(self, d: int):
        return self.values[d % self.modulus]

    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def field_order(self) -> int:
        """Order m of the coefficient field Q(zeta_m); 1 means plain Q."""
        return self.order if self.order > 2 else 1

    def one(self):
        return self.values[1 % self.modulus]

    def zero(self):
        return self.one() * 0

    def __repr__(self):
        return f"DirichletChar(modulus={self.modulus}, order={self.order}, label={self.label!r})"


def _from_angles(N: int, angles: list, label: str) -> DirichletChar:
    denoms = [a.denominator for a in angles if a is not None]
    order = 1
    for q in denoms:
        order = lcm(order, q)
    values = []
    for a in angles:
        if a is None:
            values.append(Fraction(0) if order <= 2 else CycloNum(order, [0]))
        elif order <= 2:
            values.append(Fraction(1) if a == 0 else Fraction(-1))
        else:
            values.append(CycloNum.zeta(order, int(a * order)))
    return DirichletChar(N, tuple(values), tuple(angles), order, label)


def _units(N: int) -> list[int]:
    return [d for d in range(N) if gcd(d, N) == 1]


def char_trivial(N: int) -> DirichletChar:
    if N < 1:
        raise ValueError("modulus must be positive")
    angles = [Fraction(0) if gcd(d, N) == 1 else None for d in range(N)]
    return _from_angles(N, angles, "trivial")


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a|n), n odd positive
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def char_kronecker(N: int) -> DirichletChar:
    """The quadratic character d -> (d|N), when it is periodic mod N."""
    if N < 1:
        raise ValueError("modulus must be positive")
    angles = []
    for d in range(N):
        if gcd(d, N) != 1:
            angles.append(None)
            continue
        s = kronecker_symbol(d, N)
        if s != kronecker_symbol(d + N, N):
            raise ValueError(f"(.|{N}) is not a character mod {N}")
        angles.append(Fraction(0) if s == 1 else Fraction(1, 2))
    chi = _from_angles(N, angles, "kronecker")
    _check_multiplicative(chi)
    return chi


def _check_multiplicative(chi: DirichletChar) -> None:
    N = chi.modulus
    us = _units(N)
    for x in us:
        for y in us:
            if (chi.angles[x] + chi.angles[y]) % 1 != chi.angles[x * y % N]:
                raise ValueError("not a character")


def char_from_unit_values(N: int, assignments: dict[int, Fraction], label: str = "") -> DirichletChar:
    """Character with ``chi(g) = exp(2*pi*i*assignments[g])`` on the given generators.

    The table is filled by walking the Cayley graph of (Z/NZ)* on the
    generators; any edge that disagrees with an earlier value means the
    assignment does not define a character.
    """
    if N < 1:
        raise ValueError("modulus must be positive")
    gens = {}
    for g, e in assignments.items():
        g %= N
        if gcd(g, N) != 1:
            raise ValueError(f"generator {g} is not a unit mod {N}")
        gens[g] = Fraction(e) % 1
    angles: list = [None] * N
    angles[1 % N] = Fraction(0)
    queue = [1 % N]
    while queue:
        x = queue.pop()
        for g, e in gens.items():
            y = x * g % N
            v = (angles[x] + e) % 1
            if angles[y] is None:
                angles[y] = v
                queue.append(y)
            elif angles[y] != v:
                raise ValueError("not a character")
    missing = [d for d in _units(N) if angles[d] is None]
    if missing:
        raise ValueError(f"generators do not generate (Z/{N}Z)*; e.g. {missing[0]} unreached")
    return _from_angles(N, angles, label or "gens")


def parse_char_spec(N: int, spec: str) -> DirichletChar:
    """Parse a character description.

    ``trivial`` and ``kronecker`` name the obvious characters; anything else
    must look like ``gens:g1=e1,g2=e2``.

    Each exponent ``e`` is a rational ``a/b`` standing for ``zeta_b^a``; a plain
    integer ``a`` means ``(-1)^a``.
    """
    spec = spec.strip()
    if spec == "trivial":
        return char_trivial(N)
    if spec == "kronecker":
        return char_kronecker(N)
    if spec.startswith("gens:"):
        assignments = {}
        body = spec[len("gens:"):]
        for item in filter(None, body.split(",")):
            try:
                g, e = item.split("=")
                g = int(g)
                if "/" in e:
                    num, den = e.split("/")
                    angle = Fraction(int(num), int(den))
                else:
                    angle = Fraction(int(e), 2)
            except ValueError as exc:
                raise ValueError(f"bad generator assignment {item!r}") from exc
            assignments[g] = angle
        return char_from_unit_values(N, assignments, label=spec)
    raise ValueError(f"unknown character spec {spec!r}")


def char_eval_matrix(chi: DirichletChar, delta0: Mat2Z):
    """chi(delta0) = chi(d) for delta0 in Delta_0(N)."""
    N = chi.modulus
    if delta0.c % N:
        raise ValueError(f"{tuple(delta0)} is not in Delta_0({N})")
    d = delta0.d % N
    if gcd(d, N) != 1:
        raise ValueError(f"chi not evaluable at {tuple(delta0)}")
    return chi.values[d]
