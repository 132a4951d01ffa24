"""Exact dense matrices over Q or Q(zeta_m): reduced echelon form, nullspace, rank.

Entries are rationals (int or Fraction) or :class:`~cohomforms.arith.CycloNum`.  The
reduced row echelon form is unique, so the elimination below is free to pick
pivots for sparsity; results never depend on that choice.

Over Q the elimination is fraction-free: rows are kept as primitive integer
vectors and only divided by their pivot at the very end.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .arith import CycloNum


class ExactMat:
    """Row-major dense matrix with exact entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols: int | None = None):
        data = [list(r) for r in data]
        if cols is None:
            if not data:
                raise ValueError("column count required for an empty matrix")
            cols = len(data[0])
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
        self.data = data
        self.rows = len(data)
        self.cols = cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMat":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMat":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    @classmethod
    def vstack(cls, mats: list["ExactMat"]) -> "ExactMat":
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise ValueError("vstack needs equal column counts")
        return cls([r for m in mats for r in m.data], cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> list:
        return list(self.data[i])

    def transpose(self) -> "ExactMat":
        return ExactMat([list(col) for col in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)], self.rows)

    @property
    def T(self) -> "ExactMat":
        return self.transpose()

    def __matmul__(self, other: "ExactMat") -> "ExactMat":
        return matmul(self, other)

    def __add__(self, other: "ExactMat") -> "ExactMat":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMat([[x + y for x, y in zip(r, s)] for r, s in zip(self.data, other.data)], self.cols)

    def __sub__(self, other: "ExactMat") -> "ExactMat":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMat([[x - y for x, y in zip(r, s)] for r, s in zip(self.data, other.data)], self.cols)

    def scale(self, c) -> "ExactMat":
        return ExactMat([[c * x for x in r] for r in self.data], self.cols)

    def __eq__(self, other):
        if not isinstance(other, ExactMat):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for r, s in zip(self.data, other.data) for x, y in zip(r, s)
        )

    def is_zero(self) -> bool:
        return not any(x for r in self.data for x in r)

    def nnz(self) -> int:
        return sum(1 for r in self.data for x in r if x)

    def rref(self):
        return rref(self)

    def rank(self) -> int:
        return rank(self)

    def nullspace(self) -> "ExactMat":
        return nullspace(self)

    def __repr__(self):
        return f"ExactMat({self.rows}x{self.cols})"

    def tolist(self) -> list[list]:
        return [list(r) for r in self.data]


def matmul(A: ExactMat, B: ExactMat) -> ExactMat:
    if A.cols != B.rows:
        raise ValueError(f"dimension mismatch: {A.shape} @ {B.shape}")
    # sparse over A's rows: most matrices here are far from full
    Bd = B.data
    out = []
    for r in A.data:
        acc = [0] * B.cols
        for k, a in enumerate(r):
            if a:
                brow = Bd[k]
                for j, b in enumerate(brow):
                    if b:
                        acc[j] = acc[j] + a * b
        out.append(acc)
    return ExactMat(out, B.cols)


def _is_rational_matrix(A: ExactMat) -> bool:
    for r in A.data:
        for x in r:
            if isinstance(x, CycloNum):
                return False
    return True


# --- elimination over Q (fraction-free, primitive integer rows) --------------

def _primitive_int_row(row: list) -> dict[int, int]:
    den = 1
    for x in row:
        if x and isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    out = {}
    g = 0
    for j, x in enumerate(row):
        if x:
            v = int(x * den)
            out[j] = v
            g = gcd(g, v)
    if g > 1:
        out = {j: v // g for j, v in out.items()}
    return out


def _make_primitive(r: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in r.values():
        g = gcd(g, v)
        if g == 1:
            return r
    return {j: v // g for j, v in r.items()}


def _reduce_int(r: dict[int, int], col: int, p: dict[int, int]) -> dict[int, int]:
    """Eliminate ``col`` from ``r`` using pivot row ``p`` (integer arithmetic)."""
    a = r[col]
    b = p[col]
    g = gcd(a, b)
    fa, fb = b // g, a // g
    if fb < 0 and fa < 0:
        fa, fb = -fa, -fb
    out = {}
    if fa == 1:
        out = dict(r)
    else:
        for j, v in r.items():
            out[j] = v * fa
    for j, v in p.items():
        nv = out.get(j, 0) - fb * v
        if nv:
            out[j] = nv
        else:
            out.pop(j, None)
    out.pop(col, None)
    return _make_primitive(out) if out else out


def _echelon_int(rows: list[dict[int, int]]) -> dict[int, dict[int, int]]:
    pivots: dict[int, dict[int, int]] = {}
    for r in sorted(rows, key=len):
        while r:
            lead = min(r)
            p = pivots.get(lead)
            if p is None:
                if r[lead] < 0:
                    r = {j: -v for j, v in r.items()}
                pivots[lead] = r
                break
            r = _reduce_int(r, lead, p)
    # back substitution, highest pivot column first
    cols = sorted(pivots, reverse=True)
    done: list[int] = []
    for c in cols:
        r = pivots[c]
        for c2 in done:
            if c2 in r:
                r = _reduce_int(r, c2, pivots[c2])
        pivots[c] = r
        done.append(c)
    return pivots


# --- elimination over a general field -----------------------------------------

def _to_field(x):
    return Fraction(x) if isinstance(x, int) else x


def _echelon_field(rows: list[dict[int, object]]) -> dict[int, dict[int, object]]:
    pivots: dict[int, dict[int, object]] = {}
    for r in sorted(rows, key=len):
        while r:
            lead = min(r)
            p = pivots.get(lead)
            if p is None:
                inv = 1 / _to_field(r[lead])
                pivots[lead] = {j: v * inv for j, v in r.items()}
                break
            f = r[lead]
            out = dict(r)
            for j, v in p.items():
                nv = out.get(j, 0) - f * v
                if nv:
                    out[j] = nv
                else:
                    out.pop(j, None)
            out.pop(lead, None)
            r = out
    cols = sorted(pivots, reverse=True)
    done: list[int] = []
    for c in cols:
        r = pivots[c]
        for c2 in done:
            f = r.get(c2)
            if f:
                for j, v in pivots[c2].items():
                    nv = r.get(j, 0) - f * v
                    if nv:
                        r[j] = nv
                    else:
                        r.pop(j, None)
                r.pop(c2, None)
        done.append(c)
    return pivots


def _pivot_rows(A: ExactMat) -> dict[int, dict]:
    if _is_rational_matrix(A):
        rows = [_primitive_int_row(r) for r in A.data]
        piv = _echelon_int([r for r in rows if r])
        out = {}
        for c, r in piv.items():
            lead = r[c]
            out[c] = {j: (Fraction(v, lead) if lead != 1 else Fraction(v)) for j, v in r.items()}
        return out
    rows = []
    for r in A.data:
        d = {j: x for j, x in enumerate(r) if x}
        if d:
            rows.append(d)
    return _echelon_field(rows)


def _zero_like(A: ExactMat):
    for r in A.data:
        for x in r:
            if isinstance(x, CycloNum):
                return CycloNum(x.order, [0])
    return Fraction(0)


def rref(A: ExactMat):
    """Reduced row echelon form with zero rows removed.

    Returns ``(R, rank, pivot_columns)``; pivots are exactly 1.
    """
    piv = _pivot_rows(A)
    zero = _zero_like(A)
    cols = sorted(piv)
    data = []
    for c in cols:
        row = [zero] * A.cols
        for j, v in piv[c].items():
            row[j] = v
        data.append(row)
    return ExactMat(data, A.cols), len(cols), cols


def rank(A: ExactMat) -> int:
    if _is_rational_matrix(A):
        rows = [_primitive_int_row(r) for r in A.data]
        pivots: dict[int, dict[int, int]] = {}
        for r in sorted((r for r in rows if r), key=len):
            while r:
                lead = min(r)
                p = pivots.get(lead)
                if p is None:
                    pivots[lead] = r
                    break
                r = _reduce_int(r, lead, p)
        return len(pivots)
    return rref(A)[1]


def nullspace(A: ExactMat) -> ExactMat:
    """Rows spanning ``{v : A v = 0}``, in reduced echelon form."""
    R, rk, pivots = rref(A)
    zero = _zero_like(A)
    one = zero + 1
    pivset = set(pivots)
    free = [j for j in range(A.cols) if j not in pivset]
    basis = []
    for f in free:
        v = [zero] * A.cols
        v[f] = one
        for i, pc in enumerate(pivots):
            x = R.data[i][f]
            if x:
                v[pc] = -x
        basis.append(v)
    if not basis:
        return ExactMat([], A.cols)
    return rref(ExactMat(basis, A.cols))[0]
