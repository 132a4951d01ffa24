"""Matrix representations of the Delta-action on W_chi and the relations matrix.

Coordinates on W_chi: the basis function that sends ``lifts[i]`` to
``x^j y^(k-2-j)`` (and every other coset representative to 0) sits at flat
index ``i + j*mu``.  Matrices act on row vectors, and the action is a right
action: ``M(A) @ M(B) == M(A @ B)``.  Row ``r + j*mu`` of
``action_matrix(ctx, delta)`` collects, at the coset ``s`` with
``lifts[r] @ delta = delta0 @ lifts[s]``, the image of ``x^j y^(k-2-j)``
under ``delta0`` scaled by chi of the unit relating the two bottom rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .arith import EPS, Mat2Z, Q, S
from .chars import DirichletChar, char_trivial
from .exactla import ExactMat, matmul, nullspace
from .p1cosets import CosetTable, build_p1, coset_decompose
from .polyaction import monomial_images


@dataclass
class ModularContext:
    N: int
    k: int
    chi: DirichletChar
    table: CosetTable
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("weight must be at least 2")
        if self.chi.modulus != self.N:
            raise ValueError("character modulus must equal the level")

    @property
    def mu(self) -> int:
        return self.table.mu

    @property
    def dimW(self) -> int:
        return self.mu * (self.k - 1)

    def flat(self, i: int, j: int) -> int:
        """W_chi coordinate of the basis function at coset i, monomial j."""
        return i + j * self.mu

    @cached_property
    def zero(self):
        return self.chi.zero()

    @cached_property
    def one(self):
        return self.chi.one()


def make_context(N: int, k: int, chi: DirichletChar | None = None) -> ModularContext:
    if chi is None:
        chi = char_trivial(N)
    return ModularContext(N, k, chi, build_p1(N))


def action_matrix(ctx: ModularContext, delta: Mat2Z) -> ExactMat:
    mu, k = ctx.mu, ctx.k
    n = ctx.dimW
    data = [[0] * n for _ in range(n)]
    table, chi = ctx.table, ctx.chi
    for r, g in enumerate(table.lifts):
        dec = coset_decompose(table, g @ delta, chi)
        if dec is None:
            continue
        s, delta0, chival = dec
        images = monomial_images(delta0, k)
        for j in range(k - 1):
            row = data[r + j * mu]
            for t, a in enumerate(images[j]):
                if a:
                    row[s + t * mu] = row[s + t * mu] + chival * a
    return ExactMat(data, n)


def _plus_identity(m: ExactMat) -> ExactMat:
    data = [list(r) for r in m.data]
    for i in range(m.rows):
        data[i][i] = data[i][i] + 1
    return ExactMat(data, m.cols)


def relation_blocks(ctx: ModularContext) -> tuple[ExactMat, ExactMat, ExactMat]:
    """``(I + M(S), I + M(Q) + M(Q)^2, I + M(eps))``."""
    mS = action_matrix(ctx, S)
    mQ = action_matrix(ctx, Q)
    mE = action_matrix(ctx, EPS)
    return _plus_identity(mS), _plus_identity(mQ + matmul(mQ, mQ)), _plus_identity(mE)


def relations_matrix(ctx: ModularContext) -> ExactMat:
    key = "relations"
    if key not in ctx._cache:
        ctx._cache[key] = ExactMat.vstack(list(relation_blocks(ctx)))
    return ctx._cache[key]


def h1_plus_basis(ctx: ModularContext) -> ExactMat:
    """Reduced echelon basis of the nullspace of the relations matrix."""
    key = "h1_plus"
    if key not in ctx._cache:
        ctx._cache[key] = nullspace(relations_matrix(ctx))
    return ctx._cache[key]
