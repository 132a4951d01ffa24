"""Cusp classes of coset representatives and the cusp-form dimension.

Two coset representatives lie over the same cusp when one is obtained from the
other by repeated right multiplication with T.  With a character present each
class also carries scalars: walking the T-orbit multiplies the symbol by
chi(lambda)^-1, and a class whose orbit does not come back to the scalar 1 is
killed (its boundary contribution is identically zero).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import EPS, Mat2Z
from .cohomology import ModularContext, h1_plus_basis
from .p1cosets import coset_decompose


class PipelineError(RuntimeError):
    """Internal inconsistency detected by a pipeline stage."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


@dataclass
class CuspData:
    t_next: list[int]        # lifts[i] * T lies in Gamma_0(N) * lifts[t_next[i]]
    eps_of: list[int]        # lifts[eps_of[i]] * eps = delta0 * lifts[i]
    eps_delta0: list[Mat2Z]  # that delta0
    class_of: list[int]
    reps: list[int]          # smallest coset index of each class
    sigma: list = None       # orbit scalar of each coset, 1 at the representative
    killed: frozenset = frozenset()  # class ids carrying no boundary

    @property
    def num_cusps(self) -> int:
        return len(self.reps)


def build_cusp_data(ctx: ModularContext) -> CuspData:
    if "cusps" not in ctx._cache:
        ctx._cache["cusps"] = _build_cusp_data(ctx)
    return ctx._cache["cusps"]


def _build_cusp_data(ctx: ModularContext) -> CuspData:
    table = ctx.table
    mu = table.mu
    t_next = []
    eps_of = []
    for c, d in table.elems:
        t_next.append(table.lookup_unit(c, c + d)[0])
        eps_of.append(table.lookup_unit(-c, d)[0])
    eps_delta0 = []
    for i, j in enumerate(eps_of):
        s, delta0, _ = coset_decompose(table, table.lifts[j] @ EPS)
        if s != i:
            raise PipelineError("cusps", f"epsilon pairing of coset {i} is not an involution")
        eps_delta0.append(delta0)

    class_of = [-1] * mu
    reps = []
    for start in range(mu):
        if class_of[start] >= 0:
            continue
        cid = len(reps)
        reps.append(start)
        i = start
        while class_of[i] < 0:
            class_of[i] = cid
            i = t_next[i]
    sigma, killed = _orbit_scalars(ctx, reps)
    if ctx.chi(-1) * (-1) ** ctx.k != 1:
        # -I lies in every cusp stabiliser and acts by -1
        killed = set(range(len(reps)))
    return CuspData(t_next, eps_of, eps_delta0, class_of, reps, sigma, frozenset(killed))


def _orbit_scalars(ctx: ModularContext, reps: list[int]):
    table, chi = ctx.table, ctx.chi
    sigma = [None] * table.mu
    killed = set()
    for cid, rep in enumerate(reps):
        sigma[rep] = ctx.one
        i = rep
        while True:
            c, d = table.elems[i]
            j, lam = table.lookup_unit(c, c + d)
            val = sigma[i] / chi(lam)
            if j == rep:
                if val != ctx.one:
                    killed.add(cid)
                break
            sigma[j] = val
            i = j
    return sigma, killed


def cusp_signs(ctx: ModularContext, data: CuspData) -> list:
    """chi(delta0) for each class representative fixed by epsilon, else None."""
    out = []
    for i in data.reps:
        j = data.eps_of[i]
        if data.class_of[j] != data.class_of[i]:
            out.append(None)
        else:
            out.append(ctx.chi(data.eps_delta0[i].d))
    return out


def epsilon_eigenvalues(ctx: ModularContext, data: CuspData) -> list:
    """Eigenvalue of epsilon on each live class it fixes (None elsewhere).

    This is chi(delta0) corrected by the orbit scalar of the partner coset;
    for trivial chi, and at every representative fixed by epsilon itself, it is
    exactly chi(delta0).
    """
    out = []
    for cid, i in enumerate(data.reps):
        j = data.eps_of[i]
        if cid in data.killed or data.class_of[j] != cid:
            out.append(None)
        else:
            out.append(ctx.chi(data.eps_delta0[i].d) / data.sigma[j])
    return out


def plus_dimension(ctx: ModularContext, data: CuspData | None = None) -> int:
    """Dimension of the plus part of the boundary, summed over live cusps.

    An epsilon-fixed class with eigenvalue -1 contributes 1, one with
    eigenvalue +1 contributes 0, and each swapped pair contributes 1.
    """
    if data is None:
        data = build_cusp_data(ctx)
    d_plus = d_minus = 0
    for i, sign in zip(data.reps, epsilon_eigenvalues(ctx, data)):
        if sign is None:
            continue
        if sign == -1:
            d_plus += 1
        elif sign == 1:
            d_minus += 1
        else:
            raise PipelineError(
                "cusps", f"epsilon eigenvalue {sign} at the cusp of coset {i} is not +-1"
            )
    rest = data.num_cusps - len(data.killed) - d_plus - d_minus
    if rest % 2:
        raise PipelineError("cusps", "cusp pairing inconsistent")
    return d_plus + rest // 2


def cusp_form_dimension(ctx: ModularContext) -> int:
    nullity = h1_plus_basis(ctx).rows
    dim = nullity - plus_dimension(ctx)
    if dim < 0:
        raise PipelineError("dimension", "inconsistent pipeline: negative dimension")
    return dim
