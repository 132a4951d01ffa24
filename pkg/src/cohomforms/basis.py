"""Cuspidal kernel elements and assembly of the q-expansion basis.

Two coordinate systems of the same size mu*(k-1) meet here:

* W_chi coordinates (flat index ``i + j*mu``), where the cohomology lives;
* tensor coordinates ``M (x) P^1_chi`` (flat index ``r*(k-1) + j``), where
  Hecke operators act through Heilbronn-Merel matrices.

``iso_to_tensor`` passes from the first to the second by letting the lift of
each coset act on its block.  Since polynomials are acted on from the right,
``act(g, act(h, p)) == act(h @ g, p)``, it is the lift itself (not its inverse)
that appears.

A q-expansion row comes from pairing the plus cohomology basis with
``T_n(x)`` for a cuspidal tensor ``x`` and n = 1..M.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterator

from .cohomology import ModularContext, h1_plus_basis, relation_blocks
from .cuspdim import PipelineError, build_cusp_data, cusp_form_dimension
from .exactla import ExactMat, nullspace, rank, rref
from .hecke import KernelElement, hecke_column, hecke_on_vector, sturm_bound
from .p1cosets import p1_lookup
from .polyaction import act, monomial_images

log = logging.getLogger(__name__)


@dataclass
class QExpansionBasis:
    """Basis of cusp forms as rows ``(a_1, ..., a_M)`` in reduced echelon form."""

    dimension: int
    precision: int
    forms: list[list] = field(default_factory=list)
    mode: str = "probe"   # path that actually produced the forms

    def __eq__(self, other):
        if not isinstance(other, QExpansionBasis):
            return NotImplemented
        return (self.dimension, self.precision, self.forms) == (
            other.dimension, other.precision, other.forms)

    def as_matrix(self) -> ExactMat:
        return ExactMat(self.forms, self.precision)


# --- coordinate changes --------------------------------------------------------

def iso_to_tensor(ctx: ModularContext, w: list) -> list:
    mu, k = ctx.mu, ctx.k
    v = [0] * ctx.dimW
    for i, g in enumerate(ctx.table.lifts):
        p = [w[i + j * mu] for j in range(k - 1)]
        if any(p):
            v[i * (k - 1):(i + 1) * (k - 1)] = act(g, p, k)
    return v


def tensor_to_iso(ctx: ModularContext, v: list) -> list:
    """Inverse of :func:`iso_to_tensor`."""
    mu, k = ctx.mu, ctx.k
    w = [0] * ctx.dimW
    for i, g in enumerate(ctx.table.lifts):
        p = v[i * (k - 1):(i + 1) * (k - 1)]
        if any(p):
            for j, c in enumerate(act(g.inverse(), p, k)):
                w[i + j * mu] = c
    return w


def paired_projector(ctx: ModularContext) -> ExactMat:
    """``h1_plus_basis`` composed with :func:`tensor_to_iso`.

    Row h of the result satisfies ``h . v == H[h] . tensor_to_iso(v)``, so
    Hecke images in tensor coordinates pair with it directly.
    """
    key = "paired_projector"
    if key in ctx._cache:
        return ctx._cache[key]
    H = h1_plus_basis(ctx)
    mu, k = ctx.mu, ctx.k
    zero = ctx.zero
    inv_images = [monomial_images(g.inverse(), k) for g in ctx.table.lifts]
    rows = []
    for h in H.data:
        out = [zero] * ctx.dimW
        for s in range(mu):
            hs = [h[s + t * mu] for t in range(k - 1)]
            if not any(hs):
                continue
            img = inv_images[s]
            for j in range(k - 1):
                acc = zero
                for t, a in enumerate(img[j]):
                    if a and hs[t]:
                        acc = acc + a * hs[t]
                out[s * (k - 1) + j] = acc
        rows.append(out)
    P = ExactMat(rows, ctx.dimW)
    ctx._cache[key] = P
    return P


# --- boundary ------------------------------------------------------------------

def boundary_matrix(ctx: ModularContext) -> ExactMat:
    """Rows: tensor basis elements ``x^j y^(k-2-j) (x) (c, d)``.  Columns: cusp classes.

    ``y^(k-2)`` contributes at the class of ``(c, d)`` and ``x^(k-2)`` with a
    minus sign at the class of ``(d, -c)``; interior monomials vanish at both
    cusps.  Each contribution is scaled by the orbit scalar of the coset it
    lands on (and the chi-value of the unit needed to reach that coset).
    Killed classes receive nothing.
    """
    data = build_cusp_data(ctx)
    k, w = ctx.k, ctx.k - 2
    nc = data.num_cusps
    rows = [[ctx.zero] * nc for _ in range(ctx.dimW)]
    for i, (c, d) in enumerate(ctx.table.elems):
        cl = data.class_of[i]
        if cl not in data.killed:
            row = rows[i * (k - 1) + w]
            row[cl] = row[cl] + data.sigma[i]
        s, sc = p1_lookup(ctx.table, d, -c, ctx.chi)
        cl = data.class_of[s]
        if cl not in data.killed:
            row = rows[i * (k - 1)]
            row[cl] = row[cl] - sc * data.sigma[s]
    return ExactMat(rows, nc)


def _boundary_relations(ctx: ModularContext) -> ExactMat:
    """Boundary images of the epsilon relations, i.e. what the plus quotient identifies.

    The S and Q relation blocks have zero boundary by construction.
    """
    key = "boundary_relations"
    if key not in ctx._cache:
        Bd = boundary_matrix(ctx)
        eps_block = relation_blocks(ctx)[2]
        E = ExactMat([iso_to_tensor(ctx, r) for r in eps_block.data], ctx.dimW) @ Bd
        ctx._cache[key] = rref(E)[0] if E.rows else E
    return ctx._cache[key]


def is_cuspidal(ctx: ModularContext, v: list) -> bool:
    """Does the tensor ``v`` have zero boundary in the plus quotient?"""
    Bd = boundary_matrix(ctx)
    b = (ExactMat([v], ctx.dimW) @ Bd).data[0]
    if not any(b):
        return True
    E = _boundary_relations(ctx)
    return rank(ExactMat.vstack([E, ExactMat([b], Bd.cols)])) == E.rows


# --- kernel elements -----------------------------------------------------------

def _candidate_stream(ctx: ModularContext) -> Iterator[KernelElement]:
    k, mu = ctx.k, ctx.mu
    if k == 2:
        for r, (c, d) in enumerate(ctx.table.elems):
            if ctx.chi(c) == ctx.chi(d):
                yield KernelElement((1,), r)
        return
    interior = list(range(1, k - 2))
    if not interior:
        return
    m = tuple(1 if 0 < j < k - 2 else 0 for j in range(k - 1))
    for r in range(mu):
        yield KernelElement(m, r)
    if len(interior) > 1:
        for j in interior:
            single = tuple(1 if t == j else 0 for t in range(k - 1))
            for r in range(mu):
                yield KernelElement(single, r)


def probe_kernel_stream(ctx: ModularContext) -> Iterator[KernelElement]:
    """Cheap kernel-element guesses, in a fixed order.

    For k > 2: the sum of the interior monomials against each coset, then each
    interior monomial alone.  For k = 2: the constant 1 against cosets with
    chi(c) == chi(d).  Candidates with a nonzero boundary are skipped.  For
    k = 3 there is no interior monomial and the stream is empty.
    """
    k = ctx.k
    for ke in _candidate_stream(ctx):
        v = [0] * ctx.dimW
        v[ke.r * (k - 1):(ke.r + 1) * (k - 1)] = ke.m
        if is_cuspidal(ctx, v):
            yield ke


def exact_kernel(ctx: ModularContext) -> ExactMat:
    """Cuspidal part of the plus cohomology, as rows in tensor coordinates."""
    dim = cusp_form_dimension(ctx)
    H = h1_plus_basis(ctx)
    if dim == 0 or H.rows == 0:
        return ExactMat([], ctx.dimW)
    X = ExactMat([iso_to_tensor(ctx, h) for h in H.data], ctx.dimW)
    Y = X @ boundary_matrix(ctx)
    E = _boundary_relations(ctx)
    # left kernel of [Y; E], keeping the Y part
    L = nullspace(ExactMat.vstack([Y, E]).T) if Y.cols else ExactMat.identity(H.rows)
    coeffs = [row[:H.rows] for row in L.data]
    A, found, _ = rref(ExactMat(coeffs, H.rows)) if coeffs else (None, 0, None)
    if found != dim:
        raise PipelineError("kernel", f"exact kernel has dimension {found}, expected {dim}")
    return A @ X


# --- assembly ------------------------------------------------------------------

def _integral_rows(rows: list[list]) -> list[tuple[dict[int, int], int]] | None:
    """Rows as (sparse integer numerators, common denominator), or None off Q."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            if x:
                if isinstance(x, Fraction):
                    den = lcm(den, x.denominator)
                elif not isinstance(x, int):
                    return None
        out.append(({j: int(x * den) for j, x in enumerate(row) if x}, den))
    return out


def _rows_for(ctx: ModularContext, P: ExactMat, M: int, column, timings) -> list[list]:
    """``P @ [t_1 ... t_M]`` where ``column(n)`` gives t_n in tensor coordinates."""
    rows = [[ctx.zero] * M for _ in range(P.rows)]
    key = "paired_projector_int"
    if key not in ctx._cache:
        ctx._cache[key] = _integral_rows(P.data)
    P_int = ctx._cache[key]
    for n in range(1, M + 1):
        t0 = time.perf_counter_ns()
        t = column(n)
        timings["hecke"] = timings.get("hecke", 0) + time.perf_counter_ns() - t0
        t_int = _integral_rows([t]) if P_int is not None else None
        if t_int is not None:
            tn, tden = t_int[0]
            items = list(tn.items())
            for h, (prow, pden) in enumerate(P_int):
                acc = 0
                for j, x in items:
                    a = prow.get(j)
                    if a:
                        acc += a * x
                if acc:
                    rows[h][n - 1] = Fraction(acc, pden * tden)
            continue
        nz = [(j, x) for j, x in enumerate(t) if x]
        for h, prow in enumerate(P.data):
            acc = ctx.zero
            for j, x in nz:
                a = prow[j]
                if a:
                    acc = acc + a * x
            rows[h][n - 1] = acc
    return rows


def _assemble(ctx, M, dim, columns, mode, timings) -> QExpansionBasis | None:
    P = paired_projector(ctx)
    B: list[list] = []
    rk = 0
    for column in columns:
        B.extend(r for r in _rows_for(ctx, P, M, column, timings) if any(r))
        if not B:
            continue
        R, rk, _ = rref(ExactMat(B, M))
        B = R.tolist()
        if rk == dim:
            return QExpansionBasis(dim, M, B, mode)
        if rk > dim:
            raise PipelineError("assembly", f"basis rank {rk} exceeds dimension {dim}")
    log.info("%s mode stopped at rank %d of %d", mode, rk, dim)
    return None


def compute_basis(ctx: ModularContext, M: int | None = None, mode: str = "probe",
                  timings: dict | None = None, use_cache: bool = True) -> QExpansionBasis:
    """q-expansion basis of S_k(Gamma0(N), chi) to precision M.

    ``mode="probe"`` tries cheap kernel elements first and silently falls back
    to ``mode="exact"`` if they do not reach full rank.

    If ``timings`` is given, nanoseconds spent computing Hecke columns are
    added under ``"hecke"`` and everything else under ``"assembly"``.
    """
    start = time.perf_counter_ns()
    if timings is None:
        timings = {}
    hecke_before = timings.get("hecke", 0)
    try:
        return _compute_basis(ctx, M, mode, timings, use_cache)
    finally:
        hecke_spent = timings.get("hecke", 0) - hecke_before
        elapsed = time.perf_counter_ns() - start
        timings["assembly"] = timings.get("assembly", 0) + elapsed - hecke_spent


def _compute_basis(ctx, M, mode, timings, use_cache) -> QExpansionBasis:
    if mode not in ("probe", "exact"):
        raise ValueError(f"unknown mode {mode!r}")
    bound = sturm_bound(ctx)
    if M is None:
        M = max(10, bound)
    if M < bound:
        raise ValueError(f"precision {M} is below the Sturm bound {bound}")
    dim = cusp_form_dimension(ctx)
    if dim == 0:
        return QExpansionBasis(0, M, [], mode)
    if mode == "probe":
        cols = ((lambda n, ke=ke: hecke_column(ctx, n, ke, use_cache)) for ke in probe_kernel_stream(ctx))
        out = _assemble(ctx, M, dim, cols, "probe", timings)
        if out is not None:
            return out
        log.info("probe mode failed, switching to exact mode")
    K = exact_kernel(ctx)
    cols = ((lambda n, v=v: hecke_on_vector(ctx, n, v, use_cache)) for v in K.data)
    out = _assemble(ctx, M, dim, cols, "exact", timings)
    if out is None:
        raise PipelineError("assembly", "exact kernel did not produce a full-rank basis")
    return out
