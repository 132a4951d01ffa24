"""Stage-by-stage timing of the pipeline with log-log growth fits.

The module also counts the Hecke matrix sets.

Run as ``python -m cohomforms.bench sweep --levels 10-60 --weights 4`` or
``python -m cohomforms.bench census --max-n 100``.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import math
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .arith import divisors
from .basis import QExpansionBasis, compute_basis
from .chars import DirichletChar, parse_char_spec
from .cohomology import ModularContext, h1_plus_basis, make_context, relations_matrix
from .cuspdim import build_cusp_data, plus_dimension
from .hecke import heilbronn_merel, merel_sets
from .p1cosets import p1_size

log = logging.getLogger(__name__)

STAGES = ("cosets", "relations", "nullspace", "cusps", "hecke", "assembly")
CSV_COLUMNS = ["N", "k", "mu", "dim"] + [f"t_{s}_ns" for s in STAGES] + ["t_total_ns"]
CENSUS_COLUMNS = ["n", "h_n", "s_n", "s_n_prime", "sigma_n"]


@dataclass
class BenchRecord:
    N: int
    k: int
    mu: int
    dim: int
    t_cosets_ns: int = 0
    t_relations_ns: int = 0
    t_nullspace_ns: int = 0
    t_cusps_ns: int = 0
    t_hecke_ns: int = 0
    t_assembly_ns: int = 0
    t_total_ns: int = 0

    def stage(self, name: str) -> int:
        return getattr(self, f"t_{name}_ns")


@dataclass
class PipelineRun:
    ctx: ModularContext
    nullity: int
    plus_dim: int
    num_cusps: int
    basis: QExpansionBasis
    timings: dict  # stage name -> nanoseconds


def run_pipeline(N: int, k: int, chi: DirichletChar | None = None, M: int | None = None,
                 mode: str = "probe", use_cache: bool = True) -> PipelineRun:
    """Run every stage once, timing each with a monotonic clock."""
    timings = dict.fromkeys(STAGES, 0)
    clock = time.perf_counter_ns

    t0 = clock()
    ctx = make_context(N, k, chi)
    t1 = clock()
    timings["cosets"] = t1 - t0

    relations_matrix(ctx)
    t2 = clock()
    timings["relations"] = t2 - t1

    nullity = h1_plus_basis(ctx).rows
    t3 = clock()
    timings["nullspace"] = t3 - t2

    data = build_cusp_data(ctx)
    plus = plus_dimension(ctx, data)
    timings["cusps"] = clock() - t3

    basis = compute_basis(ctx, M, mode, timings=timings, use_cache=use_cache)
    return PipelineRun(ctx, nullity, plus, data.num_cusps, basis, timings)


def _bench_point(args) -> BenchRecord:
    N, k, char_spec = args
    chi = parse_char_spec(N, char_spec)
    start = time.perf_counter_ns()
    run = run_pipeline(N, k, chi, use_cache=False)
    total = time.perf_counter_ns() - start
    rec = BenchRecord(N, k, run.ctx.mu, run.basis.dimension, t_total_ns=total)
    for s in STAGES:
        setattr(rec, f"t_{s}_ns", run.timings[s])
    return rec


def sweep(levels, weights, char_spec: str = "trivial", cap: int = 2000,
          workers: int = 1) -> list[BenchRecord]:
    """One record per (N, k), in order; points with mu*(k-1) > cap are skipped.

    ``workers > 1`` runs points in parallel; timings are then only indicative.
    """
    levels, weights = list(levels), list(weights)
    if not levels or not weights:
        raise ValueError("sweep needs non-empty level and weight ranges")
    points = []
    for N in levels:
        for k in weights:
            size = p1_size(N) * (k - 1)
            if size > cap:
                log.warning("skipping N=%d k=%d: mu*(k-1) = %d exceeds cap %d", N, k, size, cap)
                continue
            try:
                parse_char_spec(N, char_spec)
            except ValueError as exc:
                log.warning("skipping N=%d k=%d: %s", N, k, exc)
                continue
            points.append((N, k, char_spec))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_bench_point, points))
    return [_bench_point(p) for p in points]


def records_to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(asdict(r))
    return buf.getvalue()


def fit_exponents(records: list[BenchRecord], axis: str = "N", fixed: int | None = None) -> dict:
    """Least-squares slope of log(time) against log(axis), per stage and for the total.

    The other parameter must be constant over the records used (pass ``fixed``
    to select it).  Stages whose time is zero somewhere are reported as None.
    """
    if axis not in ("N", "k"):
        raise ValueError("axis must be 'N' or 'k'")
    other = "k" if axis == "N" else "N"
    if fixed is not None:
        records = [r for r in records if getattr(r, other) == fixed]
    if len({getattr(r, other) for r in records}) > 1:
        raise ValueError(f"records mix several values of {other}; pass fixed=")
    if len(records) < 4:
        raise ValueError("need at least 4 records along the axis")
    xs = [math.log(getattr(r, axis)) for r in records]
    out = {}
    for name in STAGES + ("total",):
        ys = [getattr(r, f"t_{name}_ns") for r in records]
        if min(ys) <= 0:
            out[name] = None
            continue
        out[name] = statistics.linear_regression(xs, [math.log(y) for y in ys]).slope
    return out


def stage_shares(record: BenchRecord) -> dict:
    total = sum(record.stage(s) for s in STAGES) or 1
    return {s: record.stage(s) / total for s in STAGES}


def hecke_dominates(record: BenchRecord, margin: float = 0.10) -> bool:
    """Soft check that the Hecke stage has the largest share.

    Returns False only when another stage beats it by more than ``margin``
    of the total; a closer call is logged as a warning and passes.
    """
    shares = stage_shares(record)
    best = max(shares, key=shares.get)
    if best == "hecke":
        return True
    gap = shares[best] - shares["hecke"]
    if gap < margin:
        log.warning("stage %s edges out hecke by %.1f%% at N=%d k=%d",
                    best, 100 * gap, record.N, record.k)
        return True
    return False


def sigma(n: int) -> int:
    return sum(divisors(n))


def hecke_set_census(ns) -> list[dict]:
    """Size of H_n and of Merel's pair (S_n, S_n'), next to sigma(n)."""
    ns = list(ns)
    if ns and max(ns) > 300:
        raise ValueError("census is limited to n <= 300")
    rows = []
    for n in ns:
        s_main, s_half = merel_sets(n)
        rows.append({"n": n, "h_n": len(heilbronn_merel(n)), "s_n": len(s_main),
                     "s_n_prime": len(s_half), "sigma_n": sigma(n)})
    return rows


def census_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CENSUS_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _int_range(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        if "-" in part:
            a, b = part.split("-")
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    return out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="cohomforms-bench", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)
    sw = sub.add_parser("sweep", help="time the pipeline over a grid of levels and weights")
    sw.add_argument("--levels", type=_int_range, required=True, help="e.g. 10-60 or 11,23,37")
    sw.add_argument("--weights", type=_int_range, required=True)
    sw.add_argument("--char", default="trivial")
    sw.add_argument("--cap", type=int, default=2000)
    sw.add_argument("--workers", type=int, default=1)
    sw.add_argument("--out", help="CSV path (default: stdout)")
    ce = sub.add_parser("census", help="count Heilbronn-Merel and Merel matrices")
    ce.add_argument("--max-n", type=int, default=100)
    ce.add_argument("--out")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")

    if args.cmd == "sweep":
        records = sweep(args.levels, args.weights, args.char, args.cap, args.workers)
        text = records_to_csv(records)
        if len(records) >= 4 and len({r.k for r in records}) == 1:
            slopes = fit_exponents(records, "N")
            print("log-log slopes in N:", ", ".join(
                f"{s}={'n/a' if v is None else f'{v:.2f}'}" for s, v in slopes.items()), file=sys.stderr)
            top = max(records, key=lambda r: r.N)
            print(f"hecke share at N={top.N}: {stage_shares(top)['hecke']:.1%}", file=sys.stderr)
    else:
        text = census_to_csv(hecke_set_census(range(1, args.max_n + 1)))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
