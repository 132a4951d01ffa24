"""Command-line entry point: ``cohomforms --level 25 --weight 4``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .arith import prime_factors
from .bench import STAGES, run_pipeline
from .chars import parse_char_spec
from .cuspdim import PipelineError


def format_coeff(x) -> str:
    """Exact string form of a coefficient; cyclotomic values print as polynomials in z."""
    return str(x)


def format_qexp(row: list) -> str:
    terms = []
    for n, c in enumerate(row, start=1):
        if not c:
            continue
        mono = "q" if n == 1 else f"q^{n}"
        s = format_coeff(c)
        if s == "1":
            terms.append(mono)
        elif s == "-1":
            terms.append("-" + mono)
        elif any(ch in s for ch in "+z") or "-" in s[1:]:
            terms.append(f"({s})*{mono}")
        else:
            terms.append(f"{s}*{mono}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out + f" + O(q^{len(row) + 1})"


def parse_factors(text: str) -> int:
    """``2^2*3`` -> 12; every base must be prime."""
    n = 1
    for part in text.replace(" ", "").split("*"):
        if not part:
            continue
        base, _, exp = part.partition("^")
        p, e = int(base), int(exp or 1)
        if p < 2 or prime_factors(p) != [p] or e < 1:
            raise ValueError(f"bad prime power {part!r}")
        n *= p ** e
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cohomforms",
        description="q-expansion basis of the cusp forms S_k(Gamma0(N), chi).",
    )
    ap.add_argument("--level", "-N", type=int, help="level N >= 1")
    ap.add_argument("--factors", help="level as a factorization, e.g. 2^2*3")
    ap.add_argument("--weight", "-k", type=int, required=True, help="weight k >= 2")
    ap.add_argument("--char", default="trivial",
                    help="trivial | kronecker | gens:g1=a/b,g2=... (default trivial)")
    ap.add_argument("--prec", type=int, default=None, help="number of coefficients (default max(10, Sturm bound))")
    ap.add_argument("--mode", choices=("probe", "exact"), default="probe")
    ap.add_argument("--format", choices=("text", "json", "csv"), default="text")
    ap.add_argument("--timing", action="store_true", help="append per-stage wall times")
    return ap


def _resolve_level(ap, args) -> int:
    level = args.level
    if args.factors is not None:
        try:
            from_factors = parse_factors(args.factors)
        except ValueError as exc:
            ap.error(str(exc))
        if level is not None and level != from_factors:
            ap.error(f"--factors gives {from_factors}, which differs from --level {level}")
        level = from_factors
    if level is None:
        ap.error("one of --level or --factors is required")
    if level < 1:
        ap.error("level must be at least 1")
    return level


def render(run, char_spec: str, fmt: str, timing: bool) -> str:
    ctx, basis = run.ctx, run.basis
    if fmt == "json":
        doc = {
            "level": ctx.N, "weight": ctx.k, "character": char_spec, "mu": ctx.mu,
            "num_cusps": run.num_cusps, "nullity": run.nullity, "plus_dim": run.plus_dim,
            "dimension": basis.dimension, "precision": basis.precision,
            "basis": [[format_coeff(x) for x in row] for row in basis.forms],
        }
        if timing:
            doc["timings_ns"] = {s: run.timings[s] for s in STAGES}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n"] + list(range(1, basis.precision + 1)))
        for i, row in enumerate(basis.forms, start=1):
            w.writerow([i] + [format_coeff(x) for x in row])
        if timing:
            for s in STAGES:
                buf.write(f"# t_{s}_ns={run.timings[s]}\n")
        return buf.getvalue()
    lines = [
        f"S_{ctx.k}(Gamma0({ctx.N}), {char_spec})",
        f"dimension: {basis.dimension}",
        f"cusps: {run.num_cusps}",
        f"nullity: {run.nullity}",
        f"plus dimension: {run.plus_dim}",
        f"precision: {basis.precision}",
    ]
    lines += [format_qexp(row) for row in basis.forms]
    if timing:
        lines += [f"time {s}: {run.timings[s] / 1e6:.3f} ms" for s in STAGES]
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    level = _resolve_level(ap, args)
    if args.weight < 2:
        ap.error("weight must be at least 2")
    try:
        chi = parse_char_spec(level, args.char)
    except ValueError as exc:
        ap.error(f"--char: {exc}")
    try:
        run = run_pipeline(level, args.weight, chi, args.prec, args.mode)
    except PipelineError as exc:
        print(f"error in stage {exc.stage}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(run, args.char, args.format, args.timing))
    return 0


if __name__ == "__main__":
    sys.exit(main())
