"""``nnborder`` command line: gen, reduce, verify, bench.

Exit codes: 0 success, 2 usage or parse error, 3 data integrity error
(e.g. identical coordinates with different labels), 4 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import io
from .bench import DEFAULT_NS, run_bench, write_bench_csv
from .datagen import KINDS, GenSpec, generate
from .errors import BorderError, CoincidentPoints, EmptySet, InvalidSpec
from .geometry import EPS, LabeledPointSet
from .oracle import brute_force_border, certify, nn_classify_many
from .search import find_border_points, find_border_points_baseline

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_VERIFY = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RunConfig:
    input: str
    algorithm: str = "seeded"
    seed_index: int = 0
    tolerance: float = EPS
    out_indices: Optional[str] = None
    out_stats: Optional[str] = None
    out_certificates: Optional[str] = None

    def validate(self, P: LabeledPointSet) -> None:
        if self.algorithm not in ("seeded", "mst", "brute"):
            raise CliError(f"unknown algorithm {self.algorithm!r}", EXIT_USAGE)
        if self.algorithm == "seeded" and not 0 <= self.seed_index < P.n:
            raise CliError(f"--seed-index {self.seed_index} out of range for n={P.n}", EXIT_USAGE)
        if not 0 < self.tolerance < 1:
            raise CliError("--tolerance must be in (0, 1)", EXIT_USAGE)


def _load(path: str) -> LabeledPointSet:
    try:
        return io.read_csv(path)
    except CoincidentPoints as e:
        raise CliError(str(e), EXIT_DATA) from None
    except (io.ParseError, EmptySet, BorderError, ValueError) as e:
        raise CliError(str(e), EXIT_USAGE) from None


def cmd_gen(args) -> int:
    spec = GenSpec(
        kind=args.kind,
        n=args.n,
        dim=args.dim,
        classes=args.classes,
        rng_seed=args.rng,
        sigma=args.sigma,
        separation=args.separation,
    )
    try:
        P = generate(spec)
    except InvalidSpec as e:
        raise CliError(str(e), EXIT_USAGE) from None
    io.write_csv(P, args.out)
    return EXIT_OK


def reduce_points(cfg: RunConfig) -> tuple[LabeledPointSet, list[int], dict]:
    P = _load(cfg.input)
    cfg.validate(P)
    if cfg.algorithm == "brute":
        t0 = time.perf_counter()
        bf = brute_force_border(P, cfg.tolerance)
        border = sorted(bf.indices)
        calls, lp_tests, elapsed, tag = 0, bf.lp_tests, (time.perf_counter() - t0) * 1e3, "brute"
    else:
        if cfg.algorithm == "seeded":
            res = find_border_points(P, cfg.seed_index, tolerance=cfg.tolerance)
        else:
            res = find_border_points_baseline(P, tolerance=cfg.tolerance)
        border = list(res.border_indices)
        calls, lp_tests, elapsed, tag = res.inversion_calls, res.lp_tests, res.elapsed, res.algorithm
    stats = {
        "n": P.n,
        "d": P.dim,
        "k": len(border),
        "inversion_calls": calls,
        "lp_tests": lp_tests,
        "elapsed_ms": round(elapsed, 3),
        "algorithm": tag,
    }
    return P, border, stats


def cmd_reduce(args) -> int:
    cfg = RunConfig(
        input=args.input,
        algorithm=args.algo,
        seed_index=args.seed_index,
        tolerance=args.tolerance,
        out_indices=args.out,
        out_stats=args.stats,
        out_certificates=args.certificates,
    )
    P, border, stats = reduce_points(cfg)
    if cfg.out_indices:
        io.write_indices(border, cfg.out_indices)
    else:
        sys.stdout.write("".join(f"{i}\n" for i in border))
    if cfg.out_stats:
        io.write_records([stats], cfg.out_stats)
    else:
        print(io.dumps_record(stats), file=sys.stderr)
    if cfg.out_certificates:
        try:
            certs = certify(P, border, cfg.tolerance)
        except ValueError as e:
            raise CliError(str(e), EXIT_VERIFY) from None
        io.write_records(({"point": b, **c.to_record()} for b, c in certs.items()), cfg.out_certificates)
    return EXIT_OK


def verify_reduction(
    P: LabeledPointSet, indices: Sequence[int], queries: int, rng_seed: int, tolerance: float = EPS
) -> dict:
    """Compare nearest-neighbor labels of ``P`` and ``P[indices]`` on random queries.

    Queries are uniform in the bounding box of ``P`` grown by 20% of its
    extent (10% per side). Queries whose nearest distinct-class gap is at
    most ``tolerance * diameter`` are skipped as ties.
    """
    idx = sorted(set(int(i) for i in indices))
    if any(not 0 <= i < P.n for i in idx):
        raise CliError("index file refers to points outside the data set", EXIT_USAGE)
    rng = np.random.Generator(np.random.PCG64(rng_seed))
    lo, hi = P.points.min(axis=0), P.points.max(axis=0)
    pad = 0.1 * np.maximum(hi - lo, 1e-12)
    Q = rng.uniform(lo - pad, hi + pad, (queries, P.dim))
    full_codes, margin = nn_classify_many(P, Q)
    full = np.array(P.classes, dtype=object)[full_codes]
    if len(P.classes) < 2:
        # a single class has no boundary; the classifier is constant and the
        # empty reduction represents it exactly
        reduced = full
    elif idx:
        R = P.subset(idx)
        red_codes, _ = nn_classify_many(R, Q)
        reduced = np.array(R.classes, dtype=object)[red_codes]
    else:
        reduced = np.full(queries, None, dtype=object)
    tie = margin <= tolerance * P.diameter()
    agree = (full == reduced) & ~tie
    return {
        "queries": queries,
        "agreements": int(agree.sum()),
        "disagreements": int((~tie).sum() - agree.sum()),
        "skipped_ties": int(tie.sum()),
    }


def cmd_verify(args) -> int:
    P = _load(args.input)
    try:
        idx = io.read_indices(args.indices)
    except io.ParseError as e:
        raise CliError(str(e), EXIT_USAGE) from None
    report = verify_reduction(P, idx, args.queries, args.rng, args.tolerance)
    print(json.dumps(report))
    return EXIT_VERIFY if report["disagreements"] else EXIT_OK


def cmd_bench(args) -> int:
    try:
        ns = [int(v) for v in args.ns.split(",") if v.strip()]
    except ValueError:
        raise CliError("--ns must be a comma separated list of integers", EXIT_USAGE) from None
    if not ns:
        raise CliError("--ns is empty", EXIT_USAGE)
    algos = [a.strip() for a in args.algos.split(",")]
    if any(a not in ("seeded", "mst") for a in algos):
        raise CliError("--algos accepts seeded and mst", EXIT_USAGE)
    try:
        rows, slopes = run_bench(
            ns,
            kind=args.kind,
            dim=args.dim,
            rng_seed=args.rng,
            algorithms=algos,
            repeats=args.repeats,
            progress=(lambda r: print(r, file=sys.stderr)) if args.verbose else None,
        )
    except InvalidSpec as e:
        raise CliError(str(e), EXIT_USAGE) from None
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            write_bench_csv(rows, fh)
    else:
        write_bench_csv(rows, sys.stdout)
    print(json.dumps({"loglog_slope": slopes}), file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nnborder", description="Border points of nearest-neighbor training sets.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a synthetic labeled point set as CSV")
    g.add_argument("--kind", choices=KINDS, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--dim", type=int, default=2)
    g.add_argument("--classes", type=int, default=2)
    g.add_argument("--rng", type=int, default=0)
    g.add_argument("--sigma", type=float, default=1.0)
    g.add_argument("--separation", type=float, default=20.0)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("reduce", help="compute the border points of a CSV point set")
    r.add_argument("input")
    r.add_argument("--algo", choices=("seeded", "mst", "brute"), default="seeded")
    r.add_argument("--seed-index", type=int, default=0)
    r.add_argument("--tolerance", type=float, default=EPS)
    r.add_argument("--out", help="indices file (default: stdout)")
    r.add_argument("--stats", help="stats record file (default: stderr)")
    r.add_argument("--certificates", help="write one empty-ball certificate per border point")
    r.set_defaults(func=cmd_reduce)

    v = sub.add_parser("verify", help="check that a reduction classifies like the full set")
    v.add_argument("input")
    v.add_argument("indices")
    v.add_argument("--queries", type=int, default=100_000)
    v.add_argument("--rng", type=int, default=0)
    v.add_argument("--tolerance", type=float, default=EPS)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="runtime scaling of the seeded and MST-initialized searches")
    b.add_argument("--kind", choices=KINDS, default="fixed_k_family")
    b.add_argument("--ns", default=",".join(map(str, DEFAULT_NS)))
    b.add_argument("--dim", type=int, default=2)
    b.add_argument("--rng", type=int, default=0)
    b.add_argument("--algos", default="seeded,mst")
    b.add_argument("--repeats", type=int, default=1)
    b.add_argument("--out", help="CSV output (default: stdout)")
    b.add_argument("-v", "--verbose", action="store_true")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"nnborder: error: {e}", file=sys.stderr)
        return e.code
    except CoincidentPoints as e:
        print(f"nnborder: error: {e}", file=sys.stderr)
        return EXIT_DATA
    except OSError as e:
        print(f"nnborder: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
