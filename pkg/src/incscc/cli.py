"""Command-line interface.

Subcommands: `run` (experiment pipeline to CSV), `verify` (randomized
oracle equivalence), `ingest` (parse a dataset and print counters).
Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys

from incscc import harness
from incscc._backend import BACKEND


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="incscc",
        description="Incremental SCC with predictions: benchmarks and verification")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run timed trials and write a CSV")
    run.add_argument("--dataset", required=True, help="path to an edge list file")
    run.add_argument("--format", default="snap-temporal",
                     choices=["snap-temporal", "edge-list"])
    run.add_argument("--algo", default="learned",
                     help="comma-separated subset of: " + ",".join(harness.ALGOS))
    run.add_argument("--s-values", default="0",
                     help="comma-separated perturbation stddevs, e.g. 0,10,20")
    run.add_argument("--trials", type=int, default=1)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--limit", type=int, default=None,
                     help="truncate the stream to its first K edges")
    run.add_argument("--out", required=True, help="output CSV path")

    ver = sub.add_parser("verify", help="randomized oracle-equivalence check")
    ver.add_argument("--n-max", type=int, default=40)
    ver.add_argument("--m-max", type=int, default=150)
    ver.add_argument("--instances", type=int, default=200)
    ver.add_argument("--seeds", type=int, default=0, help="base PRNG seed")

    ing = sub.add_parser("ingest", help="parse a dataset and print counters")
    ing.add_argument("--dataset", required=True)
    ing.add_argument("--format", default="snap-temporal",
                     choices=["snap-temporal", "edge-list"])
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "ingest":
            res = harness.ingest(args.dataset, args.format)
            print(res.summary())
            return 0
        if args.command == "verify":
            print(f"verifying against brute force (backend: {BACKEND})...")
            report = harness.verify(n_max=args.n_max, m_max=args.m_max,
                                    instances=args.instances, seed=args.seeds,
                                    progress=print)
            print(report.summary())
            return 0 if report.ok else 1
        if args.command == "run":
            algos = [a.strip() for a in args.algo.split(",") if a.strip()]
            s_values = [float(s) for s in args.s_values.split(",") if s.strip()]
            res = harness.ingest(args.dataset, args.format)
            print(f"ingested: {res.summary()} (backend: {BACKEND})")
            records = harness.run_experiment(
                dataset=args.dataset.rsplit("/", 1)[-1],
                n=res.n, sigma=res.sequence, algos=algos, s_values=s_values,
                trials=args.trials, seed=args.seed, limit=args.limit)
            harness.write_csv(records, args.out)
            for line in harness.median_summary(records):
                print(line)
            print(f"wrote {len(records)} rows to {args.out}")
            return 0
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
