#!/usr/bin/env python3
"""Run every lemma sweep at its default desk-scale parameters and append the
reports to a JSON-lines file."""

import argparse
import sys

from oddcycles.lemmas import verify_lemma
from oddcycles.reports import append_jsonl

SWEEPS = [
    ("degree", {"m": 2}),
    ("degree", {"m": 3}),
    ("degree", {"m": 4, "sample": 2000, "seed": 0}),
    ("www", {"k": 2, "ell": 3}),
    ("www", {"k": 3, "ell": 4}),
    ("outside", {"m": 3}),
    ("outside", {"m": 4, "sample": 300, "seed": 0}),
    ("gchords", {"m": 3, "r": 3}),
    ("gchords", {"m": 4, "r": 5}),
    ("aaa", {"n_values": [3, 4, 5, 6, 7, 8]}),
    ("l1", {"k": 2, "r": 3, "n_values": [6, 7, 8]}),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="lemma_reports.jsonl")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--only", choices=sorted({s for s, _ in SWEEPS}))
    args = parser.parse_args()
    bad = 0
    for lemma, params in SWEEPS:
        if args.only and lemma != args.only:
            continue
        if lemma in ("degree", "outside"):
            params = dict(params, jobs=args.jobs)
        rep = verify_lemma(lemma, **params)
        append_jsonl(args.out, [rep], timing=True)
        bad += len(rep.violations)
        print(f"{lemma:8s} {params}: checked {rep.checked}, violations {len(rep.violations)}, {rep.elapsed_ms} ms")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
