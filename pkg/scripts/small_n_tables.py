#!/usr/bin/env python3
"""Small-n tables: C_{2k+1}-free extremal numbers, and what the large-n
statements look like far below their range (main theorem, conjecture,
starter lemma, peel size)."""

import argparse

from oddcycles.search import peel_census, search_counterexample, starter_census, verify_turan_extremal


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--k", type=int, default=2)
    args = parser.parse_args()
    k, top = args.k, args.max_n

    print("n  max_edges  floor(n^2/4)  extremal_classes")
    for n in range(4 * k - 2, top + 1):
        rep = verify_turan_extremal(n, k)
        print(f"{n:<2} {rep.notes['max_edges']:<10} {n * n // 4:<13} {rep.notes['extremal_classes']}")

    for r in range(3, 2 * k + 1):
        ns = range(r + 2, top + 1)
        main_rep = search_counterexample("theorem6", ns, k=k, r=r)
        peel = peel_census(k, r, ns)
        starters = starter_census(k, r, ns)
        print(
            f"\nr={r}: {main_rep.checked} graphs above the edge threshold, "
            f"{len(main_rep.violations)} with an odd cycle longer than r, "
            f"{len(starters.violations)} holding a (1, r+2)-starter, "
            f"peel sizes {peel.notes['removed_histogram']}"
        )
    for b in range(3, 2 * k + 1):
        rep = search_counterexample("conjecture1", range(4, top + 1), k=k, b=b)
        print(f"conjecture b={b}: {rep.checked} graphs, {len(rep.violations)} failing the bound or its equality case")


if __name__ == "__main__":
    main()
