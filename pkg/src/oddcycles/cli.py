"""Command-line front end.

Exit codes: 0 success, 1 violations found, 2 budget exceeded,
64 usage error, 65 malformed graph6 input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterator, Optional

from .bipartization import d2, gamma2
from .budget import Budget, BudgetExceeded
from .constructions import complete_bipartite, t_star, t_star_star, turan
from .cycles import cycle_spectrum, girth, is_weakly_pancyclic, longest_odd_cycle, odd_girth
from .graph import Graph, GraphFormatError, from_graph6, to_graph6
from .lemmas import LEMMA_IDS, verify_lemma
from .reports import VerificationReport, append_jsonl
from .search import TARGETS, search_counterexample, verify_turan_extremal
from .starters import find_starter

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64
EXIT_DATAERR = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """'4-8' or '4..8' (inclusive) or '6,7,9'."""
    try:
        for sep in ("..", "-"):
            if sep in text:
                lo, hi = text.split(sep, 1)
                return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None


def _emit(line: str, out: Optional[Path]) -> None:
    if out is None:
        print(line)
    else:
        with open(out, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")


def _read_graphs(args) -> Iterator[tuple[str, Graph]]:
    sources: list[str] = list(args.graphs or [])
    for name in args.file or []:
        sources.extend(Path(name).read_text(encoding="utf-8").splitlines())
    if not sources:
        sources = sys.stdin.read().splitlines()
    for line in sources:
        line = line.strip()
        if line:
            yield line, from_graph6(line)


def _budget(args) -> Budget:
    return Budget(args.budget)


def cmd_analyze(args) -> int:
    for text, g in _read_graphs(args):
        nodes = _budget(args)
        spectrum = sorted(cycle_spectrum(g, nodes))
        longest = longest_odd_cycle(g, nodes)
        pancyclic = is_weakly_pancyclic(g, nodes) if spectrum else None
        row = {
            "graph6": text,
            "n": g.n,
            "m": g.m,
            "girth": girth(g, nodes),
            "odd_girth": odd_girth(g),
            "longest_odd_cycle": len(longest) if longest else None,
            "spectrum": spectrum,
            "d2": d2(g, nodes).size,
            "gamma2": gamma2(g, nodes).size,
            "weakly_pancyclic": pancyclic,
        }
        _emit(json.dumps(row), args.out)
    return EXIT_OK


def cmd_construct(args) -> int:
    need = {
        "complete-bipartite": ("a", "b"),
        "turan": ("n", "r"),
        "t-star": ("r", "n"),
        "t-star-star": ("k", "b", "n"),
    }[args.family]
    missing = [f"--{p}" for p in need if getattr(args, p) is None]
    if missing:
        raise UsageError(f"{args.family} needs {' '.join(missing)}")
    if args.family == "complete-bipartite":
        g = complete_bipartite(args.a, args.b)
    elif args.family == "turan":
        g = turan(args.n, args.r)
    elif args.family == "t-star":
        g = t_star(args.r, args.n)
    else:
        g = t_star_star(args.k, args.b, args.n)
    _emit(to_graph6(g), args.out)
    return EXIT_OK


def cmd_bipartize(args) -> int:
    for text, g in _read_graphs(args):
        nodes = _budget(args)
        row = {"graph6": text}
        if args.kind in ("vertex", "both"):
            row["vertex"] = d2(g, nodes).to_json()
        if args.kind in ("edge", "both"):
            row["edge"] = gamma2(g, nodes).to_json()
        _emit(json.dumps(row), args.out)
    return EXIT_OK


def cmd_starter(args) -> int:
    for name in ("r", "s", "k"):
        if getattr(args, name) is None:
            raise UsageError(f"starter needs --{name}")
    for text, g in _read_graphs(args):
        cert = find_starter(g, args.r, args.s, args.k, _budget(args))
        _emit(json.dumps({"graph6": text, "starter": cert.to_json() if cert else None}), args.out)
    return EXIT_OK


def _lemma_params(args) -> dict:
    lemma = args.lemma
    L = args.host_length
    if L is not None and (L < 3 or L % 2 == 0):
        raise UsageError("--host-length must be an odd integer >= 3")
    params: dict = {}
    if lemma == "degree":
        params["m"] = (L - 1) // 2 if L else 2
        params.update(sample=args.sample, seed=args.seed, jobs=args.jobs)
    elif lemma == "www":
        params["k"] = args.k
        params["ell"] = (L - 1) // 2 if L else None
        params["budget"] = args.budget
    elif lemma == "outside":
        params["m"] = (L - 1) // 2 if L else 3
        params.update(sample=args.sample, seed=args.seed, jobs=args.jobs, budget=args.budget)
    elif lemma == "gchords":
        params["m"] = (L - 1) // 2 if L else 3
        params["r"] = args.r if args.r is not None else 3
        params.update(sample=args.sample, seed=args.seed, budget=args.budget)
    elif lemma == "aaa":
        params["n_values"] = args.n_range or ([args.n] if args.n else [3, 4, 5, 6, 7])
        params["mode"] = args.mode
        params.update(sample=args.sample, seed=args.seed)
    elif lemma == "l1":
        params["k"] = args.k
        params["r"] = args.r if args.r is not None else 3
        params["n_values"] = args.n_range or ([args.n] if args.n else [6, 7, 8])
    return params


def _finish(reports: list[VerificationReport], args) -> int:
    for rep in reports:
        if args.out is None:
            print(rep.to_line(args.timing))
        else:
            append_jsonl(args.out, [rep], args.timing)
    if any(not rep.complete for rep in reports):
        return EXIT_BUDGET
    if any(rep.violations for rep in reports):
        return EXIT_VIOLATIONS
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.turan:
        ns = args.n_range or ([args.n] if args.n else None)
        if ns is None:
            raise UsageError("--turan needs --n or --n-range")
        return _finish([verify_turan_extremal(n, args.k, args.mode) for n in ns], args)
    if args.lemma is None:
        raise UsageError("verify needs --lemma or --turan")
    return _finish([verify_lemma(args.lemma, **_lemma_params(args))], args)


def cmd_search(args) -> int:
    ns = args.n_range or ([args.n] if args.n else None)
    if ns is None:
        raise UsageError("search needs --n or --n-range")
    report = search_counterexample(
        args.target, ns, k=args.k, r=args.r, b=args.b, family=args.family, mode=args.mode, budget=args.budget
    )
    return _finish([report], args)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oddcycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--k", type=int, default=2)
    common.add_argument("--r", type=int)
    common.add_argument("--b", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--n-range", type=parse_range)
    common.add_argument("--mode", choices=["labeled", "iso"], default="iso")
    common.add_argument("--budget", type=int, help="search-node limit per computation")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", type=Path, help="append output lines to this file")

    inputs = _Parser(add_help=False)
    inputs.add_argument("graphs", nargs="*", help="graph6 strings (stdin when none given)")
    inputs.add_argument("--file", action="append", help="file with one graph6 string per line")

    p = sub.add_parser("analyze", parents=[common, inputs], help="cycle and bipartization summary")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", parents=[common], help="emit a construction as graph6")
    p.add_argument("family", choices=["complete-bipartite", "turan", "t-star", "t-star-star"])
    p.add_argument("--a", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bipartize", parents=[common, inputs], help="d2 and gamma2 with witnesses")
    p.add_argument("--kind", choices=["vertex", "edge", "both"], default="both")
    p.set_defaults(func=cmd_bipartize)

    p = sub.add_parser("starter", parents=[common, inputs], help="find an (s, r+2)-starter")
    p.add_argument("--s", type=int)
    p.set_defaults(func=cmd_starter)

    p = sub.add_parser("verify", parents=[common], help="lemma or Turan-number verification report")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--lemma", choices=LEMMA_IDS)
    which.add_argument("--turan", action="store_true", help="check the C_{2k+1}-free extremal number")
    p.add_argument("--host-length", type=int)
    p.add_argument("--sample", type=int, help="sample size (switches to sampled mode)")
    p.add_argument("--timing", action="store_true", help="record elapsed_ms (breaks byte-identical reruns)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="counterexample search report")
    p.add_argument("--target", choices=TARGETS, required=True)
    p.add_argument("--family", choices=["t_star_star"])
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_search)
    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "mode", None) == "iso":
        args.mode = "up_to_iso"
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"oddcycles: malformed graph6: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except BudgetExceeded as exc:
        print(f"oddcycles: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError) as exc:
        print(f"oddcycles: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"oddcycles: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
