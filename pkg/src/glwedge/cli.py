"""Command line front end: ``glwedge <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 bad arguments or
preconditions, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import __version__
from .cache import CharacterCache, use_cache
from .gram_oracle import DEFAULT_BUDGET, dim_simple_weight_space, simple_character
from .linalg import BudgetExceeded
from .rank_formulas import multiplicity_main
from .sweeps import (
    COUNTEREXAMPLE,
    DEFAULT_PRIMES,
    check_closed_form,
    check_key_theorem,
    check_main_theorem,
    check_rank_formulas,
    counterexample_values,
    summarize,
)
from .tensor_oracle import tensor_multiplicity
from .weights import cont, is_dominant, linked, removable_indices, removable_pairs

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        w = tuple(int(a) for a in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if not w:
        raise argparse.ArgumentTypeError("empty weight")
    return w


def parse_primes(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(a) for a in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of primes: {text!r}")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_dim(args) -> int:
    d = dim_simple_weight_space(args.lam, args.mu, args.p, args.budget)
    _emit(args, {"lambda": list(args.lam), "mu": list(args.mu), "p": args.p, "dim": d}, str(d))
    return EXIT_OK


def cmd_char(args) -> int:
    ch = simple_character(args.lam, args.p, args.budget)
    dom = sorted(ch.dominant_part().items(), reverse=True)
    lines = [f"L{args.lam} at p={args.p}: dim {ch.dim()}"]
    lines += [f"  {w}: {m}" for w, m in dom]
    payload = {"lambda": list(args.lam), "p": args.p, "character": ch.to_json()}
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def format_report(report) -> str:
    lines = [f"lambda={report.lam}  i={report.i}  s={report.s}  p={report.p}"]
    for (a, b), v in sorted(report.x_ranks.items()):
        lines.append(f"  x_{a},{b} = {v}")
    lines.append(f"  m = {report.m}")
    lines.append(f"  w = {report.w}")
    for r, v in sorted(report.t.items()):
        lines.append(f"  t^{r} = {v}")
    lines.append("hypotheses:")
    for name, ok in report.hypotheses.items():
        lines.append(f"  [{'x' if ok else ' '}] {name}")
    if report.applicable:
        lines.append(f"multiplicity: {report.multiplicity}")
    else:
        lines.append(f"theorem inapplicable (unproven value t^{report.i} = {report.t[report.i]})")
    return "\n".join(lines)


def cmd_mult(args) -> int:
    report = multiplicity_main(args.lam, args.i, args.p)
    _emit(args, report.to_json(), format_report(report))
    return EXIT_OK


def cmd_oracle_mult(args) -> int:
    if not (is_dominant(args.lam) and is_dominant(args.mu)):
        raise UsageError("--lambda and --mu must be dominant")
    m = tensor_multiplicity(args.lam, args.mu, args.p, args.budget)
    _emit(args, {"lambda": list(args.lam), "mu": list(args.mu), "p": args.p, "multiplicity": m}, str(m))
    return EXIT_OK


def cmd_linkage(args) -> int:
    same = linked(args.lam, args.mu, args.p)
    a, b = cont(args.lam, args.p), cont(args.mu, args.p)
    payload = {
        "lambda": list(args.lam),
        "mu": list(args.mu),
        "p": args.p,
        "linked": same,
        "cont_lambda": list(a.residue_contents),
        "cont_mu": list(b.residue_contents),
    }
    text = f"{'linked' if same else 'not linked'}\n  cont(lambda) = {a.residue_contents}\n  cont(mu)     = {b.residue_contents}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_removable(args) -> int:
    idx = removable_indices(args.lam)
    pairs = removable_pairs(args.lam)
    payload = {"lambda": list(args.lam), "indices": idx, "pairs": [list(q) for q in pairs]}
    _emit(args, payload, f"indices: {idx}\npairs: {pairs}")
    return EXIT_OK


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    sections = {
        "rank_formulas": check_rank_formulas,
        "closed_form": check_closed_form,
        "main_theorem": check_main_theorem,
        "key_theorem": check_key_theorem,
    }
    report = {"n_max": args.n_max, "deg_max": args.deg_max, "primes": list(args.primes)}
    failed = False
    lines = []
    for name, fn in sections.items():
        checks = fn(args.n_max, args.deg_max, args.primes) if args.primes else []
        summary = summarize(checks)
        summary["instances"] = [c.to_json() for c in checks]
        report[name] = summary
        failed |= bool(summary["failed"])
        lines.append(f"{name:14s} {summary['passed']}/{summary['checked']} passed")
        for c in summary["failed"]:
            lines.append(f"  MISMATCH {c['kind']} lam={tuple(c['lam'])} p={c['p']} {c['detail']}: expected {c['expected']}, got {c['got']}")
    if args.counterexample:
        ce = counterexample_values()
        ce["confirmed"] = ce["tensor"] == ce["level"] != ce["slice"]
        report["counterexample"] = ce
        failed |= not ce["confirmed"]
        lines.append(
            f"counterexample  lam={COUNTEREXAMPLE[0]} mu={COUNTEREXAMPLE[1]} p={COUNTEREXAMPLE[2]}: "
            f"tensor={ce['tensor']} level={ce['level']} slice={ce['slice']} "
            f"({'confirmed' if ce['confirmed'] else 'NOT confirmed'})"
        )
    lines.append(f"elapsed {time.perf_counter() - t0:.1f}s")
    _emit(args, report, "\n".join(lines))
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="glwedge", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the character cache")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest Gram matrix size allowed")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help, lam=True, mu=False, i=False, p=True):
        sp = sub.add_parser(name, parents=[common], help=help)
        if lam:
            sp.add_argument("--lambda", dest="lam", type=parse_weight, required=True)
        if mu:
            sp.add_argument("--mu", type=parse_weight, required=True)
        if i:
            sp.add_argument("--i", type=int, required=True)
        if p:
            sp.add_argument("--p", type=int, required=True)
        sp.set_defaults(func=fn)
        return sp

    add("dim", cmd_dim, "dim L(lambda)_mu", mu=True)
    add("char", cmd_char, "character of L(lambda)")
    add("mult", cmd_mult, "rank-formula multiplicity of L(lambda - eps_i - eps_s)", i=True)
    add("oracle-mult", cmd_oracle_mult, "[L(lambda) x wedge^2 V* : L(mu)] by character peeling", mu=True)
    add("linkage", cmd_linkage, "compare residue contents", mu=True)
    add("removable", cmd_removable, "removable indices and pairs", p=False)
    v = add("verify", cmd_verify, "run the oracle sweeps", lam=False, p=False)
    v.add_argument("--n-max", type=int, default=5)
    v.add_argument("--deg-max", type=int, default=6)
    v.add_argument("--primes", type=parse_primes, default=DEFAULT_PRIMES)
    v.add_argument("--counterexample", action="store_true", help="also check the n=5, p=7 level/slice inequality")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    cache = None if args.no_cache else CharacterCache()
    try:
        with use_cache(cache):
            return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
