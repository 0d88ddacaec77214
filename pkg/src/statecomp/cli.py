"""Command-line front end.

Subcommands: witness (emit a stored family machine), compose (run an
operation on two DFA files), sc (evaluate a closed-form state count),
verify (check witness grids against the formulas), and search (maximize
the minimal result size over all small DFA pairs).

Exit codes: 0 on success, 1 when a verification fails, 2 on malformed
input or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .automata import Dfa, minimize_hopcroft
from .bounds import sc_revcat, sc_starcat, sc_starcat_special, ub_starcat_general
from .constructions import combined
from .harness import (
    BoundReport,
    exhaustive_search,
    oracle_pipeline,
    verify_witness,
)
from .serialize import emit_document, emit_dot, parse_document
from .witnesses import FAMILIES


def _emit(machine, fmt: str) -> None:
    text = emit_document(machine) if fmt == "json" else emit_dot(machine)
    sys.stdout.write(text)


def _load_dfa(path: str, name: str) -> Dfa:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ValueError(f"{name}: cannot read {path}: {e.strerror}")
    machine = parse_document(text)
    if not isinstance(machine, Dfa):
        raise ValueError(f"{name}: {path} holds an nfa document, expected a dfa")
    return machine


def cmd_witness(args) -> int:
    kind, generator = FAMILIES[args.family]
    if kind == "m":
        if args.m is None:
            raise ValueError(f"family {args.family} needs --m")
        machine = generator(args.m)
    elif kind == "n":
        if args.n is None:
            raise ValueError(f"family {args.family} needs --n")
        machine = generator(args.n)
    else:
        machine = generator(tuple(args.alphabet))
    _emit(machine, args.format)
    return 0


def cmd_compose(args) -> int:
    a = _load_dfa(args.lhs, "--lhs")
    b = _load_dfa(args.rhs, "--rhs")
    if args.method == "direct":
        result = combined(args.op, a, b)
    else:
        result = oracle_pipeline(args.op, a, b)
    minimal = minimize_hopcroft(result)
    if args.minimize:
        result = minimal
    _emit(result, args.format)
    print(f"states={result.state_count} minimal={minimal.state_count}")
    return 0


def cmd_sc(args) -> int:
    if args.k1 is not None:
        if args.op != "starcat":
            raise ValueError("--k1 only applies to --op starcat")
        value = ub_starcat_general(args.m, args.n, args.k1)
    elif args.op == "revcat":
        value = sc_revcat(args.m, args.n)
    elif args.op == "starcat":
        value = sc_starcat(args.m, args.n)
    else:
        value = sc_starcat_special(args.m, args.n)
    print(value)
    return 0


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return range(int(lo), int(hi) + 1)
        return range(int(lo), int(lo) + 1)
    except ValueError:
        raise ValueError(f"bad range {text!r}, expected A..B or a single integer")


def _report_row(r: BoundReport) -> str:
    k1 = "-" if r.k1 is None else str(r.k1)
    verdict = "PASS" if r.passed else "FAIL"
    return (
        f"{r.op} m={r.m} n={r.n} k1={k1} formula={r.formula} "
        f"constructed={r.constructed} minimal={r.minimal} {verdict}"
    )


def cmd_verify(args) -> int:
    all_passed = True
    for m in _parse_range(args.m):
        for n in _parse_range(args.n):
            report = verify_witness(args.op, m, n)
            print(_report_row(report))
            all_passed = all_passed and report.passed
    return 0 if all_passed else 1


def cmd_search(args) -> int:
    if args.sample is not None:
        result = exhaustive_search(
            args.op, args.m, args.n, args.sigma,
            mode="sampled", sample_count=args.sample, seed=args.seed,
        )
        mode = "sampled"
    else:
        result = exhaustive_search(args.op, args.m, args.n, args.sigma)
        mode = "full"
    print(
        f"op={result.op} m={result.m} n={result.n} sigma={result.alphabet_size} "
        f"mode={mode} pairs={result.pairs_examined} max_minimal={result.max_minimal}"
    )
    prefix = args.out_prefix or f"argmax_{args.op}_m{args.m}_n{args.n}"
    lhs_path = Path(f"{prefix}_lhs.json")
    rhs_path = Path(f"{prefix}_rhs.json")
    lhs_path.write_text(emit_document(result.argmax[0]))
    rhs_path.write_text(emit_document(result.argmax[1]))
    print(f"argmax lhs -> {lhs_path}")
    print(f"argmax rhs -> {rhs_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="statecomp",
        description="State complexity of reversal-catenation and star-catenation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", help="emit a stored worst-case machine")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--alphabet", default="abcd",
                   help="symbols for the sigma-star/empty families")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("compose", help="run an operation on two DFA files")
    p.add_argument("--op", required=True, choices=("revcat", "starcat"))
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--method", required=True, choices=("direct", "oracle"))
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("sc", help="evaluate a closed-form state count")
    p.add_argument("--op", required=True,
                   choices=("revcat", "starcat", "starcat-special"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k1", type=int)
    p.set_defaults(func=cmd_sc)

    p = sub.add_parser("verify", help="check witness grids against the formulas")
    p.add_argument("--op", required=True,
                   choices=("revcat", "starcat", "starcat-special"))
    p.add_argument("--m", required=True, help="range A..B (inclusive) or a single value")
    p.add_argument("--n", required=True, help="range C..D (inclusive) or a single value")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="maximize the minimal result size over all pairs")
    p.add_argument("--op", required=True, choices=("revcat", "starcat"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--sample", type=int, help="sample this many pairs instead of all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-prefix", help="path prefix for the argmax JSON files")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
