"""Batch front end: read a theory file, run a query, print the verdict.

Exit codes: 0 entailed, 1 not entailed, 2 error.  The first output line is
machine-parseable: ``verdict=ENTAILED|NOT-ENTAILED engine=<name>``.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .engine import entails
from .errors import MbnfError
from .formula import Formula, alphabet_of, conjoin, parse, to_text
from . import oracle

EXIT_ENTAILED = 0
EXIT_NOT_ENTAILED = 1
EXIT_ERROR = 2


@dataclass
class TheoryFile:
    path: str
    formulas: list

    @property
    def sigma(self) -> Formula:
        return conjoin(self.formulas)


def load_theory(path: str) -> TheoryFile:
    formulas = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.split("#", 1)[0].strip()
            if not stripped:
                continue
            try:
                formulas.append(parse(stripped))
            except MbnfError as exc:
                raise MbnfError(f"{path}:{lineno}: {exc}") from exc
    return TheoryFile(path, formulas)


def _print_witness(witness, out):
    print("witness:", file=out)
    print("  partition:", file=out)
    for a, in_p in zip(witness.partition.table.atoms, witness.partition.in_p):
        side = "P" if in_p else "N"
        print(f"    {side}  {to_text(a)}", file=out)
    print(f"  ob: {to_text(witness.ob_formula)}", file=out)
    print(f"  initial-world: {witness.initial_world}", file=out)


def _print_models(theory: TheoryFile, cap: int, out):
    sigma = theory.sigma
    alphabet = alphabet_of(sigma)
    families = oracle.mbnf_models(sigma, alphabet, cap)
    print(f"models={len(families)} alphabet={{{', '.join(alphabet)}}}", file=out)
    for i, family in enumerate(families, start=1):
        worlds = ", ".join(str(a) for a in family.worlds.assignments())
        initials = ", ".join(str(a) for a in family.initials())
        print(f"model {i}:", file=out)
        print(f"  worlds: [{worlds}]", file=out)
        print(f"  initial-worlds: [{initials}]", file=out)


def build_arg_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mbnf",
        description="Skeptical entailment for the logic of minimal belief "
                    "and negation as failure.")
    p.add_argument("--theory", required=True, help="theory file, one formula per line")
    p.add_argument("--query", help="query formula (required unless --models)")
    p.add_argument("--engine", choices=("auto", "general", "flat", "oracle"),
                   default="auto")
    p.add_argument("--oracle-cap", type=int, default=oracle.DEFAULT_CAP,
                   help=f"alphabet cap for the oracle engine (max {oracle.MAX_CAP})")
    p.add_argument("--witness", action="store_true",
                   help="print the countermodel when the verdict is NOT-ENTAILED")
    p.add_argument("--models", action="store_true",
                   help="list all model families (oracle engine only)")
    return p


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit:
        return EXIT_ERROR

    try:
        if args.oracle_cap > oracle.MAX_CAP:
            raise MbnfError(f"--oracle-cap above maximum {oracle.MAX_CAP}")
        theory = load_theory(args.theory)
        if args.models:
            if args.engine != "oracle":
                raise MbnfError("--models requires --engine oracle")
            _print_models(theory, args.oracle_cap, out)
            if args.query is None:
                return EXIT_ENTAILED
        if args.query is None:
            raise MbnfError("--query is required unless --models is given")
        query = parse(args.query)
        verdict = entails(theory.sigma, query, args.engine, args.oracle_cap)
    except MbnfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    label = "ENTAILED" if verdict.entailed else "NOT-ENTAILED"
    print(f"verdict={label} engine={verdict.engine}", file=out)
    print(label, file=out)
    for notice in verdict.notices:
        print(f"note: {notice}", file=out)
    if args.witness and verdict.witness is not None:
        _print_witness(verdict.witness, out)
    return EXIT_ENTAILED if verdict.entailed else EXIT_NOT_ENTAILED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
