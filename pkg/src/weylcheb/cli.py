"""Command-line front end.

Commands: table (generating-function route), recurrence-table (recurrence
route, same artifact format), genfunc (closed-form rational generating
function), verify (numerical checks), crosscheck (both table routes,
byte-for-byte).  Exit codes: 0 success, 1 verification or crosscheck
failure, 2 usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import output
from .genfunc import closed_form_gf, first_kind_table, second_kind_table
from .numeric import DEFAULT_SEED, dimension_check, verify_ratio
from .orbit import Kind
from .polynomialize import build_basis
from .recurrence import recurrence_table
from .rootsystem import AlgebraId, build_root_system

_MAX_INDEX = 64


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylcheb",
        description="Chebyshev-like polynomials attached to rank-2 simple Lie algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_table=False, with_verify=False):
        p.add_argument(
            "--algebra",
            choices=[a.value.lower() for a in AlgebraId],
            default=AlgebraId.G2.value.lower(),
        )
        p.add_argument(
            "--kind",
            choices=[k.value for k in Kind],
            default=Kind.SECOND.value,
        )
        p.add_argument(
            "--format", choices=["json", "latex", "plain"], default="json"
        )
        p.add_argument("--output", type=str, default=None, metavar="PATH")
        if with_table:
            p.add_argument("--max-m", type=int, default=4)
            p.add_argument("--max-n", type=int, default=4)
        if with_verify:
            p.add_argument("--samples", type=int, default=100)
            p.add_argument("--tol", type=float, default=1e-8)
            p.add_argument("--seed", type=int, default=None)

    common(sub.add_parser("table", help="polynomial table"), with_table=True)
    common(
        sub.add_parser("recurrence-table", help="table via the recurrence route"),
        with_table=True,
    )
    common(sub.add_parser("genfunc", help="closed-form generating function"))
    common(
        sub.add_parser("verify", help="numerical verification"),
        with_table=True,
        with_verify=True,
    )
    common(
        sub.add_parser("crosscheck", help="compare both table routes"),
        with_table=True,
    )
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    for name in ("max_m", "max_n"):
        value = getattr(args, name, None)
        if value is None:
            continue
        if value < 0 or value > _MAX_INDEX:
            parser.error(f"--{name.replace('_', '-')} must be in 0..{_MAX_INDEX}")
    if getattr(args, "samples", 1) <= 0:
        parser.error("--samples must be positive")
    if getattr(args, "tol", 1.0) <= 0:
        parser.error("--tol must be positive")


def _resolve_seed(args: argparse.Namespace) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("WEYLCHEB_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            sys.stderr.write(f"weylcheb: bad WEYLCHEB_SEED: {env!r}\n")
            raise SystemExit(2) from None
    return DEFAULT_SEED


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _table_indices(rank: int, args) -> tuple[int, int | None]:
    return args.max_m, (args.max_n if rank == 2 else None)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    algebra = AlgebraId(args.algebra.upper())
    kind = Kind(args.kind)
    rs = build_root_system(algebra)
    basis = build_basis(rs, kind)

    if args.command in ("table", "recurrence-table"):
        max_m, max_n = _table_indices(rs.rank, args)
        if args.command == "table":
            if kind is Kind.SECOND:
                table = second_kind_table(rs, basis, max_m, max_n)
            else:
                table = first_kind_table(rs, basis, max_m, max_n)
        else:
            if algebra is not AlgebraId.G2 or kind is not Kind.SECOND:
                parser.error(
                    "recurrence-table supports --algebra g2 --kind second only"
                )
            table = recurrence_table(rs, basis, max_m, args.max_n)
        if args.format == "json":
            text = output.table_json(algebra, kind, max_m, max_n, table)
        else:
            text = output.table_text(kind, table, latex=args.format == "latex")
        _emit(args, text)
        return 0

    if args.command == "genfunc":
        if rs.rank != 2 or kind is not Kind.SECOND:
            parser.error("genfunc supports rank-2 algebras with --kind second")
        gf = closed_form_gf(rs, basis)
        if args.format == "json":
            text = output.gf_json(algebra, kind, gf)
        else:
            text = output.gf_text(gf, latex=args.format == "latex")
        _emit(args, text)
        return 0

    if args.command == "verify":
        if kind is not Kind.SECOND:
            parser.error("verify supports --kind second only")
        seed = _resolve_seed(args)
        results = []
        passed = True
        max_m, max_n = _table_indices(rs.rank, args)
        indices = [
            (m,) if max_n is None else (m, n)
            for m in range(max_m + 1)
            for n in range(1 if max_n is None else max_n + 1)
        ]
        for index in indices:
            report = verify_ratio(
                rs,
                basis,
                *index,
                num_samples=args.samples,
                tol=args.tol,
                seed=seed,
            )
            dims = dimension_check(rs, basis, *index)
            results.append(output.verify_result_obj(index, report, dims))
            if not (report.passed and dims[0] == dims[1]):
                passed = False
        if args.format == "json":
            text = output.verify_json(algebra, kind, seed, results, passed)
        else:
            text = output.verify_text(results, passed)
        _emit(args, text)
        return 0 if passed else 1

    if args.command == "crosscheck":
        if algebra is not AlgebraId.G2 or kind is not Kind.SECOND:
            parser.error("crosscheck supports --algebra g2 --kind second only")
        max_m, max_n = args.max_m, args.max_n
        via_gf = output.table_json(
            algebra, kind, max_m, max_n, second_kind_table(rs, basis, max_m, max_n)
        )
        via_rec = output.table_json(
            algebra, kind, max_m, max_n, recurrence_table(rs, basis, max_m, max_n)
        )
        match = via_gf == via_rec
        if args.format == "json":
            text = output.crosscheck_json(algebra, kind, max_m, max_n, match)
        else:
            text = f"crosscheck {max_m}x{max_n}: {'match' if match else 'MISMATCH'}\n"
        _emit(args, text)
        return 0 if match else 1

    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
