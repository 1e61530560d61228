"""Command line front end.

Every subcommand prints plain text by default and a stable JSON envelope
``{command, inputs, result, cross_checks}`` with ``--json``.  Exit codes:
0 success, 1 bad input, 2 a size cap was exceeded, 3 an internal consistency
check failed (always a bug).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import config
from .characters import character_table, irreducible_character_value
from .denumerant import (
    denumerant,
    denumerant_class_function,
    denumerant_decomposition,
    denumerant_series,
)
from .dimensions import dimension_report, is_nonvanishing
from .errors import ConsistencyError, ResourceLimitError
from .groups import PermutationGroup, parse_generators, parse_permutation
from .partitions import enumerate_partitions
from .symmetrizer import CharacterSpec, norm_squared, symmetrize_monomial
from .tableaux import count_fillings


class _CliParser(argparse.ArgumentParser):
    """argparse exits 2 on bad arguments; remap to 1 (2 means a cap here)."""

    def error(self, message: str) -> None:  # noqa: D401 - argparse contract
        self.print_usage(sys.stderr)
        raise SystemExit(self.prog + ": error: " + message)


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be comma-separated integers, got {text!r}")


def _parse_partition(text: str) -> tuple[int, ...]:
    parts = _parse_ints(text, "a partition")
    if any(x < 1 for x in parts):
        raise ValueError(f"partition parts must be positive, got {text!r}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing, got {text!r}")
    return parts


def _parse_exponents(text: str) -> tuple[int, ...]:
    entries = _parse_ints(text, "an exponent vector")
    if any(x < 0 for x in entries):
        raise ValueError(f"exponent entries must be non-negative, got {text!r}")
    return entries


def _format_partition(p: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def _format_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    return str(v)


def _json_value(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    return v


def _emit(args, command: str, inputs: dict, result, cross_checks, text: str) -> None:
    if args.json:
        envelope = {
            "command": command,
            "inputs": inputs,
            "result": result,
            "cross_checks": [[name, bool(ok)] for name, ok in cross_checks],
        }
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_denumerant(args) -> None:
    coins = _parse_ints(args.coins, "--coins")
    if args.series:
        values = denumerant_series(coins, args.amount)
        _emit(
            args,
            "denumerant",
            {"coins": list(coins), "amount": args.amount, "series": True},
            {"series": values},
            [],
            " ".join(str(v) for v in values),
        )
    else:
        value = denumerant(coins, args.amount)
        _emit(
            args,
            "denumerant",
            {"coins": list(coins), "amount": args.amount, "series": False},
            {"count": value},
            [],
            str(value),
        )


def _cmd_qchar(args) -> None:
    cf = denumerant_class_function(args.m, args.d)
    classes = enumerate_partitions(args.m)
    rows = [{"cycle_type": list(lam), "value": int(cf.values[lam])} for lam in classes]
    text = ", ".join(
        f"{_format_partition(lam)}: {int(cf.values[lam])}" for lam in classes
    )
    _emit(args, "qchar", {"m": args.m, "d": args.d}, {"classes": rows}, [], text)


def _cmd_decompose(args) -> None:
    decomposition = denumerant_decomposition(args.m, args.d)
    order = enumerate_partitions(args.m)
    rows = [
        {"partition": list(pi), "multiplicity": decomposition[pi]} for pi in order
    ]
    text = ", ".join(
        f"{_format_partition(pi)}: {decomposition[pi]}" for pi in order
    )
    _emit(
        args,
        "decompose",
        {"m": args.m, "d": args.d},
        {"multiplicities": rows},
        [],
        text,
    )


def _cmd_kostka(args) -> None:
    shape = _parse_partition(args.shape)
    content = _parse_exponents(args.content)
    value = count_fillings(shape, content)
    _emit(
        args,
        "kostka",
        {"shape": list(shape), "content": list(content)},
        {"kostka": value},
        [],
        str(value),
    )


def _cmd_character(args) -> None:
    if args.table is not None:
        table = character_table(args.table)
        classes = enumerate_partitions(args.table)
        rows = [
            {"partition": list(pi), "values": [table[pi][lam] for lam in classes]}
            for pi in classes
        ]
        header = "classes: " + " ".join(_format_partition(lam) for lam in classes)
        lines = [header]
        for pi in classes:
            values = " ".join(str(table[pi][lam]) for lam in classes)
            lines.append(f"{_format_partition(pi)}: {values}")
        _emit(
            args,
            "character",
            {"table": args.table},
            {"classes": [list(lam) for lam in classes], "rows": rows},
            [],
            "\n".join(lines),
        )
        return
    if not args.partition or not args.cls:
        raise ValueError("need either --table M or both --partition and --class")
    pi = _parse_partition(args.partition)
    lam = _parse_partition(args.cls)
    value = irreducible_character_value(pi, lam)
    _emit(
        args,
        "character",
        {"partition": list(pi), "class": list(lam)},
        {"value": value},
        [],
        str(value),
    )


def _cmd_dim(args) -> None:
    pi = _parse_partition(args.partition)
    report = dimension_report(args.m, args.d, pi, verify_rank=args.verify)
    cross_checks = []
    if args.verify:
        cross_checks = [
            ["orbit_sum equals inner_product", report.dim_orbit_sum == report.dim_inner_product],
            ["orbit_sum equals decomposition", report.dim_orbit_sum == report.dim_decomposition],
            [
                "non-vanishing matches positivity",
                (report.nonvanishing_witness is not None) == (report.dimension > 0),
            ],
        ]
        if report.rank_dimension is not None:
            cross_checks.append(
                ["rank equals formulas", report.rank_dimension == report.dimension]
            )
    witness = report.nonvanishing_witness
    lines = [
        f"m={report.m} d={report.d} partition={_format_partition(report.pi)}",
        f"dimension: {report.dimension}",
        f"  orbit sum:      {report.dim_orbit_sum}",
        f"  inner product:  {report.dim_inner_product}",
        f"  decomposition:  {report.dim_decomposition}",
    ]
    if report.rank_dimension is not None:
        lines.append(f"  matrix rank:    {report.rank_dimension}")
    lines.append(
        "witness: " + (_format_partition(witness) if witness is not None else "none")
    )
    result = {
        "m": report.m,
        "d": report.d,
        "partition": list(report.pi),
        "dim_orbit_sum": report.dim_orbit_sum,
        "dim_inner_product": report.dim_inner_product,
        "dim_decomposition": report.dim_decomposition,
        "rank_dimension": report.rank_dimension,
        "nonvanishing_witness": list(witness) if witness is not None else None,
    }
    _emit(
        args,
        "dim",
        {"m": args.m, "d": args.d, "partition": list(pi), "verify": bool(args.verify)},
        result,
        cross_checks,
        "\n".join(lines),
    )


def _cmd_vanish(args) -> None:
    pi = _parse_partition(args.partition)
    nonzero, witness = is_nonvanishing(args.m, args.d, pi)
    if nonzero:
        text = f"non-vanishing (witness {_format_partition(witness)})"
    else:
        text = "vanishes (no witness)"
    _emit(
        args,
        "vanish",
        {"m": args.m, "d": args.d, "partition": list(pi)},
        {
            "nonvanishing": nonzero,
            "witness": list(witness) if witness is not None else None,
        },
        [],
        text,
    )


def _load_character_file(path: str, group: PermutationGroup) -> CharacterSpec:
    """A character file maps class representatives in cycle notation to
    integer values, e.g. {"()": 2, "(1 2)": 0, "(1 2 3)": -1}."""
    with open(path, "r", encoding="utf-8") as handle:
        raw = json.load(handle)
    if not isinstance(raw, dict):
        raise ValueError("character file must be a JSON object")
    class_values = {}
    for key, value in raw.items():
        if not isinstance(value, int):
            raise ValueError(f"character value for {key!r} must be an integer")
        class_values[parse_permutation(key, group.m)] = value
    return CharacterSpec.from_class_values(group, class_values)


def _cmd_symmetrize(args) -> None:
    alpha = _parse_exponents(args.alpha)
    m = len(alpha)
    generators = parse_generators(args.generators, m)
    group = PermutationGroup(generators, m, max_order=args.max_elements)
    chi = _load_character_file(args.character, group)
    poly = symmetrize_monomial(group, chi, alpha)
    norm = norm_squared(group, chi, alpha)
    ordered = sorted(poly.coefficients.items())
    lines = [
        f"{_format_partition(beta)}: {_format_value(coeff)}" for beta, coeff in ordered
    ]
    lines.append(f"norm_squared: {_format_value(norm)}")
    result = {
        "coefficients": [
            {"exponent": list(beta), "coefficient": _json_value(coeff)}
            for beta, coeff in ordered
        ],
        "norm_squared": _json_value(norm),
    }
    _emit(
        args,
        "symmetrize",
        {
            "generators": args.generators,
            "character": args.character,
            "alpha": list(alpha),
        },
        result,
        [],
        "\n".join(lines),
    )


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit a JSON envelope")
    parser.add_argument(
        "--max-elements",
        type=int,
        default=None,
        help="cap on permutation group orders (also RELSYM_MAX_ELEMENTS)",
    )
    parser.add_argument(
        "--max-gamma",
        type=int,
        default=None,
        help="cap on the number of exponent vectors enumerated",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(prog="relsym", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("denumerant", help="count coin-change solutions")
    p.add_argument("--coins", required=True, help="comma-separated coin values")
    p.add_argument("--amount", required=True, type=int, help="amount to pay")
    p.add_argument("--series", action="store_true", help="all amounts up to --amount")
    _add_common(p)
    p.set_defaults(func=_cmd_denumerant)

    p = sub.add_parser("qchar", help="solution counts per cycle type")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--d", required=True, type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_qchar)

    p = sub.add_parser("decompose", help="irreducible multiplicities of the counts")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--d", required=True, type=int)
    _add_common(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("kostka", help="count semistandard tableaux")
    p.add_argument("--shape", required=True, help="shape partition, e.g. 3,2")
    p.add_argument("--content", required=True, help="content composition, e.g. 2,2,1")
    _add_common(p)
    p.set_defaults(func=_cmd_kostka)

    p = sub.add_parser("character", help="symmetric group character values")
    p.add_argument("--partition", help="character partition")
    p.add_argument("--class", dest="cls", help="class cycle type")
    p.add_argument("--table", type=int, help="print the full table of this degree")
    _add_common(p)
    p.set_defaults(func=_cmd_character)

    p = sub.add_parser("dim", help="dimension of the symmetrized space")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--partition", required=True)
    p.add_argument(
        "--verify",
        action="store_true",
        help="cross-check all formulas (plus the rank construction at small sizes)",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("vanish", help="non-vanishing criterion with witness")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--partition", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_vanish)

    p = sub.add_parser("symmetrize", help="symmetrize a monomial over a group")
    p.add_argument(
        "--generators", required=True, help='cycle notation, e.g. "(1 2),(1 2 3)"'
    )
    p.add_argument(
        "--character", required=True, help="JSON file of class representative values"
    )
    p.add_argument("--alpha", required=True, help="exponent vector, e.g. 2,0,0")
    _add_common(p)
    p.set_defaults(func=_cmd_symmetrize)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 1
        return 0 if not exc.code else 1
    if args.max_elements is None:
        env = os.environ.get(config.MAX_ELEMENTS_ENV)
        if env is not None:
            try:
                args.max_elements = int(env)
            except ValueError:
                print(
                    f"{config.MAX_ELEMENTS_ENV} must be an integer, got {env!r}",
                    file=sys.stderr,
                )
                return 1
    # the caps are module-level defaults; a CLI run is single-shot, so
    # overriding them for the duration of the command is safe
    old_gamma = config.MAX_GAMMA
    old_group = config.MAX_GROUP_ORDER
    try:
        if args.max_gamma is not None:
            config.MAX_GAMMA = args.max_gamma
        if args.max_elements is not None:
            config.MAX_GROUP_ORDER = args.max_elements
        args.func(args)
        return 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    finally:
        config.MAX_GAMMA = old_gamma
        config.MAX_GROUP_ORDER = old_group


if __name__ == "__main__":
    sys.exit(main())
