"""Command-line front end.

Subcommands: count, convert, verify, export-dot. Outputs are deterministic:
identical inputs give byte-identical bytes (verify reports additionally carry
an elapsed_ms field, which is the one timing-dependent value). Counts and
polynomial coefficients are printed as decimal strings since they overflow
64-bit integers early.

Exit codes: 0 success, 2 invalid input, 3 no formula available,
4 constraint-family mismatch, 5 identity mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrays import StaircaseArray, array_rank_gf, count_arrays, validate
from .budget import BudgetError
from .bijections import (
    Asm,
    FamilyMismatch,
    MonotoneTriangle,
    Tournament,
    Tsscpp,
    array_to_asm,
    array_to_mt,
    array_to_tournament,
    array_to_tsscpp,
    asm_to_array,
    mt_to_array,
    tournament_to_array,
    tsscpp_to_array,
)
from .colors import Color, format_colors, require_admissible
from .counting import enumerate_ideals, rank_gf
from .formulas import formula_count, formula_rank_gf
from .identities import IDENTITY_NAMES, verify_formulas, verify_identity
from .poset import OrderIdeal, array_to_ideal, build, ideal_to_array, to_dot

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NO_FORMULA = 3
EXIT_FAMILY = 4
EXIT_MISMATCH = 5

FAMILIES = ("asm", "mt", "array", "tsscpp", "tournament", "ideal")


class NoFormula(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _gf_payload(gf) -> list[str]:
    return [str(c) for c in gf.to_coeff_list()]


def _cmd_count(args) -> int:
    colorset = require_admissible(args.colors)
    n = args.n
    if n < 1:
        raise ValueError("n must be at least 1")
    array_model = Color.GREEN in colorset
    if n == 1 and not array_model:
        raise ValueError("n = 1 needs green in the color set")
    if args.seed_list:
        if args.q or args.method == "formula":
            raise ValueError("--seed-list cannot be combined with --q or --method formula")
        if n == 1:
            ideals = [OrderIdeal(1, frozenset())]
        else:
            ideals = enumerate_ideals(build(n).subposet(colorset))
        for ideal in ideals:
            payload = ideal.to_json_obj()
            payload["colors"] = format_colors(colorset)
            sys.stdout.write(_dump(payload) + "\n")
        return EXIT_OK

    if args.method == "formula":
        count = formula_count(colorset, n)
        if count is None:
            raise NoFormula(
                f"no product formula is known for {{{format_colors(colorset)}}}"
            )
        gf = None
        if args.q:
            gf = formula_rank_gf(colorset, n)
            if gf is None:
                raise NoFormula(
                    f"no closed rank generating function is known for "
                    f"{{{format_colors(colorset)}}}"
                )
    elif args.method == "enum":
        if n == 1:
            count = count_arrays(n, colorset)
            gf = array_rank_gf(n, colorset) if args.q else None
        else:
            sizes: dict[int, int] = {}
            for ideal in enumerate_ideals(build(n).subposet(colorset)):
                sizes[len(ideal)] = sizes.get(len(ideal), 0) + 1
            count = sum(sizes.values())
            from .polynomials import QPoly

            gf = QPoly(sizes) if args.q else None
    else:
        if n == 1:
            count = count_arrays(n, colorset)
            gf = array_rank_gf(n, colorset) if args.q else None
        else:
            p = build(n).subposet(colorset)
            gf = rank_gf(p)
            count = gf(1)
            if not args.q:
                gf = None

    if args.q:
        payload = {
            "colors": format_colors(colorset),
            "count": str(count),
            "n": n,
            "rank_gf": _gf_payload(gf),
        }
        sys.stdout.write(_dump(payload) + "\n")
    else:
        sys.stdout.write(f"{count}\n")
    return EXIT_OK


def _load_object(family: str, payload, colors_flag: str | None):
    if family == "asm":
        return Asm.from_json_obj(payload)
    if family == "mt":
        return MonotoneTriangle.from_json_obj(payload)
    if family == "array":
        return StaircaseArray.from_json_obj(payload)
    if family == "tsscpp":
        return Tsscpp.from_json_obj(payload)
    if family == "tournament":
        return Tournament.from_json_obj(payload)
    ideal = OrderIdeal.from_json_obj(payload)
    colors = payload.get("colors", colors_flag)
    if colors is None:
        raise ValueError("converting from an ideal needs a colors field or --colors")
    colorset = require_admissible(colors)
    if Color.GREEN not in colorset:
        raise ValueError("ideal conversion needs green in the color set")
    if not build(ideal.n).subposet(colorset).is_ideal(ideal.members):
        raise ValueError("vertex set is not an order ideal of that subposet")
    return ideal


def _to_array(family: str, obj) -> StaircaseArray:
    if family == "asm":
        return asm_to_array(obj)
    if family == "mt":
        return mt_to_array(obj)
    if family == "array":
        return obj
    if family == "tsscpp":
        return tsscpp_to_array(obj)
    if family == "tournament":
        return tournament_to_array(obj)
    return ideal_to_array(obj)


def _from_array(family: str, x: StaircaseArray, colors_flag: str | None):
    if family == "asm":
        return array_to_asm(x).to_json_obj()
    if family == "mt":
        return array_to_mt(x).to_json_obj()
    if family == "array":
        return x.to_json_obj()
    if family == "tsscpp":
        return array_to_tsscpp(x).to_json_obj()
    if family == "tournament":
        return array_to_tournament(x).to_json_obj()
    if colors_flag is None:
        raise ValueError("converting to an ideal needs --colors")
    colorset = require_admissible(colors_flag)
    if Color.GREEN not in colorset:
        raise ValueError("ideal conversion needs green in the color set")
    if not validate(x, colorset):
        raise FamilyMismatch(
            f"array is not in the {{{format_colors(colorset)}}} family"
        )
    payload = array_to_ideal(x).to_json_obj()
    payload["colors"] = format_colors(colorset)
    return payload


def _cmd_convert(args) -> int:
    if args.input == "-":
        payload = json.load(sys.stdin)
    else:
        with open(args.input, encoding="utf-8") as handle:
            payload = json.load(handle)
    obj = _load_object(args.src, payload, args.colors)
    x = _to_array(args.src, obj)
    out = _from_array(args.to, x, args.colors)
    sys.stdout.write(_dump(out) + "\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.identity == "formulas":
        reports = verify_formulas(args.n)
    else:
        reports = [verify_identity(args.identity, args.n)]
    ok = True
    for report in reports:
        sys.stdout.write(_dump(report) + "\n")
        ok = ok and report["status"] == "ok"
    return EXIT_OK if ok else EXIT_MISMATCH


def _cmd_export_dot(args) -> int:
    colorset = require_admissible(args.colors)
    dot = to_dot(build(args.n).subposet(colorset))
    if args.output == "-":
        sys.stdout.write(dot)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(dot)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetraposet",
        description="Tetrahedral poset order ideals: counting, bijections, "
        "identity verification, DOT export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count order ideals of T_n(S)")
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--colors", required=True, help="color letters, e.g. gybo")
    p_count.add_argument("--q", action="store_true", help="also print the rank generating function")
    p_count.add_argument("--method", choices=("dp", "enum", "formula"), default="dp")
    p_count.add_argument(
        "--seed-list",
        action="store_true",
        help="stream every order ideal as JSON lines instead of counting",
    )
    p_count.set_defaults(func=_cmd_count)

    p_convert = sub.add_parser("convert", help="convert between object families")
    p_convert.add_argument("--from", dest="src", choices=FAMILIES, required=True)
    p_convert.add_argument("--to", choices=FAMILIES, required=True)
    p_convert.add_argument("--input", required=True, help="JSON file, or - for stdin")
    p_convert.add_argument(
        "--colors", help="color letters; needed when an ideal endpoint lacks them"
    )
    p_convert.set_defaults(func=_cmd_convert)

    p_verify = sub.add_parser("verify", help="verify an identity by exact expansion")
    p_verify.add_argument("--identity", choices=IDENTITY_NAMES, required=True)
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.set_defaults(func=_cmd_verify)

    p_dot = sub.add_parser("export-dot", help="write the Hasse diagram as DOT")
    p_dot.add_argument("--n", type=int, required=True)
    p_dot.add_argument("--colors", required=True)
    p_dot.add_argument("--output", required=True, help="file path, or - for stdout")
    p_dot.set_defaults(func=_cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoFormula as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_FORMULA
    except FamilyMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAMILY
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
