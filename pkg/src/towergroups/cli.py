"""Command-line front end: word problem queries, invariants, wreath
decompositions, portraits, quotient tables, Hausdorff dimensions, and the
verification suite.

Output is text by default; ``--format json`` and ``--format csv`` give
machine-readable forms.  Exit codes: 0 success, 1 verification failure,
2 usage or parse error, 3 computation over budget.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import mpmath

from . import verify as verify_mod
from .abelian import (abelianize, chi4, epsilon, epsilon1, in_commutator,
                      in_K4, in_Kn_odd)
from .perm import format_cycles
from .quotients import (DEFAULT_BUDGET_DEGREE, DEFAULT_PRECISION_DIGITS,
                        BudgetExceeded, hausdorff_closed_form,
                        hausdorff_empirical, hausdorff_formula_partial,
                        index_table)
from .wordproblem import are_equal, element_order, is_identity
from .words import (WordSyntaxError, decompose, format_vertex, format_word,
                    parse_word, portrait)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_BUDGET = 3


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    with open(path) as handle:
        config = json.load(handle)
    if not isinstance(config, dict):
        raise ValueError("config file must hold a JSON object")
    return config


def _setting(args, config: dict, key: str, default):
    value = getattr(args, key, None)
    if value is not None:
        return value
    return config.get(key, default)


def _parse_ns(text: str) -> list[int]:
    """Accepts a single value, a comma list, or a range like ``3..8``."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",")]


def _flatten(prefix: str, value, rows: list):
    if isinstance(value, dict):
        for key, sub in value.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), sub, rows)
    elif isinstance(value, list):
        for i, sub in enumerate(value):
            _flatten(f"{prefix}[{i}]", sub, rows)
    else:
        rows.append((prefix, value))


def _emit(payload: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
        return
    rows: list = []
    _flatten("", payload, rows)
    if fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(["key", "value"])
        for key, value in rows:
            writer.writerow([key, value])
        return
    for key, value in rows:
        out.write(f"{key}: {value}\n")


def _word(args) -> "Word":
    return parse_word(args.word, args.n)


def cmd_wp(args, config) -> dict:
    w = _word(args)
    return {"n": args.n, "word": format_word(w), "trivial": is_identity(w)}


def cmd_eq(args, config) -> dict:
    left = parse_word(args.left, args.n)
    right = parse_word(args.right, args.n)
    return {"n": args.n, "left": format_word(left), "right": format_word(right),
            "equal": are_equal(left, right)}


def cmd_order(args, config) -> dict:
    w = _word(args)
    order = element_order(w, args.bound)
    return {"n": args.n, "word": format_word(w), "order": order}


def cmd_decompose(args, config) -> dict:
    w = _word(args)
    dec = decompose(w)
    return {"n": args.n, "word": format_word(w),
            "root": format_cycles(dec.root),
            "states": [format_word(s.canonical()) for s in dec.states]}


def cmd_portrait(args, config) -> dict:
    w = _word(args)
    pic = portrait(w, args.depth)
    labels = {format_vertex(v, args.n): format_cycles(p)
              for v, p in sorted(pic.labels.items())}
    return {"n": args.n, "word": format_word(w), "depth": args.depth,
            "labels": labels}


def cmd_invariants(args, config) -> dict:
    w = _word(args)
    out = {"n": args.n, "word": format_word(w),
           "abelianization": list(abelianize(w)),
           "epsilon": epsilon(w), "epsilon1": epsilon1(w),
           "in_commutator": in_commutator(w)}
    if args.n == 4:
        out["chi4"] = chi4(w)
        out["in_K4"] = in_K4(w)
    if args.n % 2 == 1 and args.n >= 5:
        out["in_Kn"] = in_Kn_odd(w)
    return out


def cmd_quotients(args, config) -> dict:
    budget = _setting(args, config, "budget_degree", DEFAULT_BUDGET_DEGREE)
    digits = _setting(args, config, "precision_digits", DEFAULT_PRECISION_DIGITS)
    table = index_table(args.n, args.levels, budget, digits)
    return table.as_dict()


def cmd_hausdorff(args, config) -> dict:
    budget = _setting(args, config, "budget_degree", DEFAULT_BUDGET_DEGREE)
    digits = _setting(args, config, "precision_digits", DEFAULT_PRECISION_DIGITS)
    out = {"results": []}
    for n in _parse_ns(str(args.n)):
        closed = hausdorff_closed_form(n, digits)
        empirical = hausdorff_empirical(n, args.levels, budget, digits)
        entry = {"n": n,
                 "closed_form": mpmath.nstr(closed, digits),
                 "empirical": [{"level": m,
                                "ratio": mpmath.nstr(v, 30),
                                "formula": mpmath.nstr(
                                    hausdorff_formula_partial(n, m, digits), 30)}
                               for m, v in enumerate(empirical, start=1)]}
        out["results"].append(entry)
    return out


def cmd_verify(args, config) -> dict:
    ns = _parse_ns(str(args.n))
    seed = _setting(args, config, "seed", verify_mod.DEFAULT_SEED)
    report = verify_mod.run_all(ns, deep=args.deep, seed=seed)
    payload = report.as_dict()
    if args.report:
        with open(args.report, "w") as handle:
            json.dump(payload, handle, indent=2, sort_keys=True)
            handle.write("\n")
    return payload


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="towergroups",
        description="Computations in the n-ary generalizations of the "
                    "Hanoi towers group.")
    parser.add_argument("--format", choices=["text", "json", "csv"],
                        default="text")
    parser.add_argument("--config", help="JSON config file for budgets and seeds")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized checks")
    parser.add_argument("--budget-degree", dest="budget_degree", type=int,
                        default=None)
    parser.add_argument("--precision-digits", dest="precision_digits", type=int,
                        default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def word_command(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--word", required=True)
        p.set_defaults(fn=fn)
        return p

    word_command("wp", cmd_wp, "decide triviality of a word")
    p = sub.add_parser("eq", help="decide equality of two words")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(fn=cmd_eq)
    p = word_command("order", cmd_order, "order of an element, if bounded")
    p.add_argument("--bound", type=int, default=None)
    word_command("decompose", cmd_decompose, "one level of the wreath recursion")
    p = word_command("portrait", cmd_portrait, "portrait to a given depth")
    p.add_argument("--depth", type=int, default=2)
    word_command("invariants", cmd_invariants, "abelianization invariants")

    p = sub.add_parser("quotients", help="congruence quotient order table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--levels", type=int, default=2)
    p.set_defaults(fn=cmd_quotients)

    p = sub.add_parser("hausdorff", help="Hausdorff dimension, closed and empirical")
    p.add_argument("--n", required=True, help="an n, a comma list, or lo..hi")
    p.add_argument("--levels", type=int, default=2)
    p.set_defaults(fn=cmd_hausdorff)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--n", default="3..8", help="an n, a comma list, or lo..hi")
    p.add_argument("--report", help="also write the JSON report to this file")
    p.add_argument("--deep", action="store_true",
                   help="include the slow level-3 checks")
    p.set_defaults(fn=cmd_verify)
    return parser


def dispatch(argv: list[str], out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_PARSE_ERROR
    try:
        config = _load_config(args.config)
        payload = args.fn(args, config)
    except WordSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except BudgetExceeded as exc:
        print(f"over budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(payload, args.format, out)
    if args.command == "verify" and payload["num_fail"] > 0:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
