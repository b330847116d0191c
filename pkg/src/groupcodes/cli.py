"""Command-line front end: ``analyze``, ``sweep`` and ``distance``.

Structured output is a JSON document with a fixed key order and no
run-dependent content unless ``--wall-clock`` is given, so reports can be
compared byte for byte.  Errors print one line ``error[<code>]: <text>`` to
stderr and exit nonzero.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .algebra import GroupAlgebra
from .codes import code_from_side, code_right_ideal
from .errors import GroupCodesError, ParseError
from .field import field_from_literal
from .group import group_from_spec
from .lcp import EUCLIDEAN, MODES, SWEEP_BUDGET, lcp_analyze, sweep
from .weights import DEFAULT_BUDGET

EXIT_CODES = {
    "invalid": 1,
    "usage": 2,
    "parse": 2,
    "budget": 3,
    "not-idempotent": 4,
    "zero-code": 5,
    "verification": 6,
}


class CliError(Exception):
    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        raise CliError("usage", message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a value >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="groupcodes", description="Group codes and linear complementary pairs in KG.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser, budget_default: int, budget_help: str) -> None:
        p.add_argument("--field", required=True, help="field order, e.g. 2, 4, 9")
        p.add_argument("--group", required=True, help="cyclic:m | abelian:m1,m2,... | dihedral:m | table:<path>")
        p.add_argument("--budget", type=_positive_int, default=budget_default, help=budget_help)
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--workers", type=_positive_int, default=1, help="worker threads (output is identical)")
        p.add_argument("--wall-clock", action="store_true", help="add elapsed seconds to timings")

    p = sub.add_parser("analyze", help="report on the pair ((1-e)KG, eKG)")
    common(p, DEFAULT_BUDGET, "maximum codewords enumerated per distance (default 2^24)")
    p.add_argument("--idempotent", required=True, help="idempotent e, e.g. '1+a+a^2+a^4+b+a^2b'")
    p.add_argument("--mode", choices=MODES, default=EUCLIDEAN)

    p = sub.add_parser("sweep", help="check every idempotent of KG")
    common(p, SWEEP_BUDGET, "maximum algebra elements scanned (default 2^20)")
    p.add_argument("--distance-budget", type=_positive_int, default=DEFAULT_BUDGET)
    p.add_argument("--mode", choices=MODES, default=EUCLIDEAN)
    p.add_argument("--list", action="store_true", help="include every idempotent, not just counterexamples")

    p = sub.add_parser("distance", help="dimension and minimum distance of an ideal")
    common(p, DEFAULT_BUDGET, "maximum codewords enumerated (default 2^24)")
    p.add_argument("--generators", required=True, help="generators separated by ';'")
    p.add_argument("--side", choices=("right", "left", "two-sided"), default="right")
    return parser


def _algebra(args) -> GroupAlgebra:
    return GroupAlgebra(field_from_literal(args.field), group_from_spec(args.group))


def _input(args, **extra) -> dict:
    doc = {"command": args.command, "field": args.field, "group": args.group}
    doc.update(extra)
    doc["budget"] = args.budget
    return doc


def _timings(args, start: float, **counters) -> dict:
    out = dict(counters)
    if args.wall_clock:
        out["wall_seconds"] = round(time.perf_counter() - start, 6)
    return out


def cmd_analyze(args) -> dict:
    start = time.perf_counter()
    algebra = _algebra(args)
    e = algebra.parse(args.idempotent)
    if not e.is_idempotent():
        raise CliError("not-idempotent", f"e = {e} is not idempotent (e*e = {e * e})")
    c = code_right_ideal([algebra.one - e])
    d = code_right_ideal([e])
    report = lcp_analyze(c, d, args.mode, budget=args.budget, workers=args.workers)
    body = report.to_dict()
    mode = body.pop("mode")
    return {
        "input": _input(args, idempotent=args.idempotent, mode=mode),
        **body,
        "timings": _timings(args, start, codewords_enumerated=report.codewords_enumerated),
    }


def cmd_sweep(args) -> dict:
    start = time.perf_counter()
    algebra = _algebra(args)
    summary = sweep(
        algebra, args.mode, budget=args.budget, distance_budget=args.distance_budget, workers=args.workers
    )
    doc = {
        "input": _input(args, mode=args.mode, distance_budget=args.distance_budget),
        "summary": summary.counts(),
        "counterexamples": [c.to_dict() for c in summary.counterexamples],
    }
    if args.list:
        doc["idempotents"] = [c.to_dict() for c in summary.checks]
    doc["timings"] = _timings(args, start, elements_scanned=summary.elements_scanned)
    return doc


def cmd_distance(args) -> dict:
    start = time.perf_counter()
    algebra = _algebra(args)
    gens = [algebra.parse(text) for text in _split_generators(args.generators)]
    code = code_from_side(gens, args.side)
    dist = code.min_distance(args.budget, workers=args.workers)
    return {
        "input": _input(args, generators=args.generators, side=args.side),
        "dimension": code.dim,
        "distance": dist,
        "timings": _timings(args, start, codewords_enumerated=algebra.field.order**code.dim),
    }


def _split_generators(text: str) -> list[str]:
    parts = text.split(";")
    if any(not part.strip() for part in parts):
        raise ParseError("empty generator in list", None, text)
    return parts


def render_text(doc: dict) -> str:
    lines: list[str] = []

    def walk(obj, prefix: str) -> None:
        if isinstance(obj, dict):
            for key, value in obj.items():
                walk(value, f"{prefix}.{key}" if prefix else key)
        elif isinstance(obj, list):
            lines.append(f"{prefix}: {len(obj)} item(s)")
            for i, item in enumerate(obj):
                walk(item, f"{prefix}[{i}]")
        else:
            lines.append(f"{prefix}: {json.dumps(obj) if not isinstance(obj, str) else obj}")

    walk(doc, "")
    return "\n".join(lines) + "\n"


def render(doc: dict, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    return render_text(doc)


COMMANDS = {"analyze": cmd_analyze, "sweep": cmd_sweep, "distance": cmd_distance}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        doc = COMMANDS[args.command](args)
    except CliError as exc:
        return _fail(exc.code, str(exc))
    except GroupCodesError as exc:
        return _fail(exc.code, str(exc))
    except ValueError as exc:
        return _fail("invalid", str(exc))
    sys.stdout.write(render(doc, args.format))
    return 0


def _fail(code: str, message: str) -> int:
    message = " ".join(message.split())
    sys.stderr.write(f"error[{code}]: {message}\n")
    return EXIT_CODES.get(code, 1)


if __name__ == "__main__":
    sys.exit(main())
