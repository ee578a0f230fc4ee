"""Command-line front end.

Exit codes: 0 success, 1 property violation / oracle mismatch, 2 bad input,
3 the element is not (known to be) Drazin invertible.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .engine import drazin_membership
from .oracle import cross_validate
from .rings import (
    IdempotentFamily,
    Integers,
    Matrix,
    Ring,
    RingError,
    element_from_json,
    enumerate_elements,
    enumerate_idempotents,
    ring_from_json,
)
from .theorems import PAIR_THEOREMS, THEOREMS, remark37_regression, sweep

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_VERDICT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _fail(msg: str, code: int = EXIT_INPUT) -> int:
    print(f"error: {msg}", file=sys.stderr)
    _emit({"error": msg})
    return code


def _read_json(arg: str | None):
    """JSON from stdin ('-' or None), a file path, or the argument itself."""
    try:
        if arg is None or arg == "-":
            text = sys.stdin.read()
        elif os.path.isfile(arg):
            with open(arg) as fh:
                text = fh.read()
        else:
            text = arg
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON: {exc}") from exc


def _ring(arg: str) -> Ring:
    return ring_from_json(_read_json(arg))


def _idempotent_family(ring: Ring, bound: int | None) -> IdempotentFamily:
    if ring.is_finite:
        return IdempotentFamily.exhaustive(ring)
    if ring == Matrix(2, Integers()):
        if bound is None:
            raise InputError("--bound is required for 2x2 integer matrices")
        return IdempotentFamily.parametrized(bound)
    raise InputError(f"no idempotent family for infinite ring {ring.describe()}")


def cmd_compute(args) -> int:
    a = element_from_json(_read_json(args.element))
    d = drazin_membership(a)
    if not d.is_member:
        print(f"{a!r}: {d.verdict.value} ({d.method})", file=sys.stderr)
        _emit({"verdict": d.verdict.value, "method": d.method})
        return EXIT_VERDICT
    _emit({"inverse": d.witness.inverse.to_json(), "index": d.witness.index, "method": d.method})
    return EXIT_OK


def cmd_verify(args) -> int:
    ring = _ring(args.ring)
    labels = list(PAIR_THEOREMS) if args.theorem == "all" else [args.theorem]
    if args.theorem == "all" and isinstance(ring, Integers):
        labels.append("remark37")
    family = None
    if isinstance(ring, Integers):
        # 0 and 1 are the only idempotents of Z
        family = IdempotentFamily.explicit(ring, [0, 1])
    elif any(label in THEOREMS for label in labels):
        family = _idempotent_family(ring, args.bound)
    summaries = []
    violations = 0
    for label in labels:
        if label == "remark37":
            rep = remark37_regression(ring=ring, p=ring.one(), q=ring.one())
            _emit(rep.to_json())
            summaries.append({"theorem": "remark37", "verdicts": {k: v.value for k, v in rep.verdicts().items()}})
            continue
        first = family
        if label == "lemma26":
            first = list(enumerate_elements(ring)) if ring.is_finite else family
        result = sweep(label, first, family, parallelism=args.jobs)
        for rep in result.reports:
            _emit(rep.to_json())
        summaries.append(result.to_json())
        violations += len(result.violations)
    _emit({"summary": {
        "ring": ring.to_json(),
        "theorems": summaries,
        "pairs_checked": sum(s.get("pairs_checked", 0) for s in summaries),
        "violations": violations,
    }})
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_oracle(args) -> int:
    result = cross_validate(_ring(args.ring))
    _emit({
        "ring": result.ring.to_json(),
        "elements_checked": result.elements_checked,
        "mismatches": len(result.mismatches),
        "details": result.mismatches,
    })
    return EXIT_VIOLATION if result.mismatches else EXIT_OK


def cmd_idempotents(args) -> int:
    ring = _ring(args.ring)
    family = _idempotent_family(ring, args.bound)
    _emit([ring.encode(e.value) for e in enumerate_idempotents(family)])
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="drazin", description="Exact Drazin inverses and idempotent theorem checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="Drazin inverse of one element")
    p.add_argument("element", nargs="?", default="-", help="element JSON, a file holding it, or '-' for stdin")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="sweep the idempotent theorems over a ring")
    p.add_argument("ring", help="ring JSON or a file holding it")
    p.add_argument("--theorem", default="all", choices=["all", "remark37", *THEOREMS])
    p.add_argument("--bound", type=_positive, default=None, help="entry bound for 2x2 integer idempotents")
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="cross-check the engine against brute force")
    p.add_argument("ring", help="ring JSON or a file holding it")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("idempotents", help="list idempotents of a ring")
    p.add_argument("ring", help="ring JSON or a file holding it")
    p.add_argument("--bound", type=_positive, default=None)
    p.set_defaults(func=cmd_idempotents)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (InputError, RingError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
