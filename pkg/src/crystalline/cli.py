"""Command-line front end.

Exit codes: 0 ok, 1 validation or cross-check failure, 2 parse error,
3 method inapplicable (structural method when the URC fails).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .catalog import CATALOG, catalog_spec
from .cocycle import CocycleValidationError
from .expr import ExpressionError
from .fileformat import SpecFileError, dump_json, load_spec, spec_to_json
from .groups import GroupValidationError
from .report import EXIT_FAILURE, EXIT_OK, EXIT_PARSE, METHODS, render_text, run_center

__all__ = ["main", "build_parser"]


def _load(path: str, err) -> tuple[object | None, int]:
    try:
        return load_spec(path), EXIT_OK
    except FileNotFoundError:
        print(f"error: no such file {path}", file=err)
        return None, EXIT_PARSE
    except SpecFileError as exc:
        print(f"parse error: {exc}", file=err)
        return None, EXIT_PARSE
    except GroupValidationError as exc:
        print(f"invalid group: {exc}", file=err)
        return None, EXIT_FAILURE


def _build(path: str, out, err):
    spec, code = _load(path, err)
    if spec is None:
        return None, code
    try:
        return spec.build(), EXIT_OK
    except CocycleValidationError as exc:
        v = exc.violation
        print(f"invalid: {v.identity} fails", file=out)
        print(f"  witness: ({', '.join(v.witness)})", file=out)
        print(f"  {v.detail}", file=out)
        return None, EXIT_FAILURE


def cmd_validate(args, out, err) -> int:
    A, code = _build(args.path, out, err)
    if A is None:
        return code
    reg = A.cocycle.regularity()
    names = A.group.names
    print(f"valid: {A.name}, |G| = {A.group.order}, D = {A.ring.label}", file=out)
    print(f"  W = {{{', '.join(names[g] for g in reg.W)}}}", file=out)
    print(f"  W_reg = {{{', '.join(names[g] for g in reg.W_reg)}}}", file=out)
    urc = "holds" if reg.urc_holds else "fails at (" + ", ".join(names[g] for g in reg.urc_witness) + ")"
    print(f"  URC {urc}", file=out)
    return EXIT_OK


def cmd_center(args, out, err) -> int:
    A, code = _build(args.path, out, err)
    if A is None:
        return code
    run = run_center(A, args.method)
    if args.json:
        out.write(dump_json(run.document) + "\n")
    else:
        out.write(render_text(run.document))
    s = run.document.get("structural")
    if s is not None and not s["available"] and args.method == "structural":
        print(f"error: {s['reason']}", file=err)
    return run.exit_code


def cmd_mul(args, out, err) -> int:
    A, code = _build(args.path, out, err)
    if A is None:
        return code
    try:
        lhs = A.parse(args.lhs)
        rhs = A.parse(args.rhs)
    except (ExpressionError, KeyError, ValueError) as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    print(A.format(lhs * rhs), file=out)
    return EXIT_OK


def cmd_catalog(args, out, err) -> int:
    if args.action == "list":
        for name, build in CATALOG.items():
            print(f"{name:22s} {build().description}", file=out)
        return EXIT_OK
    if not args.name:
        print("error: catalog emit needs a NAME", file=err)
        return EXIT_PARSE
    try:
        spec = catalog_spec(args.name)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=err)
        return EXIT_PARSE
    text = dump_json(spec_to_json(spec)) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crystalline",
                                description="Crystalline graded rings: validation, products and centers.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("validate", help="check the group, twist and cocycle identities")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)
    c = sub.add_parser("center", help="compute the center")
    c.add_argument("path")
    c.add_argument("--method", choices=METHODS, default="both")
    c.add_argument("--json", action="store_true", help="print the machine-readable report")
    c.set_defaults(func=cmd_center)
    m = sub.add_parser("mul", help="multiply two elements, e.g. '(1+i)*u[x]'")
    m.add_argument("path")
    m.add_argument("lhs")
    m.add_argument("rhs")
    m.set_defaults(func=cmd_mul)
    k = sub.add_parser("catalog", help="list or emit the shipped examples")
    k.add_argument("action", choices=("list", "emit"))
    k.add_argument("name", nargs="?")
    k.add_argument("-o", "--output", help="write the emitted file here instead of stdout")
    k.set_defaults(func=cmd_catalog)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    return args.func(args, out, err)
