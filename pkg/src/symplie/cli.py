"""Command-line front end: evaluation, decompositions and the check runner."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .dsl import DSLError, evaluate, format_value, to_tensor
from .sprep import (
    YoungDiagram,
    decompose,
    format_decomposition,
    span_closure,
    weights_of_subspace,
    weyl_dim,
)
from .spaces import COLUMNS, decompose_space

NAMED_SPACES = ("h2", "wedge2-h2", "hstar2", "hg2") + COLUMNS


class UsageError(Exception):
    pass


def _workers() -> int:
    raw = os.environ.get("ENGINE_THREADS")
    if raw:
        try:
            n = int(raw)
        except ValueError:
            raise UsageError(f"ENGINE_THREADS must be an integer, got {raw!r}")
        if n < 1:
            raise UsageError("ENGINE_THREADS must be positive")
        return n
    return os.cpu_count() or 1


def _genus(value: str) -> int:
    g = int(value)
    if g < 1:
        raise argparse.ArgumentTypeError("genus must be at least 1")
    return g


def report(g: int, results) -> dict:
    from .checks import summarize

    return {
        "genus": g,
        "engine_version": __version__,
        "checks": [
            {
                "id": r.id,
                "paper_location": r.paper_location,
                "status": r.status,
                "expected": r.expected,
                "computed": r.computed,
                "elapsed_ms": r.elapsed_ms,
                "notes": r.notes,
            }
            for r in results
        ],
        "summary": summarize(results),
    }


def cmd_verify(args) -> int:
    from .checks import FAIL, SKIP, check_ids, run_all

    ids = args.check or None
    if ids:
        unknown = [i for i in ids if i not in check_ids()]
        if unknown:
            raise UsageError("unknown check id(s): " + ", ".join(unknown))
    results = run_all(args.genus, ids, workers=_workers())
    doc = report(args.genus, results)
    for r in results:
        tag = "SKIP" if r.status == SKIP else r.status.upper()
        line = f"{tag:<5} {r.id:<26} {r.elapsed_ms:>9.1f} ms"
        if r.status == FAIL and r.notes:
            line += f"  [{r.notes}]"
        print(line)
    s = doc["summary"]
    print(f"pass: {s['pass']}, fail: {s['fail']}, skipped: {s['skipped']}")
    if args.json:
        text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text, encoding="utf-8")
    return 1 if s["fail"] else 0


def cmd_eval(args) -> int:
    print(format_value(evaluate(args.expr, args.genus)))
    return 0


def cmd_decompose(args) -> int:
    g = args.genus
    if args.target in NAMED_SPACES:
        dec = decompose_space(args.target, g)
    else:
        v = evaluate(args.target, g)
        t = to_tensor(v.to_tensor() if hasattr(v, "sizes") else v)
        if not t:
            print("0")
            return 0
        dec = decompose(weights_of_subspace(span_closure([t], g)), g)
    print(format_decomposition(dec) or "0")
    if args.verbose:
        for lam, m in sorted(dec.items(), reverse=True):
            print(f"  {str(lam):>10}  x{m}  dim {weyl_dim(lam, g)}")
    return 0


def cmd_dim(args) -> int:
    text = args.diagram.strip()
    if text.startswith("[") and " " in text.strip("[] "):
        rows = [int(x) for x in text.strip("[]").split()]
        lam = YoungDiagram(rows)
    else:
        lam = YoungDiagram.parse(text)
    print(weyl_dim(lam, args.genus))
    return 0


def cmd_list(args) -> int:
    from .checks import REGISTRY

    for c in REGISTRY.values():
        print(f"{c.id:<26} g>={c.min_genus}  {c.location}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symplie", description="Exact symplectic tensor and tree algebra engine.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification registry")
    v.add_argument("--genus", type=_genus, default=4)
    v.add_argument("--check", action="append", metavar="ID")
    v.add_argument("--json", metavar="PATH", help="write the JSON report (- for stdout)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate an expression")
    e.add_argument("--genus", type=_genus, required=True)
    e.add_argument("expr")
    e.set_defaults(func=cmd_eval)

    d = sub.add_parser("decompose", help="decompose a named space or the module generated by an expression")
    d.add_argument("--genus", type=_genus, required=True)
    d.add_argument("-v", "--verbose", action="store_true")
    d.add_argument("target", help=f"one of {', '.join(NAMED_SPACES)} or an expression")
    d.set_defaults(func=cmd_decompose)

    m = sub.add_parser("dim", help="dimension of an irreducible representation")
    m.add_argument("--genus", type=_genus, required=True)
    m.add_argument("diagram", help='e.g. "[2 2]" or "[2^2]"')
    m.set_defaults(func=cmd_dim)

    ls = sub.add_parser("list", help="list registered checks")
    ls.set_defaults(func=cmd_list)
    return p


def main(argv: list[str] | None = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return args.func(args)
    except DSLError as e:
        print(str(e), file=sys.stderr)
        return 2
    except (UsageError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
