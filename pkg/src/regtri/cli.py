"""Command-line interface: ``regtri <subcommand> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 unreadable or
invalid input file.  Reports go to standard output, diagnostics to
standard error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import triformat
from .classify import classify_closed
from .equivalence import equivalent
from .errors import DegreeTooSmall, RegtriError, ResourceLimit, TriFormatError, UnsupportedInput
from .generator.counts import layer_counts_closed_form, layer_counts_recurrence
from .generator.layered import from_surface, generate, max_vertices_default
from .generator.verify import verify_layer_invariants
from .geometry.models import EUCLIDEAN, HYPERBOLOID, SPHERICAL
from .geometry.realize import realize, verify_metric
from .geometry.render import render_svg, to_off

EXIT_OK = 0
EXIT_CHECK = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

MODEL_NAMES = {"sphere": SPHERICAL, "flat": EUCLIDEAN, "hyperbolic": HYPERBOLOID}


class _InputError(Exception):
    """Raised for problems with an input file (exit 3)."""


class _UsageError(Exception):
    """Raised for argument values that parse but make no sense (exit 2)."""


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, "r", encoding="ascii", newline="") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _load(path: str) -> triformat.TriDocument:
    try:
        return triformat.loads(_read_text(path))
    except TriFormatError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _write_text(path: str, text: str, out) -> None:
    if path == "-":
        out.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _disk_from(doc: triformat.TriDocument, path: str):
    if doc.kind != "disk":
        raise _InputError(f"{path}: expected a layered disc, got a closed surface")
    try:
        return from_surface(doc.surface, doc.layers or None)
    except RegtriError as exc:
        raise _InputError(f"{path}: {exc}") from exc


# ------------------------------------------------------------- subcommands


def cmd_generate(args, out) -> int:
    cap = args.max_vertices if args.max_vertices is not None else max_vertices_default()
    try:
        disk = generate(args.degree, args.layers, max_vertices=cap)
    except (DegreeTooSmall, ValueError) as exc:
        raise _UsageError(str(exc)) from exc
    _write_text(args.out, disk.to_tri(), out)
    return EXIT_OK


def cmd_count(args, out) -> int:
    d, k = args.degree, args.layers
    if k < 0:
        raise _UsageError("--layers must be >= 0")
    try:
        rec = layer_counts_recurrence(d, k)
        closed = layer_counts_closed_form(d, k) if args.closed_form else None
    except DegreeTooSmall as exc:
        raise _UsageError(str(exc)) from exc
    if closed is None:
        out.write("d\tk\tn_k\n")
        for j, n in enumerate(rec):
            out.write(f"{d}\t{j}\t{n}\n")
        return EXIT_OK
    out.write("d\tk\tn_k\tclosed_form\tmatch\n")
    ok = True
    for j, (n, c) in enumerate(zip(rec, closed)):
        same = n == c
        ok &= same
        out.write(f"{d}\t{j}\t{n}\t{c}\t{'yes' if same else 'no'}\n")
    return EXIT_OK if ok else EXIT_CHECK


def cmd_verify(args, out) -> int:
    disk = _disk_from(_load(args.file), args.file)
    report = verify_layer_invariants(disk)
    out.write((report.tsv() if args.format == "tsv" else report.text()) + "\n")
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_classify(args, out) -> int:
    doc = _load(args.file)
    try:
        cls = classify_closed(doc.surface)
    except RegtriError as exc:
        raise _InputError(f"{args.file}: {exc}") from exc
    if args.format == "tsv":
        out.write(f"case\t{cls.case}\nd\t{cls.degree}\nchi\t{cls.chi}\n")
    else:
        out.write(cls.line() + "\n")
    return EXIT_OK


def cmd_isocheck(args, out) -> int:
    a = _load(args.first).surface
    b = _load(args.second).surface
    try:
        eq = equivalent(a, b)
    except RegtriError as exc:
        raise _InputError(str(exc)) from exc
    out.write(("equivalent" if eq else "inequivalent") + "\n")
    return EXIT_OK if eq else EXIT_CHECK


def cmd_realize(args, out) -> int:
    doc = _load(args.file)
    try:
        target = doc.surface if doc.kind == "closed" else _disk_from(doc, args.file)
        r = realize(target)
    except UnsupportedInput as exc:
        raise _InputError(f"{args.file}: {exc}") from exc
    except RegtriError as exc:
        raise _InputError(f"{args.file}: {exc}") from exc
    want = MODEL_NAMES[args.model]
    if r.model != want:
        raise _InputError(f"{args.file}: input realises in the {r.model} model, not {args.model}")
    report = verify_metric(r, args.tol)
    out.write((report.tsv() if args.format == "tsv" else report.text()) + "\n")
    if args.svg:
        _write_text(args.svg, render_svg(r, arcs=args.arcs), out)
    if args.off:
        _write_text(args.off, to_off(r), out)
    return EXIT_OK if report.passed else EXIT_CHECK


# ------------------------------------------------------------------ parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="regtri",
                description="Construct, verify, classify and realise degree-regular triangulations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="build the layered disc X_k as a TRI file")
    g.add_argument("--degree", "-d", type=int, required=True)
    g.add_argument("--layers", "-k", type=int, required=True)
    g.add_argument("--out", "-o", default="-", help="output path (default stdout)")
    g.add_argument("--max-vertices", type=int, default=None,
                   help="vertex cap (default $REGTRI_MAX_VERTICES or 5000000)")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("count", help="layer sizes n_0..n_k as TSV")
    c.add_argument("--degree", "-d", type=int, required=True)
    c.add_argument("--layers", "-k", type=int, required=True)
    c.add_argument("--closed-form", action="store_true",
                   help="also evaluate the closed form and compare")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="audit the layer invariants of a TRI disc")
    v.add_argument("file")
    v.add_argument("--format", choices=("text", "tsv"), default="text")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("classify", help="classify a closed regular surface")
    k.add_argument("file")
    k.add_argument("--format", choices=("text", "tsv"), default="text")
    k.set_defaults(func=cmd_classify)

    i = sub.add_parser("isocheck", help="test two TRI surfaces for combinatorial equivalence")
    i.add_argument("first")
    i.add_argument("second")
    i.set_defaults(func=cmd_isocheck)

    r = sub.add_parser("realize", help="realise in a constant-curvature model and audit the metric")
    r.add_argument("file")
    r.add_argument("--model", choices=sorted(MODEL_NAMES), required=True)
    r.add_argument("--svg", metavar="OUT")
    r.add_argument("--off", metavar="OUT")
    r.add_argument("--arcs", action="store_true", help="draw hyperbolic edges as geodesic arcs")
    r.add_argument("--tol", type=float, default=1e-9)
    r.add_argument("--format", choices=("text", "tsv"), default="text")
    r.set_defaults(func=cmd_realize)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except _UsageError as exc:
        print(f"regtri: error: {exc}", file=err)
        return EXIT_USAGE
    except ResourceLimit as exc:
        print(f"regtri: error: {exc} (raise --max-vertices)", file=err)
        return EXIT_USAGE
    except _InputError as exc:
        print(f"regtri: error: {exc}", file=err)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
