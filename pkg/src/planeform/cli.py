"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage / parse / IO error,
3 mathematical error (with a remediation hint).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .arith import DEFAULT_TOL, EXACT, NUMERIC, parse_scalar
from .errors import ArgumentError, MathError, PlaneFormError
from .io import dumps_matrix, read_matrix, to_dot
from .jordan import (
    aff,
    format_jordan,
    format_weyr,
    jordan_of_plane,
    jordan_of_weyr,
    parse_jordan,
    parse_weyr,
    similar,
    weyr_of_general,
    weyr_of_plane,
)
from .linalg import Matrix
from .partition import Partition, enumerate_partitions
from .plane import PlaneMatrix, recognize
from .symbolic import build_p, substitute
from .verify import run_verify

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_MATH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so :func:`run_command` controls the exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageExit(message)


class _UsageExit(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ArgumentError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _tol(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid tolerance {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # the subcommand copies must not overwrite values given before the subcommand
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--mode", choices=[EXACT, NUMERIC], default=default(EXACT),
                       help="exact Q(i) arithmetic (default) or floating point")
    flags.add_argument("--tol", type=_tol, default=default(DEFAULT_TOL),
                       help=f"numeric tolerance (default {DEFAULT_TOL:g})")
    flags.add_argument("-o", "--output", metavar="PATH", default=default(None),
                       help="write output here instead of stdout")
    return flags


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    parser = _Parser(prog="planeform", description="Canonical plane form of square matrices.",
                     parents=[_global_flags(suppress=False)])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("partitions", parents=[common], help="list the partitions of n")
    p.add_argument("n", type=_positive_int)

    p = sub.add_parser("plane-symbolic", parents=[common], help="print the symbolic plane matrix")
    p.add_argument("partition", type=_partition)

    p = sub.add_parser("plane-subst", parents=[common],
                       help="substitute values into the symbolic matrix; writes a matrix file")
    p.add_argument("partition", type=_partition)
    p.add_argument("values", nargs="+")

    for name, text in (("jordan", "Jordan form of a matrix file"),
                       ("weyr", "Weyr array of a matrix file"),
                       ("aff", "canonical plane representative of a matrix file")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("path")
        p.add_argument("--eigenvalues", metavar="SPEC",
                       help="spectrum as a Jordan form, Weyr text or comma-separated values")

    p = sub.add_parser("similar", parents=[common], help="decide similarity of two matrix files")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("--eigenvalues", metavar="SPEC")

    p = sub.add_parser("verify", parents=[common], help="check the plane structure for n")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--no-round-trips", action="store_true", help="skip the eigenvalue pool sweep")

    p = sub.add_parser("dot", parents=[common], help="export the digraph of a matrix file")
    p.add_argument("path")
    p.add_argument("out_path")
    return parser


def _parse_eigenvalues(spec: str | None, mode: str):
    """Accept a Jordan form, Weyr lines, or a comma-separated list of values."""
    if spec is None:
        return None
    text = spec.strip()
    if "J" in text:
        return parse_jordan(text, mode).spectrum()
    if ":" in text:
        w = parse_weyr(text.replace(";", "\n"), mode)
        return {lam: sum(seq) for lam, seq in w.items()}
    return [parse_scalar(t, mode) for t in text.split(",") if t.strip()]


def _load(path: str, mode: str) -> Matrix:
    m = read_matrix(path)
    mat = m.matrix if isinstance(m, PlaneMatrix) else m
    return mat.to_mode(mode)


def _jordan_text(args) -> str:
    mat = _load(args.path, args.mode)
    spectrum = _parse_eigenvalues(args.eigenvalues, args.mode)
    plane = recognize(mat, args.tol) if spectrum is None else None
    if plane is not None:
        return format_jordan(jordan_of_plane(plane, args.mode, args.tol))
    return format_jordan(jordan_of_weyr(weyr_of_general(mat, spectrum, args.mode, args.tol)))


def _weyr_text(args) -> str:
    mat = _load(args.path, args.mode)
    spectrum = _parse_eigenvalues(args.eigenvalues, args.mode)
    plane = recognize(mat, args.tol) if spectrum is None else None
    if plane is not None:
        return format_weyr(weyr_of_plane(plane, args.mode, args.tol))
    return format_weyr(weyr_of_general(mat, spectrum, args.mode, args.tol))


def _dispatch(args) -> tuple[int, str]:
    cmd = args.command
    if cmd == "partitions":
        return EXIT_OK, "\n".join(str(p) for p in enumerate_partitions(args.n))
    if cmd == "plane-symbolic":
        return EXIT_OK, str(build_p(args.partition))
    if cmd == "plane-subst":
        values = [parse_scalar(v, args.mode) for v in args.values]
        mat = substitute(build_p(args.partition), values, args.mode)
        plane = recognize(mat, args.tol)
        if plane is None or plane.partition != args.partition:
            plane = None
        return EXIT_OK, dumps_matrix(plane or mat).rstrip("\n")
    if cmd == "jordan":
        return EXIT_OK, _jordan_text(args)
    if cmd == "weyr":
        return EXIT_OK, _weyr_text(args)
    if cmd == "aff":
        mat = _load(args.path, args.mode)
        rep = aff(mat, _parse_eigenvalues(args.eigenvalues, args.mode), args.mode, args.tol)
        return EXIT_OK, dumps_matrix(rep).rstrip("\n")
    if cmd == "similar":
        a, b = _load(args.path_a, args.mode), _load(args.path_b, args.mode)
        same = similar(a, b, args.mode, args.tol, _parse_eigenvalues(args.eigenvalues, args.mode))
        return EXIT_OK, "similar" if same else "not similar"
    if cmd == "verify":
        report = run_verify(args.n, round_trips=not args.no_round_trips)
        return (EXIT_OK if report.ok else EXIT_VERIFY), report.summary()
    if cmd == "dot":
        text = to_dot(_load(args.path, args.mode), tol=args.tol if args.mode == NUMERIC else 0.0)
        with open(args.out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        return EXIT_OK, f"wrote {args.out_path}"
    raise ArgumentError(f"unknown command {cmd!r}")


def run_command(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    """Parse ``argv``, run the command and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageExit as exc:
        print(f"planeform: error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        code, text = _dispatch(args)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            print(text, file=stdout)
        return code
    except MathError as exc:
        print(f"planeform: {type(exc).__name__}: {exc}", file=stderr)
        if exc.hint:
            print(f"hint: {exc.hint}", file=stderr)
        return EXIT_MATH
    except (ArgumentError, OSError) as exc:
        print(f"planeform: error: {exc}", file=stderr)
        return EXIT_USAGE
    except PlaneFormError as exc:
        print(f"planeform: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_VERIFY


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run_command(argv))


__all__ = ["EXIT_MATH", "EXIT_OK", "EXIT_USAGE", "EXIT_VERIFY", "build_parser", "main", "run_command"]
