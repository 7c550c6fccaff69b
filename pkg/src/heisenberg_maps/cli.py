"""Command-line front end.

Exit codes: 0 success or property holds, 1 property fails, 2 usage, parse or
I/O error. Reports are ``key=value`` lines followed by one status line. When a
command produces a file and ``--out`` is omitted, the file goes to stdout and
the report to stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import formats
from .errors import HeisenbergError, ParseError
from .families import EXAMPLES, example_g, example_h, example_newer, example_r
from .heisenberg import cn_from_interior
from .linalg import Matrix, format_rational, parse_rational, rank
from .maps import (
    commuting_space_basis,
    constraint_matrix,
    decompose,
    dimension_formula,
    is_standard_form,
    parametrization_matrix,
    polarization_witness,
    reconstruct,
    standard_form_map,
)
from .rng import SplitMix64, random_decomposition, random_standard_params


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # errors surface as UsageError so main() owns the exit code
    def error(self, message):
        raise UsageError(message)


def _n_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 3:
        raise argparse.ArgumentTypeError(f"n must be >= 3, got {n}")
    return n


def _count_arg(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError(f"count must be >= 1, got {k}")
    return k


def _seed_arg(text: str) -> int:
    try:
        s = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= s < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return s


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hcm", description="Commuting linear maps on the Heisenberg algebra.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dim", help="compare kernel dimension, closed form and parametrization rank")
    p.add_argument("--n", type=_n_arg, required=True)

    p = sub.add_parser("basis", help="write the canonical basis of the commuting-map space")
    p.add_argument("--n", type=_n_arg, required=True)
    p.add_argument("--out")

    p = sub.add_parser("check", help="decide whether the maps in a file are commuting")
    p.add_argument("map_path")

    p = sub.add_parser("decompose", help="write the canonical decomposition of a commuting map")
    p.add_argument("map_path")
    p.add_argument("--out")

    p = sub.add_parser("standard", help="test whether a commuting map has the standard form")
    p.add_argument("map_path")

    p = sub.add_parser("example", help="write one of the example maps")
    p.add_argument("--name", choices=EXAMPLES, required=True)
    p.add_argument("--n", type=_n_arg, required=True)
    p.add_argument("--param", type=_rational_arg, action="append", default=[])
    p.add_argument("--out")

    p = sub.add_parser("synth", help="write seeded random commuting maps")
    p.add_argument("--n", type=_n_arg, required=True)
    p.add_argument("--seed", type=_seed_arg, default=0)
    p.add_argument("--count", type=_count_arg, default=1)
    p.add_argument("--standard-only", action="store_true")
    p.add_argument("--out")
    return parser


class _Report:
    def __init__(self):
        self.lines: list[str] = []

    def add(self, line: str) -> None:
        self.lines.append(line)

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(artifact: str, out: str | None, report: _Report, stdout, stderr) -> None:
    if out is None:
        stdout.write(artifact)
        stderr.write(report.text())
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(artifact)
        stdout.write(report.text())


def cmd_dim(args, report: _Report) -> int:
    n = args.n
    kernel_dim = len(commuting_space_basis(n))
    formula_dim = dimension_formula(n)
    param_rank = rank(parametrization_matrix(n))
    report.add(f"n={n}")
    report.add(f"kernel_dim={kernel_dim}")
    report.add(f"formula_dim={formula_dim}")
    report.add(f"param_rank={param_rank}")
    ok = kernel_dim == formula_dim == param_rank
    report.add("MATCH" if ok else "MISMATCH")
    return 0 if ok else 1


def cmd_basis(args, report: _Report):
    maps = commuting_space_basis(args.n)
    report.add(f"n={args.n}")
    report.add(f"constraints={constraint_matrix(args.n).nrows}")
    report.add(f"maps={len(maps)}")
    report.add("OK")
    return 0, formats.format_maps(maps)


def cmd_check(args, report: _Report) -> int:
    maps = formats.parse_maps(_read(args.map_path))
    failures = 0
    for k, f in enumerate(maps, 1):
        w = polarization_witness(f)
        if w is not None:
            failures += 1
        if len(maps) == 1:
            if w is not None:
                report.add(f"witness={w[0]},{w[1]}")
        elif w is None:
            report.add(f"map={k} status=COMMUTING")
        else:
            report.add(f"map={k} status=NOT_COMMUTING witness={w[0]},{w[1]}")
    if len(maps) > 1:
        report.add(f"maps={len(maps)} commuting={len(maps) - failures}")
    report.add("COMMUTING" if failures == 0 else "NOT_COMMUTING")
    return 0 if failures == 0 else 1


def _not_commuting(f, report: _Report) -> bool:
    w = polarization_witness(f)
    if w is None:
        return False
    report.add(f"witness={w[0]},{w[1]}")
    report.add("NOT_COMMUTING")
    return True


def cmd_decompose(args, report: _Report):
    f = formats.parse_map(_read(args.map_path))
    if _not_commuting(f, report):
        return 1, None
    d = decompose(f)
    report.add(f"n={f.n}")
    if reconstruct(d) != f:
        report.add("RECONSTRUCT_FAIL")
        return 1, formats.format_decomposition(d)
    report.add("RECONSTRUCT_OK")
    return 0, formats.format_decomposition(d)


def cmd_standard(args, report: _Report) -> int:
    f = formats.parse_map(_read(args.map_path))
    if _not_commuting(f, report):
        return 1
    w = is_standard_form(f)
    if w is None:
        report.add("NOT_STANDARD_FORM")
        return 1
    report.add("mu=" + " ".join(format_rational(v) for v in w.mu))
    report.add(f"STANDARD lambda={format_rational(w.lam)}")
    return 0


def _build_example(name: str, n: int, params: list):
    if name == "r":
        if len(params) != 1:
            raise UsageError("example r takes exactly one --param (the scalar a)")
        return example_r(n, params[0])
    if name == "g":
        return example_g(n, params)
    if name == "h":
        if params:
            raise UsageError("example h takes no --param")
        return example_h(n)
    if not params:
        return example_newer(n, Matrix.zeros(n))
    if len(params) != (n - 2) ** 2:
        raise UsageError(f"example newer takes 0 or {(n - 2) ** 2} --param values (A interior, row-major)")
    return example_newer(n, cn_from_interior(n, params))


def cmd_example(args, report: _Report):
    f = _build_example(args.name, args.n, args.param)
    report.add(f"example={args.name}")
    report.add(f"n={args.n}")
    ok = polarization_witness(f) is None
    report.add("COMMUTING" if ok else "NOT_COMMUTING")
    return (0 if ok else 1), formats.format_map(f)


def cmd_synth(args, report: _Report):
    n = args.n
    rng = SplitMix64(args.seed)
    maps = []
    for _ in range(args.count):
        if args.standard_only:
            lam, mu = random_standard_params(rng, n)
            maps.append(standard_form_map(n, lam, mu))
        else:
            maps.append(reconstruct(random_decomposition(rng, n)))
    commuting = sum(polarization_witness(f) is None for f in maps)
    report.add(f"n={n}")
    report.add(f"seed={args.seed}")
    report.add(f"count={args.count}")
    report.add(f"commuting={commuting}")
    ok = commuting == len(maps)
    if args.standard_only:
        standard = sum(is_standard_form(f) is not None for f in maps)
        report.add(f"standard={standard}")
        ok = ok and standard == len(maps)
    report.add("OK" if ok else "FAIL")
    return (0 if ok else 1), formats.format_maps(maps)


_PLAIN = {"dim": cmd_dim, "check": cmd_check, "standard": cmd_standard}
_WRITING = {"basis": cmd_basis, "decompose": cmd_decompose, "example": cmd_example, "synth": cmd_synth}


def _join_params(argv: list[str]) -> list[str]:
    # argparse reads "-1/2" as an option, so bind each --param to its value
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--param":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--param={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_join_params(list(argv)))
    except UsageError as exc:
        stderr.write(parser.format_usage())
        stderr.write(f"error: {exc}\n")
        return 2

    report = _Report()
    try:
        if args.command in _PLAIN:
            code = _PLAIN[args.command](args, report)
            stdout.write(report.text())
            return code
        code, artifact = _WRITING[args.command](args, report)
        if artifact is None:
            stdout.write(report.text())
        else:
            _emit(artifact, args.out, report, stdout, stderr)
        return code
    except ParseError as exc:
        stderr.write(f"error: {getattr(args, 'map_path', '<input>')}: {exc}\n")
        return 2
    except (UsageError, HeisenbergError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
