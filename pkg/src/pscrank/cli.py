"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 computation or domain error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from . import __version__
from .bounds import BC_STATUSES, bound_report, surjectivity_report
from .classdata import summarize
from .errors import ExprSyntaxError, PscRankError
from .expr import parse_group_expr
from .groups import ELEMENT_CAP_ENV, NormalForm, normalize
from .homology import (
    ClassDataFile,
    class_data_for,
    dumps_class_data,
    hdim,
    read_class_data,
    torsion_free_betti,
)
from .matthey import collapse_expansion, fundamental_class_expansion, verify_expansion_equality
from .report import FORMATS, HOMOLOGY_ROWS, render_bounds, render_homology, render_matthey, render_verify
from .verify import run_all

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_VERIFY = 0, 1, 2, 3
MAX_DIMENSION = 2 ** 20
SUBCOMMANDS = ("compute", "homology", "matthey", "verify", "classdata")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    group: str | None = None
    class_data: str | None = None
    dims: tuple[int, int] = (7, 14)
    format: str = "table"
    bc_status: str = "unknown"
    element_cap: int | None = None
    output: str | None = None
    p: int = 0
    m: int = 1
    q: int = 0
    max_modulus: int = 16


def parse_dims(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if m is None:
        raise UsageError(f"--dims expects 'a..b' or a single integer, got {text!r}")
    a = int(m.group(1))
    b = int(m.group(2)) if m.group(2) else a
    if a > b:
        raise UsageError(f"empty dimension range {text!r}")
    if a < 7 or b > MAX_DIMENSION:
        raise UsageError(f"dimensions must lie in [7, {MAX_DIMENSION}], got {text!r}")
    return a, b


def _source(config: RunConfig) -> tuple[str, str, NormalForm | ClassDataFile]:
    if config.class_data:
        cdf = read_class_data(config.class_data)
        return cdf.group or config.class_data, "class-data", cdf
    if not config.group:
        raise UsageError("one of --group or --class-data is required")
    nf = normalize(parse_group_expr(config.group), config.element_cap)
    return config.group, "expression", nf


def _compute(config: RunConfig) -> tuple[int, str]:
    label, kind, src = _source(config)
    a, b = config.dims
    by_residue = {}
    surj = {}
    for n in range(a, min(b, a + 3) + 1):
        by_residue[n % 4] = bound_report(src, n)
    reports, texts = [], []
    for n in range(a, b + 1):
        reports.append(replace(by_residue[n % 4], n=n))
        if n not in surj:
            surj[n] = surjectivity_report(src, n, config.bc_status)
        texts.append(surj[n])
    return EXIT_OK, render_bounds(label, kind, config.bc_status, reports, texts, config.format)


def _homology(config: RunConfig) -> tuple[int, str]:
    label, _, src = _source(config)
    grid = {name: [hdim(src, p, q, zero) for p in (0, 1, 2)] for name, q, zero in HOMOLOGY_ROWS}
    extra: dict = {}
    if isinstance(src, NormalForm):
        s = summarize(src.finite)
        extra = {"betti": list(torsion_free_betti(src)), "finite_order": src.finite.order,
                 "num_classes": s.num_classes, "r_real": s.r_real, "r_pairs": s.r_pairs}
    return EXIT_OK, render_homology(label, grid, extra, config.format)


def _matthey(config: RunConfig) -> tuple[int, str]:
    raw = fundamental_class_expansion(config.p, config.m, config.q)
    col = collapse_expansion(raw)
    ok = verify_expansion_equality(raw, col)
    return (EXIT_OK if ok else EXIT_VERIFY), render_matthey(raw, col, ok, config.format)


def _verify(config: RunConfig) -> tuple[int, str]:
    if config.max_modulus < 1:
        raise UsageError("--max-modulus must be >= 1")
    results = run_all(config.max_modulus)
    ok = all(r.ok for r in results)
    return (EXIT_OK if ok else EXIT_VERIFY), render_verify(config.max_modulus, results, config.format)


def _classdata(config: RunConfig) -> tuple[int, str]:
    if not config.group:
        raise UsageError("classdata needs --group")
    nf = normalize(parse_group_expr(config.group), config.element_cap)
    return EXIT_OK, dumps_class_data(class_data_for(nf, config.group))


_HANDLERS = {"compute": _compute, "homology": _homology, "matthey": _matthey,
             "verify": _verify, "classdata": _classdata}


def run(config: RunConfig) -> tuple[int, str]:
    """Execute a subcommand; returns the exit status and the full report text."""
    if config.format not in FORMATS:
        raise UsageError(f"unknown format {config.format!r}")
    return _HANDLERS[config.subcommand](config)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pscrank", description=(
        "Homology dimensions H_p(G; F^q G), p <= 2, and the resulting lower bounds on the ranks "
        "of psc bordism groups, for products of surface/free/Z groups with finite groups."))
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p, group=True, fmt=True):
        if group:
            g = p.add_mutually_exclusive_group()
            g.add_argument("--group", help='group expression, e.g. "surface(1)*cyclic(3)"')
            g.add_argument("--class-data", help="path to a class-data file (general input path)")
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="table")
        p.add_argument("--element-cap", type=int, default=None,
                       help=f"maximum finite-group order (default 100000, env {ELEMENT_CAP_ENV})")
        p.add_argument("--output", "-o", help="write to this file instead of standard output")

    p = sub.add_parser("compute", help="lower bounds for a range of dimensions n")
    common(p)
    p.add_argument("--dims", default="7..14", help="inclusive range a..b or single n (n >= 7)")
    p.add_argument("--bc-status", choices=BC_STATUSES, default="unknown",
                   help="user-asserted status of rational Baum-Connes assembly")

    p = sub.add_parser("homology", help="grid of dim H_p(G; F^q G)")
    common(p)

    p = sub.add_parser("matthey", help="real fundamental-class expansion over Z/m")
    common(p, group=False)
    p.add_argument("--p", type=int, choices=(0, 1, 2), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, choices=(0, 1), required=True)

    p = sub.add_parser("verify", help="run the exact identity suites")
    common(p, group=False)
    p.add_argument("--max-modulus", type=int, default=16)

    p = sub.add_parser("classdata", help="write the class-data file of an in-grammar group")
    p.add_argument("--group", required=True)
    p.add_argument("--element-cap", type=int, default=None)
    p.add_argument("--output", "-o")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    kw = {k: v for k, v in vars(ns).items() if v is not None}
    if "dims" in kw:
        kw["dims"] = parse_dims(kw["dims"])
    if kw.get("element_cap") is not None and kw["element_cap"] < 1:
        raise UsageError("--element-cap must be >= 1")
    return RunConfig(**kw)


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        config = config_from_args(ns)
        status, text = run(config)
    except (UsageError, ExprSyntaxError) as exc:
        print(f"pscrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PscRankError, OSError) as exc:
        print(f"pscrank: error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
