"""Table, JSON and CSV rendering of computed results.

Every renderer takes fully computed data and returns a string, so nothing is
written before all computation has succeeded.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict

from .bounds import BoundReport, BoundTerm
from .matthey import FundClassExpansion, expansion_to_dict, format_expansion
from .repring import format_elt
from .verify import SuiteResult

SCHEMA_VERSION = 1
FORMATS = ("table", "json", "csv")
HOMOLOGY_ROWS = (("F^0", 0, False), ("F^1", 1, False), ("F^0_0", 0, True))


def _json(obj: dict) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, **obj}, indent=2, ensure_ascii=False) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _terms_text(terms: tuple[BoundTerm, ...]) -> str:
    return " + ".join(str(t) for t in terms)


def render_bounds(group: str, source_kind: str, bc_status: str, reports: list[BoundReport],
                  surjectivity: list[str], fmt: str) -> str:
    if fmt == "json":
        rows = []
        for rep, surj in zip(reports, surjectivity):
            rows.append({
                "n": rep.n,
                "residue": rep.residue,
                "bound_R": rep.bound_R,
                "pos_dimension": rep.pos_dimension,
                "bound_Pos": rep.bound_Pos,
                "r_terms": [asdict(t) for t in rep.r_terms],
                "pos_terms": [asdict(t) for t in rep.pos_terms],
                "surjectivity": surj,
            })
        assumptions = list(reports[0].assumptions) if reports else []
        return _json({"command": "compute", "group": group, "source": source_kind,
                      "bc_status": bc_status, "assumptions": assumptions, "rows": rows})
    header = ["n", "n_mod_4", "rank_R_n_ge", "pos_dimension", "rank_Pos_ge", "R_terms", "Pos_terms"]
    rows = [[r.n, r.residue, r.bound_R, r.pos_dimension, r.bound_Pos,
             _terms_text(r.r_terms), _terms_text(r.pos_terms)] for r in reports]
    if fmt == "csv":
        return _csv(header, rows)
    head = [f"group: {group}",
            f"assumption: {reports[0].assumptions[0] if reports else ''} (Baum-Connes status: {bc_status})",
            "rank_Pos_ge bounds the rank of Pos_{n-1}; rank_R_n_ge bounds the rank of R_n", ""]
    foot = ["", f"surjectivity (n={reports[0].n}): {surjectivity[0]}"] if reports else []
    return "\n".join(head) + "\n" + _table(header, rows) + "\n".join(foot) + ("\n" if foot else "")


def render_homology(group: str, grid: dict[str, list[int]], extra: dict, fmt: str) -> str:
    if fmt == "json":
        return _json({"command": "homology", "group": group, "grid": grid, **extra})
    header = ["module", "H_0", "H_1", "H_2"]
    rows = [[name, *grid[name]] for name, _, _ in HOMOLOGY_ROWS]
    if fmt == "csv":
        return _csv(header, rows)
    head = [f"group: {group}"]
    for k, v in extra.items():
        head.append(f"{k}: {v}")
    return "\n".join(head) + "\n\n" + _table(header, rows)


def render_matthey(raw: FundClassExpansion, collapsed: FundClassExpansion, verified: bool,
                   fmt: str) -> str:
    if fmt == "json":
        return _json({"command": "matthey", "raw": expansion_to_dict(raw),
                      "collapsed": expansion_to_dict(collapsed), "verified": verified})
    if fmt == "csv":
        rows = []
        for form, e in (("raw", raw), ("collapsed", collapsed)):
            for t in e.terms:
                rows.append([form, t.l, format_elt(t.coefficient.elt), format_elt(t.scalar, brackets=False)])
        return _csv(["form", "l", "coefficient", "scalar"], rows)
    status = "verified: raw == collapsed (exact)" if verified else "verification FAILED: raw != collapsed"
    return f"{format_expansion(raw)}\n\n{format_expansion(collapsed)}\n\n{status}\n"


def render_verify(max_modulus: int, results: list[SuiteResult], fmt: str) -> str:
    if fmt == "json":
        return _json({"command": "verify", "max_modulus": max_modulus,
                      "suites": [{"name": r.name, "passed": r.passed, "failed": r.failed,
                                  "failures": r.failures} for r in results],
                      "ok": all(r.ok for r in results)})
    header = ["suite", "passed", "failed", "status"]
    rows = [[r.name, r.passed, r.failed, "PASS" if r.ok else "FAIL"] for r in results]
    if fmt == "csv":
        return _csv(header, rows)
    out = f"max modulus: {max_modulus}\n\n" + _table(header, rows)
    for r in results:
        for f in r.failures[:20]:
            out += f"  {r.name}: {f}\n"
    return out
