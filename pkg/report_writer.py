"""Render Betti tables and invariant reports as text, csv, json or xlsx."""

import csv
import io
from typing import List, Optional

from openpyxl import Workbook
from openpyxl.styles import Font, PatternFill
from openpyxl.utils import get_column_letter
from pydantic import BaseModel

from oracle import table_invariants


HEADER_FONT = Font(bold=True, color="FFFFFF")
HEADER_FILL = PatternFill(start_color="2B5797", end_color="2B5797", fill_type="solid")
DOT_FONT = Font(color="A0A0A0")

FORMATS = ("grid", "csv", "json", "xlsx")


# ---------------------------------------------------------------------------
# Output models
# ---------------------------------------------------------------------------

class BettiEntry(BaseModel):
    i: int
    j: int
    value: int


class BettiReport(BaseModel):
    """Machine-readable Betti table of I(H); indices are ideal-indexed."""

    method: str
    characteristic: int
    n: int
    entries: List[BettiEntry]
    reg: int
    pdim: int
    zero_ideal: bool


class SplitEntry(BaseModel):
    edge: str
    z: str


class InvariantsReport(BaseModel):
    n: int
    d: Optional[int]
    uniformity: str
    edges: int
    properly_connected: Optional[bool]
    triangulated: Optional[bool] = None
    triangulated_method: Optional[str] = None
    diameter: Optional[str] = None
    c: Optional[int] = None
    matching_number: int
    min_cover_size: int
    unmixed: bool
    reg: Optional[int]
    pdim: Optional[int]
    linear_resolution: Optional[bool] = None
    splitting_edges: List[SplitEntry] = []
    v_leaves: List[str] = []
    f_leaves: List[str] = []
    v_forest: Optional[bool] = None
    f_forest: Optional[bool] = None
    notes: List[str] = []


def betti_report(table, method, p, n):
    reg, pdim = table_invariants(table)
    return BettiReport(
        method=method,
        characteristic=p,
        n=n,
        entries=[BettiEntry(i=i, j=j, value=v) for (i, j), v in table.items()],
        reg=reg,
        pdim=pdim,
        zero_ideal=table.is_empty(),
    )


# ---------------------------------------------------------------------------
# Betti tables
# ---------------------------------------------------------------------------

def grid_rows(table):
    """(header, rows) of the j-i grid: one row per j - i, one column per i.

    Each row is [label, v_0, v_1, ...] with None for zero entries; the
    first row holds the totals.
    """
    pdim = table.max_index()
    header = [""] + list(range(pdim + 1))
    rows = [["total:"] + [table.total(i) for i in range(pdim + 1)]]
    shifts = sorted({j - i for i, j in table.entries})
    for r in shifts:
        rows.append([f"{r}:"] + [table.get(i, i + r) or None for i in range(pdim + 1)])
    return header, rows


def render_grid(table):
    if table.is_empty():
        return "zero ideal; reg=1, pdim=-1\n"
    header, rows = grid_rows(table)
    cells = [[str(h) for h in header]] + [
        [row[0]] + ["." if v is None else str(v) for v in row[1:]] for row in rows
    ]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    out = []
    for r in cells:
        first = r[0].rjust(widths[0])
        rest = " ".join(v.rjust(widths[k + 1]) for k, v in enumerate(r[1:]))
        out.append(f"{first} {rest}".rstrip())
    return "\n".join(out) + "\n"


def render_csv(table):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "j", "beta"])
    for (i, j), v in table.items():
        writer.writerow([i, j, v])
    return buf.getvalue()


def render_betti(table, fmt, method="oracle", p=2, n=0):
    if fmt == "grid":
        return render_grid(table)
    if fmt == "csv":
        return render_csv(table)
    if fmt == "json":
        return betti_report(table, method, p, n).model_dump_json(indent=2) + "\n"
    raise ValueError(f"Format {fmt!r} is not a text format")


# ---------------------------------------------------------------------------
# Invariant reports
# ---------------------------------------------------------------------------

def _yes_no(value):
    if value is None:
        return "n/a"
    return "yes" if value else "no"


def invariant_lines(report):
    """[(label, text)] pairs shared by the text and xlsx renderings."""
    tri = _yes_no(report.triangulated)
    if report.triangulated_method:
        tri += f" ({report.triangulated_method})"
    rows = [
        ("n", str(report.n)),
        ("d", str(report.d) if report.d is not None else report.uniformity),
        ("edges", str(report.edges)),
        ("properly-connected", _yes_no(report.properly_connected)),
        ("triangulated", tri),
        ("diam", report.diameter or "n/a"),
        ("c", "n/a" if report.c is None else str(report.c)),
        ("alpha'", str(report.matching_number)),
        ("nu", str(report.min_cover_size)),
        ("unmixed", _yes_no(report.unmixed)),
        ("reg", "n/a" if report.reg is None else str(report.reg)),
        ("pdim", "n/a" if report.pdim is None else str(report.pdim)),
        ("linear resolution", _yes_no(report.linear_resolution)),
        ("v-leaves", ", ".join(report.v_leaves) or "none"),
        ("f-leaves", ", ".join(report.f_leaves) or "none"),
        ("v-forest", _yes_no(report.v_forest)),
        ("f-forest", _yes_no(report.f_forest)),
    ]
    if report.splitting_edges:
        split = ", ".join(f"{s.edge} (z={s.z})" for s in report.splitting_edges)
    else:
        split = "none"
    rows.append(("splitting edges", split))
    rows.extend(("note", note) for note in report.notes)
    return rows


def render_invariants(report, fmt="grid"):
    if fmt == "json":
        return report.model_dump_json(indent=2) + "\n"
    rows = invariant_lines(report)
    width = max(len(label) for label, _ in rows)
    return "\n".join(f"{label.ljust(width)} : {text}" for label, text in rows) + "\n"


# ---------------------------------------------------------------------------
# Workbooks
# ---------------------------------------------------------------------------

def write_sheet(ws, headers, rows):
    """Bold shaded header row, frozen; zero grid cells shown as grey dots."""
    ws.append(headers)
    for cell in ws[1]:
        cell.font = HEADER_FONT
        cell.fill = HEADER_FILL
    for row in rows:
        ws.append(["." if v is None else v for v in row])
        for cell in ws[ws.max_row]:
            if cell.value == ".":
                cell.font = DOT_FONT
    for col, cells in enumerate(ws.iter_cols(values_only=True), 1):
        longest = max((len(str(v)) for v in cells if v is not None), default=0)
        ws.column_dimensions[get_column_letter(col)].width = max(longest + 3, 8)
    ws.freeze_panes = "A2"


def write_workbook(output_path, table=None, report=None):
    """Save a Betti table and/or an invariants report as an xlsx workbook.

    Sheets: 'Betti table' (the j-i grid), 'Entries' (one row per nonzero
    beta_{i,j}) and 'Invariants'.
    """
    wb = Workbook()
    first = True

    def sheet(title):
        nonlocal first
        if first:
            first = False
            ws = wb.active
            ws.title = title
            return ws
        return wb.create_sheet(title)

    if table is not None:
        header, rows = grid_rows(table)
        write_sheet(sheet("Betti table"), header, rows if not table.is_empty() else [])
        write_sheet(sheet("Entries"), ["i", "j", "beta"], [[i, j, v] for (i, j), v in table.items()])
    if report is not None:
        write_sheet(sheet("Invariants"), ["Invariant", "Value"], [list(r) for r in invariant_lines(report)])
    if first:
        sheet("Empty")
    wb.save(output_path)
    return output_path
