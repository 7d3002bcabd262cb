"""Plain-text table, form and module files.

Table file::

    # comment
    3
    0 1 2
    1 2 0
    2 0 1
    point 0

Form and module files are ``name:`` sections; ``group:`` holds a table
body, the map sections hold ``n`` images and ``e:`` one element.
"""
from __future__ import annotations

import re

from .errors import FGQError, StructureError
from .genmod import GenModule, PointedModule
from .linear import ArithmeticForm, GroupTable, form_violation
from .qcore import CayleyTable, is_permutation

_HEADER = re.compile(r"^([A-Za-z]+):\s*(.*)$")


class ParseError(FGQError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _data_lines(lines, first_lineno=1):
    for i, raw in enumerate(lines, start=first_lineno):
        text = raw.strip()
        if text and not text.startswith("#"):
            yield i, raw


def _ints(raw: str, lineno: int) -> list[int]:
    out = []
    for m in re.finditer(r"\S+", raw):
        try:
            out.append(int(m.group()))
        except ValueError:
            raise ParseError(f"expected an integer, got {m.group()!r}", lineno, m.start() + 1) from None
    return out


def _parse_table_lines(numbered: list[tuple[int, str]], end_lineno: int):
    if not numbered:
        raise ParseError("missing order line", end_lineno)
    lineno, raw = numbered[0]
    head = _ints(raw, lineno)
    if len(head) != 1 or head[0] < 1:
        raise ParseError("first data line must be a single positive order", lineno)
    n = head[0]
    rows = []
    rest = numbered[1:]
    for k in range(n):
        if k >= len(rest):
            raise ParseError(f"expected {n} rows, found {k}", end_lineno)
        lineno, raw = rest[k]
        row = _ints(raw, lineno)
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", lineno)
        starts = [m.start() + 1 for m in re.finditer(r"\S+", raw)]
        for col, v in zip(starts, row):
            if not 0 <= v < n:
                raise ParseError(f"entry {v} outside [0, {n})", lineno, col)
        rows.append(row)
    point = None
    for lineno, raw in rest[n:]:
        parts = raw.split()
        if point is None and len(parts) == 2 and parts[0] == "point":
            pt = _ints(parts[1], lineno)[0]
            if not 0 <= pt < n:
                raise ParseError(f"point {pt} outside [0, {n})", lineno)
            point = pt
        else:
            raise ParseError(f"unexpected content {raw.strip()!r}", lineno)
    return CayleyTable(rows), point


def parse_table(text: str) -> tuple[CayleyTable, int | None]:
    lines = text.splitlines()
    return _parse_table_lines(list(_data_lines(lines)), len(lines) + 1)


def format_table(t: CayleyTable, point: int | None = None) -> str:
    out = [str(t.n)] + [" ".join(map(str, row)) for row in t.rows()]
    if point is not None:
        out.append(f"point {point}")
    return "\n".join(out) + "\n"


def _sections(text: str) -> dict[str, tuple[int, list[tuple[int, str]]]]:
    sections: dict[str, tuple[int, list[tuple[int, str]]]] = {}
    current = None
    lines = text.splitlines()
    for lineno, raw in _data_lines(lines):
        m = _HEADER.match(raw.strip())
        if m:
            current = m.group(1)
            if current in sections:
                raise ParseError(f"duplicate section {current!r}", lineno)
            sections[current] = (lineno, [])
            if m.group(2).strip():
                sections[current][1].append((lineno, m.group(2)))
        elif current is None:
            raise ParseError("content before the first section header", lineno)
        else:
            sections[current][1].append((lineno, raw))
    return sections


def _section_ints(sections, name, end_lineno) -> tuple[int, list[int]]:
    if name not in sections:
        raise ParseError(f"missing section {name!r}", end_lineno)
    lineno, body = sections[name]
    vals = [v for ln, raw in body for v in _ints(raw, ln)]
    return lineno, vals


def _section_group(sections, end_lineno) -> GroupTable:
    if "group" not in sections:
        raise ParseError("missing section 'group'", end_lineno)
    lineno, body = sections["group"]
    t, _ = _parse_table_lines(body, lineno)
    try:
        return GroupTable.from_table(t)
    except FGQError as exc:
        raise ParseError(f"group section: {exc}", lineno) from None


def _section_map(sections, name, n, end_lineno, bijective=False) -> tuple[int, ...]:
    lineno, vals = _section_ints(sections, name, end_lineno)
    if len(vals) != n or any(not 0 <= v < n for v in vals):
        raise ParseError(f"{name} must list {n} images in [0, {n})", lineno)
    if bijective and not is_permutation(vals, n):
        raise ParseError(f"{name} must be a permutation", lineno)
    return tuple(vals)


def _section_element(sections, name, n, end_lineno) -> int:
    lineno, vals = _section_ints(sections, name, end_lineno)
    if len(vals) != 1 or not 0 <= vals[0] < n:
        raise ParseError(f"{name} must be one element of [0, {n})", lineno)
    return vals[0]


def parse_form(text: str) -> ArithmeticForm:
    end = len(text.splitlines()) + 1
    sec = _sections(text)
    grp = _section_group(sec, end)
    f = _section_map(sec, "f", grp.n, end, bijective=True)
    g = _section_map(sec, "g", grp.n, end, bijective=True)
    e = _section_element(sec, "e", grp.n, end)
    form = ArithmeticForm(grp, f, g, e)
    problem = form_violation(form)
    if problem is not None:
        raise ParseError(f"not an arithmetic form: {problem}", sec["f"][0])
    return form


def format_form(form: ArithmeticForm) -> str:
    return ("group:\n" + format_table(form.group.table)
            + f"f: {' '.join(map(str, form.f))}\n"
            + f"g: {' '.join(map(str, form.g))}\n"
            + f"e: {form.e}\n")


def parse_module(text: str) -> PointedModule:
    end = len(text.splitlines()) + 1
    sec = _sections(text)
    grp = _section_group(sec, end)
    maps = [_section_map(sec, name, grp.n, end) for name in ("phi", "psi", "mu", "nu")]
    e = _section_element(sec, "e", grp.n, end)
    try:
        return PointedModule(GenModule(grp, *maps), e)
    except StructureError as exc:
        raise ParseError(str(exc), end) from None


def format_module(pm: PointedModule) -> str:
    m = pm.module
    body = "group:\n" + format_table(m.group.table)
    for name, mp in zip(("phi", "psi", "mu", "nu"), m.maps):
        body += f"{name}: {' '.join(map(str, mp))}\n"
    return body + f"e: {pm.e}\n"
