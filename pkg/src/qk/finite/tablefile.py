"""Plain-text table files.

::

    # comment lines allowed
    quandle 3
    0 2 1
    2 1 0
    1 0 2

The header keyword (``rack`` or ``quandle``) is checked against the axioms
on load.
"""
from __future__ import annotations

import os
from typing import Sequence, Union

from qk.errors import MalformedTable, TableFileError
from qk.finite.rack import FiniteQuandle, FiniteRack, Table, as_table, check_axioms

PathLike = Union[str, os.PathLike]


def parse_table_text(text: str) -> tuple[str, Table]:
    """Header keyword and table, without axiom validation."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise TableFileError("missing header line")
    header = lines[0].split()
    if len(header) != 2 or header[0] not in ("rack", "quandle"):
        raise TableFileError(f"bad header {lines[0]!r}; expected 'rack N' or 'quandle N'")
    try:
        n = int(header[1])
    except ValueError:
        raise TableFileError(f"bad size in header {lines[0]!r}") from None
    rows = lines[1:]
    if len(rows) != n:
        raise TableFileError(f"header declares {n} rows, found {len(rows)}")
    try:
        table = as_table([[int(v) for v in row.split()] for row in rows])
    except ValueError as exc:
        raise TableFileError(f"non-integer entry: {exc}") from None
    except MalformedTable as exc:
        raise TableFileError(str(exc)) from None
    return header[0], table


def loads(text: str, name: str | None = None) -> FiniteRack:
    theory, table = parse_table_text(text)
    report = check_axioms(table)
    if not report.satisfies(theory):
        raise TableFileError(
            f"header claims {theory} but the table fails: {report.failing_witness(theory)}"
        )
    cls = FiniteQuandle if theory == "quandle" else FiniteRack
    return cls(table, name)


def load(path: PathLike) -> FiniteRack:
    with open(path, encoding="utf-8") as f:
        return loads(f.read(), os.path.basename(os.fspath(path)))


def dumps_table(theory: str, table: Sequence[Sequence[int]]) -> str:
    lines = [f"{theory} {len(table)}"]
    lines += [" ".join(map(str, row)) for row in table]
    return "\n".join(lines) + "\n"


def dumps(r: FiniteRack) -> str:
    """Serialize with the strongest header the table satisfies."""
    return dumps_table("quandle" if r.is_quandle else "rack", r.table)


def dump(r: FiniteRack, path: PathLike):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dumps(r))
