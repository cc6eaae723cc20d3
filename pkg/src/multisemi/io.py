"""JSON table documents.

A document is an object with fields in the fixed order ``name`` (optional),
``elements`` and ``table``; ``table[a][b]`` lists the labels of a*b.  The
canonical text sorts every cell by element index and puts one table row per
line, so canonical files compare byte-for-byte.
"""

import json
import sys
from dataclasses import dataclass
from typing import Optional

from .core import MultiOp
from .errors import InputError


@dataclass(frozen=True)
class TableDocument:
    name: Optional[str]
    elements: tuple
    table: tuple  # tuple of rows of tuples of labels

    def to_multiop(self) -> MultiOp:
        return MultiOp.from_labels(list(self.elements), [[list(c) for c in row] for row in self.table])

    @classmethod
    def from_multiop(cls, m: MultiOp, name: Optional[str] = None) -> "TableDocument":
        table = tuple(tuple(tuple(m.labels(c)) for c in row) for row in m.cube)
        return cls(name, m.names, table)

    def canonical(self) -> "TableDocument":
        return TableDocument.from_multiop(self.to_multiop(), self.name)

    def dumps(self) -> str:
        def enc(x):
            return json.dumps(x, ensure_ascii=False)

        lines = ["{"]
        if self.name is not None:
            lines.append(f'  "name": {enc(self.name)},')
        lines.append(f'  "elements": [{", ".join(enc(x) for x in self.elements)}],')
        lines.append('  "table": [')
        rows = []
        for row in self.table:
            cells = ", ".join("[" + ", ".join(enc(x) for x in cell) + "]" for cell in row)
            rows.append(f"    [{cells}]")
        lines.append(",\n".join(rows))
        lines.append("  ]")
        lines.append("}")
        return "\n".join(lines) + "\n"


def parse_document(text: str) -> TableDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("a table document must be a JSON object")
    unknown = set(data) - {"name", "elements", "table"}
    if unknown:
        raise InputError(f"unknown fields: {', '.join(sorted(unknown))}")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError("name must be a string")
    elements = data.get("elements")
    table = data.get("table")
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise InputError("elements must be a list of strings")
    if not isinstance(table, list) or len(table) != len(elements):
        raise InputError("table must have one row per element")
    rows = []
    for row in table:
        if not isinstance(row, list) or len(row) != len(elements):
            raise InputError("every table row needs one cell per element")
        cells = []
        for cell in row:
            if not isinstance(cell, list) or not all(isinstance(x, str) for x in cell):
                raise InputError("every cell must be a list of labels")
            cells.append(tuple(cell))
        rows.append(tuple(cells))
    doc = TableDocument(name, tuple(elements), tuple(rows))
    doc.to_multiop()  # validates labels
    return doc


def load_multiop(text: str) -> MultiOp:
    return parse_document(text).to_multiop()


def dumps_multiop(m: MultiOp, name: Optional[str] = None) -> str:
    return TableDocument.from_multiop(m, name).dumps()


def read_path(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
