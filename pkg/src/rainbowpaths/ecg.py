"""Line-based text format for edge-colored graphs.

    # optional comment lines anywhere
    n m c
    u v color      (m lines)

Writers emit edges in ascending (u, v) order with no comments, so
write -> read -> write is byte-identical.
"""

from __future__ import annotations

from pathlib import Path
from typing import TextIO, Union

from .colorings import EdgeColoring
from .errors import FormatError, InvalidParameter


def dumps(col: EdgeColoring) -> str:
    lines = [f"{col.n} {len(col.color_of)} {col.c}"]
    lines += [f"{u} {v} {c}" for u, v, c in col.triples()]
    return "\n".join(lines) + "\n"


def loads(text: str) -> EdgeColoring:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers, got {raw!r}")
    if not rows:
        raise FormatError("empty document")
    lineno, header = rows[0]
    if len(header) != 3:
        raise FormatError(f"line {lineno}: header must be 'n m c'")
    n, m, c = header
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header says {m} edges, body has {len(body)}")
    triples = []
    for lineno, rec in body:
        if len(rec) != 3:
            raise FormatError(f"line {lineno}: expected 'u v color'")
        u, v, col = rec
        if not 0 <= u < v < n:
            raise FormatError(f"line {lineno}: need 0 <= u < v < n, got {u} {v}")
        triples.append((u, v, col))
    try:
        coloring = EdgeColoring.from_triples(n, triples)
    except InvalidParameter as exc:
        raise FormatError(str(exc)) from exc
    if coloring.c != c:
        raise FormatError(f"header says {c} colors, body uses {coloring.c}")
    return coloring


def dump(col: EdgeColoring, fp: Union[str, Path, TextIO]) -> None:
    if isinstance(fp, (str, Path)):
        Path(fp).write_text(dumps(col))
    else:
        fp.write(dumps(col))


def load(fp: Union[str, Path, TextIO]) -> EdgeColoring:
    if isinstance(fp, (str, Path)):
        return loads(Path(fp).read_text())
    return loads(fp.read())
