"""
Colouring Files for MONOCLE
Reading and writing the line-based .ecg (complete) and .ecb (bipartite)
edge-colouring formats
"""

import logging
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .errors import DomainError, FormatError
from .graph_core import ColouredBipartiteGraph, ColouredCompleteGraph

VERSION = 1
TAGS = {"ECG": "complete", "ECB": "bipartite"}

Colouring = Union[ColouredCompleteGraph, ColouredBipartiteGraph]


class ColouringFile(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["complete", "bipartite"]
    colouring: Colouring
    metadata: Dict[str, str] = Field(default_factory=dict)


def serialise(colouring: Colouring, metadata: Optional[Dict[str, str]] = None) -> str:
    """Canonical text: metadata comments, header, size line, edges in lexicographic order"""
    lines = [f"# {key}: {value}" for key, value in (metadata or {}).items()]
    if isinstance(colouring, ColouredCompleteGraph):
        lines += [f"ECG {VERSION}", f"{colouring.n} {colouring.r}"]
        lines += [f"{u} {v} {c}" for u, v, c in colouring.edges()]
    else:
        lines += [f"ECB {VERSION}", f"{colouring.m} {colouring.n} {colouring.r}"]
        lines += [f"{u} {v} {int(colouring.matrix[u, v])}" for u in range(colouring.m) for v in range(colouring.n)]
    return "\n".join(lines) + "\n"


def _integers(text: str, count: int, number: int, what: str) -> Tuple[int, ...]:
    fields = text.split()
    if len(fields) != count:
        raise FormatError(f"expected {count} integers for {what}, found {len(fields)}", number)
    try:
        return tuple(int(x) for x in fields)
    except ValueError:
        raise FormatError(f"non-integer field in {what}: {text.strip()!r}", number) from None


def parse(text: str) -> ColouringFile:
    """Parse a colouring file; edges may come in any order but each exactly once"""
    rows: List[Tuple[int, str]] = [(i, line) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
    metadata: Dict[str, str] = {}
    position = 0
    while position < len(rows) and rows[position][1].lstrip().startswith("#"):
        number, line = rows[position]
        key, sep, value = line.lstrip()[1:].partition(":")
        if sep:
            metadata[key.strip()] = value.strip()
        position += 1

    if position >= len(rows):
        raise FormatError("missing header line")
    number, header = rows[position]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in TAGS:
        raise FormatError(f"expected header 'ECG {VERSION}' or 'ECB {VERSION}', found {header.strip()!r}", number)
    if parts[1] != str(VERSION):
        raise FormatError(f"unsupported format version {parts[1]}", number)
    kind = TAGS[parts[0]]
    position += 1

    if position >= len(rows):
        raise FormatError("missing size line")
    number, size_line = rows[position]
    if kind == "complete":
        n, r = _integers(size_line, 2, number, "size line 'n r'")
        shape, left = (n, n), n
        if n < 2:
            raise FormatError(f"need at least 2 vertices, got n = {n}", number)
    else:
        m, n, r = _integers(size_line, 3, number, "size line 'm n r'")
        shape, left = (m, n), m
        if m < 1 or n < 1:
            raise FormatError(f"both parts need a vertex, got m = {m}, n = {n}", number)
    if r < 1:
        raise FormatError(f"need at least one colour, got r = {r}", number)
    position += 1

    matrix = np.zeros(shape, dtype=np.int16)
    for number, line in rows[position:]:
        if line.lstrip().startswith("#"):
            raise FormatError("comments are only allowed before the header", number)
        u, v, c = _integers(line, 3, number, "edge 'u v c'")
        if kind == "complete" and not 0 <= u < v < n:
            raise FormatError(f"edge {u} {v} needs 0 ⩽ u < v < {n}", number)
        if kind == "bipartite" and not (0 <= u < left and 0 <= v < n):
            raise FormatError(f"edge {u} {v} needs 0 ⩽ u < {left} and 0 ⩽ v < {n}", number)
        if not 1 <= c <= r:
            raise FormatError(f"colour {c} outside 1..{r}", number)
        if matrix[u, v]:
            raise FormatError(f"duplicate edge {u} {v}", number)
        matrix[u, v] = c

    if kind == "complete":
        upper = np.triu(matrix, 1)
        missing = np.argwhere(np.triu(upper == 0, 1))
        matrix = upper + upper.T
    else:
        missing = np.argwhere(matrix == 0)
    if len(missing):
        u, v = missing[0]
        raise FormatError(f"{len(missing)} edges missing, first {u} {v}")

    try:
        colouring = (
            ColouredCompleteGraph(matrix, r) if kind == "complete"
            else ColouredBipartiteGraph.standard(m, n, r, matrix)
        )
    except DomainError as e:
        raise FormatError(str(e)) from None
    logging.debug(f"parsed {kind} colouring with {len(rows) - position} edges")
    return ColouringFile(kind=kind, colouring=colouring, metadata=metadata)


def read_colouring(path: Union[str, Path]) -> ColouringFile:
    return parse(Path(path).read_text(encoding="utf-8"))


def write_colouring(path: Union[str, Path], colouring: Colouring, metadata: Optional[Dict[str, str]] = None) -> Path:
    path = Path(path)
    path.write_text(serialise(colouring, metadata), encoding="utf-8")
    return path
