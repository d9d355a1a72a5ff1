"""Text formats: the SHD matrix format, DOT export and JSON export.

SHD layout::

    SHD1 n=4
    .>0~
    <.>0
    0<.>
    ~0<.

Row ``i``, column ``j`` holds ``.`` on the diagonal, ``0`` for an unrelated
pair, ``>`` when ``i -> j``, ``<`` when ``j -> i`` and ``~`` for an edge.
"""

import json
import re

import numpy as np

from .core import DigraphError, SDigraph

_CHARS = "0><~"
_HEADER = re.compile(r"SHD1 n=(0|[1-9][0-9]*)")


class FormatError(ValueError):
    pass


def to_shd(d):
    lines = [f"SHD1 n={d.n}"]
    for i, row in enumerate(d.rows):
        lines.append("".join("." if j == i else _CHARS[s] for j, s in enumerate(row)))
    return "\n".join(lines) + "\n"


def from_shd(text):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty SHD input")
    m = _HEADER.fullmatch(lines[0])
    if not m:
        raise FormatError(f"bad SHD header: {lines[0]!r}")
    n = int(m.group(1))
    body = lines[1:]
    if len(body) != n:
        raise FormatError(f"expected {n} matrix rows, found {len(body)}")
    mat = np.zeros((n, n), dtype=np.uint8)
    for i, line in enumerate(body):
        if len(line) != n:
            raise FormatError(f"row {i} has {len(line)} characters, expected {n}")
        for j, ch in enumerate(line):
            if i == j:
                if ch != ".":
                    raise FormatError(f"row {i}: diagonal must be '.'")
                continue
            k = _CHARS.find(ch)
            if k < 0:
                raise FormatError(f"row {i}, column {j}: unexpected {ch!r}")
            mat[i, j] = k
    try:
        return SDigraph(mat)
    except DigraphError as exc:
        raise FormatError(str(exc)) from None


def read_shd(path):
    with open(path, encoding="ascii", newline="") as fh:
        return from_shd(fh.read())


def write_shd(d, path):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(to_shd(d))


def to_dot(d, name="M"):
    lines = [f"digraph {name} {{"]
    lines += [f"  {v};" for v in range(d.n)]
    lines += [f"  {i} -> {j};" for i, j in d.arcs()]
    lines += [f"  {i} -> {j} [dir=none];" for i, j in d.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(d):
    doc = {"n": d.n, "arcs": [list(p) for p in d.arcs()], "edges": [list(p) for p in d.edges()]}
    return json.dumps(doc) + "\n"


def from_json(text):
    from .core import from_relations

    doc = json.loads(text)
    try:
        return from_relations(doc["n"], [tuple(p) for p in doc["arcs"]],
                              [tuple(p) for p in doc["edges"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed JSON digraph: {exc}") from None
