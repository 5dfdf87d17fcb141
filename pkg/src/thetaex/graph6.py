"""graph6 encoding (McKay's format), bit-exact.

The upper triangle is read column by column (``x(0,1), x(0,2), x(1,2),
x(0,3), ...``), packed big-endian into 6-bit groups, and each group is
offset by 63.  ``n`` is one byte for ``n <= 62`` and ``~`` plus three bytes
up to 258047; larger headers are rejected since graphs cap at 64 vertices.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_VERTICES, Graph, GraphError, _trusted


class Graph6Error(GraphError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def encode(g: Graph) -> str:
    n = g.n
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise Graph6Error(f"byte outside graph6 range in {text!r}")
    if data[0] == 63:
        if len(data) < 4:
            raise Graph6Error("truncated size header")
        if data[1] == 63:
            raise Graph6Error(f"graphs with more than {MAX_VERTICES} vertices are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"graphs with more than {MAX_VERTICES} vertices are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"truncated bit stream: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing bytes after bit stream: need {need}, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return _trusted(n, rows)


def read_lines(stream: TextIO) -> Iterator[Graph]:
    for line in stream:
        line = line.strip()
        if line:
            yield decode(line)


def write_lines(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(encode(g) + "\n")
