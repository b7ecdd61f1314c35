# harness/instance_io.py — текстовый формат MMV1
# ----------------------------------------------
"""
MMV1
ring <zmod:p | gf:p:e | int:M>
n <size>                      (k-экземпляр: k <count>, затем n <size>)
A                             (k-экземпляр: A1 … Ak)
<n строк по n канонических значений через пробел>
B
...
C                             (нет у AllZeroes / kAZ)
...
promise <t>                   (необязательно)

Разбор строгий: лишние пробелы, неканонические значения и посторонние
строки — ParseError с номером строки и столбца.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from errors import ParseError
from matrix import Matrix
from ring import RingSpec, parse_ring
from verify.instance import Instance, KInstance

MAGIC = "MMV1"


class _Reader:
    def __init__(self, text: str) -> None:
        lines = text.splitlines()
        while lines and not lines[-1].strip():
            lines.pop()
        self.lines = lines
        self.pos = 0

    @property
    def lineno(self) -> int:
        return self.pos + 1

    def at_end(self) -> bool:
        return self.pos >= len(self.lines)

    def peek(self) -> str | None:
        return None if self.at_end() else self.lines[self.pos]

    def take(self, what: str) -> str:
        if self.at_end():
            raise ParseError(f"unexpected end of file, expected {what}", self.lineno)
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def keyword(self, key: str) -> str:
        """`<key> <value>` → value."""
        line = self.take(f"'{key} …'")
        head, sep, value = line.partition(" ")
        if head != key or not sep or not value:
            raise ParseError(f"expected '{key} <value>', got {line!r}", self.pos)
        return value

    def count(self, key: str) -> int:
        value = self.keyword(key)
        if not value.isdigit() or (len(value) > 1 and value[0] == "0"):
            raise ParseError(f"{key} must be a canonical non-negative integer, got {value!r}", self.pos, len(key) + 2)
        return int(value)


def _parse_matrix(reader: _Reader, ring: RingSpec, n: int, label: str) -> Matrix:
    line = reader.take(label)
    if line != label:
        raise ParseError(f"expected matrix label {label!r}, got {line!r}", reader.pos)
    values = []
    for _ in range(n):
        row = reader.take(f"row of {label}")
        tokens = row.split(" ")
        if len(tokens) != n:
            raise ParseError(f"{label}: expected {n} values, got {len(tokens)}", reader.pos)
        column = 1
        parsed = []
        for token in tokens:
            try:
                parsed.append(ring.parse_element(token))
            except ValueError as exc:
                raise ParseError(f"{label}: {exc}", reader.pos, column) from exc
            column += len(token) + 1
        values.append(parsed)
    if ring.elem_shape:
        data = np.array(values, dtype=np.int64).reshape((n, n) + ring.elem_shape)
    else:
        data = ring.from_ints(np.array([[int(v) for v in row] for row in values], dtype=object))
    return Matrix(ring, data)


def parse_instance(text: str | bytes) -> Instance | KInstance:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8 text: {exc}", 1) from exc
    reader = _Reader(text)
    if reader.take(MAGIC) != MAGIC:
        raise ParseError(f"expected header {MAGIC!r}", 1)
    token = reader.keyword("ring")
    try:
        ring = parse_ring(token)
    except ParseError as exc:
        raise ParseError(str(exc).partition(": ")[2], reader.pos, len("ring ") + 1) from exc
    k = None
    if (reader.peek() or "").startswith("k "):
        k = reader.count("k")
        if k < 2:
            raise ParseError(f"k-instances need k ≥ 2, got {k}", reader.pos, 3)
    n = reader.count("n")
    if n < 1:
        raise ParseError("n must be ≥ 1", reader.pos, 3)

    labels = [f"A{i}" for i in range(1, k + 1)] if k else ["A", "B"]
    mats = [_parse_matrix(reader, ring, n, label) for label in labels]
    C = _parse_matrix(reader, ring, n, "C") if reader.peek() == "C" else None
    promise = None
    if not k and reader.peek() is not None and reader.peek().startswith("promise"):
        promise = reader.count("promise")
    if not reader.at_end():
        raise ParseError(f"unexpected trailing line {reader.peek()!r}", reader.lineno)

    if k:
        return KInstance(tuple(mats), C)
    return Instance(mats[0], mats[1], C, promise)


def _format_matrix(label: str, M: Matrix) -> list[str]:
    ring = M.ring
    lines = [label]
    for i in range(M.rows):
        lines.append(" ".join(ring.format_element(M.data[i, j]) for j in range(M.cols)))
    return lines


def write_instance(inst: Instance | KInstance) -> str:
    lines = [MAGIC, f"ring {inst.ring.token}"]
    if isinstance(inst, KInstance):
        lines += [f"k {inst.k}", f"n {inst.n}"]
        for i, M in enumerate(inst.mats, start=1):
            lines += _format_matrix(f"A{i}", M)
    else:
        lines.append(f"n {inst.n}")
        lines += _format_matrix("A", inst.A)
        lines += _format_matrix("B", inst.B)
    if inst.C is not None:
        lines += _format_matrix("C", inst.C)
    if isinstance(inst, Instance) and inst.promise_t is not None:
        lines.append(f"promise {inst.promise_t}")
    return "\n".join(lines) + "\n"


def read_instance_file(path: str | Path) -> Instance | KInstance:
    return parse_instance(Path(path).read_bytes())


def write_instance_file(path: str | Path, inst: Instance | KInstance) -> None:
    Path(path).write_text(write_instance(inst), encoding="utf-8")
