"""Exact Boolean (0,1) matrix arithmetic on bit-set rows.

A matrix of order n (2 <= n <= 64) is stored as n row bit-sets, one machine
word per row: bit j of row i set means entry (i, j) is 1, i.e. there is an
arc i+1 -> j+1 in the associated digraph.  All operations are pure; values
are immutable and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass

MIN_ORDER = 2
MAX_ORDER = 64


class MatrixParseError(ValueError):
    """Raised on malformed matrix text; carries the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _check_order(n: int) -> None:
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise ValueError(f"order must be in [{MIN_ORDER}, {MAX_ORDER}], got {n}")


@dataclass(frozen=True)
class BoolMatrix:
    """Square (0,1) matrix under Boolean arithmetic (OR/AND, no counting)."""

    order: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_order(self.order)
        if len(self.rows) != self.order:
            raise ValueError(f"expected {self.order} rows, got {len(self.rows)}")
        mask = (1 << self.order) - 1
        for i, row in enumerate(self.rows):
            if row & ~mask:
                raise ValueError(f"row {i + 1} has bits set beyond column {self.order}")

    def entry(self, i: int, j: int) -> int:
        """Entry a_{ij} with 1-based indices."""
        if not (1 <= i <= self.order and 1 <= j <= self.order):
            raise ValueError(f"indices ({i}, {j}) out of range for order {self.order}")
        return (self.rows[i - 1] >> (j - 1)) & 1


def identity(n: int) -> BoolMatrix:
    _check_order(n)
    return BoolMatrix(n, tuple(1 << i for i in range(n)))


def all_ones(n: int) -> BoolMatrix:
    _check_order(n)
    full = (1 << n) - 1
    return BoolMatrix(n, (full,) * n)


# -- row-tuple kernels ---------------------------------------------------
#
# The hot paths (exhaustive censuses, exponent scans) work on bare row
# tuples to avoid per-step dataclass construction.  BoolMatrix operations
# wrap these kernels.

def mul_rows(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for row in a:
        acc = 0
        r = row
        while r:
            low = r & -r
            acc |= b[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return tuple(out)


def pow_rows(a: tuple[int, ...], k: int, n: int) -> tuple[int, ...]:
    result = tuple(1 << i for i in range(n))
    base = a
    while k:
        if k & 1:
            result = mul_rows(result, base)
        k >>= 1
        if k:
            base = mul_rows(base, base)
    return result


def rows_all_positive(rows: tuple[int, ...], n: int) -> bool:
    full = (1 << n) - 1
    return all(row == full for row in rows)


def transpose_rows(rows: tuple[int, ...], n: int) -> tuple[int, ...]:
    out = [0] * n
    for i, row in enumerate(rows):
        r = row
        while r:
            low = r & -r
            out[low.bit_length() - 1] |= 1 << i
            r ^= low
    return tuple(out)


# -- public operations ---------------------------------------------------

def multiply(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Boolean product: result[i][j] = OR_k (a[i][k] AND b[k][j])."""
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")
    return BoolMatrix(a.order, mul_rows(a.rows, b.rows))


def power(a: BoolMatrix, k: int) -> BoolMatrix:
    """k-th Boolean power; A^0 is the identity."""
    if k < 0:
        raise ValueError(f"exponent must be >= 0, got {k}")
    return BoolMatrix(a.order, pow_rows(a.rows, k, a.order))


def is_all_positive(a: BoolMatrix) -> bool:
    return rows_all_positive(a.rows, a.order)


def entrywise_le(a: BoolMatrix, b: BoolMatrix) -> bool:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")
    return all(ra & ~rb == 0 for ra, rb in zip(a.rows, b.rows))


# -- text format ----------------------------------------------------------
#
# Line 1: decimal order n.  Lines 2..n+1: exactly n characters from {0,1};
# row i, column j = '1' means entry (i, j) = 1.  LF endings; output always
# carries a final LF, input may omit it.

def parse_matrix(text: str) -> BoolMatrix:
    lines = text.split("\n")
    # A trailing LF leaves one empty fragment; tolerate exactly that.
    if lines and lines[-1] == "":
        lines = lines[:-1]
    if not lines:
        raise MatrixParseError("empty input", 1)
    head = lines[0].strip()
    try:
        n = int(head)
    except ValueError:
        raise MatrixParseError(f"expected decimal order, got {head!r}", 1) from None
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise MatrixParseError(f"order must be in [{MIN_ORDER}, {MAX_ORDER}], got {n}", 1)
    if len(lines) != n + 1:
        raise MatrixParseError(f"expected {n} rows after the order line, got {len(lines) - 1}", len(lines))
    rows = []
    for i, raw in enumerate(lines[1:], start=2):
        line = raw.rstrip()
        if len(line) != n:
            raise MatrixParseError(f"row has length {len(line)}, expected {n}", i)
        row = 0
        for j, ch in enumerate(line):
            if ch == "1":
                row |= 1 << j
            elif ch != "0":
                raise MatrixParseError(f"invalid character {ch!r}", i)
        rows.append(row)
    return BoolMatrix(n, tuple(rows))


def serialize_matrix(a: BoolMatrix) -> str:
    n = a.order
    lines = [str(n)]
    for row in a.rows:
        lines.append("".join("1" if (row >> j) & 1 else "0" for j in range(n)))
    return "\n".join(lines) + "\n"
