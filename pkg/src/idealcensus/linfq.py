"""Dense matrices over a prime field F_p and exhaustive support counts.

Entries are plain ints reduced mod p; the matrix carries the modulus,
whose primality is checked on construction.  Everything here is exact
and deliberately naive: the brute-force enumeration over a support is
one side of a dual check against closed product formulas and must stay
independent of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_BUDGET = 1 << 26


class NonSquare(ValueError):
    """Invertibility is defined for square matrices only."""


class TooLarge(Exception):
    """Enumeration would exceed the assignment budget."""


def check_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"modulus must be a prime: {p!r}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"modulus must be a prime: {p}")
        d += 1
    return p


@dataclass(frozen=True)
class FqMatrix:
    """Immutable matrix over F_p; entries reduced mod p at construction."""

    rows: int
    cols: int
    modulus: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int) -> "FqMatrix":
        check_prime(p)
        data = tuple(tuple(v % p for v in row) for row in rows)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged rows")
        return cls(len(data), len(data[0]) if data else 0, p, data)

    @classmethod
    def zero(cls, n: int, p: int) -> "FqMatrix":
        return cls.from_rows([[0] * n for _ in range(n)], p)

    @classmethod
    def identity(cls, n: int, p: int) -> "FqMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], p)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]


def _full_rank(rows: list[list[int]], n: int, p: int) -> bool:
    """Destructive elimination mod p; True iff rank n."""
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            return False
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
        top = rows[col]
        inv = pow(top[col], p - 2, p)
        for r in range(col + 1, n):
            row = rows[r]
            f = row[col]
            if f:
                f = f * inv % p
                for k in range(col, n):
                    row[k] = (row[k] - f * top[k]) % p
    return True


def is_invertible(m: FqMatrix) -> bool:
    """Full rank by elimination mod p."""
    if m.rows != m.cols:
        raise NonSquare(f"{m.rows} x {m.cols} matrix")
    return _full_rank([list(row) for row in m.entries], m.rows, m.modulus)


def enumerate_support_matrices(support: Sequence[tuple[int, int]], p: int,
                               rows: int | None = None, cols: int | None = None,
                               budget: int = DEFAULT_BUDGET) -> Iterator[FqMatrix]:
    """All p**|support| matrices that vanish outside the 1-based support.

    Cells run row-major and digits advance little-endian in p, so the
    stream is deterministic and starts at the zero matrix.  Dimensions
    default to the largest index mentioned; pass them explicitly when a
    bounding row or column is absent from the support.
    """
    check_prime(p)
    cells = sorted(set(support))
    if any(i < 1 or j < 1 for i, j in cells):
        raise ValueError("support cells are 1-based")
    nrows = rows if rows is not None else max((i for i, _ in cells), default=0)
    ncols = cols if cols is not None else max((j for _, j in cells), default=0)
    if any(i > nrows or j > ncols for i, j in cells):
        raise ValueError("support cell outside the matrix")
    if p ** len(cells) > budget:
        raise TooLarge(f"{p}**{len(cells)} assignments exceed budget {budget}")
    digits = [0] * len(cells)
    grid = [[0] * ncols for _ in range(nrows)]
    while True:
        yield FqMatrix.from_rows(grid, p)
        pos = 0
        while pos < len(cells):
            digits[pos] += 1
            i, j = cells[pos]
            if digits[pos] < p:
                grid[i - 1][j - 1] = digits[pos]
                break
            digits[pos] = 0
            grid[i - 1][j - 1] = 0
            pos += 1
        if pos == len(cells):
            return


def count_invertible_support(parts: Sequence[int], p: int,
                             budget: int = DEFAULT_BUDGET) -> int:
    """Brute-force count of invertible n x n matrices over F_p whose
    support lies in the staircase of the partition: row i may be nonzero
    only in columns 1..parts[i-1]."""
    check_prime(p)
    parts = tuple(parts)
    n = len(parts)
    if any(v < 0 or v > n for v in parts) or list(parts) != sorted(parts):
        raise ValueError(f"not a bounded weakly increasing partition: {parts!r}")
    cells = [(i, j) for i in range(n) for j in range(parts[i])]  # 0-based here
    if p ** len(cells) > budget:
        raise TooLarge(f"{p}**{len(cells)} assignments exceed budget {budget}")
    grid = [[0] * n for _ in range(n)]
    digits = [0] * len(cells)
    count = 0
    while True:
        if _full_rank([row[:] for row in grid], n, p):
            count += 1
        pos = 0
        while pos < len(cells):
            digits[pos] += 1
            i, j = cells[pos]
            if digits[pos] < p:
                grid[i][j] = digits[pos]
                break
            digits[pos] = 0
            grid[i][j] = 0
            pos += 1
        if pos == len(cells):
            return count
