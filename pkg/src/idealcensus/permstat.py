"""Permutation statistics tied to 0/1 matrices and their hook cells.

A permutation of size n is a tuple of the values 1..n in one-line
notation; sigma maps position i (1-based) to sigma[i-1].  Its matrix has
a 1 in row i, column sigma(i).  The hook of a 1-cell is the set of cells
strictly to its left in its row together with the cells strictly below it
in its column; the statistic of interest is the size of the union of all
hooks, counted here both directly on the grid and through the inversion
count (two deliberately separate routes).

A permutation is indecomposable when no proper prefix {1..i}, i < n, is
stabilized.  ``enumerate_indecomposables`` streams them in lexicographic
order; the size-0 permutation is the unit of shifted concatenation and is
excluded from that stream.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple, Sequence

from .qpoly import LaurentPoly, ONE, TruncatedSeries, q_factorial

Perm = tuple[int, ...]


class DuplicateLetters(ValueError):
    """Standardization input must have pairwise distinct letters."""


def check_permutation(s: Sequence[int]) -> Perm:
    t = tuple(s)
    if sorted(t) != list(range(1, len(t) + 1)):
        raise ValueError(f"not a permutation of 1..{len(t)}: {t!r}")
    return t


def parse_permutation(text: str) -> Perm:
    """Parse '325461' (single digits) or '3,2,5,4,6,1'."""
    text = text.strip()
    if "," in text:
        values = [int(chunk) for chunk in text.split(",")]
    else:
        if not text.isdigit():
            raise ValueError(f"not a permutation: {text!r}")
        values = [int(ch) for ch in text]
    return check_permutation(values)


def permutation_str(s: Perm) -> str:
    if len(s) <= 9:
        return "".join(str(v) for v in s)
    return ",".join(str(v) for v in s)


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for i, v in enumerate(s):
        out[v - 1] = i + 1
    return tuple(out)


def inversions(s: Perm) -> int:
    """Number of pairs i < j with s(i) > s(j)."""
    n = len(s)
    return sum(1 for i in range(n) for j in range(i + 1, n) if s[i] > s[j])


def versions(s: Perm) -> int:
    """Non-inversions: pairs i < j with s(i) < s(j)."""
    n = len(s)
    return n * (n - 1) // 2 - inversions(s)


def hook_union_size(s: Perm) -> int:
    """Size of the union of all hooks, counted directly on the grid.

    This marks cells and counts them; it shares no code with the
    inversion route ``hook_number`` on purpose.
    """
    n = len(s)
    marked = [[False] * n for _ in range(n)]
    for i, v in enumerate(s):
        row = marked[i]
        for j in range(v - 1):
            row[j] = True
        for k in range(i + 1, n):
            marked[k][v - 1] = True
    return sum(1 for row in marked for cell in row if cell)


def hook_number(s: Perm) -> int:
    """Hook-union size via statistics: 2*inv + versions = inv + C(n,2)."""
    return 2 * inversions(s) + versions(s)


def is_indecomposable(s: Perm) -> bool:
    """True when no proper prefix {1..i}, i < n, is stabilized.

    The empty permutation is the concatenation unit, not a generator,
    and counts as decomposable here.
    """
    n = len(s)
    if n == 0:
        return False
    high = 0
    for i in range(n - 1):
        high = max(high, s[i])
        if high == i + 1:
            return False
    return True


class LRMaxima(NamedTuple):
    positions: tuple[int, ...]
    values: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.positions)


def lr_maxima(s: Perm) -> LRMaxima:
    """Left-to-right maxima: positions i with s(i) > s(j) for all j < i."""
    positions: list[int] = []
    values: list[int] = []
    high = 0
    for i, v in enumerate(s):
        if v > high:
            positions.append(i + 1)
            values.append(v)
            high = v
    return LRMaxima(tuple(positions), tuple(values))


def is_indecomposable_lr(s: Perm) -> bool:
    """Indecomposability read off the left-to-right maxima alone:
    each maximum must reach at least the next maximum's position."""
    if len(s) == 0:
        return False
    positions = lr_maxima(s).positions
    return all(s[positions[h] - 1] >= positions[h + 1]
               for h in range(len(positions) - 1))


def standardize(word: Sequence[int]) -> Perm:
    """Relabel distinct letters order-isomorphically to 1..len(word).

    >>> standardize((3, 6, 4, 9))
    (1, 3, 2, 4)
    """
    if len(set(word)) != len(word):
        raise DuplicateLetters(f"letters must be distinct: {tuple(word)!r}")
    rank = {v: r + 1 for r, v in enumerate(sorted(word))}
    return tuple(rank[v] for v in word)


def strip_lr_maxima(s: Perm) -> Perm:
    """Drop the left-to-right maxima values and standardize the rest.

    >>> strip_lr_maxima((3, 2, 5, 4, 6, 1))
    (2, 3, 1)
    """
    keep = set(lr_maxima(s).values)
    return standardize([v for v in s if v not in keep])


def hook_strip_identity_check(t: Perm) -> bool:
    """Hook statistic of t against the stripped permutation:
    p(t) = p(sigma) + k*n - k(k+1)/2 + sum(values - positions)."""
    n = len(t)
    lr = lr_maxima(t)
    k = lr.count
    sigma = strip_lr_maxima(t)
    expected = (hook_union_size(sigma) + k * n - k * (k + 1) // 2
                + sum(j - i for i, j in zip(lr.positions, lr.values)))
    return hook_union_size(t) == expected


def shifted_concat(a: Perm, b: Perm) -> Perm:
    """Place b after a, shifted up by len(a); inversions add."""
    n = len(a)
    return a + tuple(v + n for v in b)


def enumerate_permutations(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order on one-line notation."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return iter(itertools.permutations(range(1, n + 1)))


def enumerate_indecomposables(n: int) -> Iterator[Perm]:
    return (s for s in enumerate_permutations(n) if is_indecomposable(s))


def indecomposable_factors(s: Perm) -> tuple[Perm, ...]:
    """Unique factorization under shifted concatenation."""
    factors: list[Perm] = []
    start = 0
    high = 0
    for i, v in enumerate(s):
        high = max(high, v)
        if high == i + 1:
            factors.append(tuple(v - start for v in s[start:i + 1]))
            start = i + 1
    return tuple(factors)


def indec_inversion_polynomial(m: int) -> LaurentPoly:
    """Sum of q**inv over indecomposable permutations of size m."""
    if m < 1:
        raise ValueError("m must be at least 1")
    acc: dict[int, int] = {}
    for s in enumerate_indecomposables(m):
        e = inversions(s)
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc)


def indec_hook_polynomial(m: int) -> LaurentPoly:
    """Sum of q**hook over indecomposables; equals the inversion
    polynomial shifted by C(m,2)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    acc: dict[int, int] = {}
    for s in enumerate_indecomposables(m):
        e = hook_number(s)
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc)


def inversion_distribution(n: int) -> LaurentPoly:
    """Sum of q**inv over all of S_n (equals the q-factorial)."""
    acc: dict[int, int] = {}
    for s in enumerate_permutations(n):
        e = inversions(s)
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc)


def series_identity_check(order: int) -> bool:
    """The q-factorial series is the reciprocal of 1 - sum of the
    indecomposable inversion polynomials: checked exactly to t**order.

    Left side uses the closed q-factorial products; right side uses
    enumeration, so agreement is a genuine cross-check.
    """
    lhs = TruncatedSeries(order, [q_factorial(n) for n in range(order + 1)])
    body = [ONE] + [-indec_inversion_polynomial(k) for k in range(1, order + 1)]
    rhs = TruncatedSeries(order, body).invert()
    return lhs == rhs


if __name__ == "__main__":
    import doctest

    doctest.testmod()
