"""Invertible-count polynomials for staircase matrix supports.

For a weakly increasing partition 0 <= l_1 <= ... <= l_n <= n, the
staircase support allows row i to be nonzero in columns 1..l_i only.
The number of invertible n x n matrices over F_q with that support is a
polynomial in q with two very different descriptions:

* Haglund's product: q^C(n,2) * prod(q^(l_i + 1 - i) - 1), which is zero
  as soon as some l_i < i;
* a hook sum: (q-1)^n * sum of q^p(s) over the permutations s fitting
  the staircase (s(i) <= l_i), with p the hook-union statistic.

Both are implemented from their definitions and checked against each
other and against brute-force matrix enumeration.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .linfq import DEFAULT_BUDGET, TooLarge, count_invertible_support
from .permstat import Perm, hook_number
from .qpoly import LaurentPoly, ONE, Q, ZERO

Partition = tuple[int, ...]


def check_partition(parts: Sequence[int]) -> Partition:
    t = tuple(parts)
    n = len(t)
    if any(not isinstance(v, int) for v in t):
        raise ValueError(f"parts must be ints: {t!r}")
    if list(t) != sorted(t) or (t and (t[0] < 0 or t[-1] > n)):
        raise ValueError(f"need 0 <= l_1 <= ... <= l_n <= {n}: {t!r}")
    return t


def support_set(parts: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Staircase cells {(i, j) : 1 <= j <= parts[i-1]}, 1-based."""
    t = check_partition(parts)
    return frozenset((i + 1, j + 1) for i, v in enumerate(t) for j in range(v))


def haglund_product(parts: Sequence[int]) -> LaurentPoly:
    """q^C(n,2) * prod(q^(l_i + 1 - i) - 1); the zero polynomial when
    some part falls below its row index."""
    t = check_partition(parts)
    n = len(t)
    if any(t[i] < i + 1 for i in range(n)):
        return ZERO
    result = LaurentPoly.monomial(n * (n - 1) // 2)
    for i, v in enumerate(t):
        result = result * (LaurentPoly.monomial(v - i) - ONE)
    return result


def constrained_permutations(parts: Sequence[int]) -> Iterator[Perm]:
    """Permutations with s(i) <= parts[i-1], in lexicographic order."""
    t = check_partition(parts)
    n = len(t)
    used = [False] * (n + 1)
    row: list[int] = []

    def backtrack(i: int) -> Iterator[Perm]:
        if i == n:
            yield tuple(row)
            return
        for v in range(1, t[i] + 1):
            if not used[v]:
                used[v] = True
                row.append(v)
                yield from backtrack(i + 1)
                row.pop()
                used[v] = False

    yield from backtrack(0)


def haglund_hook_sum(parts: Sequence[int]) -> LaurentPoly:
    """(q-1)^n times the hook-statistic sum over fitting permutations."""
    t = check_partition(parts)
    acc: dict[int, int] = {}
    for s in constrained_permutations(t):
        e = hook_number(s)
        acc[e] = acc.get(e, 0) + 1
    return (Q - ONE) ** len(t) * LaurentPoly(acc)


def haglund_routes_check(max_parts: int, primes: Sequence[int] = (2, 3),
                         brute_max_parts: int = 3,
                         budget: int = DEFAULT_BUDGET) -> bool:
    """Product form == hook sum for every partition with up to max_parts
    parts; additionally both match the brute-force matrix count at the
    given primes for partitions small enough to enumerate."""
    for n in range(1, max_parts + 1):
        for parts in partitions_bounded(n):
            product = haglund_product(parts)
            if product != haglund_hook_sum(parts):
                return False
            if n <= brute_max_parts:
                for p in primes:
                    try:
                        brute = count_invertible_support(parts, p, budget)
                    except TooLarge:
                        continue
                    if product.evaluate(p) != brute:
                        return False
    return True


def partitions_bounded(n: int) -> Iterator[Partition]:
    """All weakly increasing tuples 0 <= l_1 <= ... <= l_n <= n."""
    def rec(i: int, low: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield ()
            return
        for v in range(low, n + 1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    yield from rec(0, 0)
