"""Staircase-supported invertible matrix counts: product form vs hook sum."""

import pytest

from idealcensus.haglund import (
    check_partition,
    constrained_permutations,
    haglund_hook_sum,
    haglund_product,
    haglund_routes_check,
    partitions_bounded,
    support_set,
)
from idealcensus.qpoly import LaurentPoly, ZERO


def test_check_partition():
    assert check_partition([0, 1, 3]) == (0, 1, 3)
    assert check_partition(()) == ()
    with pytest.raises(ValueError):
        check_partition((2, 1))
    with pytest.raises(ValueError):
        check_partition((1, 4, 4))  # part above the number of parts
    with pytest.raises(ValueError):
        check_partition((-1,))


def test_support_set():
    assert support_set((1, 2)) == {(1, 1), (2, 1), (2, 2)}
    assert support_set((0, 2)) == {(2, 1), (2, 2)}


def test_product_form_explicit():
    assert haglund_product((1,)) == LaurentPoly({1: 1, 0: -1})
    # q^3 (q-1)^3 (q+1)^2
    assert haglund_product((2, 3, 3)) == LaurentPoly(
        {8: 1, 7: -1, 6: -2, 5: 2, 4: 1, 3: -1})
    assert haglund_product((2, 3, 3)).evaluate(2) == 72


def test_product_vanishes_below_staircase():
    assert haglund_product((0,)) == ZERO
    assert haglund_product((1, 1)) == ZERO
    assert haglund_product((1, 2, 2)) == ZERO
    assert haglund_product((1, 2, 3)) != ZERO


def test_constrained_permutations():
    assert list(constrained_permutations((1, 2, 3))) == [(1, 2, 3)]
    assert list(constrained_permutations((2, 2, 3))) == [(1, 2, 3), (2, 1, 3)]
    assert list(constrained_permutations((1, 1))) == []
    assert sum(1 for _ in constrained_permutations((3, 3, 3))) == 6


@pytest.mark.parametrize("n", range(1, 5))
def test_product_equals_hook_sum(n):
    for parts in partitions_bounded(n):
        assert haglund_product(parts) == haglund_hook_sum(parts)


def test_partitions_bounded():
    assert list(partitions_bounded(1)) == [(0,), (1,)]
    assert len(list(partitions_bounded(3))) == 20
    for parts in partitions_bounded(3):
        assert check_partition(parts) == parts


def test_degree_of_nonzero_products():
    for parts in partitions_bounded(4):
        h = haglund_product(parts)
        if h.is_zero:
            continue
        n = len(parts)
        assert h.degree == n * (n - 1) // 2 + sum(v - i for i, v in enumerate(parts))
        assert h.evaluate(1) == 0  # every factor vanishes at q=1


def test_routes_check_runs_green():
    assert haglund_routes_check(3, primes=(2,), brute_max_parts=2)
