"""The right-ideal census: closed formula, tree sum, and brute force.

The codimension-n count is a polynomial in q; three independent routes
must produce it, and evaluating at small primes must match exhaustive
enumeration of coefficient assignments.
"""

import pytest

from idealcensus.ideals import (
    CodimensionZero,
    CoefficientAssignment,
    assignment_slots,
    build_action_matrices,
    cell_decomposition,
    count_invertible_a_actions,
    count_invertible_b_actions,
    count_invertible_pairs,
    ideal_count_brute_force,
    ideal_count_by_trees,
    ideal_count_formula,
    ideal_count_hook_formula,
    ideal_generators,
    per_tree_action_count_check,
    tree_contribution,
)
from idealcensus.linfq import TooLarge, is_invertible
from idealcensus.qpoly import LaurentPoly
from idealcensus.words import CodeTree

EXAMPLE_TREE = CodeTree.from_leaves(["aa", "ab", "baa", "bab", "bba", "bbb"])
EDGE = CodeTree.from_leaves(["a", "b"])


def test_codimension_zero_rejected():
    for fn in (ideal_count_formula, ideal_count_hook_formula,
               ideal_count_by_trees, cell_decomposition):
        with pytest.raises(CodimensionZero):
            fn(0)
        with pytest.raises(CodimensionZero):
            fn(-2)


def test_formula_frozen_values():
    assert ideal_count_formula(1) == LaurentPoly({2: 1, 1: -2, 0: 1})
    assert ideal_count_formula(2) == LaurentPoly(
        {6: 1, 5: -1, 4: -3, 3: 5, 2: -2})
    assert str(ideal_count_formula(2)) == "q^6 - q^5 - 3q^4 + 5q^3 - 2q^2"


@pytest.mark.parametrize("n", range(1, 6))
def test_three_polynomial_routes_agree(n):
    formula = ideal_count_formula(n)
    assert formula == ideal_count_hook_formula(n)
    report = ideal_count_by_trees(n)
    assert report.total == formula
    assert report.method == "structural" and report.q is None
    assert sum((e.contribution for e in report.entries), 0) == report.total


def test_example_tree_contribution():
    contrib = tree_contribution(EXAMPLE_TREE)
    expected = ((LaurentPoly({1: 1, 0: -1})) ** 3
                * LaurentPoly({8: 1, 7: -1, 6: -2, 5: 2, 4: 1, 3: -1}).shift(11))
    assert contrib == expected
    assert contrib.evaluate(2) == 147456


def test_assignment_slots():
    assert assignment_slots(EDGE) == (("a", ""), ("b", ""))
    slots = assignment_slots(EXAMPLE_TREE)
    assert len(slots) == 22
    assert slots[0] == ("aa", "")
    assert ("bbb", "bb") in slots
    assert ("aa", "b") not in slots  # b is not below aa


def test_coefficient_assignment_validation():
    ca = CoefficientAssignment.from_dict(EDGE, 3, {("a", ""): 5})
    assert ca.values == (2, 0)
    assert ca.as_dict() == {("a", ""): 2, ("b", ""): 0}
    with pytest.raises(ValueError):
        CoefficientAssignment.from_dict(EDGE, 3, {("a", "a"): 1})
    with pytest.raises(ValueError):
        CoefficientAssignment(EDGE, 3, (1,))
    with pytest.raises(ValueError):
        CoefficientAssignment(EDGE, 3, (1, 3))
    with pytest.raises(ValueError):
        CoefficientAssignment.from_dict(EDGE, 4, {})


def test_action_matrices_edge_tree():
    dead = CoefficientAssignment.from_dict(EDGE, 2)
    ma, mb = build_action_matrices(dead)
    assert ma.entries == ((0,),) and mb.entries == ((0,),)
    live = CoefficientAssignment.from_dict(EDGE, 2, {("a", ""): 1, ("b", ""): 1})
    ma, mb = build_action_matrices(live)
    assert is_invertible(ma) and is_invertible(mb)


def test_action_matrices_structure():
    ca = CoefficientAssignment.from_dict(
        EXAMPLE_TREE, 5,
        {("aa", ""): 2, ("ab", "a"): 3, ("bbb", "bb"): 4},
    )
    ma, mb = build_action_matrices(ca)
    states = EXAMPLE_TREE.prefixes  # ("", "a", "b", "ba", "bb")
    # structural ones: "" --a--> a, b --a--> ba stay inside P
    assert ma.entry(states.index(""), states.index("a")) == 1
    assert ma.entry(states.index("b"), states.index("ba")) == 1
    # leaf rows carry the assigned coefficients
    assert ma.entry(states.index("a"), states.index("")) == 2  # word aa
    assert mb.entry(states.index("a"), states.index("a")) == 3  # word ab
    assert mb.entry(states.index("bb"), states.index("bb")) == 4  # word bbb
    # nothing above the leading word
    assert mb.entry(states.index("a"), states.index("b")) == 0


def test_ideal_generators_rendering():
    ca = CoefficientAssignment.from_dict(
        EXAMPLE_TREE, 5,
        {("aa", ""): 1, ("bab", "ba"): 2, ("bab", ""): 3},
    )
    gens = ideal_generators(ca)
    by_lead = {g.lead: str(g) for g in gens}
    assert by_lead["aa"] == "a^2 - 1"
    assert by_lead["bab"] == "bab - 3 - 2*ba"
    assert by_lead["ab"] == "ab"


@pytest.mark.parametrize("n,p,expected", [
    (1, 2, 1), (1, 3, 4), (2, 2, 16), (2, 3, 360), (3, 2, 1088),
])
def test_brute_force_census_frozen(n, p, expected):
    report = ideal_count_brute_force(n, p)
    assert report.total == expected
    assert report.total == ideal_count_formula(n).evaluate(p)
    assert report.method == "bruteforce" and report.q == p


def test_brute_force_budget():
    with pytest.raises(TooLarge):
        ideal_count_brute_force(3, 3, budget=10)


def test_edge_tree_counts():
    # single coefficient per letter; invertible iff nonzero
    for p in (2, 3, 5):
        assert count_invertible_a_actions(EDGE, p) == p - 1
        assert count_invertible_b_actions(EDGE, p) == p - 1
        assert count_invertible_pairs(EDGE, p) == (p - 1) ** 2


def test_example_tree_action_legs():
    # 11 free cells in the a-action, k = 3 leaves ending in a
    assert count_invertible_a_actions(EXAMPLE_TREE, 2) == 256  # (2-1)^3 * 2^8
    assert count_invertible_b_actions(EXAMPLE_TREE, 2) == 576  # 2^3 * 72


@pytest.mark.parametrize("n", (1, 2))
@pytest.mark.parametrize("p", (2, 3))
def test_per_tree_action_counts(n, p):
    assert per_tree_action_count_check(n, p)


def test_cell_decomposition_small():
    cd = cell_decomposition(1)
    assert [(c.theta, c.torus_rank, c.affine_dim) for c in cd.cells] == \
        [((2, 1), 2, 0)]
    cd2 = cell_decomposition(2)
    assert [(c.theta, c.affine_dim) for c in cd2.cells] == \
        [((2, 3, 1), 2), ((3, 1, 2), 2), ((3, 2, 1), 3)]
    assert all(c.torus_rank == 3 for c in cd2.cells)


@pytest.mark.parametrize("n", range(1, 6))
def test_cells_sum_to_census(n):
    cd = cell_decomposition(n)
    assert cd.total_poly() == ideal_count_formula(n)
    assert all(c.affine_dim >= 0 for c in cd.cells)
