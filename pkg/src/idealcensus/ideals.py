"""Census of right ideals of finite codimension in the group algebra
F_q[F_2], counted three independent ways.

An ideal of codimension n is determined by a code tree with n internal
nodes (the quotient basis P and the leading words C) plus one scalar per
pair (c in C, p in P with p < c): the generators are the words c minus
their lower linear combinations.  The two group generators then act on
the quotient by structured matrices (``build_action_matrices``), and the
ideal data is admissible exactly when both actions are invertible.

Counting routes, all exact polynomials in q:

* ``ideal_count_formula``: closed product over the indecomposable
  inversion polynomial of size n+1;
* ``ideal_count_hook_formula``: same prefactor against the hook-statistic
  sum, no shift;
* ``ideal_count_by_trees``: sum over trees of
  (q-1)^k * q^(free cells) * staircase count;
* ``ideal_count_brute_force``: enumerate every coefficient assignment
  over F_p and test both action matrices for invertibility.

``cell_decomposition`` records the partition of the census into cells
(F_q*)^(n+1) x F_q^d indexed by indecomposable permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

from .haglund import haglund_product
from .linfq import DEFAULT_BUDGET, FqMatrix, TooLarge, _full_rank, check_prime
from .permstat import (
    Perm,
    enumerate_indecomposables,
    hook_number,
    indec_inversion_polynomial,
    inversions,
)
from .qpoly import LaurentPoly, ONE, Q
from .words import CodeTree, TreeSignature, enumerate_trees, signature, tree_stats, word_compact

Contribution = Union[LaurentPoly, int]


class CodimensionZero(ValueError):
    """The closed formulas are stated for codimension n >= 1."""


def _check_codim(n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise CodimensionZero(f"codimension must be an integer >= 1, got {n!r}")
    return n


def ideal_count_formula(n: int) -> LaurentPoly:
    """(q-1)^(n+1) * q^((n+1)(n-2)/2) * (indecomposable inversion
    polynomial of size n+1); always an ordinary polynomial."""
    _check_codim(n)
    count = ((Q - ONE) ** (n + 1)
             * indec_inversion_polynomial(n + 1).shift((n + 1) * (n - 2) // 2))
    if not count.is_zero and count.valuation < 0:
        raise ArithmeticError("census count must be an ordinary polynomial")
    return count


def ideal_count_hook_formula(n: int) -> LaurentPoly:
    """(q-1)^(n+1) * sum of q^(hook(theta) - (n+1)) over indecomposable
    theta of size n+1; an independent route to the same polynomial."""
    _check_codim(n)
    acc: dict[int, int] = {}
    for theta in enumerate_indecomposables(n + 1):
        e = hook_number(theta) - (n + 1)
        acc[e] = acc.get(e, 0) + 1
    return (Q - ONE) ** (n + 1) * LaurentPoly(acc)


@dataclass(frozen=True)
class TreeEntry:
    """Per-tree line of a census report."""

    sig: TreeSignature
    a_count: int
    a_cells: int
    b_cells: int
    partition: tuple[int, ...]
    contribution: Contribution


@dataclass(frozen=True)
class IdealCountReport:
    """Census total plus the per-tree breakdown that sums to it."""

    n: int
    method: str
    q: int | None
    total: Contribution
    entries: tuple[TreeEntry, ...]

    def __post_init__(self):
        if sum((e.contribution for e in self.entries), 0) != self.total:
            raise ValueError("per-tree breakdown does not sum to the total")


def tree_contribution(tree: CodeTree) -> Contribution:
    """(q-1)^k * q^(a_cells + b_cells) * staircase count of the tree."""
    st = tree_stats(tree)
    return ((Q - ONE) ** st.a_count
            * haglund_product(st.partition).shift(st.a_cells + st.b_cells))


def ideal_count_by_trees(n: int) -> IdealCountReport:
    _check_codim(n)
    entries = []
    for tree in enumerate_trees(n):
        st = tree_stats(tree)
        entries.append(TreeEntry(signature(tree), st.a_count, st.a_cells,
                                 st.b_cells, st.partition, tree_contribution(tree)))
    total = sum((e.contribution for e in entries), 0)
    return IdealCountReport(n, "structural", None, total, tuple(entries))


# -- explicit ideal data over a fixed prime field -------------------------


def assignment_slots(tree: CodeTree) -> tuple[tuple[str, str], ...]:
    """All pairs (leading word c, smaller basis word p), in (c, p) order."""
    return tuple((c, p) for c in tree.leaves for p in tree.prefixes if p < c)


@dataclass(frozen=True)
class CoefficientAssignment:
    """One scalar per slot; values aligned with ``assignment_slots``."""

    tree: CodeTree
    modulus: int
    values: tuple[int, ...]

    @classmethod
    def from_dict(cls, tree: CodeTree, p: int,
                  mapping: Mapping[tuple[str, str], int] = {}) -> "CoefficientAssignment":
        check_prime(p)
        slots = assignment_slots(tree)
        unknown = set(mapping) - set(slots)
        if unknown:
            raise ValueError(f"not coefficient slots: {sorted(unknown)!r}")
        return cls(tree, p, tuple(mapping.get(slot, 0) % p for slot in slots))

    def __post_init__(self):
        check_prime(self.modulus)
        if len(self.values) != len(assignment_slots(self.tree)):
            raise ValueError("one value per slot required")
        if any(not 0 <= v < self.modulus for v in self.values):
            raise ValueError("values must be reduced mod p")

    def as_dict(self) -> dict[tuple[str, str], int]:
        return dict(zip(assignment_slots(self.tree), self.values))


def build_action_matrices(ca: CoefficientAssignment) -> tuple[FqMatrix, FqMatrix]:
    """Matrices of the two letters acting on the quotient basis P
    (sorted alphabetically): row p, column r holds 1 when p.x = r stays
    in P, the slot value for (px, r) when px is a leading word and
    r < px, and 0 otherwise."""
    tree = ca.tree
    prefixes = tree.prefixes
    index = {p: i for i, p in enumerate(prefixes)}
    prefix_set = set(prefixes)
    alpha = ca.as_dict()
    n = len(prefixes)
    out = []
    for letter in ("a", "b"):
        rows = []
        for p in prefixes:
            w = p + letter
            if w in prefix_set:
                rows.append([int(j == index[w]) for j in range(n)])
            else:
                rows.append([alpha[(w, r)] if r < w else 0 for r in prefixes])
        out.append(FqMatrix.from_rows(rows, ca.modulus))
    return out[0], out[1]


@dataclass(frozen=True)
class IdealGenerator:
    """A leading word minus its lower linear combination."""

    lead: str
    tail: tuple[tuple[str, int], ...]  # (basis word, nonzero coefficient)

    def __str__(self) -> str:
        chunks = [word_compact(self.lead)]
        for p, co in self.tail:
            if p == "":
                chunks.append(str(co))
            elif co == 1:
                chunks.append(word_compact(p))
            else:
                chunks.append(f"{co}*{word_compact(p)}")
        return " - ".join(chunks)


def ideal_generators(ca: CoefficientAssignment) -> tuple[IdealGenerator, ...]:
    """One generator per leading word, zero coefficients dropped."""
    alpha = ca.as_dict()
    gens = []
    for c in ca.tree.leaves:
        tail = tuple((p, alpha[(c, p)]) for p in ca.tree.prefixes
                     if p < c and alpha[(c, p)])
        gens.append(IdealGenerator(c, tail))
    return tuple(gens)


# -- brute-force censuses --------------------------------------------------


def _slot_cells(tree: CodeTree) -> list[tuple[str, int, int]]:
    """Slots as matrix cells: (letter, row, col) aligned with
    ``assignment_slots``; each slot touches exactly one cell of one of
    the two action matrices."""
    index = {p: i for i, p in enumerate(tree.prefixes)}
    return [(c[-1], index[c[:-1]], index[p])
            for c, p in assignment_slots(tree)]


def _base_grids(tree: CodeTree) -> dict[str, list[list[int]]]:
    index = {p: i for i, p in enumerate(tree.prefixes)}
    prefix_set = set(tree.prefixes)
    n = len(tree.prefixes)
    grids = {}
    for letter in ("a", "b"):
        grid = [[0] * n for _ in range(n)]
        for p in tree.prefixes:
            w = p + letter
            if w in prefix_set:
                grid[index[p]][index[w]] = 1
        grids[letter] = grid
    return grids


def _count_assignments(tree: CodeTree, p: int, letters: str,
                       budget: int) -> int:
    """Odometer over the slots of the given letters; count assignments
    whose selected action matrices are all invertible."""
    cells = [cell for cell in _slot_cells(tree) if cell[0] in letters]
    if p ** len(cells) > budget:
        raise TooLarge(f"{p}**{len(cells)} assignments exceed budget {budget}")
    grids = _base_grids(tree)
    n = len(tree.prefixes)
    active = [grids[letter] for letter in ("a", "b") if letter in letters]
    digits = [0] * len(cells)
    count = 0
    while True:
        if all(_full_rank([row[:] for row in g], n, p) for g in active):
            count += 1
        pos = 0
        while pos < len(cells):
            digits[pos] += 1
            letter, i, j = cells[pos]
            if digits[pos] < p:
                grids[letter][i][j] = digits[pos]
                break
            digits[pos] = 0
            grids[letter][i][j] = 0
            pos += 1
        if pos == len(cells):
            return count


def count_invertible_a_actions(tree: CodeTree, p: int,
                               budget: int = DEFAULT_BUDGET) -> int:
    check_prime(p)
    return _count_assignments(tree, p, "a", budget)


def count_invertible_b_actions(tree: CodeTree, p: int,
                               budget: int = DEFAULT_BUDGET) -> int:
    check_prime(p)
    return _count_assignments(tree, p, "b", budget)


def count_invertible_pairs(tree: CodeTree, p: int,
                           budget: int = DEFAULT_BUDGET) -> int:
    check_prime(p)
    return _count_assignments(tree, p, "ab", budget)


def per_tree_action_count_check(n: int, p: int,
                                budget: int = DEFAULT_BUDGET) -> bool:
    """For every tree: the letter actions are invertible for exactly
    (p-1)^k * p^(a_cells) resp. p^(b_cells) * staircase(p) assignments,
    and jointly for exactly the product (the two letters are
    independent)."""
    _check_codim(n)
    check_prime(p)
    for tree in enumerate_trees(n):
        st = tree_stats(tree)
        expect_a = (p - 1) ** st.a_count * p ** st.a_cells
        expect_b = p ** st.b_cells * haglund_product(st.partition).evaluate(p)
        if count_invertible_a_actions(tree, p, budget) != expect_a:
            return False
        if count_invertible_b_actions(tree, p, budget) != expect_b:
            return False
        if count_invertible_pairs(tree, p, budget) != expect_a * expect_b:
            return False
    return True


def ideal_count_brute_force(n: int, p: int,
                            budget: int = DEFAULT_BUDGET) -> IdealCountReport:
    """Exhaustive census at q = p: every coefficient assignment over
    every tree, keeping those with both action matrices invertible.
    The budget bounds the assignments per tree."""
    _check_codim(n)
    check_prime(p)
    entries = []
    for tree in enumerate_trees(n):
        st = tree_stats(tree)
        entries.append(TreeEntry(signature(tree), st.a_count, st.a_cells,
                                 st.b_cells, st.partition,
                                 count_invertible_pairs(tree, p, budget)))
    total = sum(e.contribution for e in entries)
    return IdealCountReport(n, "bruteforce", p, total, tuple(entries))


# -- cell decomposition ----------------------------------------------------


@dataclass(frozen=True)
class Cell:
    theta: Perm
    torus_rank: int
    affine_dim: int


@dataclass(frozen=True)
class CellDecomposition:
    n: int
    cells: tuple[Cell, ...]

    def total_poly(self) -> LaurentPoly:
        return sum(((Q - ONE) ** c.torus_rank * LaurentPoly.monomial(c.affine_dim)
                    for c in self.cells), LaurentPoly())


def cell_decomposition(n: int) -> CellDecomposition:
    """One cell (F_q*)^(n+1) x F_q^((n+1)(n-2)/2 + inv(theta)) per
    indecomposable theta of size n+1, in lexicographic order."""
    _check_codim(n)
    base = (n + 1) * (n - 2) // 2
    cells = tuple(Cell(theta, n + 1, base + inversions(theta))
                  for theta in enumerate_indecomposables(n + 1))
    return CellDecomposition(n, cells)
