"""Finite-index right congruences of the free monoid on {a, b}.

A congruence with n classes is stored as a code tree (P = class
representatives, C = leaves) plus a reduction map f sending each leaf to
the representative of its class, with the defining constraint
f(c) < c alphabetically.  Letters act on classes by p.x = px when px is
still a representative and f(px) otherwise; the congruence is *regular*
when both letter actions permute the classes.

Regular congruences with n+1 leaves correspond one-to-one with
indecomposable permutations of size n+1: send each leaf c (in
alphabetical order) to the position of its image under f in the set
P u {A_INVERSE} sorted by the twisted order, where the unique all-'a'
leaf maps to the formal symbol A_INVERSE instead of f.  Both directions
are implemented and are exact inverses.

The classes of a regular congruence are the cosets of a finite-index
subgroup of the free group F_2; ``subgroup_generators`` emits the free
generating set {c · f(c)^-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from math import factorial
from typing import Iterable, Iterator, Mapping

from . import permstat
from .permstat import Perm
from .words import (
    A_INVERSE,
    CodeTree,
    TreeSignature,
    enumerate_trees,
    reconstruct,
    strip_a_run,
    twisted_key,
    word_str,
)


class NotRegular(ValueError):
    """Both letter actions must be bijections on the classes."""


class NotIndecomposable(ValueError):
    """The correspondence is defined on indecomposable permutations only."""


GroupWord = tuple[tuple[str, int], ...]  # reduced runs: (letter, exponent != 0)

A_INVERSE_KEY = object()  # dict key standing in for the unhashable-by-value sentinel


@dataclass(frozen=True)
class RightCongruence:
    """Code tree plus reduction map; images aligned with tree.leaves."""

    tree: CodeTree
    images: tuple[str, ...]

    @classmethod
    def from_map(cls, tree: CodeTree, mapping: Mapping[str, str]) -> "RightCongruence":
        if set(mapping) != set(tree.leaves):
            raise ValueError("map domain must be exactly the leaf set")
        prefix_set = set(tree.prefixes)
        for c, p in mapping.items():
            if p not in prefix_set:
                raise ValueError(f"image {word_str(p)} of {word_str(c)} is not a class representative")
            if not p < c:
                raise ValueError(f"image must be alphabetically smaller: {word_str(c)} -> {word_str(p)}")
        return cls(tree, tuple(mapping[c] for c in tree.leaves))

    @cached_property
    def as_dict(self) -> dict[str, str]:
        return dict(zip(self.tree.leaves, self.images))

    def image_of(self, leaf: str) -> str:
        return self.as_dict[leaf]

    def __str__(self) -> str:
        body = ", ".join(f"{word_str(c)}->{word_str(p)}"
                         for c, p in zip(self.tree.leaves, self.images))
        return "{" + body + "}"


@dataclass(frozen=True)
class ActionTable:
    """Letter actions on the sorted class representatives, as index maps."""

    states: tuple[str, ...]
    a_next: tuple[int, ...]
    b_next: tuple[int, ...]

    def step(self, state: int, letter: str) -> int:
        return (self.a_next if letter == "a" else self.b_next)[state]

    def row_words(self, letter: str) -> tuple[str, ...]:
        nxt = self.a_next if letter == "a" else self.b_next
        return tuple(self.states[i] for i in nxt)


def action_table(rc: RightCongruence) -> ActionTable:
    states = rc.tree.prefixes
    index = {p: i for i, p in enumerate(states)}
    prefix_set = set(states)
    rows: dict[str, tuple[int, ...]] = {}
    for letter in ("a", "b"):
        row = []
        for p in states:
            w = p + letter
            row.append(index[w] if w in prefix_set else index[rc.image_of(w)])
        rows[letter] = tuple(row)
    return ActionTable(states, rows["a"], rows["b"])


def is_regular(rc: RightCongruence) -> bool:
    table = action_table(rc)
    n = len(table.states)
    return (len(set(table.a_next)) == n) and (len(set(table.b_next)) == n)


def enumerate_regular(n: int) -> Iterator[RightCongruence]:
    """Every regular congruence with n+1 leaves, each exactly once.

    The reduction map is forced on 'a'-ending leaves (strip the trailing
    'a'-run) and ranges over the below-diagonal bijections C_b -> P_a on
    the rest; regularity is still checked, never assumed.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    for tree in enumerate_trees(n):
        c_a, c_b, p_a, _ = tree.parts
        base = {c: strip_a_run(c) for c in c_a}
        for assignment in _below_bijections(c_b, p_a):
            rc = RightCongruence.from_map(tree, base | assignment)
            if is_regular(rc):
                yield rc


def _below_bijections(c_b: tuple[str, ...],
                      p_a: tuple[str, ...]) -> Iterator[dict[str, str]]:
    """Bijections C_b -> P_a with every image alphabetically below its leaf."""
    if not c_b:
        yield {}
        return
    used = [False] * len(p_a)
    chosen: list[str] = []

    def backtrack(i: int) -> Iterator[dict[str, str]]:
        if i == len(c_b):
            yield dict(zip(c_b, chosen))
            return
        for j, p in enumerate(p_a):
            if not used[j] and p < c_b[i]:
                used[j] = True
                chosen.append(p)
                yield from backtrack(i + 1)
                chosen.pop()
                used[j] = False

    yield from backtrack(0)


def to_indecomposable(rc: RightCongruence) -> Perm:
    """Permutation of the n+1 leaves given by reading f through the
    twisted order on P u {A_INVERSE}; the all-'a' leaf maps to A_INVERSE."""
    if not is_regular(rc):
        raise NotRegular(f"congruence {rc} is not regular")
    extended = sorted([*rc.tree.prefixes, A_INVERSE], key=twisted_key)
    rank = {(p if isinstance(p, str) else A_INVERSE_KEY): i + 1
            for i, p in enumerate(extended)}
    return tuple(rank[A_INVERSE_KEY] if not strip_a_run(c) else rank[rc.image_of(c)]
                 for c in rc.tree.leaves)


def from_indecomposable(theta: Perm) -> RightCongruence:
    """Inverse construction, from the left-to-right maxima.

    The maxima positions are the signature ranks, consecutive maxima
    value gaps the run lengths; the stripped permutation matches the
    remaining leaves (sorted alphabetically) with the 'a'-part
    representatives (sorted by the twisted order).
    """
    theta = permstat.check_permutation(theta)
    if len(theta) < 2 or not permstat.is_indecomposable(theta):
        raise NotIndecomposable(f"{theta!r} is not an indecomposable permutation of size >= 2")
    lr = permstat.lr_maxima(theta)
    lengths = (lr.values[0] - 1,) + tuple(j2 - j1 for j1, j2 in zip(lr.values, lr.values[1:]))
    tree = reconstruct(TreeSignature(len(theta) - 1, lr.positions, lengths))
    c_a, c_b, p_a, _ = tree.parts
    mapping = {c: strip_a_run(c) for c in c_a}
    sigma = permstat.strip_lr_maxima(theta)
    p_a_twisted = sorted(p_a, key=twisted_key)
    for i, c in enumerate(c_b):
        mapping[c] = p_a_twisted[sigma[i] - 1]
    return RightCongruence.from_map(tree, mapping)


# -- free group words ----------------------------------------------------


def free_reduce(steps: Iterable[tuple[str, int]]) -> GroupWord:
    """Merge adjacent runs of the same letter and drop empty runs."""
    stack: list[list] = []
    for letter, exp in steps:
        if exp == 0:
            continue
        if stack and stack[-1][0] == letter:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([letter, exp])
    return tuple((l, e) for l, e in stack)


def group_inverse(word: GroupWord) -> GroupWord:
    return tuple((l, -e) for l, e in reversed(word))


def group_concat(u: GroupWord, v: GroupWord) -> GroupWord:
    return free_reduce(list(u) + list(v))


def monoid_to_group(w: str) -> GroupWord:
    return free_reduce((ch, 1) for ch in w)


def group_word_str(word: GroupWord) -> str:
    if not word:
        return "1"
    out = []
    for letter, exp in word:
        if exp == 1:
            out.append(letter)
        else:
            out.append(f"{letter}^{exp}")
    return "".join(out)


def parse_group_word(text: str) -> GroupWord:
    """Parse 'ba^-1', 'a^2b', '1' into a reduced group word."""
    text = text.strip()
    if text == "1":
        return ()
    steps: list[tuple[str, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch not in "ab":
            raise ValueError(f"bad character {ch!r} in group word {text!r}")
        i += 1
        exp = 1
        if i < len(text) and text[i] == "^":
            i += 1
            j = i
            if j < len(text) and text[j] == "-":
                j += 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i or text[i:j] == "-":
                raise ValueError(f"missing exponent in group word {text!r}")
            exp = int(text[i:j])
            i = j
        steps.append((ch, exp))
    return free_reduce(steps)


def subgroup_generators(rc: RightCongruence) -> tuple[GroupWord, ...]:
    """Free generating set of the subgroup whose cosets are the classes:
    one reduced word c * f(c)^-1 per leaf, in leaf order."""
    if not is_regular(rc):
        raise NotRegular(f"congruence {rc} is not regular")
    gens = []
    for c in rc.tree.leaves:
        gens.append(group_concat(monoid_to_group(c),
                                 group_inverse(monoid_to_group(rc.image_of(c)))))
    return tuple(gens)


def class_index(rc: RightCongruence, word: GroupWord) -> int:
    """Index of the class reached from the class of 1 along a group word.

    Inverse letters walk the letter actions backwards, which needs
    regularity.
    """
    if not is_regular(rc):
        raise NotRegular(f"congruence {rc} is not regular")
    table = action_table(rc)
    forward = {"a": table.a_next, "b": table.b_next}
    backward = {}
    for letter, nxt in forward.items():
        inv = [0] * len(nxt)
        for i, j in enumerate(nxt):
            inv[j] = i
        backward[letter] = tuple(inv)
    state = table.states.index("")
    for letter, exp in word:
        row = forward[letter] if exp > 0 else backward[letter]
        for _ in range(abs(exp)):
            state = row[state]
    return state


def subgroup_contains(rc: RightCongruence, word: GroupWord) -> bool:
    """True when the word stabilizes the class of 1 (lies in the subgroup)."""
    start = rc.tree.prefixes.index("")
    return class_index(rc, word) == start


@cache
def hall_count(n: int) -> int:
    """Number of index-n subgroups of F_2 by the classical recursion:
    N(n) = n * n! - sum over 0 < i < n of (n-i)! * N(i)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return n * factorial(n) - sum(factorial(n - i) * hall_count(i)
                                  for i in range(1, n))
