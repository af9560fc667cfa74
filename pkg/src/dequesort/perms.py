"""Permutations in one-line notation, pattern containment, and sortability
basis patterns.

A permutation of length n is a tuple containing each value 1..n exactly
once.  The empty tuple is the length-0 permutation and serves as the root
of the insertion tree.  Functions accept any integer sequence and return
plain tuples.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

Perm = tuple[int, ...]

__all__ = [
    "Perm",
    "SortClass",
    "ParseError",
    "NotAPermutation",
    "DuplicateValue",
    "UnsupportedClass",
    "as_permutation",
    "parse_permutation",
    "format_permutation",
    "contains",
    "avoids_all",
    "reduce_values",
    "basis_patterns",
    "tree_children",
]


class SortClass(enum.Enum):
    """Storage discipline a permutation may be sorted on."""

    PARALLEL_STACKS = "pstacks"
    DEQUE = "deque"
    SINGLE_STACK = "stack"


class ParseError(ValueError):
    """A token in the input text is not an integer."""


class NotAPermutation(ValueError):
    """The values are not a bijection on 1..n."""


class DuplicateValue(ValueError):
    """The input sequence repeats a value."""


class UnsupportedClass(ValueError):
    """The requested sort class is not handled by this operation."""


def as_permutation(values: Iterable[int]) -> Perm:
    """Validate that ``values`` is a permutation of 1..n and return it as a tuple.

    >>> as_permutation([2, 1, 3])
    (2, 1, 3)
    >>> as_permutation([])
    ()
    """
    perm = tuple(values)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise NotAPermutation(f"not a permutation of 1..{len(perm)}: {perm}")
    return perm


def parse_permutation(text: str) -> Perm:
    """Parse whitespace- or comma-separated values into a permutation.

    >>> parse_permutation("2 5 4 1 6 3")
    (2, 5, 4, 1, 6, 3)
    >>> parse_permutation("")
    ()
    """
    values = []
    for token in text.replace(",", " ").split():
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(f"bad token {token!r}") from None
    return as_permutation(values)


def format_permutation(perm: Sequence[int]) -> str:
    """One-line text form: decimal values separated by single spaces."""
    return " ".join(str(v) for v in perm)


def contains(pi: Sequence[int], sigma: Sequence[int]) -> bool:
    """True iff some subsequence of ``pi`` reduces to the pattern ``sigma``.

    >>> contains((2, 3, 1), (2, 1))
    True
    >>> contains((1, 2, 3), (2, 1))
    False
    """
    k, n = len(sigma), len(pi)
    if k == 0:
        return True
    if k > n:
        return False

    chosen: list[int] = []

    def extend(t: int, start: int) -> bool:
        if t == k:
            return True
        st = sigma[t]
        for idx in range(start, n - (k - t) + 1):
            v = pi[idx]
            if all((prev < st) == (c < v) for prev, c in zip(sigma, chosen)):
                chosen.append(v)
                if extend(t + 1, idx + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)


def avoids_all(pi: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    """True iff ``pi`` contains none of ``patterns``."""
    return not any(contains(pi, p) for p in patterns)


def reduce_values(values: Sequence[int]) -> Perm:
    """Map distinct values to their ranks, giving the order-isomorphic permutation.

    >>> reduce_values((7, 2, 9))
    (2, 1, 3)
    >>> reduce_values(())
    ()
    """
    if len(set(values)) != len(values):
        raise DuplicateValue(f"values are not distinct: {values}")
    rank = {v: i + 1 for i, v in enumerate(sorted(values))}
    return tuple(rank[v] for v in values)


def tree_children(pi: Sequence[int]) -> list[Perm]:
    """Children of ``pi`` in the insertion tree: n+1 inserted at each position.

    >>> tree_children(())
    [(1,)]
    >>> tree_children((1,))
    [(2, 1), (1, 2)]
    """
    parent = tuple(pi)
    v = len(parent) + 1
    return [parent[:i] + (v,) + parent[i:] for i in range(v)]


def _zigzag_tail(first_even: int, last_even: int) -> list[int]:
    """The shared basis tail (6,3), (8,5), (10,7), ... over the given evens."""
    out: list[int] = []
    for e in range(first_even, last_even + 1, 2):
        out += [e, e - 3]
    return out


def _pstack_rep(length: int) -> Perm:
    if length % 4 == 3:
        return tuple([length - 2, 2, length, 4, 1] + _zigzag_tail(6, length - 1))
    return tuple([2, length - 1, 4, 1] + _zigzag_tail(6, length))


def _deque_rep(length: int) -> Perm:
    if length % 4 == 3:
        return _pstack_rep(length)
    return tuple([length, 2, length - 2, 4, 1] + _zigzag_tail(6, length - 1))


def _swap_first_two(p: Perm) -> Perm:
    return (p[1], p[0]) + p[2:]


def _swap_largest_two(p: Perm) -> Perm:
    n = len(p)
    values = list(p)
    i, j = values.index(n), values.index(n - 1)
    values[i], values[j] = values[j], values[i]
    return tuple(values)


def basis_patterns(cls: SortClass, max_len: int) -> list[Perm]:
    """All minimal unsortable patterns of length <= max_len for the class.

    Parallel stacks have one pattern per length L >= 4 with L mod 4 in {0, 3};
    deques have four per odd length L >= 5 (a representative plus the variants
    obtained by swapping the first two and/or the largest two values).  The
    single-stack class has the lone basis pattern (2, 3, 1).
    """
    if cls is SortClass.SINGLE_STACK:
        return [(2, 3, 1)] if max_len >= 3 else []
    if cls is SortClass.PARALLEL_STACKS:
        return [_pstack_rep(n) for n in range(4, max_len + 1) if n % 4 in (0, 3)]
    if cls is SortClass.DEQUE:
        out: list[Perm] = []
        for n in range(5, max_len + 1, 2):
            rep = _deque_rep(n)
            out += [
                rep,
                _swap_first_two(rep),
                _swap_largest_two(rep),
                _swap_first_two(_swap_largest_two(rep)),
            ]
        return out
    raise UnsupportedClass(f"no basis generator for {cls!r}")
