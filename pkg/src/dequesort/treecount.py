"""Counting sortable permutations by pruned search of the insertion tree.

Every child of a sortable permutation is tested and every unsortable node
cuts off its whole subtree (sortable classes are closed under pattern
containment).  Each node is re-tested from scratch with the linear pile
test; this module is the slow, simple cross-check for the signal-counting
dynamic program, not a performance contender.

Two engines produce identical results: a pure-Python walk over
:mod:`dequesort.pile`, and a compiled kernel (`engine="fast"`, requires
numba) for the larger depths the acceptance checks need.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import pile
from .oracle import single_stack_sortable
from .perms import Perm, SortClass, tree_children

__all__ = ["CountTable", "count_by_tree", "expected_visits"]


@dataclass(frozen=True)
class CountTable:
    """Counts of sortable permutations per length, 1..max_n."""

    sort_class: SortClass
    counts: tuple[int, ...]
    visited: int

    def count(self, n: int) -> int:
        return self.counts[n - 1]

    @property
    def max_n(self) -> int:
        return len(self.counts)

    def is_supermultiplicative(self) -> bool:
        """count[m+n] >= count[m] * count[n] for all applicable m, n."""
        c = (1,) + self.counts
        return all(
            c[m + n] >= c[m] * c[n]
            for m in range(1, len(c))
            for n in range(1, len(c) - m)
        )


def expected_visits(table: CountTable) -> int:
    """Nodes the search must test: every child of every sortable node.

    sum over i of i * count(i-1), counting the empty permutation as sortable.
    """
    c = (1,) + table.counts
    return sum(i * c[i - 1] for i in range(1, table.max_n + 1))


def _predicate(cls: SortClass):
    if cls is SortClass.PARALLEL_STACKS:
        return pile.pstack_sortable
    if cls is SortClass.DEQUE:
        return pile.deque_sortable
    return single_stack_sortable


def _count_pure(cls: SortClass, max_n: int) -> tuple[list[int], int]:
    test = _predicate(cls)
    counts = [0] * (max_n + 1)
    visited = 0

    def walk(node: Perm) -> None:
        nonlocal visited
        for child in tree_children(node):
            visited += 1
            if test(child):
                counts[len(child)] += 1
                if len(child) < max_n:
                    walk(child)

    walk(())
    return counts[1:], visited


def _count_fast(cls: SortClass, max_n: int) -> tuple[list[int], int]:
    from . import _fastpile

    mode = {
        SortClass.PARALLEL_STACKS: _fastpile.MODE_PSTACK,
        SortClass.DEQUE: _fastpile.MODE_DEQUE,
        SortClass.SINGLE_STACK: _fastpile.MODE_STACK,
    }[cls]
    return _fastpile.count_tree(max_n, mode)


def count_by_tree(cls: SortClass, max_n: int, *, engine: str = "auto") -> CountTable:
    """Count sortable permutations of each length 1..max_n.

    ``engine`` is "pure", "fast" (compiled, needs numba) or "auto" (fast when
    numba imports and the depth warrants it).
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if engine == "auto":
        engine = "pure"
        if max_n > 9:
            try:
                import numba  # noqa: F401

                engine = "fast"
            except ImportError:
                pass
    if engine == "fast":
        counts, visited = _count_fast(cls, max_n)
    elif engine == "pure":
        counts, visited = _count_pure(cls, max_n)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return CountTable(cls, tuple(counts), visited)
