"""Deque- and parallel-stack-sortable permutations.

Sortability tests (brute-force oracles and the linear pile test, including
the repaired deque variant), sorting-run witnesses, exact counts by pruned
tree search and by the signal-counting dynamic program, and an advisor for
DEK, the hidden-deck deque solitaire.
"""

from .perms import (
    Perm,
    SortClass,
    as_permutation,
    basis_patterns,
    contains,
    parse_permutation,
    reduce_values,
    tree_children,
)
from .oracle import (
    DequeState,
    deque_sortable_bruteforce,
    is_sandwich,
    pstack_sortable_bruteforce,
    replay_word,
    single_stack_sortable,
    sortable_from_state,
)
from .pile import Variant, deque_sortable, extract_witness, pstack_sortable
from .treecount import CountTable, count_by_tree
from .epochs import count_sortable, count_table, h, k_prime, transition_list

__all__ = [
    "Perm",
    "SortClass",
    "as_permutation",
    "basis_patterns",
    "contains",
    "parse_permutation",
    "reduce_values",
    "tree_children",
    "DequeState",
    "deque_sortable_bruteforce",
    "is_sandwich",
    "pstack_sortable_bruteforce",
    "replay_word",
    "single_stack_sortable",
    "sortable_from_state",
    "Variant",
    "deque_sortable",
    "extract_witness",
    "pstack_sortable",
    "CountTable",
    "count_by_tree",
    "count_sortable",
    "count_table",
    "h",
    "k_prime",
    "transition_list",
]
