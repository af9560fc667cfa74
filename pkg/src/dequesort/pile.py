"""Linear-time sortability tests built on a pile of twinstacks.

A twinstack is a pair of stacks, each strictly increasing from top to
bottom; a pile is a stack of twinstacks that simultaneously represents
every switchyard configuration still able to succeed.  The pile is kept
*normal*: every value in a twinstack is smaller than every value in every
twinstack below it.  Each input value is pushed as its own twinstack, the
pile is re-normalized (welding downward as needed), and ready values are
popped greedily to the output.  The permutation is sortable exactly when
normalization never gets stuck.

Deque testing differs from parallel-stack testing in how the bottom
twinstack is handled: a value larger than everything in the pile is tucked
under the bottom (the deque can wrap around), and — this is the repaired
step the ``Variant`` flag exposes — a pop from the bottom twinstack that
leaves it monotonic must rewrite it one-sided, or a later maximum is
rejected even though the deque arrangement is still workable.  ``ORIGINAL``
omits that rewrite and therefore wrongly rejects some sortable inputs,
e.g. 2 5 4 1 6 3.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from . import oracle
from .perms import Perm

__all__ = [
    "Variant",
    "Twinstack",
    "NotSortable",
    "pstack_sortable",
    "deque_sortable",
    "normalize",
    "extract_witness",
    "render_pile",
]


class Variant(enum.Enum):
    """Which deque test to run: the original flawed form or the repaired one."""

    ORIGINAL = "original"
    CORRECTED = "corrected"


class NotSortable(ValueError):
    """Witness extraction was asked for an unsortable permutation."""


@dataclass
class Twinstack:
    """A pair of stacks; index 0 of each list is the top (smallest value)."""

    left: list[int]
    right: list[int] = field(default_factory=list)

    def max_value(self) -> int:
        a = self.left[-1] if self.left else 0
        b = self.right[-1] if self.right else 0
        return max(a, b)


Pile = list[Twinstack]  # index 0 is the top of the pile


def normalize(pile: Pile, *, bottom_tuck: bool) -> bool:
    """Restore pile normality after a push; False means give up.

    Only the newest value (left top of the top twinstack) can violate
    normality.  With ``bottom_tuck`` a new overall maximum is slid under the
    occupied side of the bottom twinstack, keeping it one-sided; without it
    (parallel stacks) the value welds above an empty side and the cascade
    continues.
    """
    while True:
        if len(pile) < 2:
            return True
        top, second = pile[0], pile[1]
        x = top.left[0]
        if second.left and second.right:
            lt, rt = second.left[0], second.right[0]
            if x < lt and x < rt:
                return True
            if x > lt and x > rt:
                return False
            # x fits between the tops: weld with x over the larger top
            if lt > rt:
                second.left[:0] = top.left
                second.right[:0] = top.right
            else:
                second.right[:0] = top.left
                second.left[:0] = top.right
            del pile[0]
            return True
        side = second.left if second.left else second.right
        if x < side[0]:
            return True
        if bottom_tuck and len(pile) == 2 and x > side[-1]:
            # new maximum: tuck x under the occupied side, rest welds above
            side[:0] = top.right
            side.append(x)
            del pile[0]
            return True
        # weld over the empty side and keep cascading downward
        second.right = top.right + side
        second.left = top.left
        del pile[0]


def _canonicalize(ts: Twinstack) -> None:
    """Keep the larger top (or the only occupied side) on the left."""
    if not ts.left or (ts.right and ts.right[0] > ts.left[0]):
        ts.left, ts.right = ts.right, ts.left


def _to_output(pile: Pile, out_next: int, *, fix_monotonic: bool) -> int:
    """Pop ready values off the top twinstack; returns the new target value."""
    while pile:
        top = pile[0]
        if top.left and top.left[0] == out_next:
            top.left.pop(0)
        elif top.right and top.right[0] == out_next:
            top.right.pop(0)
        else:
            break
        out_next += 1
        if not top.left and not top.right:
            del pile[0]
            continue
        if fix_monotonic and len(pile) == 1:
            l, r = top.left, top.right
            if l and r:
                # one side holding just the overall maximum means the deque
                # can still be laid out monotonically: make that visible
                if len(l) == 1 and l[0] > r[-1]:
                    r.append(l.pop())
                elif len(r) == 1 and r[0] > l[-1]:
                    l.append(r.pop())
        _canonicalize(top)
    return out_next


def _run(pi: Sequence[int], *, bottom_tuck: bool, fix_monotonic: bool) -> tuple[bool, int]:
    """Run the pile test; returns (sortable, structural operation count)."""
    pile: Pile = []
    out_next = 1
    ops = 0
    for x in pi:
        before = len(pile)
        pile.insert(0, Twinstack([x]))
        if not normalize(pile, bottom_tuck=bottom_tuck):
            return False, ops
        ops += 1 + (before + 1 - len(pile))  # push plus welds taken
        prev = out_next
        out_next = _to_output(pile, out_next, fix_monotonic=fix_monotonic)
        ops += out_next - prev
    return True, ops


def pstack_sortable(pi: Sequence[int]) -> bool:
    """Linear test for sortability on two parallel stacks."""
    return _run(pi, bottom_tuck=False, fix_monotonic=False)[0]


def deque_sortable(pi: Sequence[int], variant: Variant = Variant.CORRECTED) -> bool:
    """Linear test for sortability on a deque.

    ``Variant.ORIGINAL`` reproduces the flawed original modification (it
    never rewrites the bottom twinstack after pops, so it can answer False
    on sortable inputs); ``Variant.CORRECTED`` is the repaired test.
    """
    fix = variant is Variant.CORRECTED
    return _run(pi, bottom_tuck=True, fix_monotonic=fix)[0]


def extract_witness(pi: Sequence[int]) -> str:
    """A run word (letters a/b/y/z) whose replay sorts ``pi``.

    Found by the failure-memoized oracle search; the corrected linear test
    screens the input first so unsortable permutations fail cleanly.
    """
    perm = tuple(pi)
    if not deque_sortable(perm, Variant.CORRECTED):
        raise NotSortable(f"{perm} is not deque sortable")
    word = oracle._search_word((), perm, 1)
    assert word is not None, "linear test and search disagree"
    return word


def render_pile(pile: Pile) -> str:
    """Readable pile snapshot, top twinstack first, for debugging."""
    if not pile:
        return "(empty pile)"
    rows = []
    for ts in pile:
        left = ",".join(map(str, ts.left)) or "-"
        right = ",".join(map(str, ts.right)) or "-"
        rows.append(f"[{left} | {right}]")
    return "\n".join(rows)
