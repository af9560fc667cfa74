"""Brute-force switchyard simulators: ground truth for the linear-time pile
tests and the counting algorithms.

A deque run is a word over the alphabet a/b/y/z: ``a``/``b`` push the next
input value onto the left/right end of the deque, ``y``/``z`` pop the
left/right end to the output.  A run sorts the permutation when the pops
emit 1, 2, ..., n in order.

The searches here explore reduced runs only (a value is popped the moment
it is both needed and at an end), discard states where some deque value has
a strictly larger value on both sides (no run recovers from that), and
memoize failed (deque, consumed-prefix) states for the duration of a call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perms import Perm

__all__ = [
    "DequeState",
    "IllegalOperation",
    "NotSorted",
    "parse_op_word",
    "replay_word",
    "is_sandwich",
    "sortable_from_state",
    "deque_sortable_bruteforce",
    "pstack_sortable_bruteforce",
    "single_stack_sortable",
]

OP_LETTERS = frozenset("abyz")


class IllegalOperation(ValueError):
    """A letter popped an empty deque or pushed from an empty input."""

    def __init__(self, index: int, letter: str, reason: str):
        super().__init__(f"op {letter!r} at index {index}: {reason}")
        self.index = index
        self.letter = letter


class NotSorted(ValueError):
    """A pop emitted a value other than the one the output needed next."""

    def __init__(self, index: int, value: int, expected: int):
        super().__init__(f"pop at index {index} emitted {value}, needed {expected}")
        self.index = index
        self.value = value
        self.expected = expected


@dataclass(frozen=True)
class DequeState:
    """Mid-run state of a deque switchyard.

    The output is stored only as ``output_next`` (the smallest value not yet
    output): runs that pop out of order can never end sorted, so states of
    interest always have the sorted prefix 1..output_next-1 on the output.
    """

    output_next: int
    deque: tuple[int, ...]
    input_rest: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.output_next - 1 + len(self.deque) + len(self.input_rest)
        held = set(self.deque) | set(self.input_rest)
        if len(held) != len(self.deque) + len(self.input_rest) or held != set(
            range(self.output_next, n + 1)
        ):
            raise ValueError(
                "deque and input must partition the values not yet output"
            )

    @property
    def n(self) -> int:
        return self.output_next - 1 + len(self.deque) + len(self.input_rest)

    @property
    def complete(self) -> bool:
        """True when every value has reached the output in sorted order."""
        return not self.deque and not self.input_rest


def parse_op_word(text: str) -> str:
    """Validate a run word: alphabet a/b/y/z, never more pops than pushes."""
    pushes = pops = 0
    for i, ch in enumerate(text):
        if ch not in OP_LETTERS:
            raise ValueError(f"bad op letter {ch!r} at index {i}")
        if ch in "ab":
            pushes += 1
        else:
            pops += 1
        if pops > pushes:
            raise ValueError(f"prefix {text[: i + 1]!r} pops more than it pushed")
    return text


def replay_word(pi: Sequence[int], word: str) -> DequeState:
    """Execute ``word`` against input ``pi`` and return the resulting state.

    Raises IllegalOperation for a pop from an empty deque or a push from an
    empty input, and NotSorted for a pop that emits anything other than the
    next value the output needs.
    """
    deque: list[int] = []
    pos = 0
    out_next = 1
    for i, ch in enumerate(word):
        if ch in "ab":
            if pos == len(pi):
                raise IllegalOperation(i, ch, "push from empty input")
            if ch == "a":
                deque.insert(0, pi[pos])
            else:
                deque.append(pi[pos])
            pos += 1
        elif ch in "yz":
            if not deque:
                raise IllegalOperation(i, ch, "pop from empty deque")
            v = deque.pop(0) if ch == "y" else deque.pop()
            if v != out_next:
                raise NotSorted(i, v, out_next)
            out_next += 1
        else:
            raise ValueError(f"bad op letter {ch!r} at index {i}")
    return DequeState(out_next, tuple(deque), tuple(pi[pos:]))


def _has_sandwich(seq: Sequence[int]) -> bool:
    """True iff some value has a strictly larger value on both sides."""
    if len(seq) < 3:
        return False
    best = seq[-1]
    suffix_max = [0] * len(seq)
    for i in range(len(seq) - 1, -1, -1):
        best = max(best, seq[i])
        suffix_max[i] = best
    prefix_max = seq[0]
    for i in range(1, len(seq) - 1):
        if prefix_max > seq[i] < suffix_max[i + 1]:
            return True
        prefix_max = max(prefix_max, seq[i])
    return False


def is_sandwich(state: DequeState) -> bool:
    """True iff some deque value is trapped between two larger values."""
    return _has_sandwich(state.deque)


def _pop_ends(deque: list[int], out_next: int) -> int:
    """Pop either end while it holds the next needed value; return new target."""
    while deque:
        if deque[0] == out_next:
            deque.pop(0)
        elif deque[-1] == out_next:
            deque.pop()
        else:
            break
        out_next += 1
    return out_next


def _decide(deque: tuple[int, ...], rest: Sequence[int], out_next: int) -> bool:
    """Reduced-run search with sandwich pruning and failure memoization.

    Precondition: ``deque`` is sandwich-free and already fully popped.  A
    sandwich-free deque holding a contiguous value range empties by end pops
    alone, so reaching the end of the input means success.
    """
    n_rest = len(rest)
    failed: set[tuple[tuple[int, ...], int]] = set()

    def go(deque: tuple[int, ...], pos: int, out: int, mx: int) -> bool:
        if pos == n_rest:
            return True
        key = (deque, pos)
        if key in failed:
            return False
        x = rest[pos]
        sides = (True,) if not deque else (True, False)
        for left in sides:
            if deque:
                end = deque[0] if left else deque[-1]
                if x > end and end != mx:
                    continue  # x would trap the old end value
                nd = (x,) + deque if left else deque + (x,)
            else:
                nd = (x,)
            nout = out
            if x == out or not deque:
                lst = list(nd)
                nout = _pop_ends(lst, out)
                nd = tuple(lst)
            if go(nd, pos + 1, nout, max(mx, x)):
                return True
        failed.add(key)
        return False

    lst = list(deque)
    out_next = _pop_ends(lst, out_next)
    start = tuple(lst)
    return go(start, 0, out_next, max(start, default=0))


def deque_sortable_bruteforce(pi: Sequence[int]) -> bool:
    """True iff some run sorts ``pi`` on a deque."""
    return _decide((), tuple(pi), 1)


def sortable_from_state(state: DequeState) -> bool:
    """True iff the sort can be completed from ``state`` with the input known.

    With no input left this holds exactly when the deque is sandwich-free,
    i.e. rises to a single peak and falls again, which is emptiable by end
    pops.
    """
    if _has_sandwich(state.deque):
        return False
    return _decide(state.deque, state.input_rest, state.output_next)


def _decide_general(
    pi: Sequence[int], *, reduced: bool = True, prune_sandwich: bool = True
) -> bool:
    """Configurable deque search used to validate the production search.

    ``reduced=False`` allows pops to be deferred instead of taken the moment
    they are available; ``prune_sandwich=False`` keeps exploring states where
    a value is trapped between larger ones.  All variants must agree.
    """
    pi = tuple(pi)
    n = len(pi)
    failed: set[tuple[tuple[int, ...], int]] = set()

    def moves(deque: tuple[int, ...], pos: int, out: int):
        if deque and deque[0] == out:
            yield deque[1:], pos, out + 1
            if reduced:
                return
        if deque and deque[-1] == out:
            yield deque[:-1], pos, out + 1
            if reduced:
                return
        if pos < n:
            x = pi[pos]
            yield (x,) + deque, pos + 1, out
            if deque:
                yield deque + (x,), pos + 1, out

    def go(deque: tuple[int, ...], pos: int, out: int) -> bool:
        if not deque and pos == n:
            return True
        key = (deque, pos)
        if key in failed:
            return False
        for nd, npos, nout in moves(deque, pos, out):
            if prune_sandwich and _has_sandwich(nd):
                continue
            if go(nd, npos, nout):
                return True
        failed.add(key)
        return False

    return go((), 0, 1)


def pstack_sortable_bruteforce(pi: Sequence[int]) -> bool:
    """True iff ``pi`` is sortable on two stacks working in parallel.

    Same reduced search as the deque case, with two independent stack tops
    in place of the deque ends; a push onto a smaller top is pruned since it
    would trap the smaller value.
    """
    pi = tuple(pi)
    n = len(pi)
    failed: set[tuple[tuple[int, ...], tuple[int, ...], int]] = set()

    def drain(a: list[int], b: list[int], out: int) -> int:
        while True:
            if a and a[-1] == out:
                a.pop()
            elif b and b[-1] == out:
                b.pop()
            else:
                return out
            out += 1

    def go(a: tuple[int, ...], b: tuple[int, ...], pos: int, out: int) -> bool:
        if pos == n:
            return not a and not b
        if a > b:
            a, b = b, a
        key = (a, b, pos)
        if key in failed:
            return False
        x = pi[pos]
        stacks = ((a, b), (b, a)) if a != b else ((a, b),)
        for tgt, other in stacks:
            if tgt and tgt[-1] < x:
                continue  # x on top would trap the smaller value below
            la, lb = list(tgt) + [x], list(other)
            nout = drain(la, lb, out)
            if go(tuple(la), tuple(lb), pos + 1, nout):
                return True
        failed.add(key)
        return False

    return go((), (), 0, 1)


def single_stack_sortable(pi: Sequence[int]) -> bool:
    """True iff ``pi`` sorts on a single stack (equivalently, avoids 2-3-1).

    Greedy simulation is exact here: a value must pop the moment it is both
    needed and on top, since anything pushed above it blocks it for good.
    """
    stack: list[int] = []
    out = 1
    for x in pi:
        stack.append(x)
        while stack and stack[-1] == out:
            stack.pop()
            out += 1
    return not stack


def _search_word(
    deque: tuple[int, ...], rest: Sequence[int], out_next: int
) -> str | None:
    """Return a run word sorting the remaining input, or None.

    Pushes are tried left before right, so witnesses are deterministic.
    Greedy pops are recorded as they happen; the trailing drain of the deque
    is appended once the input is exhausted.
    """
    if _has_sandwich(deque):
        return None
    n_rest = len(rest)
    failed: set[tuple[tuple[int, ...], int]] = set()
    letters: list[str] = []

    def drain(deque: list[int], out: int) -> int:
        while deque:
            if deque[0] == out:
                deque.pop(0)
                letters.append("y")
            elif deque[-1] == out:
                deque.pop()
                letters.append("z")
            else:
                break
            out += 1
        return out

    def go(deque: tuple[int, ...], pos: int, out: int, mx: int) -> bool:
        if pos == n_rest:
            lst = list(deque)
            drain(lst, out)
            assert not lst
            return True
        key = (deque, pos)
        if key in failed:
            return False
        x = rest[pos]
        sides = (True,) if not deque else (True, False)
        for left in sides:
            if deque:
                end = deque[0] if left else deque[-1]
                if x > end and end != mx:
                    continue
                nd = [x] + list(deque) if left else list(deque) + [x]
            else:
                nd = [x]
            mark = len(letters)
            letters.append("a" if left else "b")
            nout = drain(nd, out) if (x == out or not deque) else out
            if go(tuple(nd), pos + 1, nout, max(mx, x)):
                return True
            del letters[mark:]
        failed.add(key)
        return False

    lst = list(deque)
    out_next = drain(lst, out_next)
    if go(tuple(lst), 0, out_next, max(lst, default=0)):
        return "".join(letters)
    return None
