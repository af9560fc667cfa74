"""Exact counts of sortable permutations without enumerating them.

The pile test's runs are counted instead of the permutations themselves:
successful runs are in bijection with sortable inputs, and once element
labels are forgotten the runs decompose into nested *epochs*, one per pile
level, that interact only through small integer *signals*.

State: an unlabeled twinstack is a bit string, one bit per element in
increasing value order, 1 meaning the left stack (canonically the smallest
element sits on the left, so a nonempty string starts with 1).  ``h(S, m,
k, b)`` counts the epochs that start with twinstack S, consume m input
values, and finish by sending signal k to the level below — k = 0 ends by
popping, k > 0 welds k values down.  ``b`` selects bottom-of-pile rules
(1, the deque case: welds onto the bottom tuck under the occupied side and
pops that leave it monotonic re-canonicalize it one-sided) or stacked
rules (0, the parallel-stack case).  Counting sortable permutations of
length n is then h(empty, n, 0, b).

Bit strings are packed into machine integers with a sentinel bit above the
highest element, so memo keys are plain ints and the per-transition work is
bit arithmetic.  Counts are exact Python integers throughout.
"""

from __future__ import annotations

from .perms import SortClass, UnsupportedClass

__all__ = [
    "is_monotonic_rts",
    "k_prime",
    "transition_list",
    "h",
    "count_sortable",
    "count_sortable_with_stats",
    "count_table",
]

_EMPTY = 1  # packed empty string: just the sentinel bit


def _pack(bits_text: str) -> int:
    """Pack "101"-style text (index 0 = smallest element) into an int."""
    value = 1
    for ch in reversed(bits_text):
        value = (value << 1) | (ch == "1")
    return value


def _unpack(packed: int) -> str:
    length = packed.bit_length() - 1
    return "".join("1" if packed >> i & 1 else "0" for i in range(length))


def _length(packed: int) -> int:
    return packed.bit_length() - 1


def _one_sided(packed: int) -> bool:
    # all bits below the sentinel set
    return (packed & (packed + 1)) == 0


def is_monotonic_rts(bits: str) -> bool:
    """True iff every bit except possibly the last one is the same.

    Such a twinstack admits a monotonic deque arrangement: at most the
    largest element sits apart from the rest.

    >>> [is_monotonic_rts(s) for s in ("", "1", "1110", "1101")]
    [True, True, True, False]
    """
    return _is_monotonic(_pack(bits))


def _is_monotonic(packed: int) -> bool:
    length = packed.bit_length() - 1
    if length <= 1:
        return True
    head = packed & ((1 << (length - 1)) - 1)
    return head == 0 or head == (1 << (length - 1)) - 1


def k_prime(bits: str, k: int) -> int:
    """The only child signal that lets a twinstack send signal k, or -1.

    0 when k = 0 (a pop end needs a pop below it); k - |S| when S is
    one-sided and smaller than k (the weld must carry all of S plus the
    child's values); -1 when no child signal can work.
    """
    return _k_prime(_pack(bits), k)


def _k_prime(packed: int, k: int) -> int:
    if k == 0:
        return 0
    length = packed.bit_length() - 1
    if length < k and (packed & (packed + 1)) == 0:
        return k - length
    return -1


def transition_list(bits: str, j: int, b: int) -> list[str]:
    """Twinstacks reachable from ``bits`` on signal j under rules b.

    j > 0: the weld inserts one larger right-side value at each position up
    to the first existing right-side value, with j-1 new smallest left-side
    values in front; under bottom rules an insertion at the very end tucks
    to the left side instead.  j = 0: every count of smallest values may
    pop; the survivor is re-canonicalized to start with 1, and under bottom
    rules a monotonic survivor is forced one-sided.

    >>> transition_list("1", 1, 0)
    ['10']
    >>> transition_list("1", 1, 1)
    ['11']
    >>> transition_list("10", 0, 0)
    ['10', '1', '']
    """
    return [_unpack(p) for p in _transitions(_pack(bits), j, b)]


def _transitions(packed: int, j: int, b: int) -> tuple[int, ...]:
    length = packed.bit_length() - 1
    bits = packed ^ (1 << length)  # drop the sentinel
    out: list[int] = []
    if j > 0:
        # insertion slots run from just after the smallest element to just
        # before the first right-side element (or the end if one-sided)
        low_ones = ((bits + 1) & ~bits).bit_length() - 1
        z = min(low_ones, length)
        prefix = (1 << (j - 1)) - 1
        for i in range(1, z + 1):
            low = bits & ((1 << i) - 1)
            high = bits >> i
            nb = low | (high << (i + 1))  # a 0 lands at index i
            if b == 1 and i == length:
                nb |= 1 << length
            full = prefix | (nb << (j - 1))
            flen = length + j
            out.append(full | (1 << flen))
    else:
        mono_suffix = _monotonic_suffix_len(bits, length)
        for i in range(length + 1):
            nb = bits >> i
            nl = length - i
            if nl and not nb & 1:
                nb ^= (1 << nl) - 1
            if b == 1 and nl and nl <= mono_suffix:
                nb |= 1 << (nl - 1)
            out.append(nb | (1 << nl))
    return tuple(out)


def _monotonic_suffix_len(bits: int, length: int) -> int:
    """Longest suffix whose bits, except possibly the last, all agree."""
    if length <= 1:
        return length
    ref = bits >> (length - 2) & 1
    run = 1
    for i in range(length - 3, -1, -1):
        if bits >> i & 1 != ref:
            break
        run += 1
    return run + 1


class _Counter:
    """Memoized evaluator of h for one value of n."""

    def __init__(self, n: int):
        # key packing admits m in 0..n+1 and k in 0..n+2
        self.n = n
        self.memo: dict[int, int] = {}
        self._trans: dict[int, tuple[int, ...]] = {}

    def transitions(self, packed: int, j: int, b: int) -> tuple[int, ...]:
        key = (packed * (self.n + 2) + j) * 2 + b
        cached = self._trans.get(key)
        if cached is None:
            cached = self._transitions_filtered(packed, j, b)
            self._trans[key] = cached
        return cached

    def _transitions_filtered(self, packed, j, b):
        return tuple(s for s in _transitions(packed, j, b) if s != packed)

    def h(self, packed: int, m: int, k: int, b: int) -> int:
        if k < 0:
            return 0
        if m == 1:
            if k == 0:
                return 1
            if (packed & (packed + 1)) == 0 and packed.bit_length() - 1 == k - 1:
                return 1
            return 0
        key = ((packed * (self.n + 2) + m) * (self.n + 3) + k) * 2 + b
        memo = self.memo
        found = memo.get(key)
        if found is not None:
            return found
        h = self.h
        if packed == _EMPTY:
            result = h(3, m - 1, k, b) + h(1, m - 1, k, b)
        else:
            kp = _k_prime(packed, k)
            result = 0
            if kp != -1:
                result = h(3, m - 1, kp, 0) + h(1, m - 1, kp, 0)
            for i in range(1, m):
                rest = m - i
                for j in range(0, i + 2):
                    starts = h(1, i, j, 0)
                    if not starts:
                        continue
                    sub = 0
                    for nxt in self.transitions(packed, j, b):
                        sub += h(nxt, rest, k, b)
                    if sub:
                        result += starts * sub
        memo[key] = result
        return result


def h(bits: str, m: int, k: int, b: int) -> int:
    """Epoch count for twinstack ``bits``, m steps, final signal k, rules b.

    >>> h("", 1, 0, 1)
    1
    >>> h("1", 1, 2, 0)
    1
    >>> h("", 5, 0, 1)
    116
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    return _Counter(max(m, k)).h(_pack(bits), m, k, b)


def _class_flag(cls: SortClass) -> int:
    if cls is SortClass.DEQUE:
        return 1
    if cls is SortClass.PARALLEL_STACKS:
        return 0
    raise UnsupportedClass(f"counting DP handles deque/pstacks, not {cls!r}")


def count_sortable(cls: SortClass, n: int) -> int:
    """Number of length-n permutations sortable on the given discipline."""
    count, _ = count_sortable_with_stats(cls, n)
    return count


def count_sortable_with_stats(cls: SortClass, n: int) -> tuple[int, int]:
    """(count, memo entries) using a fresh store — for complexity tracking."""
    if n < 1:
        raise ValueError("n must be at least 1")
    counter = _Counter(n)
    count = counter.h(_EMPTY, n, 0, _class_flag(cls))
    return count, len(counter.memo)


def count_table(cls: SortClass, max_n: int) -> list[int]:
    """Counts for lengths 1..max_n, sharing one memo store across lengths."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    b = _class_flag(cls)
    counter = _Counter(max_n)
    return [counter.h(_EMPTY, m, 0, b) for m in range(max_n, 0, -1)][::-1]
