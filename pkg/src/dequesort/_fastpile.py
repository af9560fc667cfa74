"""Compiled kernels for the insertion-tree count.

Same algorithms as :mod:`dequesort.pile` (and the greedy single-stack test),
restated over flat integer arrays so numba can compile them.  The pile is a
stack of twinstack slots, top slot last; each stack stores its bottom
(largest) value at index 0.  Equivalence with the pure-Python tests is
enforced by tests, exhaustively for short permutations.

Modes: 0 = parallel stacks, 1 = deque (corrected), 2 = single stack.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MODE_PSTACK = 0
MODE_DEQUE = 1
MODE_STACK = 2


@njit(cache=True, nogil=True)
def _sortable(perm, k, mode, L, Llen, R, Rlen):
    if mode == MODE_STACK:
        sp = 0
        out = 1
        for idx in range(k):
            L[0, sp] = perm[idx]
            sp += 1
            while sp > 0 and L[0, sp - 1] == out:
                sp -= 1
                out += 1
        return sp == 0

    deque_mode = mode == MODE_DEQUE
    tcount = 0
    out = 1
    for idx in range(k):
        x = perm[idx]
        L[tcount, 0] = x
        Llen[tcount] = 1
        Rlen[tcount] = 0
        tcount += 1

        ok = True
        while tcount >= 2:
            t = tcount - 1
            s = tcount - 2
            xv = L[t, Llen[t] - 1]
            sl = Llen[s]
            sr = Rlen[s]
            if sl > 0 and sr > 0:
                lt = L[s, sl - 1]
                rt = R[s, sr - 1]
                if xv < lt and xv < rt:
                    break
                if xv > lt and xv > rt:
                    ok = False
                    break
                if lt > rt:
                    for i in range(Llen[t]):
                        L[s, sl + i] = L[t, i]
                    Llen[s] = sl + Llen[t]
                    for i in range(Rlen[t]):
                        R[s, sr + i] = R[t, i]
                    Rlen[s] = sr + Rlen[t]
                else:
                    for i in range(Llen[t]):
                        R[s, sr + i] = L[t, i]
                    Rlen[s] = sr + Llen[t]
                    for i in range(Rlen[t]):
                        L[s, sl + i] = R[t, i]
                    Llen[s] = sl + Rlen[t]
                tcount -= 1
                break
            if sl > 0:
                stop = L[s, sl - 1]
                sbot = L[s, 0]
            else:
                stop = R[s, sr - 1]
                sbot = R[s, 0]
            if xv < stop:
                break
            if deque_mode and s == 0 and xv > sbot:
                # new maximum: tuck under the occupied side
                if sl > 0:
                    for i in range(sl, 0, -1):
                        L[s, i] = L[s, i - 1]
                    L[s, 0] = xv
                    for i in range(Rlen[t]):
                        L[s, sl + 1 + i] = R[t, i]
                    Llen[s] = sl + 1 + Rlen[t]
                else:
                    for i in range(sr, 0, -1):
                        R[s, i] = R[s, i - 1]
                    R[s, 0] = xv
                    for i in range(Rlen[t]):
                        R[s, sr + 1 + i] = R[t, i]
                    Rlen[s] = sr + 1 + Rlen[t]
                tcount -= 1
                break
            # cascade weld over the empty side and keep normalizing
            if sl > 0:
                for i in range(sl):
                    R[s, i] = L[s, i]
                for i in range(Rlen[t]):
                    R[s, sl + i] = R[t, i]
                Rlen[s] = sl + Rlen[t]
            else:
                for i in range(Rlen[t]):
                    R[s, sr + i] = R[t, i]
                Rlen[s] = sr + Rlen[t]
            L[s, 0] = xv
            Llen[s] = 1
            tcount -= 1
        if not ok:
            return False

        while tcount > 0:
            t = tcount - 1
            if Llen[t] > 0 and L[t, Llen[t] - 1] == out:
                Llen[t] -= 1
            elif Rlen[t] > 0 and R[t, Rlen[t] - 1] == out:
                Rlen[t] -= 1
            else:
                break
            out += 1
            if Llen[t] == 0 and Rlen[t] == 0:
                tcount -= 1
                continue
            if deque_mode and tcount == 1:
                ll = Llen[0]
                rr = Rlen[0]
                if ll > 0 and rr > 0:
                    if ll == 1 and L[0, 0] > R[0, 0]:
                        for i in range(rr, 0, -1):
                            R[0, i] = R[0, i - 1]
                        R[0, 0] = L[0, 0]
                        Rlen[0] = rr + 1
                        Llen[0] = 0
                    elif rr == 1 and R[0, 0] > L[0, 0]:
                        for i in range(ll, 0, -1):
                            L[0, i] = L[0, i - 1]
                        L[0, 0] = R[0, 0]
                        Llen[0] = ll + 1
                        Rlen[0] = 0
    return True


@njit(cache=True, nogil=True)
def _count_tree(max_n, mode, counts):
    """Depth-first count of sortable permutations; returns nodes tested."""
    visited = 0
    perm = np.zeros(max_n + 1, np.int64)
    pos = np.zeros(max_n + 2, np.int64)
    ins_at = np.zeros(max_n + 2, np.int64)
    L = np.zeros((max_n + 2, max_n + 2), np.int64)
    R = np.zeros((max_n + 2, max_n + 2), np.int64)
    Llen = np.zeros(max_n + 2, np.int64)
    Rlen = np.zeros(max_n + 2, np.int64)

    node_len = 0
    pos[1] = 0
    while True:
        v = node_len + 1
        descended = False
        if v <= max_n:
            while pos[v] < v:
                p = pos[v]
                for i in range(node_len, p, -1):
                    perm[i] = perm[i - 1]
                perm[p] = v
                visited += 1
                if _sortable(perm, v, mode, L, Llen, R, Rlen):
                    counts[v] += 1
                    ins_at[v] = p
                    node_len = v
                    pos[v + 1] = 0
                    descended = True
                    break
                for i in range(p, node_len):
                    perm[i] = perm[i + 1]
                pos[v] += 1
        if descended:
            continue
        if node_len == 0:
            break
        p = ins_at[node_len]
        for i in range(p, node_len - 1):
            perm[i] = perm[i + 1]
        node_len -= 1
        pos[node_len + 1] += 1
    return visited


def count_tree(max_n: int, mode: int) -> tuple[list[int], int]:
    """Counts of sortable permutations for lengths 1..max_n plus nodes tested."""
    counts = np.zeros(max_n + 1, np.int64)
    visited = int(_count_tree(max_n, mode, counts))
    return [int(c) for c in counts[1:]], visited


def sortable(perm, mode: int) -> bool:
    """One-off compiled sortability test (used to cross-check the kernels)."""
    k = len(perm)
    arr = np.asarray(perm, np.int64)
    size = k + 2
    L = np.zeros((size, size), np.int64)
    R = np.zeros((size, size), np.int64)
    Llen = np.zeros(size, np.int64)
    Rlen = np.zeros(size, np.int64)
    return bool(_sortable(arr, k, mode, L, Llen, R, Rlen))
