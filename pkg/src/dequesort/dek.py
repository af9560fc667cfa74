"""DEK: sorting a hidden shuffled deck on a deque, one reveal at a time.

The deck is face down.  Whenever the next value the output pile needs is
available (top of deck or either deque end) it may be moved up, and doing
so is always safe; otherwise the top card is revealed and must be committed
to one end of the deque before the next card is seen.  The information
state is therefore the output progress, the visible deque, the card in
hand, and the *set* of unseen cards.

Some placements are substantive: each end forfeits completions the other
end would win.  This module provides the cheap six-condition test for that
situation, the exhaustive oracle it is checked against, and two advisors —
counting winnable deck orders assuming full knowledge after this choice
(strategy 1) or assuming the same blind play forever after (strategy 2).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from . import oracle
from .oracle import _has_sandwich, _pop_ends

__all__ = [
    "End",
    "DekInfoState",
    "Advice",
    "PreconditionViolated",
    "AdviceUnavailable",
    "DEFAULT_ADVICE_BUDGET",
    "initial_state",
    "reveal",
    "place",
    "forced_pops",
    "substantive_by_conditions",
    "substantive_oracle",
    "strategy1_advise",
    "strategy2_value",
    "strategy2_advise",
    "agreement_experiment",
    "reachable_reveal_states",
    "AgreementReport",
    "Disagreement",
    "clear_caches",
]

DEFAULT_ADVICE_BUDGET = 40320  # refuse advice when |hidden|! exceeds this


class End(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class PreconditionViolated(ValueError):
    """The operation was called in the wrong phase of a turn."""


class AdviceUnavailable(RuntimeError):
    """Too many hidden orderings to enumerate within the configured budget."""


@dataclass(frozen=True)
class DekInfoState:
    """Everything the player knows mid-game.

    Values 1..output_next-1 are already on the output pile; ``revealed`` is
    the card in hand (None between turns); ``hidden`` is the unseen deck as
    a set, order unknown.
    """

    n: int
    output_next: int
    deque: tuple[int, ...]
    revealed: int | None
    hidden: frozenset[int]

    def __post_init__(self) -> None:
        held = set(self.deque) | set(self.hidden)
        if self.revealed is not None:
            held.add(self.revealed)
        expected = set(range(self.output_next, self.n + 1))
        if (
            held != expected
            or len(self.deque) + len(self.hidden) + (self.revealed is not None)
            != len(expected)
        ):
            raise ValueError("state parts must partition the values not yet output")

    @property
    def finished(self) -> bool:
        return self.revealed is None and not self.hidden and not self.deque

    @property
    def won(self) -> bool:
        return self.finished and self.output_next == self.n + 1


def initial_state(n: int) -> DekInfoState:
    return DekInfoState(n, 1, (), None, frozenset(range(1, n + 1)))


def reveal(state: DekInfoState, value: int) -> DekInfoState:
    if state.revealed is not None:
        raise PreconditionViolated("a card is already in hand")
    if value not in state.hidden:
        raise ValueError(f"{value} is not in the hidden deck")
    return DekInfoState(
        state.n, state.output_next, state.deque, value, state.hidden - {value}
    )


def forced_pops(state: DekInfoState) -> DekInfoState:
    """Pop deque ends while they hold the next needed value (always safe)."""
    if state.revealed is not None:
        raise PreconditionViolated("resolve the card in hand first")
    lst = list(state.deque)
    out = _pop_ends(lst, state.output_next)
    if out == state.output_next:
        return state
    return DekInfoState(state.n, out, tuple(lst), None, state.hidden)


def place(state: DekInfoState, end: End) -> DekInfoState:
    """Commit the card in hand to a deque end, then apply forced pops."""
    if state.revealed is None:
        raise PreconditionViolated("no card in hand")
    if end is End.LEFT:
        lst = [state.revealed, *state.deque]
    else:
        lst = [*state.deque, state.revealed]
    out = _pop_ends(lst, state.output_next)
    return DekInfoState(state.n, out, tuple(lst), None, state.hidden)


def _is_monotone(seq: tuple[int, ...]) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:])) or all(
        a > b for a, b in zip(seq, seq[1:])
    )


def substantive_by_conditions(state: DekInfoState) -> bool:
    """Cheap test for a choice that can decide the game.

    Applies to live positions (a deque value trapped between larger ones
    already dooms every line, so nothing is substantive there).  With x the
    card in hand, i/j the smaller/larger deque end: the deque must hold two
    values, x < i with a gap of at least two values, x must not be the next
    output, something bigger than i must still be hidden, and for a
    non-monotone deque something strictly between i and j must still be
    hidden.
    """
    if state.revealed is None:
        raise PreconditionViolated("no card in hand")
    dq = state.deque
    if _has_sandwich(dq):
        return False
    if len(dq) < 2:
        return False
    i, j = sorted((dq[0], dq[-1]))
    x = state.revealed
    if x > i:
        return False
    if i - x < 3:
        return False
    if x == state.output_next:
        return False
    if not any(v > i for v in state.hidden):
        return False
    if not _is_monotone(dq) and not any(i < v < j for v in state.hidden):
        return False
    return True


@lru_cache(maxsize=None)
def _completion_wins(deque: tuple[int, ...], order: tuple[int, ...], out: int) -> bool:
    """Can the sort finish from this deque if the deck arrives in ``order``?"""
    if _has_sandwich(deque):
        return False
    rev = deque[::-1]
    if rev < deque:
        deque = rev
    return oracle._decide(deque, order, out)


def _require_budget(state: DekInfoState, budget: int) -> None:
    if factorial(len(state.hidden)) > budget:
        raise AdviceUnavailable(
            f"{len(state.hidden)}! hidden orderings exceed the budget of {budget}"
        )


def substantive_oracle(
    state: DekInfoState, *, budget: int = DEFAULT_ADVICE_BUDGET
) -> bool:
    """Ground truth by enumeration: some deck order is winnable only left,
    and some only right."""
    if state.revealed is None:
        raise PreconditionViolated("no card in hand")
    _require_budget(state, budget)
    dq = state.deque
    if len(dq) < 2 or _has_sandwich(dq):
        return False  # placements are mirror images / position already dead
    x = state.revealed
    if x == state.output_next:
        return False  # both placements pop immediately to the same state
    out = state.output_next
    left_dq = (x, *dq)
    right_dq = (*dq, x)
    only_left = only_right = False
    for order in itertools.permutations(sorted(state.hidden)):
        lw = _completion_wins(left_dq, order, out)
        rw = _completion_wins(right_dq, order, out)
        if lw and not rw:
            only_left = True
        elif rw and not lw:
            only_right = True
        if only_left and only_right:
            return True
    return False


@dataclass(frozen=True)
class Advice:
    """What an advisor saw: per-end winnable-order counts and its pick."""

    strategy: str
    substantive: bool
    winnable_left: int
    winnable_right: int
    recommended: End

    @property
    def counts(self) -> tuple[int, int]:
        return self.winnable_left, self.winnable_right


def _recommend(wl: int, wr: int) -> End:
    return End.LEFT if wl >= wr else End.RIGHT


def strategy1_advise(
    state: DekInfoState, *, budget: int = DEFAULT_ADVICE_BUDGET
) -> Advice:
    """Count deck orders winnable with full knowledge after this placement."""
    if state.revealed is None:
        raise PreconditionViolated("no card in hand")
    _require_budget(state, budget)
    x = state.revealed
    out = state.output_next
    wl = wr = 0
    left_dq = (x, *state.deque)
    right_dq = (*state.deque, x)
    for order in itertools.permutations(sorted(state.hidden)):
        if _completion_wins(left_dq, order, out):
            wl += 1
        if _completion_wins(right_dq, order, out):
            wr += 1
    return Advice("S1", substantive_by_conditions(state), wl, wr, _recommend(wl, wr))


def strategy2_value(state: DekInfoState) -> int:
    """Deck orders the player wins from here playing every future choice
    optimally (revealed must be resolved first)."""
    if state.revealed is not None:
        raise PreconditionViolated("resolve the card in hand first")
    return _value(state.deque, state.output_next, state.hidden)


def _value(deque: tuple[int, ...], out: int, hidden: frozenset[int]) -> int:
    rev = deque[::-1]
    key_dq = rev if rev < deque else deque
    return _value_cached(key_dq, out, hidden)


@lru_cache(maxsize=None)
def _value_cached(deque: tuple[int, ...], out: int, hidden: frozenset[int]) -> int:
    if _has_sandwich(deque):
        return 0
    if not hidden:
        return 1  # sandwich-free deque over a contiguous value range empties
    total = 0
    for v in hidden:
        rest = hidden - {v}
        ldq = [v, *deque]
        lout = _pop_ends(ldq, out)
        best = _value(tuple(ldq), lout, rest)
        if v != out:  # placing the needed card pops either way to one state
            rdq = [*deque, v]
            rout = _pop_ends(rdq, out)
            best = max(best, _value(tuple(rdq), rout, rest))
        total += best
    return total


def strategy2_advise(
    state: DekInfoState, *, budget: int = DEFAULT_ADVICE_BUDGET
) -> Advice:
    """Compare the fully-blind optimal value of each placement."""
    if state.revealed is None:
        raise PreconditionViolated("no card in hand")
    _require_budget(state, budget)
    vl = strategy2_value(place(state, End.LEFT))
    vr = strategy2_value(place(state, End.RIGHT))
    return Advice("S2", substantive_by_conditions(state), vl, vr, _recommend(vl, vr))


def reachable_reveal_states(n: int, *, skip_dead: bool = True):
    """Yield every reveal moment reachable in an n-card game, deduplicated.

    Positions are keyed by (output progress, deque) — the hidden set is
    determined by those — and mirrored deques are folded together.  With
    ``skip_dead`` the walk does not descend into positions that are already
    lost (a value trapped between larger ones can never be freed), which
    changes nothing about live play.
    """
    start = (1, ())
    seen_positions = {start}
    stack = [start]
    while stack:
        out, deque = stack.pop()
        hidden = frozenset(range(out, n + 1)) - set(deque)
        for v in sorted(hidden):
            rest = hidden - {v}
            yield DekInfoState(n, out, deque, v, rest)
            ends = (End.LEFT,) if (not deque or v == out) else (End.LEFT, End.RIGHT)
            for end in ends:
                lst = [v, *deque] if end is End.LEFT else [*deque, v]
                nout = _pop_ends(lst, out)
                nd = tuple(lst)
                if skip_dead and _has_sandwich(nd):
                    continue
                rev = nd[::-1]
                if rev < nd:
                    nd = rev
                key = (nout, nd)
                if key not in seen_positions:
                    seen_positions.add(key)
                    stack.append(key)


@dataclass(frozen=True)
class Disagreement:
    state: DekInfoState
    strategy1: Advice
    strategy2: Advice


@dataclass
class AgreementReport:
    """Outcome of comparing both advisors at every substantive choice."""

    max_n: int
    states_examined: int = 0
    substantive_states: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)
    per_n: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return not self.disagreements

    def summary(self) -> str:
        lines = [
            f"deck sizes 1..{self.max_n}: examined {self.states_examined} "
            f"reveal states, {self.substantive_states} substantive",
        ]
        for n in sorted(self.per_n):
            examined, subst = self.per_n[n]
            lines.append(f"  n={n}: {examined} states, {subst} substantive")
        if self.disagreements:
            lines.append(f"DISAGREEMENTS: {len(self.disagreements)}")
            for d in self.disagreements:
                lines.append(
                    f"  {d.state} S1={d.strategy1.counts}->{d.strategy1.recommended}"
                    f" S2={d.strategy2.counts}->{d.strategy2.recommended}"
                )
        else:
            lines.append("strategies 1 and 2 agree at every substantive choice")
        return "\n".join(lines)


def agreement_experiment(max_n: int, *, budget: int = 10**9) -> AgreementReport:
    """Compare strategy 1 and strategy 2 at every reachable substantive
    choice for all deck sizes up to max_n."""
    report = AgreementReport(max_n)
    for n in range(1, max_n + 1):
        examined = substantive = 0
        for state in reachable_reveal_states(n):
            examined += 1
            if not substantive_oracle(state, budget=budget):
                continue
            substantive += 1
            s1 = strategy1_advise(state, budget=budget)
            s2 = strategy2_advise(state, budget=budget)
            if s1.recommended is not s2.recommended:
                report.disagreements.append(Disagreement(state, s1, s2))
        report.per_n[n] = (examined, substantive)
        report.states_examined += examined
        report.substantive_states += substantive
    return report


def clear_caches() -> None:
    _completion_wins.cache_clear()
    _value_cached.cache_clear()
