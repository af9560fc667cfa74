"""DEK engine: state mechanics, the substantive-choice test and its oracle,
both advisors, and the strategy-agreement experiment."""

import itertools
from math import factorial

import pytest

from dequesort import dek
from dequesort.dek import (
    Advice,
    AdviceUnavailable,
    DekInfoState,
    End,
    PreconditionViolated,
    agreement_experiment,
    forced_pops,
    initial_state,
    place,
    reachable_reveal_states,
    reveal,
    strategy1_advise,
    strategy2_advise,
    strategy2_value,
    substantive_by_conditions,
    substantive_oracle,
)
from dequesort.oracle import _has_sandwich

PIVOT_STATE = DekInfoState(7, 1, (5, 7), 2, frozenset({1, 3, 4, 6}))


def winnable_orders(state: DekInfoState, end: End) -> frozenset:
    """Orderings of the hidden deck that stay winnable after this placement."""
    placed = place(state, end)
    return frozenset(
        order
        for order in itertools.permutations(sorted(placed.hidden))
        if dek._completion_wins(placed.deque, order, placed.output_next)
    )


class TestStateMechanics:
    def test_forced_pop_single(self):
        s = DekInfoState(5, 1, (1, 5), None, frozenset({2, 3, 4}))
        after = forced_pops(s)
        assert after.deque == (5,) and after.output_next == 2

    def test_forced_pop_keeps_blocked_state(self):
        s = DekInfoState(7, 1, (2, 5, 7), None, frozenset({1, 3, 4, 6}))
        assert forced_pops(s) == s

    def test_forced_pop_cascades(self):
        s = DekInfoState(2, 1, (2, 1), None, frozenset())
        after = forced_pops(s)
        assert after.deque == () and after.output_next == 3

    def test_forced_pops_requires_no_card_in_hand(self):
        with pytest.raises(PreconditionViolated):
            forced_pops(PIVOT_STATE)

    def test_place_applies_pops(self):
        s = DekInfoState(3, 1, (2,), 1, frozenset({3}))
        after = place(s, End.RIGHT)
        assert after.deque == () and after.output_next == 3

    def test_place_needs_revealed(self):
        with pytest.raises(PreconditionViolated):
            place(initial_state(3), End.LEFT)

    def test_reveal_and_finish(self):
        s = initial_state(1)
        s = reveal(s, 1)
        s = place(s, End.LEFT)
        assert s.finished and s.won

    def test_state_validation(self):
        with pytest.raises(ValueError):
            DekInfoState(3, 1, (1,), 1, frozenset({2}))


class TestConditions:
    def test_larger_than_ends_is_forced(self):
        s = DekInfoState(7, 1, (2, 5, 7), 4, frozenset({1, 3, 6}))
        assert not substantive_by_conditions(s)

    def test_counterexample_state(self):
        assert substantive_by_conditions(PIVOT_STATE)
        mirrored = DekInfoState(7, 1, (7, 5), 2, frozenset({1, 3, 4, 6}))
        assert substantive_by_conditions(mirrored)

    def test_next_needed_card_is_free(self):
        s = DekInfoState(7, 1, (5, 7), 1, frozenset({2, 3, 4, 6}))
        assert not substantive_by_conditions(s)

    def test_small_gap_is_safe(self):
        s = DekInfoState(7, 1, (5, 7), 3, frozenset({1, 2, 4, 6}))
        assert not substantive_by_conditions(s)  # gap of two values needed

    def test_needs_larger_value_hidden(self):
        s = DekInfoState(7, 4, (7, 6), 4, frozenset({5}))
        assert not substantive_by_conditions(s)

    def test_requires_card_in_hand(self):
        with pytest.raises(PreconditionViolated):
            substantive_by_conditions(initial_state(4))


class TestOracle:
    def test_counterexample_state(self):
        assert substantive_oracle(PIVOT_STATE)

    def test_exclusive_witnesses_both_ways(self):
        left = winnable_orders(PIVOT_STATE, End.LEFT)    # deque 2 5 7
        right = winnable_orders(PIVOT_STATE, End.RIGHT)  # deque 5 7 2
        assert (6, 4, 3, 1) in left - right
        assert (4, 1, 6, 3) in right - left

    def test_short_deque_is_symmetric(self):
        s = DekInfoState(5, 1, (3,), 2, frozenset({1, 4, 5}))
        assert not substantive_oracle(s)

    def test_no_hidden_cards_no_choice(self):
        s = DekInfoState(3, 1, (2, 3), 1, frozenset())
        assert not substantive_oracle(s)

    def test_budget(self):
        with pytest.raises(AdviceUnavailable):
            substantive_oracle(PIVOT_STATE, budget=1)


class TestStrategy1:
    def test_counterexample_counts(self):
        advice = strategy1_advise(PIVOT_STATE)
        assert advice == Advice("S1", True, 15, 11, End.LEFT)

    def test_symmetric_single_card(self):
        s = DekInfoState(3, 1, (2,), 3, frozenset({1}))
        advice = strategy1_advise(s)
        assert advice.winnable_left == advice.winnable_right
        assert advice.recommended is End.LEFT  # ties break left

    def test_no_hidden(self):
        s = DekInfoState(2, 1, (2,), 1, frozenset())
        advice = strategy1_advise(s)
        assert set(advice.counts) <= {0, 1}

    def test_budget(self):
        with pytest.raises(AdviceUnavailable):
            strategy1_advise(PIVOT_STATE, budget=5)


class TestStrategy2:
    def test_empty_hidden_peak_shape(self):
        assert strategy2_value(DekInfoState(3, 1, (1, 3, 2), None, frozenset())) == 1

    def test_empty_hidden_trapped(self):
        assert strategy2_value(DekInfoState(6, 1, (4, 1, 6), None, frozenset({2, 3, 5}))) == 0

    def test_blind_play_wins_all_length_four_deals(self):
        assert strategy2_value(initial_state(4)) == 24

    def test_requires_resolved_hand(self):
        with pytest.raises(PreconditionViolated):
            strategy2_value(PIVOT_STATE)

    def test_advise_matches_strategy1_here(self):
        s1 = strategy1_advise(PIVOT_STATE)
        s2 = strategy2_advise(PIVOT_STATE)
        assert s2.strategy == "S2"
        assert s2.counts == s1.counts == (15, 11)
        assert s2.recommended is s1.recommended is End.LEFT

    def test_value_bounded_by_orderings(self):
        for n in range(1, 6):
            for state in reachable_reveal_states(n):
                resolved = place(state, End.LEFT)
                assert strategy2_value(resolved) <= factorial(len(resolved.hidden))


class TestReachableStates:
    def test_small_counts(self):
        assert sum(1 for _ in reachable_reveal_states(1)) == 1
        assert sum(1 for _ in reachable_reveal_states(2)) == 4

    def test_all_live(self):
        for s in reachable_reveal_states(5):
            assert not _has_sandwich(s.deque)
            assert s.revealed is not None


class TestAgreement:
    def test_trivial_deck(self):
        report = agreement_experiment(1)
        assert report.substantive_states == 0 and report.agree

    def test_no_substantive_choices_below_seven(self):
        report = agreement_experiment(6)
        assert report.substantive_states == 0
        assert report.agree

    def test_first_substantive_choices_at_seven(self):
        report = agreement_experiment(7)
        assert report.per_n[7][1] == 2  # the counterexample pair, up to mirroring
        assert report.agree
        assert "agree" in report.summary()


class TestGateAndDomination:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_conditions_equal_oracle(self, n):
        for s in reachable_reveal_states(n):
            assert substantive_by_conditions(s) == substantive_oracle(s), s

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(1, 8))
    def test_one_end_dominates_when_not_substantive(self, n):
        for s in reachable_reveal_states(n):
            if substantive_oracle(s):
                continue
            left = winnable_orders(s, End.LEFT)
            right = winnable_orders(s, End.RIGHT)
            assert left <= right or right <= left, s

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(2, 8))
    def test_placing_beside_near_value_is_safe(self, n):
        """A card one or two below the smaller end never loses by going
        next to that end."""
        for s in reachable_reveal_states(n):
            if len(s.deque) < 2:
                continue
            i = min(s.deque[0], s.deque[-1])
            if s.revealed not in (i - 1, i - 2):
                continue
            beside_i = End.LEFT if s.deque[0] == i else End.RIGHT
            other = End.RIGHT if beside_i is End.LEFT else End.LEFT
            assert winnable_orders(s, other) <= winnable_orders(s, beside_i), s
