"""Oracles, the adversarial codemaker, and secret adaption."""

import random

import pytest

from permmind import (
    AdaptionInstance,
    AdversaryCodemaker,
    CapacityError,
    GameConfig,
    InconsistentOracleError,
    InvalidCodeError,
    LemmaViolationError,
    StaticCodemaker,
    Transcript,
    adapt_secret_same_colors,
    adapt_secret_spare_colors,
    all_injective_codes,
    black,
    injective_code_count,
    random_injective_code,
    solve,
    validate_code,
    verify_lower_bound_play,
)
from util import make_same_colors_instance, make_spare_colors_instance


class TestStaticCodemaker:
    def test_answers_black_counts(self):
        oracle = StaticCodemaker((2, 1, 4, 3))
        assert oracle.answer((1, 2, 3, 4)) == 0
        assert oracle.answer((2, 1, 3, 4)) == 2
        assert oracle.answer((2, 1, 4, 3)) == 4
        assert oracle.transcript.query_count == 3

    def test_config_inference(self):
        assert StaticCodemaker((2, 1, 4, 3)).config == GameConfig(4, 4)
        assert StaticCodemaker((5, 1)).config == GameConfig(2, 5)

    def test_explicit_config_validates_secret(self):
        with pytest.raises(InvalidCodeError):
            StaticCodemaker((1, 5), GameConfig(2, 4))

    def test_rejects_bad_guess(self):
        oracle = StaticCodemaker((2, 1, 3))
        with pytest.raises(InvalidCodeError):
            oracle.answer((1, 2))
        with pytest.raises(InvalidCodeError):
            oracle.answer((1, 1, 2))


class TestEnumeration:
    def test_counts(self):
        assert injective_code_count(GameConfig(4, 4)) == 24
        assert injective_code_count(GameConfig(3, 5)) == 60
        assert injective_code_count(GameConfig(2, 8)) == 56

    def test_enumeration_is_sorted_and_complete(self):
        config = GameConfig(2, 3)
        codes = list(all_injective_codes(config))
        assert codes == [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]
        for code in codes:
            validate_code(code, config)

    def test_random_code_is_valid_and_seeded(self):
        config = GameConfig(4, 9)
        a = [random_injective_code(config, random.Random(7)) for _ in range(20)]
        b = [random_injective_code(config, random.Random(7)) for _ in range(20)]
        assert a == b
        for code in a:
            validate_code(code, config)
        assert any(color > 4 for code in a for color in code)


class TestAdversary:
    def test_three_hole_game_trace(self):
        config = GameConfig(3, 3)
        queries, trace = verify_lower_bound_play(config)
        assert queries == 5
        assert trace == [(1, 0), (2, 0), (3, 1), (4, 3), (5, 3)]

    def test_feasible_shrinks_and_never_empties(self):
        config = GameConfig(4, 4)
        oracle = AdversaryCodemaker(config)
        sizes = [oracle.feasible_count]
        for guess in ((1, 2, 3, 4), (2, 1, 4, 3), (3, 4, 1, 2), (4, 3, 2, 1)):
            answer = oracle.answer(guess)
            assert 0 <= answer <= 4
            sizes.append(oracle.feasible_count)
        assert sizes[0] == 24
        assert all(s > 0 for s in sizes)
        assert all(b <= a for a, b in zip(sizes, sizes[1:]))

    def test_answers_stay_consistent_with_survivors(self):
        config = GameConfig(3, 4)
        oracle = AdversaryCodemaker(config)
        answered = []
        for guess in ((1, 2, 3), (2, 3, 4), (4, 1, 2)):
            answered.append((guess, oracle.answer(guess)))
        for secret in oracle.feasible:
            for guess, answer in answered:
                assert black(guess, secret) == answer

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_square_board_floors(self, n):
        config = GameConfig(n, n)
        queries, trace = verify_lower_bound_play(config)
        assert queries >= n
        for m, answer in trace:
            assert answer <= m

    @pytest.mark.parametrize("n,k", [(2, 3), (2, 4), (3, 5)])
    def test_wide_board_floors(self, n, k):
        config = GameConfig(n, k)
        queries, trace = verify_lower_bound_play(config)
        assert queries >= k
        for m, answer in trace:
            if m < k:
                assert answer < n

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            AdversaryCodemaker(GameConfig(4, 4), max_states=10)

    def test_capacity_env_override(self, monkeypatch):
        monkeypatch.setenv("PERMMIND_MAX_STATES", "10")
        with pytest.raises(CapacityError):
            AdversaryCodemaker(GameConfig(4, 4))
        monkeypatch.setenv("PERMMIND_MAX_STATES", "100")
        assert AdversaryCodemaker(GameConfig(4, 4)).feasible_count == 24

    def test_audit_rejects_unfinished_game(self):
        def lazy_solver(oracle, config):
            oracle.answer((1, 2, 3))
            return (1, 2, 3), oracle.transcript

        with pytest.raises(InconsistentOracleError):
            verify_lower_bound_play(GameConfig(3, 3), solver=lazy_solver)

    def test_audit_alarms_on_early_finish(self):
        # a hypothetical solver finishing below the floor must trip the alarm
        def fake_solver(oracle, config):
            oracle.feasible = [(1, 2, 3)]
            transcript = Transcript(config)
            transcript.record((1, 2, 3), 3)
            return (1, 2, 3), transcript

        with pytest.raises(LemmaViolationError):
            verify_lower_bound_play(GameConfig(3, 3), solver=fake_solver)

    def test_audit_alarms_on_overhigh_answer(self):
        # an answer above its floor must trip the alarm even in a long game
        def fake_solver(oracle, config):
            oracle.feasible = [(1, 2, 3)]
            oracle.trace = [(1, 2)]
            transcript = Transcript(config)
            for _ in range(3):
                transcript.record((1, 2, 3), 1)
            return (1, 2, 3), transcript

        with pytest.raises(LemmaViolationError):
            verify_lower_bound_play(GameConfig(3, 3), solver=fake_solver)


class TestAdaptionInstance:
    def test_accessors(self):
        inst = AdaptionInstance(
            GameConfig(4, 4), ((4, 3, 2, 1), (1, 2, 3, 4)), (1, 2, 4, 3)
        )
        assert inst.m == 2
        assert inst.current_query == (1, 2, 3, 4)
        assert inst.agreement_colors() == {1, 2}
        assert inst.allowed_colors_at(1) == {2, 3}
        assert inst.allowed_colors_at(3) == {1, 4}

    def test_needs_a_query(self):
        with pytest.raises(ValueError):
            AdaptionInstance(GameConfig(3, 3), (), (1, 2, 3))


class TestAdaptSameColors:
    def test_worked_example(self):
        inst = AdaptionInstance(GameConfig(4, 4), ((1, 2, 3, 4),), (1, 2, 3, 4))
        assert adapt_secret_same_colors(inst) == (2, 1, 3, 4)

    def test_requires_square_board(self):
        inst = AdaptionInstance(GameConfig(2, 3), ((1, 2),), (1, 2))
        with pytest.raises(ValueError):
            adapt_secret_same_colors(inst)

    def test_requires_enough_agreement(self):
        inst = AdaptionInstance(GameConfig(3, 3), ((1, 2, 3),), (1, 3, 2))
        with pytest.raises(ValueError):
            adapt_secret_same_colors(inst)

    def test_random_instances_keep_postconditions(self):
        rng = random.Random(42)
        for _ in range(200):
            inst = make_same_colors_instance(rng)
            z = adapt_secret_same_colors(inst)
            validate_code(z, inst.config)
            for q in inst.queries[:-1]:
                assert black(q, z) == black(q, inst.current_secret)
            assert black(inst.current_query, z) < black(
                inst.current_query, inst.current_secret
            )


class TestAdaptSpareColors:
    def test_chain_escapes_into_unused_color(self):
        inst = AdaptionInstance(GameConfig(2, 3), ((2, 3),), (2, 3))
        assert adapt_secret_spare_colors(inst) == (1, 3)

    def test_chain_closes_a_cycle(self):
        inst = AdaptionInstance(GameConfig(2, 3), ((1, 2),), (1, 2))
        assert adapt_secret_spare_colors(inst) == (2, 1)

    def test_requires_spare_colors(self):
        inst = AdaptionInstance(GameConfig(3, 3), ((1, 2, 3),), (1, 2, 3))
        with pytest.raises(ValueError):
            adapt_secret_spare_colors(inst)

    def test_requires_agreement_somewhere(self):
        inst = AdaptionInstance(GameConfig(2, 3), ((1, 2),), (2, 1))
        with pytest.raises(ValueError):
            adapt_secret_spare_colors(inst)

    def test_random_instances_keep_postconditions(self):
        rng = random.Random(43)
        for _ in range(200):
            inst = make_spare_colors_instance(rng)
            z = adapt_secret_spare_colors(inst)
            validate_code(z, inst.config)
            for q in inst.queries[:-1]:
                assert black(q, z) == black(q, inst.current_secret)
            assert black(inst.current_query, z) < black(
                inst.current_query, inst.current_secret
            )
