import pytest
from helpers import classical_win_labels, oracle_win_probabilities, random_game
from hypothesis import given, settings
from hypothesis import strategies as st

from noisygames.errormodel import equiprobable_model, identity_model
from noisygames.games.chomp import chomp_graph, chomp_model, chomp_positions
from noisygames.games.nim import nim1_graph, nim1_model, nim_multi_graph
from noisygames.graph import GameGraph
from noisygames.solver import (
    classify,
    fair_chance_hypotheses,
    move_values,
    solve,
)


def test_move_values_hand_example():
    # followers worth [0, 1], row [0.7, 0.3]: 0.7*1 + 0.3*0 = 0.7
    assert move_values([0.0, 1.0], [[0.7, 0.3]]) == [pytest.approx(0.7)]


def test_move_values_all_winning_followers_gives_zero():
    out = move_values([1.0, 1.0, 1.0], [[0.2, 0.3, 0.5], [1.0, 0.0, 0.0]])
    assert out == [0.0, 0.0]


def test_move_values_balanced_uniform_gives_half():
    # uniform row over followers worth 0,0,1,1 -> 1/2
    out = move_values([0.0, 0.0, 1.0, 1.0], [[0.25] * 4])
    assert out[0] == pytest.approx(0.5, abs=1e-15)


def test_move_values_dimension_mismatch():
    with pytest.raises(ValueError):
        move_values([0.0, 1.0], [[1.0]])


def test_solve_nim3_closed_form_both_branches():
    graph = nim1_graph(3)
    solved = solve(graph, nim1_model(3, 0.3))
    assert solved.values[3] == pytest.approx(0.79 / 1.3, abs=1e-12)
    assert solved.optimal_moves[3] == (0,)
    solved = solve(graph, nim1_model(3, 0.6))
    assert solved.values[3] == pytest.approx(0.384 / 0.76, abs=1e-12)
    assert solved.optimal_moves[3] == (1,)


def test_identity_channel_degenerates_to_classical_play():
    for seed in range(30):
        graph, _ = random_game(seed, max_positions=10)
        solved = solve(graph, identity_model(graph))
        classical = classical_win_labels(graph)
        for v in range(graph.position_count):
            assert solved.values[v] in (0.0, 1.0)
            assert (solved.classes[v] == "N") == classical[v]
            assert (solved.classes[v] == "P") == (not classical[v])


def test_solver_matches_exhaustive_oracle():
    for seed in range(50):
        graph, model = random_game(seed, max_positions=8)
        solved = solve(graph, model)
        oracle = oracle_win_probabilities(graph, model)
        for v in range(graph.position_count):
            assert abs(solved.values[v] - oracle[v]) <= 1e-12


def test_zero_one_values_iff_followers_flip():
    for seed in range(50):
        graph, model = random_game(seed, max_positions=8, strictly_positive=True)
        solved = solve(graph, model)
        for v in range(graph.position_count):
            if graph.is_terminal(v):
                continue
            followers = graph.followers[v]
            all_one = all(solved.values[u] >= 1.0 - 1e-9 for u in followers)
            all_zero = all(solved.values[u] <= 1e-9 for u in followers)
            assert (solved.values[v] <= 1e-9) == all_one
            assert (solved.values[v] >= 1.0 - 1e-9) == all_zero


def test_move_values_are_convex_combinations():
    for seed in range(30):
        graph, model = random_game(seed, max_positions=10)
        solved = solve(graph, model)
        for v in range(graph.position_count):
            if graph.is_terminal(v):
                continue
            complements = [1.0 - solved.values[u] for u in graph.followers[v]]
            lo, hi = min(complements), max(complements)
            for x in solved.move_values[v]:
                assert lo - 1e-12 <= x <= hi + 1e-12


def test_solved_game_invariants():
    for seed in range(30):
        graph, model = random_game(seed, max_positions=10)
        solved = solve(graph, model)
        for v in range(graph.position_count):
            if graph.is_terminal(v):
                assert solved.values[v] == 0.0
                assert solved.optimal_moves[v] == ()
            else:
                assert solved.values[v] == max(solved.move_values[v])
                assert solved.optimal_moves[v]
                for w in solved.optimal_moves[v]:
                    assert solved.move_values[v][w] >= solved.values[v] - 1e-9
                assert all(0.0 <= x <= 1.0 for x in solved.move_values[v])


def test_classify_thresholds():
    graph = GameGraph(followers=((), (0,), (1,)), start=2)
    solved = solve(graph, identity_model(graph))
    assert classify(solved) == ("P", "N", "P")


def test_classify_chomp_small_positions():
    graph = chomp_graph(2, 2)
    positions = chomp_positions(2, 2)
    solved = solve(graph, chomp_model(2, 2, "n8", 0.4))
    by_heights = dict(zip(positions, solved.classes))
    assert by_heights[(1, 0)] == "P"  # poisoned square alone
    assert by_heights[(1, 1)] == "N"  # 1x2 row
    assert by_heights[(2, 0)] == "N"  # 2x1 column
    assert by_heights[(2, 1)] == "P"  # L of three cells


def test_fair_chance_hypotheses_nim_2_2():
    graph = nim_multi_graph((2, 2))
    model = equiprobable_model(graph)
    solved = solve(graph, model)
    assert fair_chance_hypotheses(graph, model, solved)
    assert solved.values[graph.start] == pytest.approx(0.5, abs=1e-12)


def test_fair_chance_hypotheses_chomp_false():
    graph = chomp_graph(2, 2)
    model = equiprobable_model(graph)
    solved = solve(graph, model)
    assert not fair_chance_hypotheses(graph, model, solved)


def test_fair_chance_hypotheses_vacuous_on_chain():
    graph = GameGraph(followers=((), (0,), (1,)), start=2)
    model = equiprobable_model(graph)
    solved = solve(graph, model)
    assert fair_chance_hypotheses(graph, model, solved)


def test_fair_chance_hypotheses_false_for_non_uniform_model():
    graph = nim1_graph(3)
    model = nim1_model(3, 0.3)
    solved = solve(graph, model)
    assert not fair_chance_hypotheses(graph, model, solved)


def test_o_positions_worth_half_under_fair_chance_condition():
    for piles in [(2,), (2, 2), (3, 1), (2, 1, 1), (4, 2)]:
        graph = nim_multi_graph(piles)
        model = equiprobable_model(graph)
        solved = solve(graph, model)
        if not fair_chance_hypotheses(graph, model, solved):
            continue
        for v in range(graph.position_count):
            if solved.classes[v] == "O":
                assert abs(solved.values[v] - 0.5) <= 1e-12


def test_fair_chance_condition_forces_half_on_random_graphs():
    passing = 0
    for seed in range(300):
        graph, _ = random_game(seed, max_positions=7)
        model = equiprobable_model(graph)
        solved = solve(graph, model)
        if not fair_chance_hypotheses(graph, model, solved):
            continue
        passing += 1
        for v in range(graph.position_count):
            if solved.classes[v] == "O":
                assert abs(solved.values[v] - 0.5) <= 1e-12
    assert passing > 0  # the filter must actually select some instances


def test_solve_rejects_invalid_inputs():
    graph = GameGraph(followers=((1,), (0,)), start=0)
    with pytest.raises(ValueError):
        solve(graph, equiprobable_model(graph))
    chain = GameGraph(followers=((), (0,)), start=1)
    from noisygames.errormodel import MoveErrorModel

    with pytest.raises(ValueError):
        solve(chain, MoveErrorModel(((), ((0.5, 0.5),))))


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_solver_values_always_probabilities(seed):
    graph, model = random_game(seed, max_positions=12)
    solved = solve(graph, model)
    assert all(0.0 <= x <= 1.0 for x in solved.values)
