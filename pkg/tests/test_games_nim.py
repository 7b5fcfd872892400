import itertools

import pytest
from helpers import staircase_position_count  # noqa: F401  (shared helper import path check)

from noisygames.errormodel import equiprobable_model, validate_model
from noisygames.games.nim import (
    hamming,
    nim1_graph,
    nim1_model,
    nim1_solution_curve,
    nim_multi_expected_class,
    nim_multi_graph,
    nim_multi_positions,
)
from noisygames.solver import solve


def test_hamming_examples():
    assert hamming(3, 0) == 2
    assert hamming(7, 7) == 0
    assert hamming(1, 2) == 2
    assert hamming(5, 1) == 1


def test_nim1_graph_shape():
    graph = nim1_graph(3)
    assert graph.position_count == 4
    assert graph.followers[3] == (0, 1, 2)
    assert graph.followers[0] == ()
    assert graph.start == 3


def test_nim1_graph_one_chip():
    assert nim1_graph(1).followers[1] == (0,)


def test_nim1_graph_zero_chips_loses_immediately():
    graph = nim1_graph(0)
    solved = solve(graph, nim1_model(0, 0.3))
    assert solved.values[graph.start] == 0.0


def test_nim1_model_three_chip_row_for_send_zero():
    # codes 00, 01, 10: sending 00 keeps (1-p)/(1+p), errors p/(1+p) each
    p = 0.3
    model = nim1_model(3, p)
    row = model.rows[3][0]
    assert row[0] == pytest.approx((1 - p) / (1 + p), abs=1e-15)
    assert row[1] == pytest.approx(p / (1 + p), abs=1e-15)
    assert row[2] == pytest.approx(p / (1 + p), abs=1e-15)


def test_nim1_model_two_chip_rows():
    p = 0.2
    model = nim1_model(3, p)
    # at the 2-chip position sending 01 lands 01 with prob 1-p, 00 with p
    assert model.rows[2][1] == pytest.approx((p, 1 - p), abs=1e-15)
    assert model.rows[2][0] == pytest.approx((1 - p, p), abs=1e-15)


def test_nim1_model_half_is_uniform():
    model = nim1_model(6, 0.5)
    for m in range(1, 7):
        for row in model.rows[m]:
            assert row == pytest.approx((1.0 / m,) * m, abs=1e-15)


def test_nim1_model_zero_is_identity():
    model = nim1_model(5, 0.0)
    for m in range(1, 6):
        for s, row in enumerate(model.rows[m]):
            expected = tuple(1.0 if j == s else 0.0 for j in range(m))
            assert row == expected


def test_nim1_model_one_lands_on_farthest_codewords():
    model = nim1_model(4, 1.0)
    # at 4 chips sending 0 lands on 3 (distance 2); sending 3 lands on 0
    assert model.rows[4][0] == (0.0, 0.0, 0.0, 1.0)
    assert model.rows[4][3] == (1.0, 0.0, 0.0, 0.0)
    # at 3 chips sending 0 splits between the two distance-1 codewords
    assert model.rows[3][0] == (0.0, 0.5, 0.5)


def test_nim1_rows_stochastic_across_p_range():
    for k in (1, 2, 3, 5, 8, 10):
        graph = nim1_graph(k)
        for p in (0.0, 1e-9, 0.25, 0.5, 0.75, 1.0 - 1e-9, 1.0):
            model = nim1_model(k, p)
            assert validate_model(model, graph).ok, (k, p)


def test_nim1_model_rejects_bad_p():
    with pytest.raises(ValueError):
        nim1_model(3, -0.1)
    with pytest.raises(ValueError):
        nim1_model(3, 1.1)


def test_nim1_endpoint_appendix_value():
    solved = solve(nim1_graph(4), nim1_model(4, 1.0))
    assert solved.values[4] == pytest.approx(1.0, abs=1e-12)
    assert 3 in solved.optimal_moves[4]


def test_nim1_two_chip_closed_form():
    curve = nim1_solution_curve(2, [i / 100 for i in range(101)])
    for (value, _), i in zip(curve, range(101)):
        p = i / 100
        assert value == pytest.approx(max(1 - p, p), abs=1e-15)


def test_nim1_curve_spot_values():
    (value, optimal), = nim1_solution_curve(4, [0.25])
    assert value == pytest.approx(0.631250000000000, abs=1e-9)
    assert optimal == (0,)
    (value, optimal), = nim1_solution_curve(5, [0.77])
    assert value == pytest.approx(0.458703309461914, abs=1e-9)
    assert optimal == (4,)
    (value, optimal), = nim1_solution_curve(9, [0.50])
    assert value == pytest.approx(0.5, abs=1e-9)
    assert optimal == tuple(range(9))


def test_nim_multi_graph_2_2():
    graph = nim_multi_graph((2, 2))
    assert graph.position_count == 9
    positions = nim_multi_positions((2, 2))
    assert positions[0] == (0, 0)
    assert graph.followers[0] == ()
    index = {t: i for i, t in enumerate(positions)}
    # from (2,2): pile 0 to 0/1, pile 1 to 0/1
    assert graph.followers[graph.start] == (
        index[(0, 2)],
        index[(1, 2)],
        index[(2, 0)],
        index[(2, 1)],
    )


def test_nim_multi_single_pile_classical():
    graph = nim_multi_graph((1,))
    assert graph.position_count == 2
    solved = solve(graph, equiprobable_model(graph))
    assert solved.classes[graph.start] == "N"


def test_nim_multi_expected_class_examples():
    assert nim_multi_expected_class((1, 1, 1)) == "N"
    assert nim_multi_expected_class((1, 1)) == "P"
    assert nim_multi_expected_class((3, 1)) == "O"
    assert nim_multi_expected_class((0, 0)) == "P"
    assert nim_multi_expected_class((1, 0)) == "N"


def test_nim_multi_one_one_is_p_position():
    graph = nim_multi_graph((1, 1))
    solved = solve(graph, equiprobable_model(graph))
    assert solved.classes[graph.start] == "P"


@pytest.mark.parametrize(
    "piles",
    [t for r in (1, 2, 3) for t in itertools.product(range(5), repeat=r)]
    [:40],
)
def test_nim_multi_classes_match_prediction(piles):
    if all(c == 0 for c in piles):
        piles = (1,) + piles[1:]
    graph = nim_multi_graph(piles)
    model = equiprobable_model(graph)
    solved = solve(graph, model)
    for t, i in zip(nim_multi_positions(piles), range(graph.position_count)):
        assert solved.classes[i] == nim_multi_expected_class(t), t
        if solved.classes[i] == "O":
            assert abs(solved.values[i] - 0.5) <= 1e-12
