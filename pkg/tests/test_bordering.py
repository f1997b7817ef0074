from __future__ import annotations

from fractions import Fraction as F

import pytest

from oracles import random_tp_matrix, rot180
from tpscaffold import (
    BorderSide,
    Matrix,
    Orientation,
    border,
    border_above,
    border_above_coefficient,
    border_below,
    border_below_coefficient,
    border_left,
    border_right,
    build_graph,
    enumerate_paths,
    gamma_scaffold,
    is_totally_positive,
    le_scaffold,
    matrix_from_scaffold,
    path_weight,
    recover_border_params,
)

X23 = Matrix([[4, 2, 1], [1, 1, 1]])
X12 = Matrix([[6, 3, 1], [3, 2, 1]])


class TestBorderExamples:
    def test_border_above(self):
        assert border_above(X23, (1, 2, 2)) == Matrix(
            [[15, 6, 2], [4, 2, 1], [1, 1, 1]]
        )

    def test_border_below(self):
        bb = border_below(X12, (9, 2, 1))
        assert bb.row(3) == (F(9), F(8), F(6))
        assert bb == Matrix([[6, 3, 1], [3, 2, 1], [9, 8, 6]])

    def test_border_left_equals_transposed_above(self):
        p = (1, 2)
        assert border_left(X23, p) == border_above(X23.transpose(), p).transpose()

    def test_border_right_equals_transposed_below(self):
        p = ("1/2", 3)
        assert border_right(X23, p) == border_below(X23.transpose(), p).transpose()

    def test_single_entry_matrix(self):
        assert border_above(Matrix([[5]]), (3,)) == Matrix([[3], [5]])
        assert border_below(Matrix([[5]]), (3,)) == Matrix([[5], [3]])

    def test_dispatcher_matches_direct_functions(self, rng):
        X = random_tp_matrix(rng, 2, 3)
        row_params = (1, "1/2", 2)
        col_params = (3, "2/3")
        assert border(X, BorderSide.ABOVE, row_params) == border_above(X, row_params)
        assert border(X, BorderSide.BELOW, row_params) == border_below(X, row_params)
        assert border(X, BorderSide.LEFT, col_params) == border_left(X, col_params)
        assert border(X, BorderSide.RIGHT, col_params) == border_right(X, col_params)

    def test_unknown_side_rejected(self):
        with pytest.raises(ValueError):
            border(X23, "above", (1, 1, 1))
        with pytest.raises(ValueError):
            recover_border_params(X23, "above")


class TestBorderProperties:
    def sides_and_params(self, X, rng):
        from oracles import random_rational

        for side in BorderSide:
            length = X.cols if side in (BorderSide.ABOVE, BorderSide.BELOW) else X.rows
            params = tuple(random_rational(rng) for _ in range(length))
            yield side, params

    def test_bordered_matrices_are_tp(self, rng):
        for _ in range(4):
            X = random_tp_matrix(rng, rng.randint(1, 3), rng.randint(1, 3))
            for side, params in self.sides_and_params(X, rng):
                assert is_totally_positive(border(X, side, params))

    def test_input_is_the_complementary_block(self, rng):
        X = random_tp_matrix(rng, 2, 3)
        p = (1, 2, 3)
        q = ("1/2", 5)
        assert border_above(X, p).without_row(1) == X
        assert border_below(X, p).without_row(3) == X
        assert border_left(X, q).without_column(1) == X
        assert border_right(X, q).without_column(4) == X

    def test_recover_round_trips(self, rng):
        for _ in range(4):
            X = random_tp_matrix(rng, rng.randint(1, 3), rng.randint(1, 3))
            for side, params in self.sides_and_params(X, rng):
                assert recover_border_params(border(X, side, params), side) == params

    def test_recover_on_example(self):
        bordered = Matrix([[15, 6, 2], [4, 2, 1], [1, 1, 1]])
        assert recover_border_params(bordered, BorderSide.ABOVE) == (1, 2, 2)

    def test_scaffold_gains_one_line(self, rng):
        X = random_tp_matrix(rng, 3, 2)
        p = (F(2), F(1, 3))
        above = gamma_scaffold(border_above(X, p))
        assert above.row(1) == p
        assert above.take_rows(2, 4) == gamma_scaffold(X)
        below = le_scaffold(border_below(X, p))
        assert below.row(4) == p
        assert below.take_rows(1, 3) == le_scaffold(X)

    def test_param_validation(self):
        with pytest.raises(ValueError):
            border_above(X23, (1, 2))
        with pytest.raises(ValueError):
            border_above(X23, (1, 2, 0))
        with pytest.raises(ValueError):
            border_below(X23, (1, -2, 1))
        with pytest.raises(ValueError):
            border_left(X23, (1, 2, 3))


class TestBorderDualities:
    def test_below_is_rotated_above(self, rng):
        X = random_tp_matrix(rng, 3, 3)
        q = (1, "3/2", 2)
        assert border_below(X, q) == rot180(border_above(rot180(X), q[::-1]))

    def test_right_is_anti_transposed_above(self, rng):
        X = random_tp_matrix(rng, 2, 3)
        p = ("1/2", 4)
        assert border_right(X, p) == border_above(X.anti_transpose(), p[::-1]).anti_transpose()

    def test_left_is_anti_transposed_below(self, rng):
        X = random_tp_matrix(rng, 2, 3)
        p = (3, "2/3")
        assert border_left(X, p) == border_below(X.anti_transpose(), p[::-1]).anti_transpose()

    def test_left_prepends_scaffold_column(self, rng):
        X = random_tp_matrix(rng, 3, 2)
        p = (1, 2, "1/2")
        direct = matrix_from_scaffold(
            gamma_scaffold(X).with_column_inserted(1, p), Orientation.GAMMA
        )
        assert border_left(X, p) == direct

    def test_right_appends_scaffold_column(self, rng):
        X = random_tp_matrix(rng, 3, 2)
        p = (1, 2, "1/2")
        direct = matrix_from_scaffold(
            le_scaffold(X).with_column_inserted(3, p), Orientation.LE
        )
        assert border_right(X, p) == direct


class TestBorderCoefficients:
    def test_above_example_coefficients(self):
        assert [border_above_coefficient(X23, 1, l) for l in (1, 2, 3)] == [1, 3, 4]
        assert [border_above_coefficient(X23, 2, l) for l in (1, 2, 3)] == [0, 1, 2]
        assert [border_above_coefficient(X23, 3, l) for l in (1, 2, 3)] == [0, 0, 1]

    def test_above_entries_are_linear_forms(self, rng):
        for _ in range(4):
            X = random_tp_matrix(rng, rng.randint(1, 3), rng.randint(1, 3))
            n = X.cols
            params = tuple(F(rng.randint(1, 5)) for _ in range(n))
            top = border_above(X, params).row(1)
            for j in range(1, n + 1):
                assert top[j - 1] == sum(
                    border_above_coefficient(X, j, l) * params[l - 1]
                    for l in range(1, n + 1)
                )

    def test_below_entries_are_linear_forms(self, rng):
        for _ in range(4):
            X = random_tp_matrix(rng, rng.randint(1, 3), rng.randint(1, 3))
            n = X.cols
            params = tuple(F(rng.randint(1, 5)) for _ in range(n))
            bottom = border_below(X, params).row(X.rows + 1)
            for j in range(1, n + 1):
                assert bottom[j - 1] == sum(
                    border_below_coefficient(X, i, j) * params[i - 1]
                    for i in range(1, n + 1)
                )

    def test_above_coefficients_are_blocked_path_sums(self, rng):
        # prepend a ones row to the scaffolding: the coefficient of the l-th
        # parameter collects exactly the paths whose first turn is column l
        X = random_tp_matrix(rng, 2, 4)
        T = gamma_scaffold(X)
        g = build_graph(T.with_row_inserted(1, (1,) * 4), Orientation.GAMMA)
        for j in range(1, 5):
            for l in range(1, 5):
                total = sum(
                    path_weight(g, p)
                    for p in enumerate_paths(g, 1, j)
                    if p.turns[0][1] == l
                )
                assert border_above_coefficient(X, j, l) == total

    def test_coefficient_triangularity(self, rng):
        X = random_tp_matrix(rng, 3, 3)
        for a in range(1, 4):
            for b in range(1, 4):
                above = border_above_coefficient(X, a, b)
                below = border_below_coefficient(X, a, b)
                if a == b:
                    assert above == below == 1
                elif b < a:
                    assert above == 0
                    assert below == 0
                else:
                    assert above > 0
                    assert below > 0

    def test_argument_validation(self):
        with pytest.raises(IndexError):
            border_above_coefficient(X23, 0, 1)
        with pytest.raises(IndexError):
            border_below_coefficient(X23, 1, 4)
