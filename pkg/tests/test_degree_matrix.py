"""Degree-matrix algebra: potentials, ordering, minors, row surgery."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvedet import (
    DHBMatrix,
    IncompatibleRowError,
    NotHomogeneousError,
    WellOrderedSquare,
    canonicalize,
    erase_row,
    grid_from_potentials,
    insert_row_sorted,
    is_homogeneous,
    potentials,
    transversal_degree,
)

DEGREE8_GRID = [[0, 1, 10, 11], [-1, 0, 9, 10], [-5, -4, 5, 6], [-8, -7, 2, 3]]


class TestPotentials:
    def test_small_rectangular(self):
        u, v = potentials([[2, 3, 5], [1, 2, 4]])
        assert u == (2, 1)
        assert v == (0, 1, 3)

    def test_four_by_four(self):
        u, v = potentials(DEGREE8_GRID)
        assert u == (0, -1, -5, -8)
        assert v == (0, 1, 10, 11)

    def test_violation_reports_block(self):
        with pytest.raises(NotHomogeneousError) as exc:
            potentials([[1, 2], [2, 2]])
        assert exc.value.rows == (1, 2)
        assert exc.value.cols == (1, 2)

    def test_rejects_empty_and_ragged(self):
        with pytest.raises(ValueError):
            potentials([])
        with pytest.raises(ValueError):
            potentials([[1, 2], [3]])

    def test_rejects_huge_entries(self):
        with pytest.raises(ValueError):
            potentials([[10**7]])

    @given(
        st.lists(st.integers(-50, 50), min_size=1, max_size=6),
        st.lists(st.integers(-50, 50), min_size=1, max_size=6),
    )
    def test_round_trip(self, u, v):
        grid = grid_from_potentials(u, v)
        uu, vv = potentials(grid)
        assert grid_from_potentials(uu, vv) == grid
        assert vv[0] == 0

    @given(
        st.lists(st.integers(-20, 20), min_size=2, max_size=5),
        st.lists(st.integers(-20, 20), min_size=2, max_size=5),
        st.data(),
    )
    def test_perturbation_breaks_homogeneity(self, u, v, data):
        grid = [list(row) for row in grid_from_potentials(u, v)]
        i = data.draw(st.integers(0, len(u) - 1))
        j = data.draw(st.integers(0, len(v) - 1))
        grid[i][j] += data.draw(st.sampled_from([-3, -2, -1, 1, 2, 3]))
        assert not is_homogeneous(grid)


class TestCanonicalize:
    def test_row_swap(self):
        M, row_perm, col_perm = canonicalize([[-1, 2], [1, 4]])
        assert M.entries == ((1, 4), (-1, 2))
        assert row_perm == (2, 1)
        assert col_perm == (1, 2)

    def test_already_ordered_is_identity(self):
        M, row_perm, col_perm = canonicalize([[2, 3, 5], [1, 2, 4], [-3, -2, 0]])
        assert M.entries == ((2, 3, 5), (1, 2, 4), (-3, -2, 0))
        assert row_perm == (1, 2, 3)
        assert col_perm == (1, 2, 3)

    def test_column_swap(self):
        # v = (0, -3) decreases, so the columns must swap
        M, _, col_perm = canonicalize([[4, 1], [2, -1]])
        assert M.entries == ((1, 4), (-1, 2))
        assert col_perm == (2, 1)

    def test_idempotent(self):
        M, _, _ = canonicalize([[4, 1], [2, -1]])
        again, row_perm, col_perm = canonicalize(M.entries)
        assert again.entries == M.entries
        assert row_perm == (1, 2)
        assert col_perm == (1, 2)

    def test_shape_dispatch(self):
        square, _, _ = canonicalize([[1]])
        assert isinstance(square, WellOrderedSquare)
        dhb, _, _ = canonicalize([[2, 3, 5], [1, 2, 4]])
        assert isinstance(dhb, DHBMatrix)
        with pytest.raises(ValueError):
            canonicalize([[1, 2, 3]])  # 1 x 3 is neither shape

    @given(
        st.lists(st.integers(-9, 9), min_size=2, max_size=5),
        st.data(),
    )
    @settings(max_examples=150)
    def test_degree_invariant_under_permutation(self, u, data):
        v = data.draw(st.lists(st.integers(-9, 9), min_size=len(u), max_size=len(u)))
        grid = [list(row) for row in grid_from_potentials(u, v)]
        perm_r = data.draw(st.permutations(range(len(u))))
        perm_c = data.draw(st.permutations(range(len(u))))
        shuffled = [[grid[i][j] for j in perm_c] for i in perm_r]
        M1, _, _ = canonicalize(grid)
        M2, _, _ = canonicalize(shuffled)
        assert M1.degree == M2.degree
        assert M1.entries == M2.entries


class TestDegree:
    def test_degree8_grid(self):
        assert transversal_degree(DEGREE8_GRID) == 8

    def test_one_by_one(self):
        assert transversal_degree([[5]]) == 5

    def test_example_square(self):
        assert transversal_degree([[2, 3, 5], [1, 2, 4], [-3, -2, 0]]) == 4

    def test_equals_any_transversal(self):
        from itertools import permutations

        grid = grid_from_potentials((3, 1, 0), (0, 2, 5))
        d = transversal_degree(grid)
        for sigma in permutations(range(3)):
            assert sum(grid[i][sigma[i]] for i in range(3)) == d


def dhb(grid) -> DHBMatrix:
    Q, _, _ = canonicalize(grid)
    assert isinstance(Q, DHBMatrix)
    return Q


class TestMinorDegreesAndShifts:
    def test_two_by_three(self):
        Q = dhb([[2, 3, 5], [1, 2, 4]])
        assert Q.minor_degrees == (7, 6, 4)
        assert Q.shifts == (9, 8)

    def test_four_by_five(self):
        Q = dhb([[1, 1, 3, 3, 3], [1, 1, 3, 3, 3], [0, 0, 2, 2, 2], [-1, -1, 1, 1, 1]])
        assert Q.minor_degrees == (7, 7, 5, 5, 5)
        assert Q.shifts == (8, 8, 7, 6)

    def test_single_row(self):
        Q = dhb([[2, 2]])
        assert Q.minor_degrees == (2, 2)
        assert Q.shifts == (4,)
        Q = dhb([[2, 3]])
        assert Q.shifts == (5,)

    @given(
        st.integers(2, 6),
        st.data(),
    )
    @settings(max_examples=150)
    def test_entry_identity_and_column_erase_consistency(self, n, data):
        u = sorted(data.draw(st.lists(st.integers(-6, 6), min_size=n - 1, max_size=n - 1)), reverse=True)
        v = sorted(data.draw(st.lists(st.integers(0, 6), min_size=n, max_size=n)))
        v = [x - v[0] for x in v]
        Q = dhb(grid_from_potentials(u, v))
        a, b = Q.minor_degrees, Q.shifts
        for i in range(n - 1):
            for j in range(n):
                assert Q.entries[i][j] == b[i] - a[j]
        # recompute each minor degree by actually erasing the column
        for j in range(n):
            erased = [
                [Q.entries[i][jj] for jj in range(n) if jj != j] for i in range(n - 1)
            ]
            assert transversal_degree(erased) == a[j]
        assert all(a[j] >= a[j + 1] for j in range(n - 1))
        assert all(b[i] >= b[i + 1] for i in range(n - 2))


class TestInsertRow:
    def test_insert_at_bottom(self):
        Q = dhb([[2, 3, 5], [1, 2, 4]])
        M, pos = insert_row_sorted(Q, (-3, -2, 0))
        assert pos == 3
        assert M.entries == ((2, 3, 5), (1, 2, 4), (-3, -2, 0))

    def test_tie_goes_below_equal_rows(self):
        Q = dhb([[1, 1, 3, 3, 3], [1, 1, 3, 3, 3], [0, 0, 2, 2, 2], [-1, -1, 1, 1, 1]])
        M, pos = insert_row_sorted(Q, (-1, -1, 1, 1, 1))
        assert pos == 5
        assert M.entries[4] == (-1, -1, 1, 1, 1)

    def test_single_row_insert(self):
        Q = dhb([[2, 2]])
        M, pos = insert_row_sorted(Q, (1, 1))
        assert M.entries == ((2, 2), (1, 1))
        assert pos == 2

    def test_incompatible_row_rejected(self):
        Q = dhb([[2, 3, 5], [1, 2, 4]])
        with pytest.raises(IncompatibleRowError):
            insert_row_sorted(Q, (0, 0, 0))
        with pytest.raises(IncompatibleRowError):
            insert_row_sorted(Q, (0, 1))

    @given(st.integers(2, 5), st.integers(1, 12), st.data())
    @settings(max_examples=150)
    def test_insert_then_erase_round_trip(self, n, d, data):
        u = sorted(data.draw(st.lists(st.integers(-4, 4), min_size=n - 1, max_size=n - 1)), reverse=True)
        v = sorted(data.draw(st.lists(st.integers(0, 4), min_size=n, max_size=n)))
        v = [x - v[0] for x in v]
        Q = dhb(grid_from_potentials(u, v))
        row = tuple(d - aj for aj in Q.minor_degrees)
        M, pos = insert_row_sorted(Q, row)
        assert M.degree == d
        back = erase_row(M, pos)
        # identical up to reordering of tied (identical) rows
        assert sorted(back.entries) == sorted(Q.entries)
        assert back.minor_degrees == Q.minor_degrees


class TestEraseRow:
    def test_erasing_breaks_validity(self):
        M, _, _ = canonicalize(DEGREE8_GRID)
        R = erase_row(M, 1)
        assert R.entries[0][0] == -1
        assert not R.diag_nonnegative
        assert not R.is_valid

    def test_erase_bottom_recovers_presentation(self):
        M, _, _ = canonicalize([[2, 3, 5], [1, 2, 4], [0, 1, 3]])
        R = erase_row(M, 3)
        assert R.entries == ((2, 3, 5), (1, 2, 4))
        assert R.diag_nonnegative and R.max_diag_positive

    def test_zero_diagonal_square_gives_degenerate_candidate(self):
        M, _, _ = canonicalize([[0, 0], [0, 0]])
        assert M.degree == 0
        for i in (1, 2):
            R = erase_row(M, i)
            assert R.diag_nonnegative
            assert not R.max_diag_positive

    def test_out_of_range(self):
        M, _, _ = canonicalize([[1]])
        with pytest.raises(ValueError):
            erase_row(M, 2)
