"""Decision procedures: representability, containment, fast paths, thresholds."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvedet import (
    EmptySchemeDegenerateError,
    InvalidDHBError,
    NotMinimalError,
    canonicalize,
    census,
    contains_subscheme,
    corollary_case,
    grid_from_potentials,
    iter_dhb_matrices,
    representable,
    representable_2x2,
    scan,
    stable_threshold,
)

DEGREE8_GRID = [[0, 1, 10, 11], [-1, 0, 9, 10], [-5, -4, 5, 6], [-8, -7, 2, 3]]


def dhb(grid):
    Q, _, _ = canonicalize(grid)
    return Q


Q_61 = dhb([[2, 3, 5], [1, 2, 4]])
Q_64 = dhb([[1, 1, 3, 3, 3], [1, 1, 3, 3, 3], [0, 0, 2, 2, 2], [-1, -1, 1, 1, 1]])
Q_CI22 = dhb([[2, 2]])


class TestRepresentable:
    def test_degree_eight_four_by_four(self):
        decision = representable(DEGREE8_GRID)
        assert decision.verdict
        assert decision.degree == 8
        # both negative subdiagonal entries force trailing blocks of full degree
        assert decision.trailing_degrees == ((2, 8), (3, 8))

    def test_negative_diagonal(self):
        decision = representable([[2, 3, 8], [-3, -2, 3], [-4, -3, 2]])
        assert not decision.verdict
        assert decision.reason == "DiagonalNegative"
        assert decision.k == 2

    def test_bad_block_degree(self):
        decision = representable([[1, 3], [-1, 1]])
        assert not decision.verdict
        assert decision.reason == "SubdiagonalBlockDegree"
        assert (decision.k, decision.block_degree) == (2, 1)

    def test_trailing_block_of_degree_zero(self):
        decision = representable([[2, 3], [-1, 0]])
        assert decision.verdict
        assert decision.degree == 2

    def test_degree_zero_convention(self):
        decision = representable([[0, 0], [0, 0]])
        assert decision.verdict
        assert decision.reason == "DegreeZeroTrivial"

    def test_degree_zero_with_negative_diagonal_is_no(self):
        # trace zero but a diagonal entry is negative: the determinant
        # vanishes identically, so a general constant is not reachable
        decision = representable([[-1, 3], [-3, 1]])
        assert decision.degree == 0
        assert not decision.verdict
        assert decision.reason == "DiagonalNegative"

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            representable([[-2]])

    def test_unsorted_input_is_canonicalized(self):
        decision = representable([[-1, 2], [1, 4]])
        assert decision.normalized == ((1, 4), (-1, 2))
        assert decision.degree == 3

    def test_one_by_one(self):
        assert representable([[5]]).verdict

    def test_smallest_offending_diagonal_reported(self):
        grid = grid_from_potentials((5, -3, -4), (0, 1, 2))  # diagonal (5, -2, -2)
        decision = representable(grid)
        assert decision.reason == "DiagonalNegative"
        assert decision.k == 2


class TestRepresentable2x2:
    def test_all_nonnegative(self):
        assert representable_2x2([[1, 1], [1, 1]]).verdict

    def test_bad_block(self):
        assert not representable_2x2([[1, 3], [-1, 1]]).verdict

    def test_corner_equals_degree(self):
        decision = representable_2x2([[3, 5], [-2, 0]])
        assert decision.verdict
        assert decision.degree == 3

    def test_rejects_other_sizes(self):
        with pytest.raises(ValueError):
            representable_2x2([[1, 2, 3], [0, 1, 2], [-1, 0, 1]])

    def test_exhaustive_agreement_with_general_test(self):
        """Acceptance-sized sweep: entries in [-10, 10], no discrepancies."""
        count = 0
        for m11 in range(-10, 11):
            for m12 in range(-10, 11):
                for m21 in range(-10, 11):
                    m22 = m12 + m21 - m11
                    if not -10 <= m22 <= 10:
                        continue
                    grid = [[m11, m12], [m21, m22]]
                    if m11 + m22 < 0:
                        with pytest.raises(ValueError):
                            representable(grid)
                        with pytest.raises(ValueError):
                            representable_2x2(grid)
                        continue
                    count += 1
                    assert representable_2x2(grid).verdict == representable(grid).verdict, grid
        assert count == 3311


class TestContainsSubscheme:
    def test_quartic_contains_22_points(self):
        decision = contains_subscheme(Q_61, 4)
        assert decision.verdict
        assert decision.inserted_row_position == 3
        assert decision.normalized == ((2, 3, 5), (1, 2, 4), (-3, -2, 0))

    def test_quintic_fails_with_unit_block(self):
        decision = contains_subscheme(Q_61, 5)
        assert not decision.verdict
        assert decision.reason == "SubdiagonalBlockDegree"
        assert (decision.k, decision.block_degree) == (3, 1)
        assert decision.normalized == ((2, 3, 5), (1, 2, 4), (-2, -1, 1))

    def test_sextic_contains_20_points(self):
        decision = contains_subscheme(Q_64, 6)
        assert decision.verdict
        assert decision.inserted_row_position == 5

    def test_cubic_contains_complete_intersection_of_conics(self):
        assert contains_subscheme(Q_CI22, 3).verdict

    def test_small_degree_fails_on_diagonal(self):
        decision = contains_subscheme(Q_61, 1)
        assert not decision.verdict
        assert decision.reason == "DiagonalNegative"
        assert decision.k == 3

    def test_invalid_presentation_rejected(self):
        bad = dhb([[1, 2, 3], [-2, -1, 0]])
        assert not bad.diag_nonnegative
        with pytest.raises(InvalidDHBError):
            contains_subscheme(bad, 4)

    def test_empty_scheme_rejected(self):
        degenerate = dhb([[0, 0]])
        with pytest.raises(EmptySchemeDegenerateError):
            contains_subscheme(degenerate, 4)

    def test_nonpositive_degree_rejected(self):
        with pytest.raises(ValueError):
            contains_subscheme(Q_61, 0)


class TestScan:
    def test_degree_22_scheme(self):
        verdicts = [dec.verdict for _, dec in scan(Q_61, 9)]
        assert verdicts == [False, False, False, True, False, True, True, True, True]

    def test_single_point(self):
        # one point = complete intersection of two lines sits on every curve;
        # the procedure and the closed form both say yes from degree 1 on
        Q = dhb([[1, 1]])
        verdicts = [dec.verdict for _, dec in scan(Q, 3)]
        assert verdicts == [True, True, True]
        for d in (1, 2, 3):
            assert corollary_case(Q, d).decision.verdict

    def test_20_points_scan_ends_yes(self):
        assert scan(Q_64, 6)[-1][1].verdict


class TestCorollaryCase:
    def test_cases_on_22_points(self):
        result = corollary_case(Q_61, 4)
        assert result.case == "ii" and result.decision.verdict
        result = corollary_case(Q_61, 5)
        assert result.case == "ii" and not result.decision.verdict
        result = corollary_case(Q_61, 9)
        assert result.case == "i" and result.decision.verdict
        result = corollary_case(Q_61, 8)
        assert result.case == "iii" and result.decision.verdict

    def test_refuses_non_minimal(self):
        with pytest.raises(NotMinimalError):
            corollary_case(Q_64, 6)  # 7 is both a generator and a syzygy degree

    def test_negative_subdiagonal_splitting_case(self):
        # minimal presentation with a negative subdiagonal entry: generators
        # of degrees (6, 2, 2) sharing a linear factor in two of them.  A
        # general conic cannot contain the scheme even though d = a_n.
        Q = dhb([[1, 5, 5], [-3, 1, 1]])
        assert Q.is_numerically_minimal
        assert Q.minor_degrees == (6, 2, 2)
        assert Q.shifts == (7, 3)
        for d in range(1, 10):
            lhs = corollary_case(Q, d)
            rhs = contains_subscheme(Q, d)
            assert lhs.decision.verdict == rhs.verdict, d
        assert not corollary_case(Q, 2).decision.verdict
        assert corollary_case(Q, 6).decision.verdict

    def test_agreement_small_sample(self):
        cases = 0
        for Q in iter_dhb_matrices(3, 3, minimal_only=True):
            for d in range(1, Q.shifts[0] + 3):
                result = corollary_case(Q, d)
                procedure = contains_subscheme(Q, d)
                assert result.decision.verdict == procedure.verdict
                assert result.decision.reason == procedure.reason
                assert result.decision.k == procedure.k
                assert result.decision.block_degree == procedure.block_degree
                cases += 1
        assert cases > 500


class TestStableThreshold:
    def test_values(self):
        assert stable_threshold(Q_61) == 7
        assert stable_threshold(Q_CI22) == 2
        assert stable_threshold(Q_64) == 6

    def test_monotone_after_threshold(self):
        for Q in (Q_61, Q_64, Q_CI22):
            t = stable_threshold(Q)
            for d in range(t, t + 6):
                assert contains_subscheme(Q, d).verdict

    @given(st.integers(2, 4), st.data())
    @settings(max_examples=60, deadline=None)
    def test_monotone_on_random_presentations(self, n, data):
        u = sorted(data.draw(st.lists(st.integers(-3, 4), min_size=n - 1, max_size=n - 1)), reverse=True)
        v = sorted(data.draw(st.lists(st.integers(0, 4), min_size=n, max_size=n)))
        v = [x - v[0] for x in v]
        diag = [u[k] + v[k] for k in range(n - 1)]
        lift = max(0, -min(diag), 1 - max(diag))
        u = [x + lift for x in u]
        Q = dhb(grid_from_potentials(u, v))
        t = stable_threshold(Q)
        for d in range(t, t + 5):
            assert contains_subscheme(Q, d).verdict


class TestConditionTwoSymmetry:
    @given(st.integers(2, 5), st.data())
    @settings(max_examples=100)
    def test_trailing_degree_d_means_leading_zero(self, n, data):
        u = sorted(data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n)), reverse=True)
        v = sorted(data.draw(st.lists(st.integers(0, 5), min_size=n, max_size=n)))
        grid = grid_from_potentials(u, v)
        M, _, _ = canonicalize(grid)
        d = M.degree
        for k, e in zip(range(2, n + 1), [sum(M.diagonal[k - 1 :]) for k in range(2, n + 1)]):
            leading = sum(M.diagonal[: k - 1])
            assert (e == d) == (leading == 0)
            assert leading + e == d


class TestEnumeration:
    def test_census_shape(self):
        result = census(2, 3, 3)
        assert result["total"] == result["yes"] + result["no"]
        assert result["total"] > 0
        assert sum(result["byReason"].values()) == result["total"]

    def test_minimal_filter(self):
        full = sum(1 for _ in iter_dhb_matrices(3, 3))
        minimal = sum(1 for _ in iter_dhb_matrices(3, 3, minimal_only=True))
        assert 0 < minimal < full

    def test_all_yielded_matrices_are_valid(self):
        for Q in iter_dhb_matrices(3, 2):
            assert Q.is_valid
            assert Q.base.is_well_ordered()


class TestDecisionInvariance:
    @given(st.integers(2, 4), st.data())
    @settings(max_examples=120)
    def test_row_and_column_shuffles_do_not_change_the_decision(self, n, data):
        # duplicated potentials produce tied (identical) rows or columns, so
        # any input order must canonicalize to the same matrix and decision
        u = data.draw(st.lists(st.integers(-3, 4), min_size=n, max_size=n))
        v = data.draw(st.lists(st.integers(-3, 4), min_size=n, max_size=n))
        if data.draw(st.booleans()):
            u[data.draw(st.integers(0, n - 1))] = u[0]
        grid = [list(row) for row in grid_from_potentials(u, v)]
        if sum(u) + sum(v) < 0:
            return  # negative degree: malformed for both orderings alike
        rows = data.draw(st.permutations(range(n)))
        cols = data.draw(st.permutations(range(n)))
        shuffled = [[grid[i][j] for j in cols] for i in rows]
        lhs = representable(grid)
        rhs = representable(shuffled)
        assert lhs.verdict == rhs.verdict
        assert lhs.reason == rhs.reason
        assert lhs.normalized == rhs.normalized
        assert (lhs.k, lhs.block_degree) == (rhs.k, rhs.block_degree)
