import random

import pytest
from hypothesis import given, strategies as st

from hexholes.intlinalg import (
    LabeledMatrix,
    binomial,
    det_cofactor,
    determinant,
    matching_crossings,
    matching_sign,
    perfect_matchings,
    pfaffian_by_matchings,
    pfaffian_elimination,
    signed_range_sum,
)


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(3, -1) == 0
    assert binomial(3, 4) == 0
    assert binomial(0, 0) == 1


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_signed_range_sum_branches():
    assert signed_range_sum(lambda r: 10**9, 0, -1) == 0
    # decreasing by more than one negates the flipped range
    assert signed_range_sum(lambda r: binomial(2, 1 + r), 2, -1) == -3
    assert signed_range_sum(lambda r: r, 1, 2) == 3


@given(st.integers(-8, 8), st.integers(-8, 8))
def test_signed_range_sum_reflection(lo, hi):
    f = lambda r: r * r + 3 * r + 1
    assert signed_range_sum(f, lo, hi) == -signed_range_sum(f, hi + 1, lo - 1)


def test_perfect_matchings_counts():
    # (2n-1)!! matchings of 2n points
    assert sum(1 for _ in perfect_matchings(2)) == 1
    assert sum(1 for _ in perfect_matchings(4)) == 3
    assert sum(1 for _ in perfect_matchings(6)) == 15
    with pytest.raises(ValueError):
        list(perfect_matchings(3))


def test_matching_crossings():
    assert matching_crossings(((0, 1), (2, 3))) == 0
    assert matching_crossings(((0, 2), (1, 3))) == 1
    assert matching_sign(((0, 2), (1, 3))) == -1
    assert matching_sign(((0, 3), (1, 2))) == 1


def _skew(rows):
    return LabeledMatrix.from_rows(rows)


def test_pfaffian_2x2():
    assert pfaffian_by_matchings(_skew([[0, 5], [-5, 0]])) == 5
    assert pfaffian_elimination(_skew([[0, 5], [-5, 0]])) == 5


def test_pfaffian_4x4_three_matchings():
    a = _skew([[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]])
    assert pfaffian_by_matchings(a) == 1 * 6 - 2 * 5 + 3 * 4
    assert pfaffian_elimination(a) == 8


def test_pfaffian_rejects_bad_input():
    odd = _skew([[0]])
    with pytest.raises(ValueError):
        pfaffian_by_matchings(odd)
    with pytest.raises(ValueError):
        pfaffian_elimination(odd)
    not_skew = _skew([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        pfaffian_by_matchings(not_skew)


def _random_skew(rng, n, lo=-9, hi=9):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(lo, hi)
            rows[i][j] = v
            rows[j][i] = -v
    return _skew(rows)


def test_pfaffian_elimination_matches_matchings():
    rng = random.Random(11)
    for n in (2, 4, 6, 8):
        for _ in range(25):
            a = _random_skew(rng, n)
            assert pfaffian_elimination(a) == pfaffian_by_matchings(a)


def test_pfaffian_squared_is_determinant():
    rng = random.Random(13)
    for n in (2, 4, 6, 8):
        for _ in range(25):
            a = _random_skew(rng, n)
            assert pfaffian_elimination(a) ** 2 == determinant(a)


def test_pfaffian_zero_matrix():
    assert pfaffian_elimination(_skew([[0] * 4 for _ in range(4)])) == 0


def test_determinant_values():
    eye3 = _skew([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert determinant(eye3) == 1
    assert determinant(_skew([[2, 3], [4, 5]])) == -2
    with pytest.raises(ValueError):
        determinant(LabeledMatrix.from_rows([[1, 2]]))


def test_determinant_matches_cofactor():
    rng = random.Random(17)
    for n in range(1, 6):
        for _ in range(30):
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert determinant(LabeledMatrix.from_rows(rows)) == det_cofactor(rows)


@given(st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_determinant_transpose_invariant(n, seed):
    rng = random.Random(seed)
    rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
    transpose = [[rows[j][i] for j in range(n)] for i in range(n)]
    assert determinant(LabeledMatrix.from_rows(rows)) == determinant(
        LabeledMatrix.from_rows(transpose)
    )


def test_labeled_matrix_access():
    m = LabeledMatrix(["a", "b"], [0, "1+"], [[1, 2], [3, 4]])
    assert m.get("b", "1+") == 4
    sub = m.submatrix(["b"], [0])
    assert sub.rows == [[3]]
    assert not _skew([[0, 1], [1, 0]]).is_skew_symmetric()
    assert _skew([[0, 1], [-1, 0]]).is_skew_symmetric()


def test_labeled_matrix_rejects_duplicate_labels():
    with pytest.raises(ValueError):
        LabeledMatrix(["a", "a"], [0, 1], [[1, 2], [3, 4]])
