import random

import pytest

from hexholes.intlinalg import (
    LabeledMatrix,
    determinant,
    pfaffian_by_matchings,
    pfaffian_elimination,
)
from hexholes.paths import diagonal_lgv_matrix, endline_skew_matrix
from hexholes.reduction import (
    StructureError,
    check_hypotheses,
    difference_transform,
    extract_reduced,
    fold_transform,
    random_structured,
    reduced_matrix_direct,
    verify_pfaffian_reduction,
)
from hexholes.regions import RegionSpec
from hexholes.verify import iter_specs

SEED = RegionSpec(2, 1, (1,))


def grid_specs():
    return iter_specs(range(1, 6), (1, 2), (0, 1, 2))


def test_spec_matrices_satisfy_hypotheses():
    for spec in grid_specs():
        ss = check_hypotheses(endline_skew_matrix(spec))
        assert ss.m == spec.m and ss.l == spec.l


def test_random_instances_satisfy_hypotheses():
    rng = random.Random(3)
    for _ in range(20):
        ss = random_structured(rng, rng.randint(1, 4), rng.randint(0, 2))
        check_hypotheses(ss.to_matrix())


def test_perturbed_matrix_is_rejected_with_named_rule():
    rng = random.Random(5)
    ss = random_structured(rng, 2, 1)
    mat = ss.to_matrix()
    rows = [row[:] for row in mat.rows]
    i = list(mat.row_labels).index(1)
    j = list(mat.col_labels).index("1-")
    rows[i][j] += 1
    broken = LabeledMatrix(mat.row_labels, mat.col_labels, rows)
    with pytest.raises(StructureError) as err:
        check_hypotheses(broken)
    assert any("1-" in v for v in err.value.violations)


def test_fold_preserves_pfaffian_and_zeroes_blocks():
    rng = random.Random(9)
    for _ in range(25):
        m = rng.randint(1, 4)
        l = rng.randint(0, 2)
        a = random_structured(rng, m, l).to_matrix()
        folded = fold_transform(a)
        assert pfaffian_elimination(folded) == pfaffian_elimination(a)
        for i in range(-m + 1, 1):
            for j in range(-m + 1, 1):
                assert folded.get(i, j) == 0
            for t in range(1, l + 1):
                assert folded.get(i, f"{t}-") == 0
                assert folded.get(i, f"{t}+") == a.get(i, f"{t}+")


def test_seed_reduced_block():
    b = extract_reduced(endline_skew_matrix(SEED))
    assert b.rows == [[10, 3], [3, 1]]
    assert determinant(b) == 1


def test_reduced_block_no_holes_is_band_sums():
    # l = 0: the reduced block is made of band sums alone
    spec = RegionSpec(3, 2)
    a = endline_skew_matrix(spec)
    ss = check_hypotheses(a)
    b = reduced_matrix_direct(ss)
    assert b.row_labels == (1, 2) and b.col_labels == (1, 2)
    assert b.get(1, 1) == ss.x(1)
    assert b.get(1, 2) == ss.x(2)
    assert b.get(2, 2) == ss.x(1) + ss.x(3)


def test_reduced_block_m1_l0():
    rng = random.Random(1)
    ss = random_structured(rng, 1, 0)
    b = reduced_matrix_direct(ss)
    assert b.rows == [[ss.x(1)]]
    cert = verify_pfaffian_reduction(ss.to_matrix())
    assert cert.passed and cert.pfaffian == ss.x(1)


def test_reduction_random_suite():
    rng = random.Random(7)
    for _ in range(200):
        m = rng.randint(1, 4)
        l = rng.randint(0, 2)
        cert = verify_pfaffian_reduction(random_structured(rng, m, l).to_matrix())
        assert cert.passed, (m, l, cert)


def test_reduction_zero_matrix():
    labels = [0, 1]
    zero = LabeledMatrix(labels, labels, [[0, 0], [0, 0]])
    cert = verify_pfaffian_reduction(zero)
    assert cert.passed and cert.pfaffian == 0 and cert.reduced_det == 0


def test_reduction_on_spec_matrices():
    for spec in grid_specs():
        cert = verify_pfaffian_reduction(endline_skew_matrix(spec))
        assert cert.passed, spec.text()


def test_difference_transform_identity_for_m1():
    a = endline_skew_matrix(SEED)
    b = extract_reduced(a)
    assert difference_transform(b).rows == b.rows


def test_difference_transform_lands_on_lgv_matrix():
    for spec in grid_specs():
        b = extract_reduced(endline_skew_matrix(spec))
        transformed = difference_transform(b)
        target = diagonal_lgv_matrix(spec)
        assert transformed.rows == target.rows, spec.text()


def test_difference_transform_preserves_determinant():
    rng = random.Random(21)
    for _ in range(20):
        ss = random_structured(rng, rng.randint(1, 3), rng.randint(0, 2))
        b = reduced_matrix_direct(ss)
        assert determinant(difference_transform(b)) == determinant(b)


def test_block_pfaffian_identity():
    # Pf [[0, D], [-D^t, E]] = (-1)^C(d,2) det(D) for any skew E
    rng = random.Random(31)
    for d in range(1, 5):
        for _ in range(20):
            dmat = [[rng.randint(-9, 9) for _ in range(d)] for _ in range(d)]
            emat = [[0] * d for _ in range(d)]
            for i in range(d):
                for j in range(i + 1, d):
                    v = rng.randint(-9, 9)
                    emat[i][j] = v
                    emat[j][i] = -v
            rows = []
            for i in range(d):
                rows.append([0] * d + dmat[i])
            for i in range(d):
                rows.append([-dmat[j][i] for j in range(d)] + emat[i])
            a = LabeledMatrix.from_rows(rows)
            sign = -1 if (d * (d - 1) // 2) % 2 else 1
            want = sign * determinant(LabeledMatrix.from_rows(dmat))
            assert pfaffian_by_matchings(a) == want
            assert pfaffian_elimination(a) == want
