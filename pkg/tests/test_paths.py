import pytest

from hexholes.intlinalg import determinant, pfaffian_elimination
from hexholes.paths import (
    brute_force_endline_families,
    brute_force_fixed_families,
    count_free_by_families,
    count_free_via_pfaffian,
    count_left_piece_via_det,
    count_weighted2_by_families,
    count_weighted2_via_det,
    cut_line_points,
    diagonal_end_points,
    diagonal_lgv_matrix,
    diagonal_start_points,
    endline_skew_matrix,
    endpoint_labels,
    free_endpoint_pfaffian_matrix,
    free_path_count,
    hole_sign,
    lgv_matrix,
    reflectable_gf,
    reflectable_gf_dp,
    start_point,
)
from hexholes.regions import RegionSpec, build_region, left_half_free, lower_half_weighted
from hexholes.tiler import axis_cut_positions, count_free, count_weighted2, split_by_axis
from hexholes.verify import iter_specs

SEED = RegionSpec(2, 1, (1,))


def test_free_path_count():
    assert free_path_count((0, 0), (2, 1)) == 3
    assert free_path_count((1, 0), (1, 0)) == 1
    assert free_path_count((2, 3), (1, 1)) == 0


def test_reflectable_gf_values():
    assert reflectable_gf(1, 0, 2, 1) == 3
    assert reflectable_gf(1, 0, 3, 0) == 1
    assert reflectable_gf(4, 2, 4, 2) == 1
    with pytest.raises(ValueError):
        reflectable_gf(1, 1, 3, 0)


def test_reflectable_gf_matches_dp():
    for c in range(7):
        for d in range(c):
            for a in range(c + 1):
                for b in range(a):
                    assert reflectable_gf(a, b, c, d) == reflectable_gf_dp(a, b, c, d)


def test_seed_skew_matrix_entries():
    mat = endline_skew_matrix(SEED)
    assert mat.get(0, 1) == 10
    assert mat.get(0, "1-") == 0
    assert mat.get(0, "1+") == 3
    assert mat.get(1, "1-") == -3
    assert mat.get(1, "1+") == 0
    assert mat.get("1-", "1+") == 1
    assert all(mat.get(lab, lab) == 0 for lab in mat.row_labels)


def test_hole_hole_zero_rules():
    spec = RegionSpec(6, 1, (1, 2))
    mat = endline_skew_matrix(spec)
    assert mat.get("1-", "2-") == 0
    assert mat.get("1+", "2+") == 0
    assert mat.get("1-", "2+") != 0


def test_seed_pfaffian_count():
    from hexholes.intlinalg import pfaffian_by_matchings

    assert pfaffian_by_matchings(endline_skew_matrix(SEED)) == 1
    assert count_free_via_pfaffian(SEED) == 1
    assert hole_sign(0) == hole_sign(1) == 1
    assert hole_sign(2) == -1
    assert hole_sign(3) == -1


def test_seed_lgv_matrix_and_det():
    mat = diagonal_lgv_matrix(SEED)
    assert mat.get(1, 1) == 10
    assert mat.get(1, "1+") == 3
    assert mat.get("1+", 1) == 3
    assert mat.get("1+", "1+") == 1
    assert count_weighted2_via_det(SEED) == 1


def test_lgv_entries_are_reflection_gfs():
    for spec in iter_specs(range(1, 5), (1, 2), (0, 1, 2)):
        closed = diagonal_lgv_matrix(spec)
        generic = lgv_matrix(
            diagonal_start_points(spec), diagonal_end_points(spec), weight="diagonal2"
        )
        assert closed.rows == generic.rows, spec.text()


def test_closed_skew_matrix_matches_double_sums():
    for spec in iter_specs(range(1, 5), (1, 2), (0, 1, 2)):
        closed = endline_skew_matrix(spec)
        starts = [start_point(spec, lab) for lab in endpoint_labels(spec)]
        generic = free_endpoint_pfaffian_matrix(starts, cut_line_points(spec))
        assert closed.rows == generic.rows, spec.text()


def test_widening_the_cut_line_changes_nothing():
    spec = RegionSpec(3, 2, (1,))
    starts = [start_point(spec, lab) for lab in endpoint_labels(spec)]
    narrow = free_endpoint_pfaffian_matrix(starts, cut_line_points(spec))
    n, m = spec.n, spec.m
    wide = [(j, n + 1 - j) for j in range(-m - 4, n + m + 5)]
    widened = free_endpoint_pfaffian_matrix(starts, wide)
    assert narrow.rows == widened.rows


def test_pfaffian_route_matches_tiler():
    for spec in iter_specs(range(1, 5), (1, 2), (0, 1, 2)):
        region = build_region(spec)
        assert count_free_via_pfaffian(spec) == count_free(left_half_free(region))
        assert count_weighted2_via_det(spec) == count_weighted2(
            lower_half_weighted(region)
        )


def test_two_start_pfaffian_is_a_path_count():
    # second start already on the cut line: its path is forced empty and the
    # Pfaffian reduces to the number of two-step paths avoiding that vertex
    starts = [(0, 1), (2, 1)]
    ipoints = [(0, 3), (1, 2), (2, 1), (3, 0)]
    q = free_endpoint_pfaffian_matrix(starts, ipoints)
    families = brute_force_endline_families(starts, ipoints)
    assert pfaffian_elimination(q) == 3
    assert families.total == 3
    assert families.signed_total == 3
    assert families.signs == {1}


def test_single_path_family_is_free_count():
    assert brute_force_fixed_families([(0, 0)], [(2, 1)]) == free_path_count(
        (0, 0), (2, 1)
    )


def test_crossing_forced_family_is_zero():
    assert brute_force_fixed_families([(0, 0), (1, 0)], [(1, 1), (0, 1)]) == 0


def test_brute_force_families_match_formulas():
    for spec in [RegionSpec(2, 1, (1,)), RegionSpec(3, 1, (1,)), RegionSpec(2, 2)]:
        fam = count_free_by_families(spec)
        assert fam.total == count_free_via_pfaffian(spec), spec.text()
        assert fam.signs <= {hole_sign(spec.l)}
        assert count_weighted2_by_families(spec) == count_weighted2_via_det(spec)


def test_left_piece_determinants_match_tiler():
    for spec in [RegionSpec(2, 1, (), 0), RegionSpec(2, 1, (), 1), RegionSpec(2, 1, (), 2)]:
        region = build_region(spec)
        positions = axis_cut_positions(region)
        rank_of = {p: r for r, p in enumerate(positions)}
        for chosen, cnt in split_by_axis(spec):
            ranks = tuple(rank_of[p] for p in chosen)
            assert count_left_piece_via_det(spec, ranks) == cnt


def test_left_piece_unreachable_endpoint_gives_zero_det():
    # dropping the far-end slots forces an unreachable assignment
    spec = RegionSpec(2, 1, (), 1)
    table = dict(split_by_axis(spec))
    region = build_region(spec)
    positions = axis_cut_positions(region)
    rank_of = {p: r for r, p in enumerate(positions)}
    zero_sets = [
        tuple(rank_of[p] for p in chosen) for chosen, cnt in table.items() if cnt == 0
    ]
    for ranks in zero_sets:
        assert count_left_piece_via_det(spec, ranks) == 0
