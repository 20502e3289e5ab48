"""Non-intersecting lattice paths behind the two half-region counts.

Tilings of the free-boundary half translate to families of monotone lattice
paths that may end anywhere on a cut line; the classical Pfaffian formula
of Okada and Stembridge turns that count into the Pfaffian of a skew matrix
with binomial-sum entries.  Tilings of the weighted lower half translate to
diagonal-confined families with a weight 2 per diagonal touch, which the
Lindstrom-Gessel-Viennot (LGV) lemma turns into a determinant.  This module
builds both matrices in closed form, builds the generic double-sum and LGV
matrices they specialize, and brute-forces small path families as an
independent oracle.

Conventions: points are (x, y) on the integer lattice, steps go right or
up.  A start on the cut line x + y = n + 1 admits only the empty path,
since steps strictly increase x + y.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .intlinalg import (
    LabeledMatrix,
    binomial,
    minus_label,
    pfaffian_elimination,
    plus_label,
    signed_range_sum,
    determinant,
)
from .regions import RegionSpec

Point = tuple[int, int]

DEFAULT_FAMILY_CAP = 100_000


class FamilyCapExceeded(RuntimeError):
    pass


def hole_sign(l: int) -> int:
    """The overall sign (-1)^C(l,2) carried by the Pfaffian count."""
    return -1 if (l * (l - 1) // 2) % 2 else 1


# ---------------------------------------------------------------------------
# single-path counts


def free_path_count(a: Point, b: Point) -> int:
    """Monotone lattice paths from a to b; 0 when b is not weakly north-east."""
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    if dx < 0 or dy < 0:
        return 0
    return binomial(dx + dy, dx)


def reflectable_gf(a: int, b: int, c: int, d: int) -> int:
    """Closed form for the diagonal-touch generating function.

    Counts monotone paths (a,b) -> (c,d) that never cross above x = y,
    weighting each by 2^(number of diagonal touches).  Reflecting path
    segments at the touches identifies this with the number of *all* paths
    to (c,d) plus all paths to (d,c), whence the two binomials.
    """
    if a <= b or c <= d:
        raise ValueError("reflectable_gf needs strictly sub-diagonal endpoints")
    total = c + d - a - b
    if total < 0:
        return 0
    return binomial(total, c - a) + binomial(total, d - a)


def reflectable_gf_dp(a: int, b: int, c: int, d: int) -> int:
    """Oracle for reflectable_gf: direct weighted DP over the sub-diagonal
    lattice, factor 2 at every vertex with x == y."""
    if a <= b or c <= d:
        raise ValueError("reflectable_gf_dp needs strictly sub-diagonal endpoints")
    if c < a or d < b:
        return 0
    table: dict[Point, int] = {(a, b): 1}
    for x in range(a, c + 1):
        for y in range(b, d + 1):
            if y > x:
                continue
            if (x, y) == (a, b):
                continue
            arrived = table.get((x - 1, y), 0) if x - 1 >= a else 0
            arrived += table.get((x, y - 1), 0) if y - 1 >= b else 0
            if arrived:
                table[(x, y)] = arrived * (2 if x == y else 1)
    return table.get((c, d), 0)


# ---------------------------------------------------------------------------
# generic matrices


def free_endpoint_pfaffian_matrix(
    starts: Sequence[Point], ipoints: Sequence[Point]
) -> LabeledMatrix:
    """Skew matrix Q of the free-endpoint family count: entry (i, j) is
    sum_{u<v} [P(s_i -> I_u) P(s_j -> I_v) - P(s_j -> I_u) P(s_i -> I_v)]
    over the ordered endpoint list.  Pf(Q) is the signed family count."""
    counts = [[free_path_count(s, e) for e in ipoints] for s in starts]
    ni = len(ipoints)

    def entry(i: int, j: int) -> int:
        total = 0
        for u in range(ni):
            cu_i = counts[i][u]
            cu_j = counts[j][u]
            for v in range(u + 1, ni):
                total += cu_i * counts[j][v] - cu_j * counts[i][v]
        return total

    labels = list(range(len(starts)))
    return LabeledMatrix.build(labels, labels, entry)


def lgv_matrix(
    starts: Sequence[Point], ends: Sequence[Point], weight: str = "free"
) -> LabeledMatrix:
    """LGV matrix: entry (i, j) is the path generating function from
    starts[j] to ends[i].  weight "free" counts all monotone paths;
    "diagonal2" confines paths below x = y with factor 2 per touch."""
    if weight == "free":
        gf = free_path_count
    elif weight == "diagonal2":
        gf = lambda a, b: reflectable_gf(a[0], a[1], b[0], b[1])
    else:
        raise ValueError(f"unknown weight rule {weight!r}")
    rows = [[gf(s, e) for s in starts] for e in ends]
    return LabeledMatrix(list(range(len(ends))), list(range(len(starts))), rows)


# ---------------------------------------------------------------------------
# the two closed-form matrices of a spec


def endpoint_labels(spec: RegionSpec) -> list:
    m, l = spec.m, spec.l
    return (
        list(range(-m + 1, m + 1))
        + [minus_label(t) for t in range(1, l + 1)]
        + [plus_label(t) for t in range(1, l + 1)]
    )


def start_point(spec: RegionSpec, label) -> Point:
    """Start point of the path attached to a row label: (s, 1-s) for the
    integer labels, (k_t, k_t+1) / (k_t+1, k_t) for the hole labels."""
    if isinstance(label, int):
        return (label, 1 - label)
    t = int(label[:-1])
    k = spec.holes[t - 1]
    if label.endswith("-"):
        return (k, k + 1)
    return (k + 1, k)


def cut_line_points(spec: RegionSpec) -> list[Point]:
    """The ordered endpoint truncation (j, n+1-j), j = -m+1 .. n+m; widening
    it only adds unreachable points and changes nothing."""
    n, m = spec.n, spec.m
    return [(j, n + 1 - j) for j in range(-m + 1, n + m + 1)]


def endline_skew_matrix(spec: RegionSpec) -> LabeledMatrix:
    """Closed form of the free-endpoint skew matrix for a spec.

    Entries are signed binomial sums (read with signed_range_sum); the
    signed Pfaffian equals the free-boundary half-region count.  Agrees
    entrywise with free_endpoint_pfaffian_matrix on the truncated cut line.
    """
    if spec.central_x:
        raise ValueError("endline_skew_matrix needs a rhombus-free spec")
    n, m, ks = spec.n, spec.m, spec.holes
    labels = endpoint_labels(spec)

    def upper(i, j) -> int:
        i_int = isinstance(i, int)
        j_int = isinstance(j, int)
        if i_int and j_int:
            return signed_range_sum(lambda r: binomial(2 * n, n + r), i - j + 1, j - i)
        if i_int:
            t = int(j[:-1])
            k = ks[t - 1]
            if j.endswith("-"):
                return signed_range_sum(
                    lambda r: binomial(2 * n - 2 * k, n - k + r), i + 1, -i
                )
            return signed_range_sum(
                lambda r: binomial(2 * n - 2 * k, n - k + r), i, -i + 1
            )
        # both hole labels
        t = int(i[:-1])
        s = int(j[:-1])
        kt, kst = ks[t - 1], ks[s - 1]
        if i.endswith("-") and j.endswith("+"):
            base = 2 * n - 2 * kt - 2 * kst
            top = n - kt - kst
            return binomial(base, top) + binomial(base, top + 1)
        return 0

    index = {lab: pos for pos, lab in enumerate(labels)}

    def entry(i, j) -> int:
        if index[i] < index[j]:
            return upper(i, j)
        if index[i] > index[j]:
            return -upper(j, i)
        return 0

    mat = LabeledMatrix.build(labels, labels, entry)
    bad = mat.skew_violations()
    if bad:
        raise AssertionError(f"closed-form skew matrix broke skew-symmetry: {bad[0]}")
    return mat


def count_free_via_pfaffian(spec: RegionSpec) -> int:
    """The free-boundary half count as (-1)^C(l,2) Pf of the closed form."""
    return hole_sign(spec.l) * pfaffian_elimination(endline_skew_matrix(spec))


def diagonal_start_points(spec: RegionSpec) -> list[Point]:
    n, m, ks = spec.n, spec.m, spec.holes
    return [(s, 1 - s) for s in range(1, m + 1)] + [(k + 1, k) for k in ks]


def diagonal_end_points(spec: RegionSpec) -> list[Point]:
    n, m, ks = spec.n, spec.m, spec.holes
    return [(n + s, n - s + 1) for s in range(1, m + 1)] + [
        (n - k + 1, n - k) for k in ks
    ]


def diagonal_lgv_matrix(spec: RegionSpec) -> LabeledMatrix:
    """Closed form of the diagonal-confined LGV matrix for a spec; its
    determinant is the weighted lower-half integer count."""
    if spec.central_x:
        raise ValueError("diagonal_lgv_matrix needs a rhombus-free spec")
    n, m, ks = spec.n, spec.m, spec.holes
    labels = list(range(1, m + 1)) + [plus_label(t) for t in range(1, spec.l + 1)]

    def entry(i, j) -> int:
        i_int = isinstance(i, int)
        j_int = isinstance(j, int)
        if i_int and j_int:
            return binomial(2 * n, n + j - i) + binomial(2 * n, n - i - j + 1)
        if i_int or j_int:
            pos = i if i_int else j
            k = ks[int((j if i_int else i)[:-1]) - 1]
            base = 2 * n - 2 * k
            return binomial(base, n - k - pos + 1) + binomial(base, n - k - pos)
        kt = ks[int(i[:-1]) - 1]
        kst = ks[int(j[:-1]) - 1]
        base = 2 * n - 2 * kt - 2 * kst
        top = n - kt - kst
        return binomial(base, top) + binomial(base, top - 1)

    return LabeledMatrix.build(labels, labels, entry)


def count_weighted2_via_det(spec: RegionSpec) -> int:
    return determinant(diagonal_lgv_matrix(spec))


# ---------------------------------------------------------------------------
# brute-force family oracles


def _monotone_paths(a: Point, b: Point, diagonal: bool) -> Iterator[tuple[Point, ...]]:
    if b[0] < a[0] or b[1] < a[1]:
        return
    if diagonal and (a[0] < a[1] or b[0] < b[1]):
        return

    def rec(prefix: list[Point]) -> Iterator[tuple[Point, ...]]:
        x, y = prefix[-1]
        if (x, y) == b:
            yield tuple(prefix)
            return
        if x < b[0]:
            prefix.append((x + 1, y))
            yield from rec(prefix)
            prefix.pop()
        if y < b[1] and (not diagonal or y + 1 <= x):
            prefix.append((x, y + 1))
            yield from rec(prefix)
            prefix.pop()

    yield from rec([a])


def _path_weight(path: tuple[Point, ...], diagonal: bool) -> int:
    if not diagonal:
        return 1
    touches = sum(1 for (x, y) in path if x == y)
    return 2**touches


@dataclass(frozen=True)
class EndlineFamilies:
    """Brute-force tally of vertex-disjoint families with endpoints chosen
    from an ordered set: the raw count, the sign-weighted count, and the
    set of assignment-permutation signs that occurred."""

    total: int
    signed_total: int
    signs: frozenset[int]


def brute_force_endline_families(
    starts: Sequence[Point],
    ipoints: Sequence[Point],
    cap: int = DEFAULT_FAMILY_CAP,
) -> EndlineFamilies:
    """Enumerate non-intersecting families where each path runs from its
    start to some point of the ordered endpoint list.

    The permutation sign of a family orders the endpoints by their index
    and reads off the induced arrangement of start indices; the signed
    total equals the Pfaffian of free_endpoint_pfaffian_matrix.
    """
    ipoint_index = {pt: u for u, pt in enumerate(ipoints)}
    candidates: list[list[tuple[int, tuple[Point, ...]]]] = []
    combos = 1
    for s in starts:
        opts = []
        for u, e in enumerate(ipoints):
            for path in _monotone_paths(s, e, diagonal=False):
                opts.append((u, path))
        candidates.append(opts)
        combos *= max(len(opts), 1)
        if combos > cap:
            raise FamilyCapExceeded(f"more than {cap} candidate families")
        if not opts:
            return EndlineFamilies(0, 0, frozenset())

    total = 0
    signed_total = 0
    signs: set[int] = set()
    used: set[Point] = set()
    chosen_ends: list[int] = []

    def rec(idx: int) -> None:
        nonlocal total, signed_total
        if idx == len(starts):
            order = sorted(range(len(starts)), key=lambda i: chosen_ends[i])
            inversions = sum(
                1
                for a, b in combinations(range(len(order)), 2)
                if order[a] > order[b]
            )
            sign = -1 if inversions % 2 else 1
            signs.add(sign)
            total += 1
            signed_total += sign
            return
        for u, path in candidates[idx]:
            if u in (chosen_ends[i] for i in range(idx)):
                continue
            if any(v in used for v in path):
                continue
            used.update(path)
            chosen_ends.append(u)
            rec(idx + 1)
            chosen_ends.pop()
            used.difference_update(path)

    rec(0)
    return EndlineFamilies(total, signed_total, frozenset(signs))


def brute_force_fixed_families(
    starts: Sequence[Point],
    ends: Sequence[Point],
    diagonal: bool = False,
    cap: int = DEFAULT_FAMILY_CAP,
) -> int:
    """Weighted count of non-intersecting families with path i running from
    starts[i] to ends[i] (the LGV setting)."""
    candidates = []
    combos = 1
    for s, e in zip(starts, ends, strict=True):
        opts = list(_monotone_paths(s, e, diagonal))
        combos *= max(len(opts), 1)
        if combos > cap:
            raise FamilyCapExceeded(f"more than {cap} candidate families")
        if not opts:
            return 0
        candidates.append(opts)

    total = 0
    used: set[Point] = set()

    def rec(idx: int, weight: int) -> None:
        nonlocal total
        if idx == len(candidates):
            total += weight
            return
        for path in candidates[idx]:
            if any(v in used for v in path):
                continue
            used.update(path)
            rec(idx + 1, weight * _path_weight(path, diagonal))
            used.difference_update(path)

    rec(0, 1)
    return total


def count_free_by_families(spec: RegionSpec, cap: int = DEFAULT_FAMILY_CAP) -> EndlineFamilies:
    """Brute-force the free-boundary half count through its path families."""
    starts = [start_point(spec, lab) for lab in endpoint_labels(spec)]
    return brute_force_endline_families(starts, cut_line_points(spec), cap=cap)


def count_weighted2_by_families(spec: RegionSpec, cap: int = DEFAULT_FAMILY_CAP) -> int:
    return brute_force_fixed_families(
        diagonal_start_points(spec),
        diagonal_end_points(spec),
        diagonal=True,
        cap=cap,
    )


# ---------------------------------------------------------------------------
# the split along the perpendicular axis, as determinants


def axis_split_endpoint_indices(spec: RegionSpec) -> list[int]:
    """Endpoint indices available to the split paths: 1..m+n/2 on one side
    of the central gap of width x, then m+n/2+x+1..2m+n+x on the other."""
    if spec.n % 2:
        raise ValueError("the axis split needs even n")
    n, m, x = spec.n, spec.m, spec.central_x
    half = m + n // 2
    return list(range(1, half + 1)) + list(range(half + x + 1, 2 * m + n + x + 1))


def left_piece_matrix(spec: RegionSpec, chosen_ranks: Sequence[int]) -> LabeledMatrix:
    """LGV matrix whose determinant counts tilings of the left piece when
    the bisected slots at the given ranks (0-based along the axis) carry
    the forced lozenges of the set S.

    The 2m paths start on the short side and end at the unchosen slots;
    every entry is the single binomial C(n+x, j-i)."""
    if spec.holes:
        raise ValueError("left_piece_matrix supports hole-free specs only")
    indices = axis_split_endpoint_indices(spec)
    chosen = set(chosen_ranks)
    if len(chosen) != spec.n or not all(0 <= r < len(indices) for r in chosen):
        raise ValueError(f"need {spec.n} distinct ranks below {len(indices)}")
    ends = [indices[r] for r in range(len(indices)) if r not in chosen]
    total = spec.n + spec.central_x
    starts = list(range(1, 2 * spec.m + 1))
    rows = [[binomial(total, j - i) for i in starts] for j in ends]
    return LabeledMatrix(ends, starts, rows)


def count_left_piece_via_det(spec: RegionSpec, chosen_ranks: Sequence[int]) -> int:
    return determinant(left_piece_matrix(spec, chosen_ranks))
