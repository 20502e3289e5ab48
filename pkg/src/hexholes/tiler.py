"""Ground-truth lozenge-tiling counts.

Two independent engines: exhaustive backtracking enumeration (the oracle,
capped) and a row-profile dynamic program that scales to desk-size regions.
Both honor free boundaries (half lozenges) and half-weight axis positions,
and both work on arbitrary-precision integers throughout.

A tile is a sorted tuple of one or two triangles: two for a lozenge, one
for a half lozenge protruding across a free edge.  A tiling is a frozenset
of tiles covering every triangle of the region exactly once.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .regions import (
    Region,
    RegionSpec,
    Triangle,
    build_region,
    left_half_free,
    lower_half_weighted,
    upper_half,
)

Tile = tuple[Triangle, ...]
Tiling = frozenset

DEFAULT_ENUM_CAP = 1_000_000
DEFAULT_TRIANGLE_CAP = 200
DEFAULT_DP_WIDTH_CAP = 64
DEFAULT_FILTER_LIMIT = 20_000


class EnumerationCapExceeded(RuntimeError):
    pass


class WidthCapExceeded(RuntimeError):
    pass


def enum_cap_default() -> int:
    return int(os.environ.get("HEXHOLES_ENUM_CAP", DEFAULT_ENUM_CAP))


def triangle_cap_default() -> int:
    return int(os.environ.get("HEXHOLES_TRIANGLE_CAP", DEFAULT_TRIANGLE_CAP))


def dp_width_cap_default() -> int:
    return int(os.environ.get("HEXHOLES_DP_WIDTH_CAP", DEFAULT_DP_WIDTH_CAP))


# ---------------------------------------------------------------------------
# exhaustive enumeration


def enumerate_tilings(
    region: Region,
    enum_cap: int | None = None,
    triangle_cap: int | None = None,
) -> Iterator[Tiling]:
    """Yield every tiling exactly once, in a deterministic order.

    Branches on the lexicographically least uncovered triangle; at each
    branch the options are tried in the fixed order horizontal pair,
    vertical pair, half lozenge.  Raises EnumerationCapExceeded when more
    than enum_cap tilings exist.
    """
    cap = enum_cap_default() if enum_cap is None else enum_cap
    tri_cap = triangle_cap_default() if triangle_cap is None else triangle_cap
    if len(region.triangles) > tri_cap:
        raise EnumerationCapExceeded(
            f"region has {len(region.triangles)} triangles, cap is {tri_cap}"
        )
    order = sorted(region.triangles)
    covered: set[Triangle] = set()
    tiles: list[Tile] = []
    emitted = 0

    def extend(idx: int) -> Iterator[Tiling]:
        nonlocal emitted
        while idx < len(order) and order[idx] in covered:
            idx += 1
        if idx == len(order):
            emitted += 1
            if emitted > cap:
                raise EnumerationCapExceeded(f"more than {cap} tilings")
            yield frozenset(tiles)
            return
        t = order[idx]
        i, p = t
        right = (i, p + 1)
        if right in region.triangles and right not in covered:
            covered.add(t)
            covered.add(right)
            tiles.append((t, right))
            yield from extend(idx + 1)
            tiles.pop()
            covered.discard(t)
            covered.discard(right)
        if region.is_up(t):
            v = region.vertical_partner(t)
            if v is not None and v in region.triangles and v not in covered:
                covered.add(t)
                covered.add(v)
                tiles.append((t, v))
                yield from extend(idx + 1)
                tiles.pop()
                covered.discard(t)
                covered.discard(v)
            if t in region.free:
                covered.add(t)
                tiles.append((t,))
                yield from extend(idx + 1)
                tiles.pop()
                covered.discard(t)

    yield from extend(0)


def count_via_enumeration(region: Region, enum_cap: int | None = None) -> int:
    return sum(1 for _ in enumerate_tilings(region, enum_cap=enum_cap))


def weighted2_via_enumeration(region: Region, enum_cap: int | None = None) -> int:
    """Sum over tilings of 2^(number of special positions not covered by
    their own axis lozenge); the integer form of the half-weight count."""
    total = 0
    for tiling in enumerate_tilings(region, enum_cap=enum_cap):
        weight = 1
        for s in region.special:
            axis_tile = tuple(sorted((s, region.vertical_partner(s))))
            if axis_tile not in tiling:
                weight *= 2
        total += weight
    return total


def map_tiling(tiling: Tiling, point_map: Callable[[Triangle], Triangle]) -> Tiling:
    return frozenset(tuple(sorted(point_map(t) for t in tile)) for tile in tiling)


# ---------------------------------------------------------------------------
# row-profile dynamic program


def _profile_dp(region: Region, use_free: bool, weighted: bool) -> int:
    """Sweep rows top to bottom; a state is the bitmask of positions in the
    next row already covered by vertical lozenges from the current row."""
    width_cap = dp_width_cap_default()
    rows = region.num_rows
    for i in range(rows):
        if region.row_len(i) > width_cap:
            raise WidthCapExceeded(f"row {i} wider than {width_cap}")
    states: dict[int, int] = {0: 1}
    for i in range(rows):
        width = region.row_len(i)
        nxt: dict[int, int] = defaultdict(int)
        for mask, wt in states.items():
            stack = [(0, mask, 0, wt)]
            while stack:
                p, cov, out, w = stack.pop()
                if p == width:
                    nxt[out] += w
                    continue
                t = (i, p)
                if t not in region.triangles or (cov >> p) & 1:
                    stack.append((p + 1, cov, out, w))
                    continue
                factor = 2 if weighted and t in region.special else 1
                right = (i, p + 1)
                if p + 1 < width and right in region.triangles and not (cov >> (p + 1)) & 1:
                    # a special slot is vacated whichever member the pair covers
                    rfactor = 2 if weighted and right in region.special else 1
                    stack.append((p + 1, cov | (1 << (p + 1)), out, w * factor * rfactor))
                if region.is_up(t):
                    v = region.vertical_partner(t)
                    if v is not None and v in region.triangles:
                        # the axis lozenge itself carries no factor
                        stack.append((p + 1, cov, out | (1 << v[1]), w))
                    if use_free and t in region.free:
                        stack.append((p + 1, cov, out, w * factor))
        states = dict(nxt)
        if not states:
            return 0
    return states.get(0, 0)


def count_profile_dp(region: Region) -> int:
    """Plain tiling count by the profile DP (free/special markers ignored)."""
    return _profile_dp(region, use_free=False, weighted=False)


def count_plain(region: Region) -> int:
    """Number of lozenge tilings (no half lozenges, no weights)."""
    return _profile_dp(region, use_free=False, weighted=False)


def count_free(region: Region) -> int:
    """Tilings with half lozenges allowed on the region's free edges."""
    return _profile_dp(region, use_free=True, weighted=False)


def count_weighted2(region: Region) -> int:
    """The integer 2^(#specials) * (half-weight count): every special axis
    position not covered by its horizontal lozenge contributes a factor 2."""
    return _profile_dp(region, use_free=False, weighted=True)


# ---------------------------------------------------------------------------
# symmetry classes


def count_hsym(
    region: Region,
    method: str = "auto",
    filter_limit: int = DEFAULT_FILTER_LIMIT,
) -> int:
    """Tilings fixed by reflect_h.

    method "filter" enumerates and filters (the definition; needs a small
    region); "half" counts tilings of the half region above the hole axis,
    which agrees with the definition because a symmetric tiling must place
    a horizontal lozenge on every surviving axis position.  "auto" filters
    when the plain count is small and falls back to "half".
    """
    if method == "auto":
        method = "filter" if count_plain(region) <= filter_limit else "half"
    if method == "filter":
        if not region.is_symmetric_h():
            raise ValueError("count_hsym needs a reflect_h-symmetric region")
        ref = region.reflect_h
        return sum(
            1
            for tiling in enumerate_tilings(region)
            if map_tiling(tiling, ref) == tiling
        )
    if method == "half":
        return count_plain(upper_half(region))
    raise ValueError(f"unknown method {method!r}")


def count_vsym(
    region: Region,
    method: str = "auto",
    filter_limit: int = DEFAULT_FILTER_LIMIT,
) -> int:
    """Tilings fixed by reflect_v; "half" counts the free-boundary half."""
    if method == "auto":
        method = "filter" if count_plain(region) <= filter_limit else "half"
    if method == "filter":
        if not region.is_symmetric_v():
            raise ValueError("count_vsym needs a reflect_v-symmetric region")
        ref = region.reflect_v
        return sum(
            1
            for tiling in enumerate_tilings(region)
            if map_tiling(tiling, ref) == tiling
        )
    if method == "half":
        return count_free(left_half_free(region))
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class CountReport:
    """All five counts of one region: plain, the two symmetry classes, the
    free-boundary half count, and the weighted lower-half integer."""

    plain: int
    hsym: int
    vsym: int
    free: int
    weighted2: int


def count_report(spec: RegionSpec) -> CountReport:
    region = build_region(spec)
    return CountReport(
        plain=count_plain(region),
        hsym=count_hsym(region),
        vsym=count_vsym(region),
        free=count_free(left_half_free(region)),
        weighted2=count_weighted2(lower_half_weighted(region)),
    )


# ---------------------------------------------------------------------------
# splitting along the perpendicular axis


def axis_cut_positions(region: Region) -> list[int]:
    """Row positions of the lozenge slots bisected by the perpendicular
    symmetry axis: present up-triangles in the row just above the equator."""
    cut_row = region.side - 1
    return sorted(
        p
        for (i, p) in region.triangles
        if i == cut_row and region.is_up((i, p)) and (cut_row + 1, p) in region.triangles
    )


def bisected_axis_tiles(region: Region, tiling: Tiling) -> int:
    """How many tiles of the tiling are lozenges bisected by the equator."""
    cut_row = region.side - 1
    return sum(
        1
        for tile in tiling
        if len(tile) == 2 and tile[0][0] == cut_row and tile[1][0] == cut_row + 1
    )


def left_piece(region: Region, chosen: tuple[int, ...]) -> Region:
    """The upper half of the region minus the chosen bisected lozenge slots
    (their upper triangles), as a plain sub-region."""
    cut_row = region.side - 1
    removed = {(cut_row, p) for p in chosen}
    cells = frozenset(
        t for t in region.triangles if t[0] < region.side and t not in removed
    )
    return Region(side=region.side, m=region.m, triangles=cells)


def split_by_axis(spec: RegionSpec) -> list[tuple[tuple[int, ...], int]]:
    """Per-subset counts for the split along the perpendicular axis.

    Every tiling bisects exactly spec.n lozenges on that axis; for each
    n-subset S of the available slots the two sides tile independently, so
    the plain count is the sum of the squared one-sided counts and the
    reflect_v-symmetric count is the plain sum.  Returns (S, count) pairs
    in lexicographic S order.  Only hole-free specs are supported.
    """
    if spec.holes:
        raise ValueError("split_by_axis supports hole-free specs only")
    region = build_region(spec)
    positions = axis_cut_positions(region)
    expected = 2 * spec.m + spec.n
    if len(positions) != expected:
        raise AssertionError(f"expected {expected} axis slots, found {len(positions)}")
    out = []
    for chosen in combinations(positions, spec.n):
        out.append((chosen, count_plain(left_piece(region, chosen))))
    return out
