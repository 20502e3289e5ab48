"""Hexagonal lattice regions with symmetric triangular holes.

A hexagon with four sides of length n and two opposite sides of length 2m
is stored rotated a quarter turn, as 2n rows of up/down unit triangles:
row i (0-based, top to bottom) holds 4m + 2*min(i, 2n-1-i) + 1 triangles,
indexed by position within the row.  In the upper n rows even positions
point up; in the lower n rows even positions point down.  Rows are
centered, so the two reflection symmetries of the hexagon become

  * reflect_h: position reversal within each row (the symmetry across the
    axis that carries the holes; "horizontal" in the standard drawing), and
  * reflect_v: row reversal i -> 2n-1-i (the perpendicular symmetry).

The hole axis runs down the middle of the rows.  Its j-th lozenge position
(j = 1..n) is the vertical pair {up triangle at the center of row 2j-2,
down triangle at the center of row 2j-1}.

Holes come in mirror pairs: for a hole index k, a side-2 triangle pointing
toward the top of the frame is removed with its apex at the center of row
2k-2 (unit cells in rows 2k-2 and 2k-1, consuming axis position k),
together with its reflect_v image.  With k <= n/2 the two never overlap;
consecutive indices touch corner-to-edge, and k = n/2 makes the pair meet
at the equator in a rhombus.  A central rhombus hole of side x is the
analogous pair of side-x triangles meeting at the equator.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

Triangle = tuple[int, int]


@dataclass(frozen=True)
class RegionSpec:
    """Parameters naming a holey hexagon.

    n, m: the hexagon has four sides n + central_x and two sides 2m.
    holes: strictly increasing hole indices k with 0 < k <= n/2.
    central_x: side of the central rhombus hole (0 = none; requires n even).
    """

    n: int
    m: int
    holes: tuple[int, ...] = ()
    central_x: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "holes", tuple(self.holes))
        if self.n < 1 or self.m < 1:
            raise ValueError(f"n and m must be positive, got n={self.n} m={self.m}")
        ks = self.holes
        if any(k < 1 for k in ks):
            raise ValueError(f"hole indices must be positive: {ks}")
        if list(ks) != sorted(set(ks)):
            raise ValueError(f"hole indices must be strictly increasing: {ks}")
        if ks and 2 * ks[-1] > self.n:
            raise ValueError(f"hole index {ks[-1]} exceeds n/2 = {self.n}/2")
        if self.central_x < 0:
            raise ValueError(f"central rhombus side must be >= 0, got {self.central_x}")
        if self.central_x > 0 and self.n % 2:
            raise ValueError("a central rhombus needs even n")
        # hole k spans (k-1, k) on the axis and the rhombus spans
        # (n/2, n/2 + x), so k <= n/2 already rules out any overlap

    @property
    def l(self) -> int:
        return len(self.holes)

    @property
    def frame_side(self) -> int:
        """Side of the outer hexagon actually built (n + central_x)."""
        return self.n + self.central_x

    def text(self) -> str:
        parts = [f"n={self.n}", f"m={self.m}"]
        if self.holes:
            parts.append("k=" + ",".join(str(k) for k in self.holes))
        if self.central_x:
            parts.append(f"x={self.central_x}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "RegionSpec":
        """Parse the 'n=15 m=5 k=2,5,7 x=0' key=value form (k, x optional)."""
        fields: dict[str, str] = {}
        for token in text.split():
            if "=" not in token:
                raise ValueError(f"expected key=value, got {token!r}")
            key, _, value = token.partition("=")
            if key in fields:
                raise ValueError(f"duplicate key {key!r}")
            fields[key] = value
        unknown = set(fields) - {"n", "m", "k", "x"}
        if unknown:
            raise ValueError(f"unknown keys {sorted(unknown)}")
        if "n" not in fields or "m" not in fields:
            raise ValueError("both n= and m= are required")
        holes: tuple[int, ...] = ()
        if fields.get("k"):
            holes = tuple(int(part) for part in fields["k"].split(","))
        return cls(
            n=int(fields["n"]),
            m=int(fields["m"]),
            holes=holes,
            central_x=int(fields.get("x", "0")),
        )


@dataclass(frozen=True)
class Region:
    """A set of unit triangles inside a hexagonal frame.

    side/m fix the frame (2*side rows); `triangles` is the present subset.
    `free` marks up-triangles whose lower edge lies on a free boundary
    (coverable by a half lozenge); `special` marks the up-triangle of each
    half-weight axis position (a tiling picks up a factor 2 whenever such a
    position is not covered by its axis lozenge).
    """

    side: int
    m: int
    triangles: frozenset[Triangle]
    free: frozenset[Triangle] = field(default=frozenset())
    special: frozenset[Triangle] = field(default=frozenset())

    # -- frame geometry ------------------------------------------------------

    @property
    def num_rows(self) -> int:
        return 2 * self.side

    def row_len(self, i: int) -> int:
        if not 0 <= i < self.num_rows:
            raise IndexError(f"row {i} outside frame of {self.num_rows} rows")
        return 4 * self.m + 2 * min(i, self.num_rows - 1 - i) + 1

    def center(self, i: int) -> int:
        return self.row_len(i) // 2

    def is_up(self, t: Triangle) -> bool:
        i, p = t
        if i < self.side:
            return p % 2 == 0
        return p % 2 == 1

    def in_frame(self, t: Triangle) -> bool:
        i, p = t
        return 0 <= i < self.num_rows and 0 <= p < self.row_len(i)

    # -- reflections -----------------------------------------------------------

    def reflect_h(self, t: Triangle) -> Triangle:
        i, p = t
        return (i, self.row_len(i) - 1 - p)

    def reflect_v(self, t: Triangle) -> Triangle:
        i, p = t
        return (self.num_rows - 1 - i, p)

    def is_symmetric_h(self) -> bool:
        ref = self.reflect_h
        return (
            {ref(t) for t in self.triangles} == set(self.triangles)
            and {ref(t) for t in self.free} == set(self.free)
            and {ref(t) for t in self.special} == set(self.special)
        )

    def is_symmetric_v(self) -> bool:
        ref = self.reflect_v
        return (
            {ref(t) for t in self.triangles} == set(self.triangles)
            and {ref(t) for t in self.free} == set(self.free)
            and {ref(t) for t in self.special} == set(self.special)
        )

    # -- adjacency -------------------------------------------------------------

    def vertical_partner(self, t: Triangle) -> Triangle | None:
        """The triangle sharing t's horizontal edge (next row down for an
        up-triangle, next row up for a down-triangle), or None at the frame
        boundary."""
        i, p = t
        j = i + 1 if self.is_up(t) else i - 1
        if not 0 <= j < self.num_rows:
            return None
        q = p + (self.row_len(j) - self.row_len(i)) // 2
        if not 0 <= q < self.row_len(j):
            return None
        return (j, q)

    def neighbors(self, t: Triangle) -> list[Triangle]:
        """Present triangles sharing an edge with t."""
        i, p = t
        out = [n for n in ((i, p - 1), (i, p + 1)) if n in self.triangles]
        v = self.vertical_partner(t)
        if v is not None and v in self.triangles:
            out.append(v)
        return out

    # -- axis structure ----------------------------------------------------------

    def axis_positions(self) -> list[tuple[Triangle, Triangle]]:
        """Surviving lozenge positions on the hole axis, as (up, down) pairs."""
        out = []
        for j in range(1, self.side + 1):
            up = (2 * j - 2, self.center(2 * j - 2))
            down = (2 * j - 1, self.center(2 * j - 1))
            if up in self.triangles and down in self.triangles:
                out.append((up, down))
            elif (up in self.triangles) != (down in self.triangles):
                raise AssertionError(f"half-removed axis position {j}")
        return out

    def balance(self) -> tuple[int, int]:
        ups = sum(1 for t in self.triangles if self.is_up(t))
        return ups, len(self.triangles) - ups


# ---------------------------------------------------------------------------
# builders


def build_hexagon(n: int, m: int) -> Region:
    """The full hexagon with sides n, 2m, n, n, 2m, n (2n^2 + 8mn triangles)."""
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got n={n} m={m}")
    probe = Region(side=n, m=m, triangles=frozenset())
    cells = frozenset(
        (i, p) for i in range(2 * n) for p in range(probe.row_len(i))
    )
    return Region(side=n, m=m, triangles=cells)


def axis_up_triangle_cells(region: Region, apex_row: int, side: int) -> set[Triangle]:
    """Cells of an up-pointing lattice triangle of the given side, centered on
    the hole axis with its apex at the center of apex_row."""
    cells: set[Triangle] = set()
    for j in range(side):
        i = apex_row + j
        if not 0 <= i < region.num_rows:
            raise ValueError(f"triangle row {i} leaves the frame")
        c = region.center(i)
        for d in range(-j, j + 1):
            cells.add((i, c + d))
    return cells


def _remove_cells(region: Region, cells: set[Triangle], what: str) -> Region:
    missing = cells - set(region.triangles)
    if missing:
        raise ValueError(f"{what} is not inside the region: {sorted(missing)[:4]}")
    return replace(region, triangles=region.triangles - cells)


def punch_symmetric_triangle_pair(region: Region, apex_row: int, side: int) -> Region:
    """Remove an up-pointing axis triangle plus its reflect_v mirror image."""
    up_cells = axis_up_triangle_cells(region, apex_row, side)
    mirror = {region.reflect_v(t) for t in up_cells}
    if not up_cells.isdisjoint(mirror):
        raise ValueError("triangle pair overlaps its own mirror image")
    return _remove_cells(region, up_cells | mirror, f"triangle pair at row {apex_row}")


def punch_holes(region: Region, holes: Iterable[int]) -> Region:
    """Punch the mirror pair of side-2 triangular holes for each hole index."""
    taken: set[Triangle] = set()
    for k in sorted(holes):
        up_cells = axis_up_triangle_cells(region, 2 * k - 2, 2)
        mirror = {region.reflect_v(t) for t in up_cells}
        pair = up_cells | mirror
        if not up_cells.isdisjoint(mirror):
            raise ValueError(f"hole k={k} overlaps its own mirror image")
        if pair & taken:
            raise ValueError(f"hole k={k} overlaps another hole")
        taken |= pair
    return _remove_cells(region, taken, "hole set")


def punch_central_rhombus(spec: RegionSpec) -> Region:
    """The spec's region when a central rhombus is present: holes are punched
    in the enlarged hexagon of side n + x, then the side-x rhombus (a pair of
    axis triangles meeting at the equator) is removed from the center."""
    if spec.central_x > 0 and spec.n % 2:
        raise ValueError("a central rhombus needs even n")
    region = build_hexagon(spec.frame_side, spec.m)
    if spec.holes:
        region = punch_holes(region, spec.holes)
    if spec.central_x:
        region = punch_symmetric_triangle_pair(region, spec.n, spec.central_x)
    return region


def build_region(spec: RegionSpec) -> Region:
    """Region for a spec: punched hexagon, with optional central rhombus."""
    if spec.central_x:
        return punch_central_rhombus(spec)
    region = build_hexagon(spec.n, spec.m)
    if spec.holes:
        region = punch_holes(region, spec.holes)
    return region


# ---------------------------------------------------------------------------
# symmetric halves


def upper_half(region: Region) -> Region:
    """Everything strictly on one side of the hole axis; the axis lozenge
    positions themselves are excluded.  Requires reflect_h symmetry."""
    if not region.is_symmetric_h():
        raise ValueError("upper_half needs a reflect_h-symmetric region")
    cells = frozenset(t for t in region.triangles if t[1] > region.center(t[0]))
    return Region(side=region.side, m=region.m, triangles=cells)


def lower_half_weighted(region: Region) -> Region:
    """The complementary half including the axis lozenge positions, whose
    up-triangles are marked as half-weight specials."""
    if not region.is_symmetric_h():
        raise ValueError("lower_half_weighted needs a reflect_h-symmetric region")
    cells = frozenset(t for t in region.triangles if t[1] <= region.center(t[0]))
    specials = frozenset(up for up, _down in region.axis_positions())
    return Region(side=region.side, m=region.m, triangles=cells, special=specials)


def left_half_free(region: Region) -> Region:
    """The half on one side of the perpendicular symmetry axis, cut along
    that axis, with every unit edge on the cut free.  Requires reflect_v
    symmetry."""
    if not region.is_symmetric_v():
        raise ValueError("left_half_free needs a reflect_v-symmetric region")
    cells = frozenset(t for t in region.triangles if t[0] < region.side)
    cut_row = region.side - 1
    free = frozenset(
        t for t in cells if t[0] == cut_row and region.is_up(t)
    )
    return Region(side=region.side, m=region.m, triangles=cells, free=free)
