"""Classical product formulas for boxed plane partitions, used as oracles.

A hexagon with four sides n and two sides 2m tiles like plane partitions in
a 2m x n x n box, so the three box counts below pin the tiler externally:
the total count (MacMahon), the symmetric count (Andrews), and the
transpose-complementary count (Proctor).  All products are evaluated over
exact rationals and asserted integral; nothing is rounded.
"""

from __future__ import annotations

from fractions import Fraction


def _exact_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} did not reduce to an integer: {value}")
    return int(value)


def box_tilings(a: int, b: int, c: int) -> int:
    """Plane partitions in an a x b x c box (MacMahon):
    prod (i+j+k-1)/(i+j+k-2) over the box."""
    if a < 0 or b < 0 or c < 0:
        raise ValueError("box dimensions must be non-negative")
    value = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                value *= Fraction(i + j + k - 1, i + j + k - 2)
    return _exact_int(value, f"box_tilings{(a, b, c)}")


def symmetric_box_tilings(r: int, c: int) -> int:
    """Symmetric plane partitions in an r x r x c box (Andrews):
    prod_i (2i+c-1)/(2i-1) * prod_{i<j} (i+j+c-1)/(i+j-1)."""
    if r < 0 or c < 0:
        raise ValueError("box dimensions must be non-negative")
    value = Fraction(1)
    for i in range(1, r + 1):
        value *= Fraction(2 * i + c - 1, 2 * i - 1)
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            value *= Fraction(i + j + c - 1, i + j - 1)
    return _exact_int(value, f"symmetric_box_tilings{(r, c)}")


def transpose_complement_box_tilings(a: int, b: int) -> int:
    """Transpose-complementary plane partitions in a 2a x b x b box
    (Proctor): prod_{1 <= i <= j <= b-1} (2a+i+j)/(i+j)."""
    if a < 0 or b < 0:
        raise ValueError("box dimensions must be non-negative")
    value = Fraction(1)
    for i in range(1, b):
        for j in range(i, b):
            value *= Fraction(2 * a + i + j, i + j)
    return _exact_int(value, f"transpose_complement_box_tilings{(a, b)}")


def hexagon_total(n: int, m: int) -> int:
    """Plain tiling count of the (n, 2m) hexagon via the box formula."""
    return box_tilings(2 * m, n, n)


def hexagon_vsym(n: int, m: int) -> int:
    return symmetric_box_tilings(n, 2 * m)


def hexagon_hsym(n: int, m: int) -> int:
    return transpose_complement_box_tilings(m, n)


def verify_box_product(a: int, b: int) -> bool:
    """Does total = transpose-complementary * symmetric hold for the
    2a x b x b box, by the closed forms alone?"""
    return box_tilings(2 * a, b, b) == (
        transpose_complement_box_tilings(a, b) * symmetric_box_tilings(b, 2 * a)
    )
