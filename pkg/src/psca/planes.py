"""Finite affine planes of prime-power order, as ordered parallel classes.

A plane of order q partitions the point set [q^2] into q+1 parallel classes
of q blocks of q points, with every pair of distinct points sharing a block
in exactly one class.  The order-squaring construction consumes the classes
and blocks in a fixed order, so everything here is deterministic:

- points are GF(q)^2 pairs (x, y), numbered 1 + enc(x)*q + enc(y);
- the q slope classes come first (lines y = m*x + b, ordered by enc(m)),
  the class of vertical lines x = c last;
- blocks inside a class are ordered by their smallest point, and each block
  tuple is sorted increasingly (that sorted order is the block's fixed total
  order used by the constructions).
"""

from __future__ import annotations

from dataclasses import dataclass

from psca.errors import InputError
from psca.fields import make_field, prime_power

Block = tuple[int, ...]


@dataclass(frozen=True)
class AffinePlane:
    order: int
    classes: tuple[tuple[Block, ...], ...]

    @property
    def num_points(self) -> int:
        return self.order * self.order


def affine_plane(q: int, size_cap: int = 81) -> AffinePlane:
    """The affine plane AG(2, q) over GF(q); q must be a prime power."""
    p, e = prime_power(q)
    gf = make_field(p, e, size_cap=size_cap)

    def point(x: int, y: int) -> int:
        return 1 + x * q + y

    classes: list[tuple[Block, ...]] = []
    for m in gf.elements():
        blocks = [
            tuple(sorted(point(x, gf.add(gf.mul(m, x), b)) for x in gf.elements()))
            for b in gf.elements()
        ]
        classes.append(tuple(sorted(blocks, key=min)))
    vertical = [
        tuple(sorted(point(c, y) for y in gf.elements())) for c in gf.elements()
    ]
    classes.append(tuple(sorted(vertical, key=min)))
    return AffinePlane(order=q, classes=tuple(classes))


def canned_plane_order3() -> AffinePlane:
    """The order-3 plane in its conventional listed form.

    Kept verbatim (class order included) because the worked example of the
    order-squaring construction is stated against exactly this listing.
    """
    classes = (
        ((1, 2, 3), (4, 5, 6), (7, 8, 9)),
        ((1, 4, 7), (2, 5, 8), (3, 6, 9)),
        ((1, 5, 9), (2, 6, 7), (3, 4, 8)),
        ((1, 6, 8), (2, 4, 9), (3, 5, 7)),
    )
    return AffinePlane(order=3, classes=classes)


def check_plane(plane: AffinePlane) -> None:
    """Raise InputError unless the parallel-class axioms hold.

    Checks that every class partitions [q^2] into q sorted blocks of q, and
    that each pair of distinct points shares a block in exactly one class.
    """
    q = plane.order
    points = set(range(1, q * q + 1))
    if len(plane.classes) != q + 1:
        raise InputError(f"expected {q + 1} classes, got {len(plane.classes)}")
    for i, cls in enumerate(plane.classes, start=1):
        if len(cls) != q or any(len(block) != q for block in cls):
            raise InputError(f"class {i} is not {q} blocks of {q} points")
        if any(tuple(sorted(block)) != block for block in cls):
            raise InputError(f"class {i} has an unsorted block")
        covered = [pt for block in cls for pt in block]
        if sorted(covered) != sorted(points):
            raise InputError(f"class {i} is not a partition of the point set")

    pair_owner: dict[tuple[int, int], int] = {}
    for i, cls in enumerate(plane.classes, start=1):
        for block in cls:
            for a_idx in range(q):
                for b_idx in range(a_idx + 1, q):
                    pair = (block[a_idx], block[b_idx])
                    if pair in pair_owner:
                        raise InputError(
                            f"pair {pair} shares a block in classes {pair_owner[pair]} and {i}"
                        )
                    pair_owner[pair] = i
    expected_pairs = q * q * (q * q - 1) // 2
    if len(pair_owner) != expected_pairs:
        raise InputError("some point pair shares a block in no class")
