"""Abacus diagrams on ``2n`` columns and the bijections through them.

Positions are labelled ``column + 2n * row`` with ``1 <= column <= 2n``.  An
abacus is stored only through its ``n`` defining beads; the full bead set is
the flush, balanced completion, computed on demand by :func:`is_bead`.

Column ``j`` is dual to column ``2n + 1 - j``.  Both columns of a dual pair
carry the class ``i`` of the defining bead sitting in one of them.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

from .core import (
    BoundedPartition,
    LectureHallPartition,
    ValidationError,
    ceil_div,
    check_int64,
    enumerate_lecture_hall,
)


class AbacusError(ValidationError):
    """Base class for abacus invariant violations.

    ``condition`` names the violated invariant and ``position`` is the
    offending array position, when there is one.
    """

    condition = "abacus"

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class OrderingError(AbacusError):
    condition = "ordering"


class ColumnCollisionError(AbacusError):
    condition = "column_collision"


class DualColumnError(ColumnCollisionError):
    condition = "dual_column"


class DefiningBeadError(AbacusError):
    condition = "defining_beads"


class FlushError(AbacusError):
    condition = "flush"


class BalanceError(AbacusError):
    condition = "balanced"


class PlacementError(AbacusError):
    condition = "placement"


@dataclass(frozen=True)
class PositionGeometry:
    position: int
    row: int
    column: int
    dual_column: int
    window: int


def geometry(n: int, position: int) -> PositionGeometry:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    row, r = divmod(position - 1, 2 * n)
    column = r + 1
    return PositionGeometry(position, row, column, 2 * n + 1 - column, ceil_div(position, n))


def column_of(n: int, position: int) -> int:
    return (position - 1) % (2 * n) + 1


def window_of(n: int, position: int) -> int:
    return ceil_div(position, n)


@dataclass(frozen=True)
class AbacusDiagram:
    """An abacus given by its defining beads ``b_1 < ... < b_n``.

    Construction does not validate; call :func:`validate` (the bijections do
    this on their inputs).
    """

    n: int
    defining_beads: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "defining_beads", tuple(self.defining_beads))

    @cached_property
    def _column_class(self) -> dict[int, int]:
        n = self.n
        classes = {}
        for i, b in enumerate(self.defining_beads, start=1):
            c = column_of(n, b)
            classes[c] = i
            classes[2 * n + 1 - c] = i
        return classes

    def column_classes(self) -> tuple[int, ...]:
        """Class of each column ``1..2n``, in column order."""
        return tuple(self._column_class[c] for c in range(1, 2 * self.n + 1))

    def bead(self, i: int) -> int:
        return self.defining_beads[i - 1]

    def positive_beads(self) -> list[int]:
        """All positive beads, in reading order.

        Dual-column beads sit at or below ``1 - 2n - b_i <= -n`` for a valid
        abacus, so only the defining-bead columns contribute.
        """
        step = 2 * self.n
        out = []
        for b in self.defining_beads:
            out.extend(range(b, 0, -step))
        for b in self.defining_beads:
            out.extend(range(1 - step - b, 0, -step))
        return sorted(out)

    def to_json(self) -> dict:
        return {"n": self.n, "defining_beads": list(self.defining_beads)}

    @classmethod
    def from_json(cls, obj: dict) -> AbacusDiagram:
        return cls(obj["n"], tuple(obj["defining_beads"]))


def class_of(A: AbacusDiagram, position: int) -> int:
    return A._column_class[column_of(A.n, position)]


def is_bead(A: AbacusDiagram, position: int) -> bool:
    n = A.n
    col = column_of(n, position)
    b = A.bead(A._column_class[col])
    if col == column_of(n, b):
        return position <= b
    return position <= 1 - 2 * n - b


def class_count_before(A: AbacusDiagram, bound: int, k: int, start: int = 1) -> int:
    """Number of positions ``start <= a < bound`` of class ``k``.

    The default counts positive positions.  With ``start = 1 - n`` window 0
    is included, which keeps the class-count difference between ``b_i`` and
    ``b_k`` equal to 1 even when ``b_i`` is nonpositive.
    """
    return sum(1 for a in range(start, bound) if class_of(A, a) == k)


def _check_structure(A: AbacusDiagram) -> None:
    n, beads = A.n, A.defining_beads
    if n < 1:
        raise AbacusError(f"n must be positive, got {n}")
    if len(beads) != n:
        raise AbacusError(f"expected {n} defining beads, got {len(beads)}")
    check_int64(*beads)
    for a, b in zip(beads, beads[1:]):
        if a >= b:
            raise OrderingError(f"defining beads not increasing at {b}", b)
    seen: dict[int, int] = {}
    for b in beads:
        c = column_of(n, b)
        if c in seen:
            raise ColumnCollisionError(
                f"beads {seen[c]} and {b} share column {c}", b)
        d = 2 * n + 1 - c
        if d in seen:
            raise DualColumnError(
                f"beads {seen[d]} and {b} lie in dual columns {d} and {c}", b)
        seen[c] = b
    # below 1-n a bead would not be among the last n lowest-per-column beads
    if beads[0] < 1 - n:
        raise DefiningBeadError(
            f"defining bead {beads[0]} lies below window 0", beads[0])


def validate(A: AbacusDiagram, radius: int | None = None) -> None:
    """Raise an :class:`AbacusError` subclass if ``A`` is not a valid abacus.

    Checks ordering and column coverage of the defining beads, then flush and
    balanced on the positions ``[1 - 2n*radius, 2n*radius]`` and that the
    last ``n`` lowest-per-column beads there are the stored defining beads.
    ``radius`` defaults to the window of ``b_n`` plus 2.
    """
    _check_structure(A)
    n = A.n
    if radius is None:
        radius = max(window_of(n, A.defining_beads[-1]), 1) + 2
    lo, hi = 1 - 2 * n * radius, 2 * n * radius

    for p in range(lo, hi + 1):
        if is_bead(A, p) == is_bead(A, 1 - p):
            raise BalanceError(f"positions {p} and {1 - p} are both beads or both gaps", p)
    lowest: dict[int, int] = {}
    for p in range(lo + 2 * n, hi + 1):
        if is_bead(A, p) and not is_bead(A, p - 2 * n):
            raise FlushError(f"bead at {p} sits below a gap at {p - 2 * n}", p)
        if is_bead(A, p):
            lowest[column_of(n, p)] = p
    if len(lowest) != 2 * n:
        raise DefiningBeadError(f"validation radius {radius} too small")
    extracted = tuple(sorted(lowest.values())[-n:])
    if extracted != A.defining_beads:
        bad = next(b for b, e in zip(A.defining_beads, extracted) if b != e)
        raise DefiningBeadError(
            f"stored defining beads {A.defining_beads} differ from the "
            f"lowest-bead extraction {extracted}", bad)


def encode(lam: LectureHallPartition) -> AbacusDiagram:
    """Abacus diagram of a lecture hall partition.

    Beads are placed from ``b_n`` down to ``b_1``.  ``b_i`` is the
    ``lam_i``-th positive position in the columns not yet claimed by a
    larger bead (or its dual); a zero part goes to the largest nonpositive
    entry of a free column.
    """
    if not isinstance(lam, LectureHallPartition):
        raise ValidationError("encode expects a LectureHallPartition")
    n = lam.n
    free = set(range(1, 2 * n + 1))
    beads = [0] * n
    for i in range(n, 0, -1):
        cols = sorted(free)
        k = lam.parts[i - 1]
        if k > 0:
            row, idx = divmod(k - 1, len(cols))
            b = cols[idx] + 2 * n * row
        else:
            b = cols[-1] - 2 * n
        beads[i - 1] = b
        c = column_of(n, b)
        free -= {c, 2 * n + 1 - c}
    return AbacusDiagram(n, tuple(beads))


def decode(A: AbacusDiagram) -> LectureHallPartition:
    """Count the ``i``-active positions up to each defining bead."""
    _check_structure(A)
    parts = tuple(
        sum(1 for p in range(1, b + 1) if class_of(A, p) <= i)
        for i, b in enumerate(A.defining_beads, start=1)
    )
    return LectureHallPartition(A.n, parts)


def gap_count(A: AbacusDiagram, position: int) -> int:
    """Gaps strictly between ``position - 2n`` and ``position``."""
    return sum(
        1 for p in range(position - 2 * A.n + 1, position) if not is_bead(A, p)
    )


def to_bounded(A: AbacusDiagram) -> BoundedPartition:
    """Bounded partition read off the positive beads.

    Beads in window 1 give the small parts; every positive bead beyond
    window 1 gives one part equal to its gap count plus one.
    """
    _check_structure(A)
    n = A.n
    parts = []
    for b in A.positive_beads():
        parts.append(b if b <= n else gap_count(A, b) + 1)
    return BoundedPartition(n, tuple(parts))


def _next_supported(beads: set[int], after: int, count: int, step: int) -> int:
    j = after
    while count:
        j += 1
        if j - step in beads:
            count -= 1
    return j


def from_bounded(p: BoundedPartition) -> AbacusDiagram:
    """Inverse of :func:`to_bounded`.

    Window 1 holds beads at the small parts and window 0 their balanced
    complement.  Each large part is then placed at the appropriate next
    supported position (one whose predecessor ``2n`` back is a bead).
    """
    if not isinstance(p, BoundedPartition):
        raise ValidationError("from_bounded expects a BoundedPartition")
    n = p.n
    step = 2 * n
    small = p.small_parts
    # bead status is known for every position > -n; store the beads
    beads = set(small)
    beads.update(q for q in range(1 - n, 1) if (1 - q) not in small)

    prev_pos, prev_part = n, None
    for part in p.large_parts:
        if prev_part is None:
            count = part - n
        else:
            count = part - prev_part + 1
        prev_pos = _next_supported(beads, prev_pos, count, step)
        beads.add(prev_pos)
        prev_part = part

    lowest: dict[int, int] = {}
    for q in sorted(beads):
        lowest[column_of(n, q)] = q
    return AbacusDiagram(n, tuple(sorted(lowest.values())))


def window_vector(A: AbacusDiagram) -> tuple[int, ...]:
    """Per class ``i``, the number of positive class-``i`` positions up to ``b_i``."""
    return tuple(
        sum(1 for p in range(1, b + 1) if class_of(A, p) == i)
        for i, b in enumerate(A.defining_beads, start=1)
    )


def legal_insertions(A: AbacusDiagram) -> list[int]:
    """Classes ``i`` for which ``b_i + 2n`` would be the last defining bead."""
    last = A.defining_beads[-1]
    return [i for i, b in enumerate(A.defining_beads, start=1)
            if i == A.n or b + 2 * A.n > last]


def append_bead(A: AbacusDiagram, i: int) -> AbacusDiagram:
    """Add a bead directly below ``b_i``.

    The new bead ``b_i + 2n`` becomes the class-``n`` defining bead and the
    classes above ``i`` shift down by one.
    """
    n = A.n
    if not 1 <= i <= n:
        raise PlacementError(f"class index {i} outside 1..{n}")
    new = A.bead(i) + 2 * n
    if i != n and new <= A.defining_beads[-1]:
        raise PlacementError(
            f"bead {new} below class {i} would not be last in reading order", new)
    beads = A.defining_beads[: i - 1] + A.defining_beads[i:] + (new,)
    return AbacusDiagram(n, beads)


def iter_abaci(n: int, max_weight: int) -> Iterator[AbacusDiagram]:
    for lam in enumerate_lecture_hall(n, max_weight):
        yield encode(lam)


__all__ = [
    "AbacusDiagram", "AbacusError", "BalanceError", "ColumnCollisionError",
    "DefiningBeadError", "DualColumnError", "FlushError", "OrderingError",
    "PlacementError", "PositionGeometry", "append_bead", "class_count_before",
    "class_of", "column_of", "decode", "encode", "from_bounded", "gap_count",
    "geometry", "is_bead", "legal_insertions", "to_bounded", "validate",
    "window_of", "window_vector",
]
