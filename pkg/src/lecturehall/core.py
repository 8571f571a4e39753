"""Partition value types, validity predicates and enumerators.

Lecture hall partitions are stored smallest part first, so ``parts[i - 1]``
is the part with slope denominator ``i``.  All comparisons use integer
cross-multiplication.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


class ValidationError(ValueError):
    """Raised when a value violates the invariants of its type."""


class LengthError(ValidationError):
    pass


def check_int64(*values: int) -> None:
    for v in values:
        if not INT64_MIN <= v <= INT64_MAX:
            raise OverflowError(f"{v} does not fit in a signed 64-bit integer")


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def is_lecture_hall(n: int, seq: Sequence[int]) -> bool:
    """True iff ``seq`` is a lecture hall partition with ``n`` parts."""
    if len(seq) != n:
        raise LengthError(f"expected {n} parts, got {len(seq)}")
    if any(p < 0 for p in seq):
        return False
    # seq[i-1]/i <= seq[i]/(i+1)
    return all(seq[i - 1] * (i + 1) <= seq[i] * i for i in range(1, n))


def is_bounded(n: int, seq: Sequence[int]) -> bool:
    """True iff ``seq`` is a bounded partition for ``n``.

    Parts lie in ``[1, 2n]``, are sorted weakly increasing, and the parts
    ``<= n`` are pairwise distinct.
    """
    if n < 1:
        return False
    if any(not 1 <= p <= 2 * n for p in seq):
        return False
    for a, b in zip(seq, seq[1:]):
        if a > b or (a == b and a <= n):
            return False
    return True


def weight(parts: Sequence[int]) -> int:
    return sum(parts)


@dataclass(frozen=True)
class CeilingVector:
    entries: tuple[int, ...]
    weight: int
    odd_count: int


@dataclass(frozen=True)
class LectureHallPartition:
    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if self.n < 1:
            raise ValidationError(f"n must be positive, got {self.n}")
        check_int64(*self.parts)
        if not is_lecture_hall(self.n, self.parts):
            raise ValidationError(
                f"{self.parts} violates the lecture hall inequalities for n={self.n}"
            )

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def to_json(self) -> dict:
        return {"kind": "lecture_hall", "n": self.n, "parts": list(self.parts)}

    @classmethod
    def zero(cls, n: int) -> LectureHallPartition:
        return cls(n, (0,) * n)


@dataclass(frozen=True)
class BoundedPartition:
    n: int
    parts: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        check_int64(*self.parts)
        if not is_bounded(self.n, self.parts):
            raise ValidationError(f"{self.parts} is not a bounded partition for n={self.n}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def small_parts(self) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p <= self.n)

    @property
    def large_parts(self) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p > self.n)

    def to_json(self) -> dict:
        return {"kind": "bounded", "n": self.n, "parts": list(self.parts)}


def ceiling_stats(lam: LectureHallPartition) -> CeilingVector:
    """Ceilings of the slopes ``parts[i-1] / i`` with their sum and odd count."""
    entries = tuple(ceil_div(p, i) for i, p in enumerate(lam.parts, start=1))
    return CeilingVector(entries, sum(entries), sum(e % 2 for e in entries))


def from_json(obj: dict) -> LectureHallPartition | BoundedPartition:
    """Build a partition from ``{"kind": ..., "n": ..., "parts": [...]}``."""
    kind = obj.get("kind", "lecture_hall")
    n, parts = obj["n"], tuple(obj["parts"])
    if kind == "lecture_hall":
        return LectureHallPartition(n, parts)
    if kind == "bounded":
        return BoundedPartition(n, parts)
    raise ValidationError(f"unknown partition kind {kind!r}")


def _min_tail(v: int, i: int, n: int) -> int:
    # smallest possible sum of parts i+1..n when part i equals v
    return sum(ceil_div(v * j, i) for j in range(i + 1, n + 1))


def enumerate_lecture_hall(n: int, max_weight: int) -> Iterator[LectureHallPartition]:
    """Yield every lecture hall partition of length ``n`` with weight at most
    ``max_weight``, in lexicographic order of ``parts``."""

    def extend(prefix: list[int], total: int) -> Iterator[tuple[int, ...]]:
        i = len(prefix) + 1
        if i > n:
            yield tuple(prefix)
            return
        lo = ceil_div(prefix[-1] * i, i - 1) if prefix else 0
        v = lo
        while total + v + _min_tail(v, i, n) <= max_weight:
            prefix.append(v)
            yield from extend(prefix, total + v)
            prefix.pop()
            v += 1

    for parts in extend([], 0):
        yield LectureHallPartition(n, parts)


def enumerate_bounded(n: int, max_weight: int) -> Iterator[BoundedPartition]:
    """Yield every bounded partition for ``n`` with weight at most
    ``max_weight`` (the empty partition included), in lexicographic order."""

    def extend(prefix: list[int], total: int) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        if prefix:
            last = prefix[-1]
            start = last + 1 if last <= n else last
        else:
            start = 1
        for v in range(start, min(2 * n, max_weight - total) + 1):
            prefix.append(v)
            yield from extend(prefix, total + v)
            prefix.pop()

    for parts in extend([], 0):
        yield BoundedPartition(n, parts)
