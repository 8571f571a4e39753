"""Brute-force reference implementations for the test suite.

Nothing here calls into the abacus constructions or the core enumerators:
slopes are compared as ``Fraction`` objects, and the abacus is materialized
as an explicit set of bead positions on a finite block of rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction


class GridRangeError(ValueError):
    pass


def brute_lecture_hall(n: int, max_weight: int) -> set[tuple[int, ...]]:
    """All length-``n`` sequences of sum at most ``max_weight`` whose slopes
    ``parts[i-1] / i`` are weakly increasing."""
    out = set()
    for seq in itertools.product(range(max_weight + 1), repeat=n):
        if sum(seq) > max_weight:
            continue
        if slopes_weakly_increase(seq):
            out.add(seq)
    return out


def slopes_weakly_increase(seq) -> bool:
    slopes = [Fraction(p, i) for i, p in enumerate(seq, start=1)]
    return all(a <= b for a, b in zip(slopes, slopes[1:]))


def brute_bounded(n: int, max_weight: int) -> set[tuple[int, ...]]:
    """Bounded partitions built as (subset of 1..n) + (multiset of n+1..2n)."""
    out = set()
    small = range(1, n + 1)
    for r in range(n + 1):
        for subset in itertools.combinations(small, r):
            base = sum(subset)
            if base > max_weight:
                continue
            large_counts = [range((max_weight - base) // (n + i) + 1) for i in range(1, n + 1)]
            for counts in itertools.product(*large_counts):
                total = base + sum(c * (n + i) for i, c in enumerate(counts, start=1))
                if total <= max_weight:
                    large = [n + i for i, c in enumerate(counts, start=1) for _ in range(c)]
                    out.add(tuple(subset) + tuple(large))
    return out


@dataclass(frozen=True)
class MaterializedGrid:
    n: int
    row_range: tuple[int, int]
    bead_set: frozenset[int]

    @property
    def positions(self) -> range:
        lo, hi = self.row_range
        return range(1 + 2 * self.n * lo, 2 * self.n * (hi + 1) + 1)

    def __contains__(self, position: int) -> bool:
        return position in self.positions

    def is_bead(self, position: int) -> bool:
        if position not in self:
            raise GridRangeError(f"position {position} outside rows {self.row_range}")
        return position in self.bead_set

    def rows(self) -> list[list[tuple[int, bool]]]:
        lo, hi = self.row_range
        m = 2 * self.n
        return [[(j + m * r, j + m * r in self.bead_set) for j in range(1, m + 1)]
                for r in range(lo, hi + 1)]


def default_row_range(parts) -> tuple[int, int]:
    top = max(-(-p // i) for i, p in enumerate(parts, start=1)) + 2
    return (-top, top)


def simulate_encoding(parts, row_range: tuple[int, int] | None = None) -> MaterializedGrid:
    """Walk the grid in reading order to place defining beads, then fill the
    columns above them and their dual columns."""
    parts = tuple(parts)
    n = len(parts)
    m = 2 * n
    if row_range is None:
        row_range = default_row_range(parts)
    lo, hi = row_range
    cells = [j + m * r for r in range(lo, hi + 1) for j in range(1, m + 1)]  # reading order
    col = {p: (p - 1) % m + 1 for p in cells}

    blocked: set[int] = set()
    defining: list[int] = []
    for i in range(n, 0, -1):
        k = parts[i - 1]
        placed = None
        if k > 0:
            count = 0
            for p in cells:
                if p > 0 and col[p] not in blocked:
                    count += 1
                    if count == k:
                        placed = p
                        break
        else:
            for p in reversed(cells):
                if p <= 0 and col[p] not in blocked:
                    placed = p
                    break
        if placed is None:
            raise GridRangeError(f"rows {row_range} too small to place bead {i}")
        defining.append(placed)
        blocked |= {col[placed], m + 1 - col[placed]}

    beads = set()
    for b in defining:
        # the bead, everything above it, and the dual-column run from 1 - 2n - b up
        dual = 1 - m - b
        if dual not in col:
            raise GridRangeError(f"rows {row_range} do not contain dual entry {dual}")
        beads.update(p for p in cells if col[p] == col[b] and p <= b)
        beads.update(p for p in cells if col[p] == col[dual] and p <= dual)
    return MaterializedGrid(n, (lo, hi), frozenset(beads))


def brute_gap_count(grid: MaterializedGrid, position: int) -> int:
    """Gaps strictly between ``position - 2n`` and ``position``."""
    start = position - 2 * grid.n
    if start not in grid or position not in grid:
        raise GridRangeError(f"{start}..{position} not inside rows {grid.row_range}")
    return sum(1 for p in range(start + 1, position) if p not in grid.bead_set)


def brute_bounded_from_grid(grid: MaterializedGrid) -> tuple[int, ...]:
    """Bounded partition read from an explicit grid (all positive beads)."""
    n = grid.n
    out = []
    for p in sorted(grid.bead_set):
        if p <= 0:
            continue
        out.append(p if p <= n else brute_gap_count(grid, p) + 1)
    return tuple(out)
