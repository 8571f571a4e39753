#!/usr/bin/env python3
"""Print the running n = 6 example: the abacus, its bounded partition, the
bounded-to-abacus reconstruction step by step, and one bead insertion."""

from lecturehall.abacus import append_bead, decode, encode, from_bounded, is_bead, to_bounded
from lecturehall.cli import render_grid
from lecturehall.core import BoundedPartition, LectureHallPartition


def show(A, rows):
    print(render_grid(A.n, lambda p: is_bead(A, p), rows, A.column_classes()))
    print()


def main():
    lam = LectureHallPartition(6, (0, 1, 4, 8, 14, 30))
    A = encode(lam)
    print(f"lambda = {lam.parts}  weight {lam.weight}")
    print(f"defining beads {A.defining_beads}")
    show(A, (-4, 2))
    p = to_bounded(A)
    print(f"bounded partition {p.parts}  weight {p.weight}\n")

    for k in range(3, len(p.parts) + 1):
        partial = from_bounded(BoundedPartition(6, p.parts[:k]))
        print(f"after parts {p.parts[:k]}:")
        show(partial, (-1, 2))

    before = encode(LectureHallPartition(6, (0, 1, 3, 6, 10, 16)))
    i = before.defining_beads.index(6) + 1
    after = append_bead(before, i)
    print(f"insert below class {i}: {decode(before).parts} -> {decode(after).parts}, "
          f"{to_bounded(before).parts} -> {to_bounded(after).parts}")


if __name__ == "__main__":
    main()
