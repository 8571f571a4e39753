"""Command-line front end.

Exit codes: 0 success, 1 identity mismatch, 2 unparsable input,
3 invalid object, 4 verification budget exceeded.

Negative values must be attached to their flag, e.g. ``--beads=-2,2,8``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass

from . import abacus as ab
from . import series
from .core import (
    BoundedPartition,
    LectureHallPartition,
    ValidationError,
    ceiling_stats,
    enumerate_bounded,
    enumerate_lecture_hall,
)

EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_BUDGET = 4
DEFAULT_BUDGET = 2000


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RenderSpec:
    n: int
    defining_beads: tuple[int, ...]
    row_range: tuple[int, int]
    show_class_row: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("n must be positive")
        if self.row_range[0] > self.row_range[1]:
            raise ValidationError(f"empty row range {self.row_range}")


def render_grid(n: int, bead: Callable[[int], bool], row_range: tuple[int, int],
                classes: tuple[int, ...] | None = None) -> str:
    """Fixed-width picture of rows ``row_range``: beads as ``(p)``, gaps as
    `` p ``, one extra space between column ``n`` and column ``n+1``."""
    lo, hi = row_range
    m = 2 * n
    rows = [[j + m * r for j in range(1, m + 1)] for r in range(lo, hi + 1)]
    texts = [[f"({p})" if bead(p) else f" {p} " for p in row] for row in rows]
    footer = [f"[{c}]" for c in classes] if classes else None
    width = max(len(t) for row in texts + ([footer] if footer else []) for t in row)

    def line(cells: list[str]) -> str:
        cells = [c.rjust(width) for c in cells]
        return ("".join(cells[:n]) + " " + "".join(cells[n:])).rstrip()

    out = [line(row) for row in texts]
    if footer:
        out.append("")
        out.append(line(footer))
    return "\n".join(out)


def render(spec: RenderSpec) -> str:
    A = ab.AbacusDiagram(spec.n, spec.defining_beads)
    ab.validate(A)
    classes = A.column_classes() if spec.show_class_row else None
    return render_grid(spec.n, lambda p: ab.is_bead(A, p), spec.row_range, classes)


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"not a comma-separated integer list: {text!r}") from None


def _row_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise InputError(f"rows must look like lo..hi, got {text!r}") from None


def _read_json(stdin) -> dict:
    try:
        obj = json.loads(stdin.read())
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON on stdin: {exc}") from None
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object on stdin")
    return obj


def _need(obj: dict, key: str):
    if key not in obj:
        raise InputError(f"missing key {key!r}")
    return obj[key]


def _ints(value, key: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise InputError(f"{key!r} must be a list of integers")
    return tuple(value)


def _n_of(args, obj: dict | None) -> int:
    n = args.n if args.n is not None else (_need(obj, "n") if obj is not None else None)
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError("n must be given as an integer (--n or JSON key 'n')")
    return n


def _partition_input(args, stdin) -> tuple[int, tuple[int, ...]]:
    if args.parts is not None:
        if args.n is None:
            raise InputError("--parts needs --n")
        return args.n, _int_list(args.parts)
    obj = _read_json(stdin)
    return _n_of(args, obj), _ints(_need(obj, "parts"), "parts")


def _abacus_input(args, stdin) -> ab.AbacusDiagram:
    if args.beads is not None:
        if args.n is None:
            raise InputError("--beads needs --n")
        return ab.AbacusDiagram(args.n, _int_list(args.beads))
    obj = _read_json(stdin)
    return ab.AbacusDiagram(_n_of(args, obj), _ints(_need(obj, "defining_beads"), "defining_beads"))


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj) + "\n")


def _with_weight(obj: dict, w: int) -> dict:
    return {**obj, "weight": w}


def cmd_encode(args, stdin, out) -> int:
    lam = LectureHallPartition(*_partition_input(args, stdin))
    _emit(_with_weight(ab.encode(lam).to_json(), lam.weight), out)
    return 0


def cmd_decode(args, stdin, out) -> int:
    lam = ab.decode(_abacus_input(args, stdin))
    _emit(_with_weight(lam.to_json(), lam.weight), out)
    return 0


def cmd_to_bounded(args, stdin, out) -> int:
    p = ab.to_bounded(_abacus_input(args, stdin))
    _emit(_with_weight(p.to_json(), p.weight), out)
    return 0


def cmd_from_bounded(args, stdin, out) -> int:
    p = BoundedPartition(*_partition_input(args, stdin))
    _emit(_with_weight(ab.from_bounded(p).to_json(), p.weight), out)
    return 0


def cmd_enumerate(args, stdin, out, err=None) -> int:
    err = err or sys.stderr
    if args.family == "bounded":
        items = enumerate_bounded(args.n, args.max_weight)
    else:
        items = enumerate_lecture_hall(args.n, args.max_weight)
    counts: Counter[int] = Counter()
    writer = None
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["weight", "parts"])
    for item in items:
        counts[item.weight] += 1
        if writer is not None:
            writer.writerow([item.weight, "|".join(map(str, item.parts))])
        else:
            _emit(_with_weight(item.to_json(), item.weight), out)
    summary = " ".join(f"{w}:{counts[w]}" for w in range(args.max_weight + 1))
    err.write(f"total {sum(counts.values())}; counts by weight {summary}\n")
    return 0


def cmd_verify(args, stdin, out) -> int:
    if args.n * max(args.max_x, 1) > args.budget:
        out.write(f"REFUSED n*max_x = {args.n * args.max_x} exceeds budget {args.budget}\n")
        return EXIT_BUDGET
    check = series.verify_refined if args.refined else series.verify_plain
    result = check(args.n, args.max_x)
    out.write(result.describe() + "\n")
    return 0 if result else EXIT_MISMATCH


def cmd_render(args, stdin, out) -> int:
    A = _abacus_input(args, stdin)
    if args.rows is not None:
        rows = _row_range(args.rows)
    else:
        top = max(ab.geometry(A.n, A.defining_beads[-1]).row, 0) + 1
        rows = (-top - 1, top)
    spec = RenderSpec(A.n, A.defining_beads, rows, show_class_row=not args.no_classes)
    out.write(render(spec) + "\n")
    return 0


def cmd_stats(args, stdin, out) -> int:
    lam = LectureHallPartition(*_partition_input(args, stdin))
    A = ab.encode(lam)
    cv = ceiling_stats(lam)
    p = ab.to_bounded(A)
    _emit({
        "n": lam.n,
        "parts": list(lam.parts),
        "weight": lam.weight,
        "ceilings": list(cv.entries),
        "ceiling_weight": cv.weight,
        "odd_ceilings": cv.odd_count,
        "window_vector": list(ab.window_vector(A)),
        "defining_beads": list(A.defining_beads),
        "bounded": list(p.parts),
        "small_parts": list(p.small_parts),
        "large_parts": list(p.large_parts),
    }, out)
    return 0


COMMANDS = {
    "encode": cmd_encode,
    "decode": cmd_decode,
    "to-bounded": cmd_to_bounded,
    "from-bounded": cmd_from_bounded,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "render": cmd_render,
    "stats": cmd_stats,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lecturehall",
        description="Lecture hall partitions, abacus diagrams and bounded partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in [("encode", "lecture hall partition -> abacus"),
                        ("from-bounded", "bounded partition -> abacus"),
                        ("stats", "statistics of a lecture hall partition")]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--n", type=int)
        p.add_argument("--parts", help="comma-separated parts; JSON on stdin otherwise")

    for name, help_ in [("decode", "abacus -> lecture hall partition"),
                        ("to-bounded", "abacus -> bounded partition"),
                        ("render", "ASCII picture of an abacus")]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--n", type=int)
        p.add_argument("--beads", help="comma-separated defining beads; JSON on stdin otherwise")
        if name == "render":
            p.add_argument("--rows", help="row interval lo..hi, e.g. --rows=-4..3")
            p.add_argument("--no-classes", action="store_true", help="omit the class footer")

    p = sub.add_parser("enumerate", help="stream all partitions up to a weight")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--family", choices=["lecture_hall", "bounded"], default="lecture_hall")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("verify", help="check the lecture hall generating function identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-x", type=int, required=True)
    p.add_argument("--refined", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="largest n*max_x accepted (default %(default)s)")
    return parser


def main(argv: list[str] | None = None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, stdin, stdout)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except (ValidationError, OverflowError) as exc:
        condition = getattr(exc, "condition", "invalid")
        sys.stderr.write(f"invalid ({condition}): {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
