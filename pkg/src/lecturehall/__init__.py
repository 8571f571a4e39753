"""Lecture hall partitions, abacus diagrams and bounded partitions."""

from .abacus import (
    AbacusDiagram,
    append_bead,
    decode,
    encode,
    from_bounded,
    to_bounded,
    validate,
    window_vector,
)
from .core import (
    BoundedPartition,
    CeilingVector,
    LectureHallPartition,
    ValidationError,
    ceiling_stats,
    enumerate_bounded,
    enumerate_lecture_hall,
    is_bounded,
    is_lecture_hall,
)

__all__ = [
    "AbacusDiagram", "BoundedPartition", "CeilingVector", "LectureHallPartition",
    "ValidationError", "append_bead", "ceiling_stats", "decode", "encode",
    "enumerate_bounded", "enumerate_lecture_hall", "from_bounded", "is_bounded",
    "is_lecture_hall", "to_bounded", "validate", "window_vector",
]
