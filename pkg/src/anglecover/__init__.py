"""Angle covers on rotation-system graphs: solvers, reductions, transforms."""

from .core import (
    Angle,
    AngleAssignment,
    BASIC_SPEC,
    Certificate,
    CoverSpec,
    MalformedAssignmentError,
    RotationGraph,
    UnsupportedInputError,
    check_cover,
    trace_faces,
    validate_graph,
)

__all__ = [
    "Angle",
    "AngleAssignment",
    "BASIC_SPEC",
    "Certificate",
    "CoverSpec",
    "MalformedAssignmentError",
    "RotationGraph",
    "UnsupportedInputError",
    "check_cover",
    "trace_faces",
    "validate_graph",
]
