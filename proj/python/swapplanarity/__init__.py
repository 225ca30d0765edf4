"""Swap Planarity puzzle toolkit."""

from ._core import (
    EquivalenceCertificate,
    GenerationError,
    Instance,
    InstanceFormatError,
    InvalidInstance,
    SearchLimitExceeded,
    SolveReport,
    UnreachableTarget,
    basic_construction_fixture,
    convex_hull,
    cycle_fixture,
    delaunay_edges,
    delta_ok,
    eight_cycle_fixture,
    enumeration_size,
    generate_level,
    generate_points,
    in_circle,
    min_swaps,
    orient,
    route_to_assignment,
    same_order_type,
    segments_cross,
    swap_equivalent,
    validate_delta_general_position,
)

__all__ = [name for name in dir() if not name.startswith("_")]
