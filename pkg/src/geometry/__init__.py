"""射影平面几何：相交重数、切线、拐点与中心投影。"""

from src.geometry.intersection import (
    COMPONENT,
    FlexClassification,
    IntersectionPoint,
    LineSection,
    classify_flex,
    intersection_multiplicity,
    line_intersections,
    restrict_to_line,
    tangent_line,
    verify_singular,
)
from src.geometry.projection import ProjectionMap, RamifiedFiber, central_projection
from src.geometry.projective import ProjLine, ProjPoint, parse_line, parse_point

__all__ = [
    "COMPONENT",
    "FlexClassification",
    "IntersectionPoint",
    "LineSection",
    "ProjLine",
    "ProjPoint",
    "ProjectionMap",
    "RamifiedFiber",
    "central_projection",
    "classify_flex",
    "intersection_multiplicity",
    "line_intersections",
    "parse_line",
    "parse_point",
    "restrict_to_line",
    "tangent_line",
    "verify_singular",
]
