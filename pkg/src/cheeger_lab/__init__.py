"""Cheeger constants of planar convex bodies and their parallel bodies."""

from .cheeger import (
    CheegerResult,
    DomainError,
    cheeger,
    derivative_fd,
    inner_area,
    inner_area_gap,
    polygon_derivative_identity,
    scaled_invariant,
    tangential_closed_form_h,
)
from .geom import (
    ConvexPolygon,
    GeometryError,
    Point2,
    PointKernel,
    RoundedBody,
    Segment,
    area,
    chebyshev_center,
    disk,
    erode,
    form_body,
    inradius,
    is_tangential,
    is_tangential_body,
    parallel_body,
    perimeter,
    polygon,
    rectangle,
    regular_polygon,
    scaled,
    square,
    stadium,
    tau,
    to_polyline,
    triangle,
)
from .svg import render_svg
from .verify import CheckReport, ScanSeries, default_corpus, run_suite

__version__ = "0.1.0"
