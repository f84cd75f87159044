"""
Dehn filling of the thickened torus along its meridian and longitude.

The square is wrapped onto an annulus in R^3: a tile point (x, y, z) goes to
angle 2*pi*x, radius 1 + y and height 1 + z. A strand leaving through the
top edge returns to the bottom edge around the outside and underneath the
annulus, which is the filling along the meridian side. The two filling
circles become link components: f(m) is a loop around the cross-section of
the fabric and its returns near angle zero, and f(l) is a horizontal circle
that every return path passes around. f(m) is oriented to link the first
swatch component with linking number +1 and f(l) to link f(m) with -1,
which is the orientation the printed invariant tables are computed in.
"""

import math
from typing import List

import numpy as np

from swatchlink.constants import (
    FILL_MAX_STEP,
    HEIGHT_OFFSET,
    LONGITUDE_RADIUS,
    LONGITUDE_SAMPLES,
    MERIDIAN_BOTTOM_ANGLE,
    MERIDIAN_HEIGHT,
    MERIDIAN_INNER_RADIUS,
    MERIDIAN_OUTER_RADIUS,
    MERIDIAN_TOP_ANGLE,
    RADIUS_OFFSET,
    RETURN_ANGLE_OFFSET,
    RETURN_DEPTH,
    RETURN_FAR_RADIUS,
    RETURN_INNER_RADIUS,
    RETURN_OUTER_RADIUS,
)
from swatchlink.exceptions import OpenComponentError

from .diagram import (
    LONGITUDE_AXIS,
    MERIDIAN_AXIS,
    PlanarDiagram,
    reverse_component,
    swatch_role,
)
from .projection import diagram_from_curves
from .tangle import TorusTangle, edge_of

TWO_PI = 2 * math.pi


def _cartesian(radius: float, angle: float, height: float) -> List[float]:
    return [radius * math.cos(angle), radius * math.sin(angle), height]


def _map_point(point, flip: bool) -> List[float]:
    x, y, z = point
    if flip:
        z = 1 - z
    return _cartesian(RADIUS_OFFSET + y, TWO_PI * x, HEIGHT_OFFSET + z)


def _subdivide(points) -> List:
    result = [points[0]]
    for start, end in zip(points, points[1:]):
        steps = max(1, int(math.ceil(abs(end[0] - start[0]) / FILL_MAX_STEP)))
        for k in range(1, steps + 1):
            t = k / steps
            result.append(tuple(a + t * (b - a) for a, b in zip(start, end)))
    return result


def _upward_return(x: float, z: float, flip: bool) -> List[List[float]]:
    """Path from the top edge at x back to the bottom edge, outside then under"""
    if flip:
        z = 1 - z
    angle = TWO_PI * x
    shifted = angle + TWO_PI * RETURN_ANGLE_OFFSET
    height = HEIGHT_OFFSET + z
    return [
        _cartesian(RETURN_OUTER_RADIUS, angle, height),
        _cartesian(RETURN_FAR_RADIUS, shifted, RETURN_DEPTH),
        _cartesian(RETURN_INNER_RADIUS, shifted, RETURN_DEPTH),
    ]


def component_curve(tangle: TorusTangle, component: int, flip: bool = False):
    """Space curve of one swatch component after filling"""
    strands = tangle.component_strands(component)
    curve: List[List[float]] = []
    for strand in strands:
        points = list(strand.points)
        if strand.closed:
            points = points + [points[0]]
        mapped = [_map_point(p, flip) for p in _subdivide(points)]
        curve.extend(mapped)
        if strand.closed:
            continue
        end = points[-1]
        edge = edge_of(end)
        if edge == "top":
            curve.extend(_upward_return(end[0], end[2], flip))
        elif edge == "bottom":
            curve.extend(reversed(_upward_return(end[0], end[2], flip)))
        elif edge is None:
            raise OpenComponentError(f"strand stops inside the square at {end}")
    return np.array(curve)


def meridian_curve() -> np.ndarray:
    top = TWO_PI * MERIDIAN_TOP_ANGLE
    bottom = TWO_PI * MERIDIAN_BOTTOM_ANGLE
    return np.array(
        [
            _cartesian(MERIDIAN_INNER_RADIUS, top, MERIDIAN_HEIGHT),
            _cartesian(MERIDIAN_OUTER_RADIUS, top, MERIDIAN_HEIGHT),
            _cartesian(MERIDIAN_OUTER_RADIUS, bottom, -MERIDIAN_HEIGHT),
            _cartesian(MERIDIAN_INNER_RADIUS, bottom, -MERIDIAN_HEIGHT),
        ]
    )


def longitude_curve() -> np.ndarray:
    angles = np.linspace(0, TWO_PI, LONGITUDE_SAMPLES, endpoint=False)
    return np.stack(
        [LONGITUDE_RADIUS * np.cos(angles), LONGITUDE_RADIUS * np.sin(angles), 0 * angles],
        axis=1,
    )


def fill_curves(tangle: TorusTangle, fabric_face: str = "front") -> List[np.ndarray]:
    flip = fabric_face == "back"
    curves = [meridian_curve(), longitude_curve()]
    curves += [component_curve(tangle, i, flip) for i in range(tangle.component_count)]
    return curves


def dehn_fill(tangle: TorusTangle, fabric_face: str = "front") -> PlanarDiagram:
    """
    Planar diagram of the filled link: f(m), f(l) and then the swatch
    components in order. `fabric_face` "back" views the fabric from its
    other side, which swaps over and under inside the tile.
    """
    roles = [MERIDIAN_AXIS, LONGITUDE_AXIS] + [
        swatch_role(i) for i in range(tangle.component_count)
    ]
    diagram = diagram_from_curves(fill_curves(tangle, fabric_face), roles)
    return _orient_axes(diagram)


def _orient_axes(diagram: PlanarDiagram) -> PlanarDiagram:
    from swatchlink.invariants.linking import linking_number

    if diagram.component_count > 2 and linking_number(diagram, 0, 2) < 0:
        diagram = reverse_component(diagram, 0)
    if linking_number(diagram, 0, 1) > 0:
        diagram = reverse_component(diagram, 1)
    return diagram
