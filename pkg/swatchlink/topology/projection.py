"""
Planar diagrams of closed polygonal space curves.

Curves are projected to the xy-plane, possibly after a small rotation when
the straight projection is not generic. Crossings are found with vectorised
segment intersection, the higher strand at a crossing is the over-strand,
and arcs are numbered from 1 along the curves in order.
"""

from typing import List, Optional, Sequence, Set, Tuple

import numpy as np

from swatchlink.constants import PROJECTION_EPSILON, PROJECTION_TILTS
from swatchlink.exceptions import DegenerateProjectionError

from .diagram import Crossing, PlanarDiagram


def _clean(curve) -> np.ndarray:
    points = np.asarray(curve, dtype=float)
    if points.ndim != 2 or points.shape[1] != 3:
        raise ValueError("curves must be arrays of 3D points")
    if len(points) > 1 and np.allclose(points[0], points[-1]):
        points = points[:-1]
    keep = [0]
    for i in range(1, len(points)):
        if not np.allclose(points[i], points[keep[-1]]):
            keep.append(i)
    points = points[keep]
    if len(points) < 3:
        raise ValueError("a closed curve needs at least three distinct points")
    return points


def _rotation(tilt: Tuple[float, float]) -> np.ndarray:
    ax, ay = tilt
    rx = np.array([[1, 0, 0], [0, np.cos(ax), -np.sin(ax)], [0, np.sin(ax), np.cos(ax)]])
    ry = np.array([[np.cos(ay), 0, np.sin(ay)], [0, 1, 0], [-np.sin(ay), 0, np.cos(ay)]])
    return ry @ rx


def _intersections(starts: np.ndarray, ends: np.ndarray, adjacent: Set[Tuple[int, int]]):
    """
    Pairs (i, j, t, s) of segments i < j meeting at starts[i] + t d_i =
    starts[j] + s d_j with t, s in [0, 1).

    Raises DegenerateProjectionError when an intersection sits on a vertex
    within tolerance, so that the caller can tilt the projection.
    """
    directions = ends - starts
    found = []
    count = len(starts)
    eps = PROJECTION_EPSILON
    for i in range(count - 1):
        p = starts[i, :2]
        r = directions[i, :2]
        q = starts[i + 1 :, :2]
        s_dir = directions[i + 1 :, :2]
        denom = r[0] * s_dir[:, 1] - r[1] * s_dir[:, 0]
        qp = q - p
        with np.errstate(divide="ignore", invalid="ignore"):
            t = (qp[:, 0] * s_dir[:, 1] - qp[:, 1] * s_dir[:, 0]) / denom
            u = (qp[:, 0] * r[1] - qp[:, 1] * r[0]) / denom
        valid = np.abs(denom) > eps
        near = valid & (t > -1e-7) & (t < 1 + 1e-7) & (u > -1e-7) & (u < 1 + 1e-7)
        hits = valid & (t >= 0) & (t < 1) & (u >= 0) & (u < 1)
        for k in np.nonzero(near)[0]:
            tk, uk = t[k], u[k]
            touching = min(abs(tk), abs(tk - 1), abs(uk), abs(uk - 1)) < 1e-7
            if touching and (i, i + 1 + k) not in adjacent:
                raise DegenerateProjectionError("projection passes through a vertex")
            if hits[k] and not touching:
                found.append((i, i + 1 + k, float(tk), float(uk)))
    return found


def diagram_from_curves(
    curves: Sequence, roles: Optional[Sequence[str]] = None
) -> PlanarDiagram:
    """
    PD code of closed polygonal curves, each given as a sequence of 3D points
    (the closing segment is implied). A curve without crossings becomes a
    crossingless loop.

    Raises:
        DegenerateProjectionError: when no tried projection is generic
    """
    cleaned = [_clean(curve) for curve in curves]
    last_error = None
    for tilt in PROJECTION_TILTS:
        try:
            return _diagram(cleaned, _rotation(tilt), roles)
        except DegenerateProjectionError as e:
            last_error = e
    raise DegenerateProjectionError(f"no generic projection found: {last_error}")


def _diagram(curves: List[np.ndarray], rotation: np.ndarray, roles) -> PlanarDiagram:
    rotated = [curve @ rotation.T for curve in curves]
    starts = np.concatenate(rotated)
    ends = np.concatenate([np.roll(curve, -1, axis=0) for curve in rotated])
    owner = np.concatenate([np.full(len(c), n) for n, c in enumerate(rotated)])
    local = np.concatenate([np.arange(len(c)) for c in rotated])
    offsets = np.cumsum([0] + [len(c) for c in rotated])

    adjacency = set()
    for n, curve in enumerate(rotated):
        first, last = offsets[n], offsets[n + 1] - 1
        adjacency.update((k, k + 1) for k in range(first, last))
        adjacency.add((first, last))
    pairs = _intersections(starts, ends, adjacency)

    # events along every curve: (segment, parameter, crossing, over)
    events: List[List[Tuple[int, float, int, bool]]] = [[] for _ in rotated]
    directions = ends - starts
    records = []
    for index, (i, j, t, s) in enumerate(pairs):
        zi = starts[i, 2] + t * directions[i, 2]
        zj = starts[j, 2] + s * directions[j, 2]
        if abs(zi - zj) < 1e-6:
            raise DegenerateProjectionError("curves meet in space")
        i_over = zi > zj
        events[owner[i]].append((int(local[i]), t, index, i_over))
        events[owner[j]].append((int(local[j]), s, index, not i_over))
        records.append((i, j, i_over))

    labels = {}
    components = []
    next_label = 1
    for n, curve_events in enumerate(events):
        curve_events.sort()
        m = len(curve_events)
        comp_labels = [next_label + r for r in range(m)]
        next_label += m
        for r, (_, _, index, over) in enumerate(curve_events):
            labels[(index, over)] = (comp_labels[r - 1], comp_labels[r])
        components.append(tuple(comp_labels))

    first_visit = {}
    for curve_events in events:
        for _, _, index, _ in curve_events:
            first_visit.setdefault(index, len(first_visit))

    crossings = [None] * len(pairs)
    for index, (i, j, i_over) in enumerate(records):
        over_seg, under_seg = (i, j) if i_over else (j, i)
        u = directions[under_seg, :2]
        v = directions[over_seg, :2]
        sign = 1 if v[0] * u[1] - v[1] * u[0] > 0 else -1
        a, c = labels[(index, False)]
        over_in, over_out = labels[(index, True)]
        if sign > 0:
            arcs = (a, over_out, c, over_in)
        else:
            arcs = (a, over_in, c, over_out)
        crossings[first_visit[index]] = Crossing(arcs, sign)

    return PlanarDiagram(
        tuple(crossings), tuple(components), tuple(roles) if roles else None
    )
