"""Proper-crossing detection between straight-line edges and acute crossing angles.

Two segments cross properly when they intersect at a single point interior
to both. Segments that share an endpoint, touch endpoint-to-interior, are
parallel, or overlap collinearly do not cross. Existence is decided by exact
sign-of-orientation tests (signed doubled triangle areas compared against
zero); only once a crossing is established is the 2x2 linear system solved
for the intersection point, so rounding in the point solve can never flip
the crossing decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, Layout


@dataclass(frozen=True)
class Crossing:
    """A properly intersecting pair of edges.

    edge_a < edge_b are edge ids (indices into graph.edges); theta is the
    acute crossing angle in degrees, in (0, 90].
    """

    edge_a: int
    edge_b: int
    point: tuple[float, float]
    theta: float


def _orient(a, b, c) -> float:
    """Signed doubled area of triangle (a, b, c); >0 for a left turn."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _opposite(x: float, y: float) -> bool:
    return (x > 0 and y < 0) or (x < 0 and y > 0)


def proper_intersection(seg1, seg2):
    """Intersection point of two open segments, or None.

    Returns (x, y) iff the segments cross at a single interior point of
    both. All measure-zero contacts (shared endpoints, endpoint-on-interior,
    collinear overlap) and disjoint/parallel configurations return None.
    """
    p1, p2 = seg1
    p3, p4 = seg2
    o1 = _orient(p1, p2, p3)
    o2 = _orient(p1, p2, p4)
    o3 = _orient(p3, p4, p1)
    o4 = _orient(p3, p4, p2)
    if not (_opposite(o1, o2) and _opposite(o3, o4)):
        return None
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = p4[0] - p3[0], p4[1] - p3[1]
    denom = rx * sy - ry * sx
    t = ((p3[0] - p1[0]) * sy - (p3[1] - p1[1]) * sx) / denom
    return (p1[0] + t * rx, p1[1] + t * ry)


def crossing_angle(seg1, seg2) -> float:
    """Acute angle in degrees between two segments, in (0, 90].

    Defined for properly intersecting segments (for which the directions
    cannot be parallel, so the angle is strictly positive). Raises
    ValueError for a zero-length segment.
    """
    p1, p2 = seg1
    p3, p4 = seg2
    ux, uy = p2[0] - p1[0], p2[1] - p1[1]
    vx, vy = p4[0] - p3[0], p4[1] - p3[1]
    nu = math.sqrt(ux * ux + uy * uy)
    nv = math.sqrt(vx * vx + vy * vy)
    if nu < 1e-12 or nv < 1e-12:
        raise ValueError("crossing_angle is undefined for a zero-length segment")
    c = abs(ux * vx + uy * vy) / (nu * nv)
    return math.degrees(math.acos(min(c, 1.0)))


def _crossing_arrays(graph: Graph, pos: np.ndarray):
    """Vectorized proper-crossing scan over all non-adjacent edge pairs.

    Returns (pairs, quads, points, thetas) where pairs is (K, 2) edge ids,
    quads is (K, 4) vertex ids [a, b, c, d] of the two edges, points is
    (K, 2) intersection coordinates and thetas is (K,) acute angles in
    degrees. The existence test is the exact sign-of-orientation predicate,
    vectorized with identical expressions to the scalar path.
    """
    cand = graph.nonadjacent_edge_pairs
    empty = (
        np.empty((0, 2), dtype=np.int64),
        np.empty((0, 4), dtype=np.int64),
        np.empty((0, 2), dtype=np.float64),
        np.empty(0, dtype=np.float64),
    )
    if cand.shape[0] == 0:
        return empty
    ia, ib, ic, id_ = graph.pair_endpoint_ids
    pe1, pe2 = graph.pair_edge_ids
    e = graph.edge_array
    px = np.ascontiguousarray(pos[:, 0])
    py = np.ascontiguousarray(pos[:, 1])

    # Bounding-box prefilter. Overlapping closed boxes are a necessary
    # condition for a proper crossing and the test is comparison-only, so it
    # can never flip the exact orientation decision below.
    ex0, ex1 = px[e[:, 0]], px[e[:, 1]]
    ey0, ey1 = py[e[:, 0]], py[e[:, 1]]
    lox, hix = np.minimum(ex0, ex1), np.maximum(ex0, ex1)
    loy, hiy = np.minimum(ey0, ey1), np.maximum(ey0, ey1)
    boxed = (lox[pe1] <= hix[pe2]) & (lox[pe2] <= hix[pe1]) \
        & (loy[pe1] <= hiy[pe2]) & (loy[pe2] <= hiy[pe1])
    if not boxed.any():
        return empty
    sub = np.nonzero(boxed)[0]
    ia, ib, ic, id_ = ia[sub], ib[sub], ic[sub], id_[sub]

    x1, y1 = px[ia], py[ia]
    x2, y2 = px[ib], py[ib]
    x3, y3 = px[ic], py[ic]
    x4, y4 = px[id_], py[id_]
    rx, ry = x2 - x1, y2 - y1
    sx, sy = x4 - x3, y4 - y3
    o1 = rx * (y3 - y1) - ry * (x3 - x1)
    o2 = rx * (y4 - y1) - ry * (x4 - x1)
    o3 = sx * (y1 - y3) - sy * (x1 - x3)
    o4 = sx * (y2 - y3) - sy * (x2 - x3)
    mask = (((o1 > 0) & (o2 < 0)) | ((o1 < 0) & (o2 > 0))) \
        & (((o3 > 0) & (o4 < 0)) | ((o3 < 0) & (o4 > 0)))
    if not mask.any():
        return empty
    idx = np.nonzero(mask)[0]
    x1, y1, x3, y3 = x1[idx], y1[idx], x3[idx], y3[idx]
    rx, ry, sx, sy = rx[idx], ry[idx], sx[idx], sy[idx]
    denom = rx * sy - ry * sx
    t = ((x3 - x1) * sy - (y3 - y1) * sx) / denom
    points = np.stack([x1 + t * rx, y1 + t * ry], axis=1)
    dot = rx * sx + ry * sy
    nr = np.sqrt(rx * rx + ry * ry)
    ns = np.sqrt(sx * sx + sy * sy)
    thetas = np.degrees(np.arccos(np.minimum(np.abs(dot) / (nr * ns), 1.0)))
    pair_rows = sub[idx]
    pairs = cand[pair_rows]
    quads = np.stack([ia[idx], ib[idx], ic[idx], id_[idx]], axis=1)
    return pairs, quads, points, thetas


def find_crossings(graph: Graph, layout: Layout) -> list[Crossing]:
    """All properly crossing non-adjacent edge pairs of a drawing.

    Each crossing pair is listed once (edge_a < edge_b, lexicographic order)
    with its intersection point and acute angle. Pairs of edges that share
    an endpoint are never candidates. The scan is a naive pairwise pass.
    """
    if layout.n != graph.n:
        raise ValueError(f"layout has {layout.n} positions for a graph with {graph.n} vertices")
    pairs, _, points, thetas = _crossing_arrays(graph, layout.positions)
    return [
        Crossing(int(pairs[k, 0]), int(pairs[k, 1]),
                 (float(points[k, 0]), float(points[k, 1])), float(thetas[k]))
        for k in range(pairs.shape[0])
    ]
