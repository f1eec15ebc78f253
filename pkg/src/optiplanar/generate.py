"""Constructors for optimal 2-planar and 3-planar drawings.

The construction is face-local.  A skeleton (a plane multigraph whose
faces all have length 5, respectively 6) is filled face by face with a
fixed chord pattern:

- pentagonal faces receive the 5 chords connecting positions at cyclic
  distance 2, which pairwise cross like a pentagram (every chord is
  crossed exactly twice);
- hexagonal faces receive the 6 distance-2 chords plus 2 of the 3
  diagonals through opposite positions (middle chords); one middle chord
  must stay out, otherwise some chord would collect more than 3
  crossings.

Chords connect *positions* of the face walk, not vertices.  On a
non-simple face the same vertex occupies several positions, so a chord
may come out as a self-loop or as one of several parallel edges; that is
intended and the result stays valid as long as no two parallel chords
are homotopic.

To turn a pattern into a planarization the face is modelled geometrically:
walk positions are placed in convex position on a parabola with exact
rational coordinates and chords become straight segments.  Straight
chords in convex position cross exactly when their position pairs
strictly interleave, so the model realizes precisely the intended
pattern, and the order of crossings along each chord and the angular
order of segments around every point can be read off the coordinates
with exact arithmetic.  The modelled face is then spliced into the host
rotation system corner by corner.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from typing import Mapping, Sequence

from .drawing import Drawing, validate
from .errors import (
    BadFaceLength,
    FaceNotEmpty,
    HomotopicSkeleton,
    OddPathCount,
)
from .plane import (
    FaceWalk,
    PlaneMultigraph,
    is_homotopic_loop,
    is_homotopic_pair,
)

Point = tuple[Fraction, Fraction]


# --- exact geometry of one patterned face ---------------------------------


def _cross(a: Point, b: Point) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def _segment_crossing(a1: Point, b1: Point, a2: Point, b2: Point):
    """Strict interior crossing of two segments, or None.

    Returns (t, u, point) with the crossing at parameter t along the
    first segment and u along the second, both strictly inside (0, 1).
    """
    r = _sub(b1, a1)
    s = _sub(b2, a2)
    denom = _cross(r, s)
    if denom == 0:
        return None
    q = _sub(a2, a1)
    t = _cross(q, s) / denom
    u = _cross(q, r) / denom
    if not (0 < t < 1 and 0 < u < 1):
        return None
    point = (a1[0] + t * r[0], a1[1] + t * r[1])
    return (t, u, point)


def _clockwise_in_cone(items):
    """Sort (direction, payload) pairs clockwise; directions span < pi."""

    def cmp(x, y):
        c = _cross(x[0], y[0])
        if c < 0:
            return -1
        if c > 0:
            return 1
        raise AssertionError("collinear directions inside a face corner")

    return sorted(items, key=cmp_to_key(cmp))


def _clockwise_full_circle(items):
    """Sort (direction, payload) pairs in clockwise cyclic order."""

    def half(d: Point) -> int:
        # 0 for the upper half plane (including the positive x-axis)
        return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1

    def cmp(x, y):
        hx, hy = half(x[0]), half(y[0])
        if hx != hy:
            return -1 if hx < hy else 1
        c = _cross(x[0], y[0])
        if c > 0:
            return -1
        if c < 0:
            return 1
        raise AssertionError("collinear directions at a crossing point")

    return list(reversed(sorted(items, key=cmp_to_key(cmp))))


class _FacePattern:
    """Exact geometric model of one face filled with a chord set.

    Positions 0..s-1 sit at (i, i*i); the polygon walks them in convex
    position.  For each chord the model knows its crossings in order and
    for each position the clockwise order in which chord ends leave the
    corner, starting from the boundary direction towards the previous
    position.
    """

    def __init__(self, s: int, chords: Sequence[tuple[int, int]], limit: int):
        self.s = s
        self.chords = list(chords)
        pts = [(Fraction(i), Fraction(i * i)) for i in range(s)]
        self.points = pts

        # crossings[c] = sorted list of (t, other chord index, point)
        self.crossings: list[list[tuple[Fraction, int, Point]]] = [
            [] for _ in self.chords
        ]
        self.pairs: list[tuple[int, int, Point]] = []
        for i, (a1, b1) in enumerate(self.chords):
            for j in range(i + 1, len(self.chords)):
                a2, b2 = self.chords[j]
                hit = _segment_crossing(pts[a1], pts[b1], pts[a2], pts[b2])
                if hit is None:
                    continue
                t, u, point = hit
                self.crossings[i].append((t, j, point))
                self.crossings[j].append((u, i, point))
                self.pairs.append((i, j, point))
        for i, lst in enumerate(self.crossings):
            lst.sort()
            ts = [t for t, _, _ in lst]
            if len(set(ts)) != len(ts):
                raise AssertionError(
                    f"coincident crossing points on chord {self.chords[i]}")
            if len(lst) > limit:
                raise ValueError(
                    f"chord {self.chords[i]} would be crossed {len(lst)} "
                    f"times, more than the {limit} allowed")

    def corner_ends(self, i: int) -> list[tuple[int, str]]:
        """Chord ends leaving position i, clockwise across the corner.

        Returns (chord index, 'start'|'end') pairs ordered clockwise
        starting from the boundary direction towards position i-1.
        """
        pts = self.points
        items = []
        for c, (a, b) in enumerate(self.chords):
            if a == i:
                items.append((_sub(pts[b], pts[a]), (c, "start")))
            if b == i:
                items.append((_sub(pts[a], pts[b]), (c, "end")))
        if not items:
            return []
        prev_dir = _sub(pts[(i - 1) % self.s], pts[i])
        ordered = _clockwise_in_cone([(prev_dir, None)] + items)
        k = next(idx for idx, it in enumerate(ordered) if it[1] is None)
        rolled = ordered[k + 1:] + ordered[:k]
        return [payload for _, payload in rolled]

    def chord_direction(self, c: int) -> Point:
        a, b = self.chords[c]
        return _sub(self.points[b], self.points[a])


def pattern_chords(k: int, missing_middle: int = 0) -> list[tuple[int, int]]:
    """The chord pattern inserted into each face for a given k."""
    if k == 2:
        return [(i, (i + 2) % 5) for i in range(5)]
    if k == 3:
        if missing_middle not in (0, 1, 2):
            raise ValueError("missing_middle must be 0, 1 or 2")
        shorts = [(i, (i + 2) % 6) for i in range(6)]
        middles = [(i, i + 3) for i in range(3) if i != missing_middle]
        return shorts + middles
    raise ValueError(f"k must be 2 or 3, got {k}")


# --- incremental drawing assembly ------------------------------------------


class DrawingBuilder:
    """Grows a drawing from a skeleton by filling faces with chords.

    The skeleton's darts and vertices keep their ids; new planarization
    vertices (crossings), darts, and base edges are numbered on from the
    current maxima, so construction is deterministic.
    """

    def __init__(self, skeleton: PlaneMultigraph):
        self.skeleton = skeleton
        self.rot: dict[int, list[int]] = {
            v: list(skeleton.rotation(v)) for v in sorted(skeleton.vertices)
        }
        self.twin: dict[int, int] = {d: skeleton.twin(d)
                                     for d in skeleton.darts}
        self._origin: dict[int, int] = {d: skeleton.origin(d)
                                        for d in skeleton.darts}
        self.base_edges: dict[int, tuple[int, int]] = {}
        self.edge_paths: dict[int, tuple[int, ...]] = {}
        for i, e in enumerate(sorted(skeleton.edges, key=min)):
            d = min(e)
            self.base_edges[i] = (skeleton.origin(d), skeleton.head(d))
            self.edge_paths[i] = (d,)
        self.crossing_vertices: set[int] = set()
        self._next_dart = max(skeleton.darts, default=-1) + 1
        self._next_vertex = max(skeleton.vertices, default=-1) + 1
        self._next_edge = len(self.base_edges)
        self._filled: set[frozenset] = set()

    def _new_vertex(self) -> int:
        v = self._next_vertex
        self._next_vertex += 1
        self.rot[v] = []
        return v

    def _new_dart(self, origin: int) -> int:
        d = self._next_dart
        self._next_dart += 1
        self._origin[d] = origin
        return d

    def finish(self, metadata: Mapping | None = None) -> Drawing:
        plane = PlaneMultigraph.build(self.rot, self.twin)
        return Drawing(plane, frozenset(self.crossing_vertices),
                       self.base_edges, self.edge_paths, metadata)


def _insert_chords(builder: DrawingBuilder, face: FaceWalk,
                   chords: Sequence[tuple[int, int]], limit: int) -> list[int]:
    key = frozenset(face.darts)
    if key in builder._filled:
        raise FaceNotEmpty(f"face {face.darts} already has its pattern")
    builder._filled.add(key)

    pattern = _FacePattern(face.length, chords, limit)
    s = face.length

    # one crossing vertex per crossing pair, in deterministic pair order
    xvertex: dict[tuple[int, int], int] = {}
    for c1, c2, _point in sorted(pattern.pairs, key=lambda p: (p[0], p[1])):
        xvertex[(c1, c2)] = builder._new_vertex()
    builder.crossing_vertices.update(xvertex.values())

    # chord paths: subdivide each chord at its crossings, in order
    first_dart: dict[int, int] = {}
    last_twin: dict[int, int] = {}
    xdarts: dict[int, list[tuple[Point, int]]] = {
        v: [] for v in xvertex.values()
    }
    new_edge_ids = []
    for c, (a, b) in enumerate(pattern.chords):
        stops: list[int] = [face.vertices[a]]
        for t, other, _point in pattern.crossings[c]:
            pair = (min(c, other), max(c, other))
            stops.append(xvertex[pair])
        stops.append(face.vertices[b])
        direction = pattern.chord_direction(c)
        back = (-direction[0], -direction[1])
        path = []
        for u, w in zip(stops, stops[1:]):
            du = builder._new_dart(u)
            dw = builder._new_dart(w)
            builder.twin[du] = dw
            builder.twin[dw] = du
            path.append(du)
            if u in xdarts:
                xdarts[u].append((direction, du))
            if w in xdarts:
                xdarts[w].append((back, dw))
        first_dart[c] = path[0]
        last_twin[c] = builder.twin[path[-1]]
        eid = builder._next_edge
        builder._next_edge += 1
        builder.base_edges[eid] = (face.vertices[a], face.vertices[b])
        builder.edge_paths[eid] = tuple(path)
        new_edge_ids.append(eid)

    # crossing vertices: clockwise angular order makes the two chords
    # alternate automatically
    for v in sorted(xdarts):
        ordered = _clockwise_full_circle(xdarts[v])
        builder.rot[v] = [d for _, d in ordered]

    # splice chord ends into the host corners
    for i in range(s):
        ends = pattern.corner_ends(i)
        if not ends:
            continue
        v = face.vertices[i]
        darts = []
        for c, which in ends:
            darts.append(first_dart[c] if which == "start" else last_twin[c])
        rotation = builder.rot[v]
        idx = rotation.index(face.darts[i])
        prev = rotation[idx - 1]
        if prev != builder.twin[face.darts[(i - 1) % s]]:
            raise AssertionError(
                f"corner {i} of face {face.darts} is no longer intact")
        builder.rot[v][idx:idx] = darts
    return new_edge_ids


def insert_pentagram(builder: DrawingBuilder, face: FaceWalk) -> list[int]:
    """Add the 5 pairwise-crossing distance-2 chords to a pentagonal face.

    Returns the new base edge ids.  Every chord ends up with exactly two
    crossings.

    Raises:
        BadFaceLength: the face does not have length 5.
        FaceNotEmpty: the face was already filled.
    """
    if face.length != 5:
        raise BadFaceLength(f"pentagram needs a face of length 5, "
                            f"got {face.length}")
    return _insert_chords(builder, face, pattern_chords(2), 2)


def insert_hexagon_pattern(builder: DrawingBuilder, face: FaceWalk,
                           missing_middle: int = 0) -> list[int]:
    """Add 8 chords to a hexagonal face: 6 short ones and 2 middle chords.

    ``missing_middle`` picks which of the three middle chords (position
    pairs (0,3), (1,4), (2,5)) stays out.  Keeping all three is refused
    because a middle chord would then be crossed four times.

    Raises:
        BadFaceLength: the face does not have length 6.
        FaceNotEmpty: the face was already filled.
    """
    if face.length != 6:
        raise BadFaceLength(f"the hexagon pattern needs a face of length 6, "
                            f"got {face.length}")
    return _insert_chords(builder, face,
                          pattern_chords(3, missing_middle), 3)


# --- skeleton families ------------------------------------------------------


def theta_pentagulation(p: int) -> PlaneMultigraph:
    """Two poles joined by p internally disjoint paths, all faces length 5.

    Path lengths alternate 2, 3 around the poles, so consecutive paths
    bound pentagonal faces; p must be even.  p = 2 gives the 5-cycle.
    Yields n = 2 + 3p/2 vertices, m = 5p/2 edges and f = p faces.

    Raises:
        OddPathCount: p is odd.
        ValueError: p < 2.
    """
    if p < 2:
        raise ValueError(f"need at least 2 paths, got {p}")
    if p % 2:
        raise OddPathCount(f"path lengths alternate 2 and 3, so the "
                           f"number of paths must be even, got {p}")
    return _theta([2 if i % 2 == 0 else 3 for i in range(p)])


def theta_hexangulation(p: int) -> PlaneMultigraph:
    """Two poles joined by p paths of length 3, all faces length 6.

    p = 1 gives a path on 4 vertices whose single face is the non-simple
    hexagonal walk.  Yields n = 2p + 2, m = 3p, f = p.
    """
    if p < 1:
        raise ValueError(f"need at least 1 path, got {p}")
    return _theta([3] * p)


def _theta(lengths: list[int]) -> PlaneMultigraph:
    rot: dict[int, list[int]] = {0: [], 1: []}
    twin: dict[int, int] = {}
    pole0_order: list[int] = []
    pole1_order: list[int] = []
    next_vertex = 2
    next_dart = 0
    for length in lengths:
        stops = [0] + list(range(next_vertex, next_vertex + length - 1)) + [1]
        next_vertex += length - 1
        prev_back = None
        for u, w in zip(stops, stops[1:]):
            du, dw = next_dart, next_dart + 1
            next_dart += 2
            twin[du] = dw
            twin[dw] = du
            if u == 0:
                pole0_order.append(du)
            else:
                rot[u] = [du, prev_back]
            if w == 1:
                pole1_order.append(dw)
            prev_back = dw
    rot[0] = pole0_order
    rot[1] = list(reversed(pole1_order))
    return PlaneMultigraph.build(rot, twin)


def dodecahedron() -> PlaneMultigraph:
    """The dodecahedron: 20 vertices, 30 edges, 12 pentagonal faces.

    The unique 3-regular planar graph of girth 5 on 20 vertices; filling
    its faces with pentagrams yields a simple optimal 2-planar graph.
    """
    T = list(range(0, 5))
    U = list(range(5, 10))
    L = list(range(10, 15))
    B = list(range(15, 20))
    faces: list[tuple[int, ...]] = [tuple(T)]
    for i in range(5):
        j = (i + 1) % 5
        faces.append((T[j], T[i], U[i], L[i], U[j]))
    for i in range(5):
        j = (i + 1) % 5
        faces.append((U[j], L[i], B[i], B[j], L[j]))
    faces.append(tuple(reversed(B)))
    return PlaneMultigraph.from_faces(faces)


# --- whole-drawing generation ----------------------------------------------


def generate_optimal(k: int, skeleton: PlaneMultigraph, *,
                     missing_middle: int = 0,
                     metadata: Mapping | None = None) -> Drawing:
    """Fill every face of a skeleton with its chord pattern.

    Args:
        k: 2 for pentagonal skeletons, 3 for hexagonal ones.
        skeleton: connected plane multigraph, every face of length 5
            (k = 2) or 6 (k = 3), no homotopic parallel edges or loops.
        missing_middle: which middle chord to omit per hexagonal face.
        metadata: stored on the resulting drawing unchanged.

    Returns:
        A validated Drawing realizing an optimal k-planar graph.

    Raises:
        BadFaceLength: some face has the wrong length.
        HomotopicSkeleton: the skeleton has a forbidden duplicate.
        ValueError: k is not 2 or 3, or the skeleton is disconnected.
    """
    if k not in (2, 3):
        raise ValueError(f"k must be 2 or 3, got {k}")
    if skeleton.n < 2 or not skeleton.is_connected():
        raise ValueError("the skeleton must be connected with at least "
                         "2 vertices")
    # homotopic duplicates also produce short faces, so this must come
    # before the face length check to be reported as what it is
    _reject_homotopic(skeleton)
    want = 5 if k == 2 else 6
    for idx, face in enumerate(skeleton.faces()):
        if face.length != want:
            raise BadFaceLength(
                f"face {idx} has length {face.length}, need {want}")

    builder = DrawingBuilder(skeleton)
    for face in skeleton.faces():
        if k == 2:
            insert_pentagram(builder, face)
        else:
            insert_hexagon_pattern(builder, face, missing_middle)
    d = builder.finish(metadata)
    problems = validate(d)
    if problems:
        raise AssertionError(f"construction produced an invalid drawing: "
                             f"{problems[0]}")
    return d


def _reject_homotopic(skeleton: PlaneMultigraph) -> None:
    groups: dict[tuple, list] = {}
    for e in sorted(skeleton.edges, key=min):
        u, v = skeleton.edge_endpoints(e)
        if u == v:
            if is_homotopic_loop(skeleton, e):
                raise HomotopicSkeleton(
                    f"skeleton loop at vertex {u} bounds an empty region")
        groups.setdefault(tuple(sorted((u, v))), []).append(e)
    for key, edges in sorted(groups.items()):
        for i, e1 in enumerate(edges):
            for e2 in edges[i + 1:]:
                if is_homotopic_pair(skeleton, e1, e2):
                    raise HomotopicSkeleton(
                        f"skeleton has homotopic parallel edges "
                        f"between {key[0]} and {key[1]}")
