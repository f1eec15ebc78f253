"""Rotation-system multigraphs embedded on the sphere.

The embedding carrier is a set of darts (directed half-edges, one per edge
end).  Every dart ``d`` has a twin ``twin(d)``, the opposite half of the
same edge, and an origin vertex; the clockwise cyclic order of darts
leaving each vertex (its *rotation*) fixes the embedding.

Face tracing follows one convention throughout the package: the successor
of dart ``d`` along its face is the rotation successor of ``twin(d)``.
The orbits of that permutation partition the darts; each orbit is a face
walk.  Walks may repeat vertices and edges, so non-simple faces (and the
multigraphs that produce them) are first-class citizens.

Self-loops contribute two darts to the same rotation and parallel edges
are unrestricted.  A rotation system is accepted only if every connected
component satisfies Euler's relation ``n - m + f = 2``, i.e. it really
describes an embedding on the sphere.  There is no distinguished outer
face; callers that need one mark a face index externally.

Vertex and dart ids are small integers.  All objects are immutable after
construction; operations that look like mutation return new graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    DanglingTwin,
    DuplicateDart,
    NonZeroGenus,
    NotLoop,
    NotParallel,
    OpenCurve,
)

Vertex = int
Dart = int
Edge = frozenset  # frozenset of the two darts of an edge


@dataclass(frozen=True)
class FaceWalk:
    """One face of an embedded multigraph.

    ``darts[i]`` leaves ``vertices[i]``; position ``i`` of the walk is the
    corner of the face at ``vertices[i]`` between the twin of
    ``darts[i - 1]`` and ``darts[i]``.  The walk starts at its smallest
    dart id, which makes face lists deterministic.
    """

    darts: tuple[Dart, ...]
    vertices: tuple[Vertex, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)


class PlaneMultigraph:
    """An immutable sphere-embedded multigraph given by rotations and twins.

    Args:
        rotations: mapping from vertex id to the clockwise sequence of
            darts leaving it.  Vertices with empty rotations are allowed
            (isolated vertices; they count as their own component with a
            single face).
        twin: mapping pairing each dart with its opposite half.  Entries
            may be given once per edge or for both darts; the involution
            is completed and checked either way.

    Raises:
        DuplicateDart: a dart appears twice across the rotations.
        DanglingTwin: the twin map misses a dart, points to an unknown
            dart, has a fixed point, or is not an involution.
        NonZeroGenus: some component violates n - m + f = 2.
    """

    __slots__ = (
        "_rotations", "_twin", "_origin", "_faces", "_face_of",
        "_edges", "_component_of", "_n_components",
    )

    def __init__(self, rotations: Mapping[Vertex, Sequence[Dart]],
                 twin: Mapping[Dart, Dart]):
        rot: dict[Vertex, tuple[Dart, ...]] = {
            v: tuple(ds) for v, ds in rotations.items()
        }
        origin: dict[Dart, Vertex] = {}
        for v, ds in rot.items():
            for d in ds:
                if d in origin:
                    raise DuplicateDart(f"dart {d} occurs more than once")
                origin[d] = v

        full: dict[Dart, Dart] = {}
        for d, e in twin.items():
            for a, b in ((d, e), (e, d)):
                if a in full and full[a] != b:
                    raise DanglingTwin(f"dart {a} has conflicting twins")
                full[a] = b
        for d in origin:
            if d not in full:
                raise DanglingTwin(f"dart {d} has no twin")
            e = full[d]
            if e == d:
                raise DanglingTwin(f"dart {d} is its own twin")
            if e not in origin:
                raise DanglingTwin(f"twin {e} of dart {d} is not a dart")
        for d in full:
            if d not in origin:
                raise DanglingTwin(f"twin map mentions unknown dart {d}")

        self._rotations = rot
        self._twin = full
        self._origin = origin
        self._edges = frozenset(
            frozenset((d, full[d])) for d in origin
        )
        self._faces, self._face_of = self._trace_faces()
        self._component_of, self._n_components = self._components()
        self._check_genus()

    # -- construction helpers -------------------------------------------

    @classmethod
    def build(cls, rotations: Mapping[Vertex, Sequence[Dart]],
              twin: Mapping[Dart, Dart]) -> "PlaneMultigraph":
        """Build and fully validate a rotation system."""
        return cls(rotations, twin)

    @classmethod
    def from_faces(cls, faces: Iterable[Sequence[Vertex]]) -> "PlaneMultigraph":
        """Build a rotation system from consistently oriented face cycles.

        Each face is a cyclic vertex sequence.  Every ordered pair (a, b)
        must occur exactly once over all faces (so the input cannot have
        parallel edges or self-loops); the twin of the dart a->b is the
        dart b->a of the neighboring face.  Rotations are recovered from
        the face successor permutation.
        """
        darts_by_pair: dict[tuple[Vertex, Vertex], Dart] = {}
        face_next: dict[Dart, Dart] = {}
        origin: dict[Dart, Vertex] = {}
        next_id = 0
        for face in faces:
            ids = []
            k = len(face)
            for i in range(k):
                a, b = face[i], face[(i + 1) % k]
                if a == b:
                    raise ValueError("from_faces cannot express self-loops")
                if (a, b) in darts_by_pair:
                    raise ValueError(
                        f"ordered pair {(a, b)} occurs twice; faces are not "
                        "consistently oriented or the graph is not simple")
                darts_by_pair[(a, b)] = next_id
                origin[next_id] = a
                ids.append(next_id)
                next_id += 1
            for i in range(k):
                face_next[ids[i]] = ids[(i + 1) % k]
        twin: dict[Dart, Dart] = {}
        for (a, b), d in darts_by_pair.items():
            try:
                twin[d] = darts_by_pair[(b, a)]
            except KeyError:
                raise ValueError(f"edge {(a, b)} is on only one face") from None
        # The face successor of d must be the rotation successor of twin(d),
        # so the rotation successor of e is face_next[twin(e)].
        sigma = {e: face_next[twin[e]] for e in origin}
        rotations: dict[Vertex, list[Dart]] = {}
        placed: set[Dart] = set()
        for d in sorted(origin):
            if d in placed:
                continue
            cycle = [d]
            placed.add(d)
            e = sigma[d]
            while e != d:
                if origin[e] != origin[d]:
                    raise ValueError("face data does not close up at a vertex")
                cycle.append(e)
                placed.add(e)
                e = sigma[e]
            rotations.setdefault(origin[d], [])
            if rotations[origin[d]]:
                raise ValueError(
                    f"vertex {origin[d]} gets two rotation cycles; faces "
                    "do not describe a sphere embedding")
            rotations[origin[d]] = cycle
        return cls(rotations, twin)

    # -- basic accessors --------------------------------------------------

    @property
    def vertices(self) -> frozenset:
        return frozenset(self._rotations)

    @property
    def darts(self) -> frozenset:
        return frozenset(self._origin)

    @property
    def edges(self) -> frozenset:
        """Edges as frozensets of their two darts."""
        return self._edges

    @property
    def n(self) -> int:
        return len(self._rotations)

    @property
    def m(self) -> int:
        return len(self._origin) // 2

    @property
    def f(self) -> int:
        return len(self._faces) + sum(
            1 for v, ds in self._rotations.items() if not ds
        )

    def rotation(self, v: Vertex) -> tuple[Dart, ...]:
        return self._rotations[v]

    def rotations(self) -> dict[Vertex, tuple[Dart, ...]]:
        return dict(self._rotations)

    def twin(self, d: Dart) -> Dart:
        return self._twin[d]

    def origin(self, d: Dart) -> Vertex:
        return self._origin[d]

    def head(self, d: Dart) -> Vertex:
        return self._origin[self._twin[d]]

    def degree(self, v: Vertex) -> int:
        return len(self._rotations[v])

    def edge_of(self, d: Dart) -> Edge:
        return frozenset((d, self._twin[d]))

    def edge_endpoints(self, e: Edge) -> tuple[Vertex, Vertex]:
        a, b = sorted(e)
        return (self._origin[a], self._origin[b])

    def rotation_successor(self, d: Dart) -> Dart:
        ds = self._rotations[self._origin[d]]
        return ds[(ds.index(d) + 1) % len(ds)]

    def face_successor(self, d: Dart) -> Dart:
        """The next dart along the face of d (see the module docstring)."""
        return self.rotation_successor(self._twin[d])

    def faces(self) -> tuple[FaceWalk, ...]:
        """All face walks, ordered by their smallest dart id.

        Isolated vertices contribute to the face count ``f`` but have no
        walk, so they do not appear here.
        """
        return self._faces

    def face_of(self, d: Dart) -> int:
        """Index into faces() of the face containing dart d."""
        return self._face_of[d]

    def component_of(self, v: Vertex) -> int:
        return self._component_of[v]

    @property
    def n_components(self) -> int:
        return self._n_components

    def is_connected(self) -> bool:
        return self._n_components <= 1

    def __repr__(self) -> str:
        return (f"PlaneMultigraph(n={self.n}, m={self.m}, f={self.f}, "
                f"components={self._n_components})")

    # -- internals ---------------------------------------------------------

    def _trace_faces(self):
        faces: list[FaceWalk] = []
        face_of: dict[Dart, int] = {}
        for start in sorted(self._origin):
            if start in face_of:
                continue
            walk = [start]
            d = self.face_successor(start)
            while d != start:
                walk.append(d)
                d = self.face_successor(d)
            idx = len(faces)
            for d in walk:
                face_of[d] = idx
            faces.append(FaceWalk(
                darts=tuple(walk),
                vertices=tuple(self._origin[d] for d in walk),
            ))
        return tuple(faces), face_of

    def _components(self):
        comp: dict[Vertex, int] = {}
        label = 0
        for v0 in sorted(self._rotations):
            if v0 in comp:
                continue
            comp[v0] = label
            queue = deque([v0])
            while queue:
                v = queue.popleft()
                for d in self._rotations[v]:
                    w = self.head(d)
                    if w not in comp:
                        comp[w] = label
                        queue.append(w)
            label += 1
        return comp, label

    def _check_genus(self):
        n = [0] * self._n_components
        m2 = [0] * self._n_components
        f = [0] * self._n_components
        for v, ds in self._rotations.items():
            c = self._component_of[v]
            n[c] += 1
            m2[c] += len(ds)
            if not ds:
                f[c] += 1  # the single face around an isolated vertex
        for walk in self._faces:
            f[self._component_of[walk.vertices[0]]] += 1
        for c in range(self._n_components):
            euler = n[c] - m2[c] // 2 + f[c]
            if euler != 2:
                raise NonZeroGenus(
                    f"component {c}: n={n[c]} m={m2[c] // 2} f={f[c]} "
                    f"gives n - m + f = {euler}, not 2")


# --- regions of closed curves -------------------------------------------


def _face_regions(g: PlaneMultigraph, cut_edges: frozenset) -> tuple[list[int], int]:
    """Partition faces into regions separated by the cut edges.

    Two faces are in the same region when they share an edge not in
    ``cut_edges``.  Returns (label per face index, number of regions).
    """
    nf = len(g.faces())
    labels = [-1] * nf
    count = 0
    for seed in range(nf):
        if labels[seed] != -1:
            continue
        labels[seed] = count
        queue = deque([seed])
        while queue:
            i = queue.popleft()
            for d in g.faces()[i].darts:
                if g.edge_of(d) in cut_edges:
                    continue
                j = g.face_of(g.twin(d))
                if labels[j] == -1:
                    labels[j] = count
                    queue.append(j)
        count += 1
    return labels, count


def _check_closed(g: PlaneMultigraph, curve: Sequence[Dart]) -> None:
    if not curve:
        raise OpenCurve("empty curve")
    k = len(curve)
    for i in range(k):
        if g.head(curve[i]) != g.origin(curve[(i + 1) % k]):
            raise OpenCurve(
                f"dart {curve[i]} ends at {g.head(curve[i])} but the next "
                f"dart starts at {g.origin(curve[(i + 1) % k])}")


def _region_vertex_counts(g: PlaneMultigraph, curve: Sequence[Dart],
                          labels: list[int], count: int,
                          real=None, placements=None) -> list[int]:
    """Count, per region, the real vertices strictly inside it."""
    on_curve = {g.origin(d) for d in curve}
    counts = [0] * count
    for v in g.vertices:
        if v in on_curve:
            continue
        if real is not None and v not in real:
            continue
        ds = g.rotation(v)
        if ds:
            counts[labels[g.face_of(ds[0])]] += 1
        elif placements is not None and v in placements:
            counts[labels[g.face_of(placements[v])]] += 1
        # an isolated vertex with no placement cannot be located; skip it
    return counts


def region_contains_real_vertex(g: PlaneMultigraph, boundary: Sequence[Dart],
                                side: str, *, real=None,
                                placements=None) -> bool:
    """Whether one side of a closed curve strictly contains a real vertex.

    Args:
        g: the graph (usually a planarization) carrying the curve.
        boundary: darts of a closed curve; consecutive darts must chain
            head-to-origin and the curve must close up.
        side: "right" floods from the faces containing the boundary darts
            themselves, "left" from the faces containing their twins.
        real: optional set restricting which vertices count; None means
            every vertex counts.
        placements: optional mapping placing isolated vertices, as
            vertex -> a dart whose face contains the vertex.

    Raises:
        OpenCurve: the boundary does not close up.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    _check_closed(g, boundary)
    cut = frozenset(g.edge_of(d) for d in boundary)
    labels, count = _face_regions(g, cut)
    if side == "right":
        seeds = {labels[g.face_of(d)] for d in boundary}
    else:
        seeds = {labels[g.face_of(g.twin(d))] for d in boundary}
    counts = _region_vertex_counts(g, boundary, labels, count, real, placements)
    return any(counts[r] > 0 for r in seeds)


def curve_is_contractible(g: PlaneMultigraph, curve: Sequence[Dart], *,
                          real=None) -> bool:
    """Whether a closed curve bounds only vertex-free regions on one side.

    The sphere is cut along every edge of the curve; the curve is
    contractible (deformable to a point without sweeping a vertex) iff at
    most one of the resulting regions strictly contains a real vertex.
    For a simple closed curve this is exactly "one side is empty".
    Crossing points on the curve count as curve points, not as vertices.
    """
    _check_closed(g, curve)
    cut = frozenset(g.edge_of(d) for d in curve)
    labels, count = _face_regions(g, cut)
    counts = _region_vertex_counts(g, curve, labels, count, real, None)
    return sum(1 for c in counts if c > 0) <= 1


def is_homotopic_pair(g: PlaneMultigraph, e1: Edge, e2: Edge, *,
                      real=None) -> bool:
    """Whether two parallel edges of g are homotopic (a forbidden pair).

    The two edges are walked as a closed curve (e1 forward, e2 backward);
    the pair is homotopic iff that curve is contractible, i.e. one of the
    regions it bounds contains no vertex other than the shared endpoints.

    Raises:
        NotParallel: the edges do not share both endpoints.
    """
    if e1 == e2:
        raise NotParallel("an edge is not parallel to itself")
    a = min(e1)
    u, v = g.origin(a), g.head(a)
    candidates = [d for d in e2 if g.origin(d) == v and g.head(d) == u]
    if not candidates:
        raise NotParallel(
            f"edges have endpoints {{{u}, {v}}} and "
            f"{{{g.edge_endpoints(e2)[0]}, {g.edge_endpoints(e2)[1]}}}")
    return curve_is_contractible(g, [a, min(candidates)], real=real)


def is_homotopic_loop(g: PlaneMultigraph, e: Edge, *, real=None) -> bool:
    """Whether a self-loop of g is homotopic to a point (forbidden).

    Raises:
        NotLoop: the edge has two distinct endpoints.
    """
    d = min(e)
    if g.origin(d) != g.head(d):
        raise NotLoop(f"edge {sorted(e)} is not a self-loop")
    return curve_is_contractible(g, [d], real=real)
