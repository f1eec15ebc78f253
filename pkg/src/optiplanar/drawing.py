"""Topological drawings with crossings, stored through their planarization.

A drawing is kept in exactly one form: the planarization.  Crossing points
are degree-4 dummy vertices of an ordinary sphere-embedded multigraph (see
:mod:`optiplanar.plane`), and every base edge remembers the ordered path
of planarization edges it was subdivided into.  There is no separate
geometric representation; every query (crossing counts, the crossing
graph, the true-planar skeleton, ...) is answered from the rotation
system and the edge paths.

Validation never raises for content problems; :func:`validate` returns a
list of diagnostics with one distinct code per violated invariant:

- ``IsolatedVertex``: a real vertex has no edges.
- ``BadCrossingDegree``: a crossing vertex does not have degree 4.
- ``SelfCrossingEdge``: an edge path revisits a planarization vertex.
- ``VertexOnEdge``: an edge path passes through a real vertex.
- ``OrphanSegment``: a planarization edge is used by no path, or by two.
- ``TangentialCrossing``: the two edges at a crossing vertex do not
  alternate in its rotation, i.e. they touch instead of crossing.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .plane import Dart, Edge, FaceWalk, PlaneMultigraph, Vertex, curve_is_contractible


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding: a stable code, a message, and a witness."""

    code: str
    message: str
    witness: tuple = ()

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class Drawing:
    """A drawing of a multigraph, held as planarization plus edge paths.

    Args:
        plane: the planarization, a validated sphere embedding.
        crossing_vertices: which planarization vertices are crossings;
            all others are the real (base) vertices.
        base_edges: mapping edge id -> (u, v) endpoints, in the same
            orientation as the edge's path.
        edge_paths: mapping edge id -> ordered darts, one per
            planarization edge along the base edge, chained u to v.
        metadata: free-form mapping carried through save/load untouched.

    The constructor rejects structurally uninterpretable input (broken
    chains, unknown darts, endpoint mismatches) with ValueError; content
    violations are reported by :func:`validate` instead.
    """

    __slots__ = ("plane", "crossing_vertices", "base_edges", "edge_paths",
                 "metadata", "_edge_of_dart")

    def __init__(self, plane: PlaneMultigraph, crossing_vertices,
                 base_edges: Mapping[int, tuple[Vertex, Vertex]],
                 edge_paths: Mapping[int, Sequence[Dart]],
                 metadata: Mapping | None = None):
        self.plane = plane
        self.crossing_vertices = frozenset(crossing_vertices)
        self.base_edges = {e: (u, v) for e, (u, v) in base_edges.items()}
        self.edge_paths = {e: tuple(p) for e, p in edge_paths.items()}
        self.metadata = dict(metadata) if metadata else {}

        if not self.crossing_vertices <= plane.vertices:
            raise ValueError("crossing_vertices mentions unknown vertices")
        if set(self.base_edges) != set(self.edge_paths):
            raise ValueError("base_edges and edge_paths disagree on edge ids")

        edge_of_dart: dict[Dart, int] = {}
        for e in sorted(self.base_edges):
            u, v = self.base_edges[e]
            if u in self.crossing_vertices or v in self.crossing_vertices:
                raise ValueError(f"edge {e} ends at a crossing vertex")
            path = self.edge_paths[e]
            if not path:
                raise ValueError(f"edge {e} has an empty path")
            for d in path:
                if d not in plane.darts:
                    raise ValueError(f"edge {e} path uses unknown dart {d}")
            if plane.origin(path[0]) != u or plane.head(path[-1]) != v:
                raise ValueError(
                    f"edge {e} path runs {plane.origin(path[0])} -> "
                    f"{plane.head(path[-1])} but endpoints are ({u}, {v})")
            for a, b in zip(path, path[1:]):
                if plane.head(a) != plane.origin(b):
                    raise ValueError(f"edge {e} path breaks between darts "
                                     f"{a} and {b}")
            for d in path:
                for half in (d, plane.twin(d)):
                    if half in edge_of_dart:
                        # duplicated use is a content problem, not a
                        # structural one: leave it to validate()
                        continue
                    edge_of_dart[half] = e
        self._edge_of_dart = edge_of_dart

    # -- accessors ---------------------------------------------------------

    @property
    def real_vertices(self) -> frozenset:
        return self.plane.vertices - self.crossing_vertices

    @classmethod
    def from_plane(cls, plane: PlaneMultigraph,
                   metadata: Mapping | None = None) -> "Drawing":
        """Lift a crossing-free plane multigraph to a Drawing.

        Edge ids are assigned in order of each edge's smallest dart.
        """
        base_edges = {}
        edge_paths = {}
        for i, e in enumerate(sorted(plane.edges, key=min)):
            d = min(e)
            base_edges[i] = (plane.origin(d), plane.head(d))
            edge_paths[i] = (d,)
        return cls(plane, frozenset(), base_edges, edge_paths, metadata)

    def edge_of_dart(self, d: Dart) -> int:
        """The base edge whose path contains this planarization dart."""
        return self._edge_of_dart[d]

    def crossings_of(self, e: int) -> int:
        """Number of crossings on base edge e."""
        return len(self.edge_paths[e]) - 1

    def edge_curve(self, e: int) -> tuple[Dart, ...]:
        return self.edge_paths[e]

    def is_crossed(self, e: int) -> bool:
        return len(self.edge_paths[e]) > 1

    @property
    def n(self) -> int:
        """Number of real vertices."""
        return len(self.plane.vertices) - len(self.crossing_vertices)

    @property
    def m(self) -> int:
        """Number of base edges."""
        return len(self.base_edges)

    def __repr__(self) -> str:
        return (f"Drawing(n={self.n}, m={self.m}, "
                f"crossings={len(self.crossing_vertices)})")

    # -- internals used by validate and the crossing graph ------------------

    def _transits(self) -> dict[Vertex, list[tuple[int, Dart, Dart]]]:
        """For each interior path vertex: (edge id, dart pair at the vertex).

        A path entering x via dart g and leaving via dart h puts the darts
        twin(g) and h at x; those two are one transit.
        """
        out: dict[Vertex, list[tuple[int, Dart, Dart]]] = {}
        for e in sorted(self.base_edges):
            path = self.edge_paths[e]
            for g, h in zip(path, path[1:]):
                x = self.plane.head(g)
                out.setdefault(x, []).append((e, self.plane.twin(g), h))
        return out


def validate(d: Drawing) -> list[Diagnostic]:
    """Check every drawing invariant; return one diagnostic per violation."""
    plane = d.plane
    out: list[Diagnostic] = []

    for v in sorted(d.real_vertices):
        if plane.degree(v) == 0:
            out.append(Diagnostic("IsolatedVertex",
                                  f"real vertex {v} has no edges", (v,)))
    for x in sorted(d.crossing_vertices):
        if plane.degree(x) != 4:
            out.append(Diagnostic(
                "BadCrossingDegree",
                f"crossing vertex {x} has degree {plane.degree(x)}, not 4",
                (x,)))

    for e in sorted(d.base_edges):
        path = d.edge_paths[e]
        u, v = d.base_edges[e]
        visited = [plane.origin(dart) for dart in path] + [plane.head(path[-1])]
        interior = visited[1:-1]
        seen = set()
        repeated = None
        for w in interior:
            if w in seen or w == u or w == v:
                repeated = w
                break
            seen.add(w)
        # a self-loop legitimately starts and ends at the same vertex
        if repeated is not None:
            out.append(Diagnostic(
                "SelfCrossingEdge",
                f"edge {e} passes through vertex {repeated} twice",
                (e, repeated)))
        for w in interior:
            if w not in d.crossing_vertices:
                out.append(Diagnostic(
                    "VertexOnEdge",
                    f"edge {e} passes through real vertex {w}", (e, w)))

    use: Counter = Counter()
    for e in sorted(d.base_edges):
        for dart in d.edge_paths[e]:
            use[plane.edge_of(dart)] += 1
    for seg in sorted(plane.edges, key=min):
        k = use.get(seg, 0)
        if k == 0:
            out.append(Diagnostic(
                "OrphanSegment",
                f"planarization edge {tuple(sorted(seg))} belongs to no "
                "edge path", tuple(sorted(seg))))
        elif k > 1:
            out.append(Diagnostic(
                "OrphanSegment",
                f"planarization edge {tuple(sorted(seg))} is used by "
                f"{k} edge paths", tuple(sorted(seg))))

    transits = d._transits()
    for x in sorted(d.crossing_vertices):
        if plane.degree(x) != 4:
            continue  # already reported
        tr = transits.get(x, [])
        if len(tr) != 2:
            continue  # an orphan/reuse problem reported above
        rot = plane.rotation(x)
        pair = {frozenset(t[1:]) for t in tr}
        alternating = {frozenset((rot[0], rot[2])),
                       frozenset((rot[1], rot[3]))}
        if pair != alternating:
            e1, e2 = sorted(t[0] for t in tr)
            out.append(Diagnostic(
                "TangentialCrossing",
                f"edges {e1} and {e2} touch at vertex {x} instead of "
                "crossing transversally", (x, e1, e2)))
    return out


# --- crossing structure ---------------------------------------------------


@dataclass(frozen=True)
class CrossingGraph:
    """Base edges as nodes; multiplicities count shared crossing points."""

    nodes: tuple[int, ...]
    multiplicity: Mapping[frozenset, int] = field(hash=False)

    def neighbors(self, e: int) -> tuple[int, ...]:
        out = set()
        for pair in self.multiplicity:
            if e in pair:
                other = set(pair) - {e}
                out.add(next(iter(other)) if other else e)
        return tuple(sorted(out))

    def degree(self, e: int) -> int:
        """Number of crossings on e (sum of incident multiplicities)."""
        total = 0
        for pair, k in self.multiplicity.items():
            if e in pair:
                total += k * (2 if len(pair) == 1 else 1)
        return total


def crossing_graph(d: Drawing) -> CrossingGraph:
    """The crossing graph: which base edges cross which, how often."""
    mult: Counter = Counter()
    for x, tr in sorted(d._transits().items()):
        if x not in d.crossing_vertices or len(tr) != 2:
            continue
        mult[frozenset((tr[0][0], tr[1][0]))] += 1
    return CrossingGraph(nodes=tuple(sorted(d.base_edges)),
                         multiplicity=dict(mult))


def crossing_components(d: Drawing) -> tuple[frozenset, ...]:
    """Partition of the base edges into crossing components.

    Uncrossed edges form singleton components.  Components are returned
    sorted by their smallest edge id.
    """
    xg = crossing_graph(d)
    adj: dict[int, set[int]] = {e: set() for e in xg.nodes}
    for pair in xg.multiplicity:
        if len(pair) == 2:
            a, b = pair
            adj[a].add(b)
            adj[b].add(a)
    seen: set[int] = set()
    comps = []
    for e0 in xg.nodes:
        if e0 in seen:
            continue
        comp = {e0}
        seen.add(e0)
        queue = deque([e0])
        while queue:
            e = queue.popleft()
            for g in adj[e]:
                if g not in seen:
                    seen.add(g)
                    comp.add(g)
                    queue.append(g)
        comps.append(frozenset(comp))
    return tuple(sorted(comps, key=min))


def skeleton_edge_ids(d: Drawing) -> frozenset:
    """Ids of the true-planar (uncrossed) base edges."""
    return frozenset(e for e in d.base_edges if not d.is_crossed(e))


def true_planar_skeleton(d: Drawing) -> PlaneMultigraph:
    """The sub-embedding induced by the uncrossed edges.

    Rotations of the real vertices are restricted to skeleton darts, so
    the skeleton inherits its embedding from the drawing.  Real vertices
    whose edges are all crossed stay as isolated vertices; the spanning
    check in the characterizer looks for exactly that.
    """
    keep: set[Dart] = set()
    for e in skeleton_edge_ids(d):
        dart = d.edge_paths[e][0]
        keep.add(dart)
        keep.add(d.plane.twin(dart))
    rotations = {
        v: [dart for dart in d.plane.rotation(v) if dart in keep]
        for v in sorted(d.real_vertices)
    }
    twin = {dart: d.plane.twin(dart) for dart in keep}
    return PlaneMultigraph.build(rotations, twin)


def is_k_planar(d: Drawing, k: int) -> bool:
    """Whether every base edge is crossed at most k times."""
    return all(d.crossings_of(e) <= k for e in d.base_edges)


def is_simple(d: Drawing) -> bool:
    """Whether the base graph has no loops and no parallel edges."""
    seen = set()
    for u, v in d.base_edges.values():
        if u == v:
            return False
        key = (u, v) if u < v else (v, u)
        if key in seen:
            return False
        seen.add(key)
    return True


def crossing_histogram(d: Drawing) -> dict[int, int]:
    """Map crossing count -> number of base edges with that count."""
    return dict(sorted(Counter(
        d.crossings_of(e) for e in d.base_edges).items()))


def is_quasi_planar(d: Drawing) -> bool:
    """True when no three base edges pairwise cross."""
    xg = crossing_graph(d)
    adj: dict[int, set[int]] = {e: set() for e in xg.nodes}
    for pair in xg.multiplicity:
        if len(pair) == 2:
            a, b = pair
            adj[a].add(b)
            adj[b].add(a)
    for e in xg.nodes:
        for g in adj[e]:
            if g <= e:
                continue
            if adj[e] & (adj[g] - {e, g}):
                return False
    return True


def is_fan_planar(d: Drawing) -> bool:
    """True when, per edge, all edges crossing it share a common endpoint."""
    xg = crossing_graph(d)
    for e in xg.nodes:
        crossers = xg.neighbors(e)
        if len(crossers) < 2:
            continue
        common = set(d.base_edges[crossers[0]])
        for g in crossers[1:]:
            common &= set(d.base_edges[g])
        if not common:
            return False
    return True


def double_crossing_pairs(d: Drawing) -> tuple[tuple[int, int], ...]:
    """Edge pairs that cross each other more than once."""
    xg = crossing_graph(d)
    out = []
    for pair, k in xg.multiplicity.items():
        if k >= 2 and len(pair) == 2:
            out.append(tuple(sorted(pair)))
    return tuple(sorted(out))


def odd_true_planar_cycle(d: Drawing):
    """A closed walk of odd length through skeleton edges, or None.

    The walk is returned as a chained dart tuple.  None means the
    skeleton is bipartite, which is what optimal 3-planar structure
    requires.
    """
    sk = true_planar_skeleton(d)
    color: dict[Vertex, int] = {}
    parent: dict[Vertex, Dart] = {}

    def up_path(v: Vertex) -> list[Dart]:
        # darts walking from v towards the BFS root
        out = []
        while v in parent:
            dart = parent[v]
            out.append(sk.twin(dart))
            v = sk.origin(dart)
        return out

    for root in sorted(sk.vertices):
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for dart in sk.rotation(v):
                w = sk.head(dart)
                if w == v:
                    return (dart,)  # a skeleton self-loop is an odd cycle
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = dart
                    queue.append(w)
                elif color[w] == color[v]:
                    a = up_path(v)
                    b = up_path(w)
                    while a and b and a[-1] == b[-1]:
                        a.pop()
                        b.pop()
                    walk = ([sk.twin(x) for x in reversed(a)]
                            + [dart]
                            + b)
                    return tuple(walk)
    return None


def empty_true_planar_triangle(d: Drawing):
    """A length-3 skeleton face with nothing inside, or None.

    A triangle of uncrossed edges is empty exactly when its three darts
    also bound a face of the planarization.
    """
    sk_ids = skeleton_edge_ids(d)
    for walk in d.plane.faces():
        if walk.length != 3:
            continue
        if all(d.edge_of_dart(dart) in sk_ids for dart in walk.darts):
            return walk
    return None


def homotopic_duplicates(d: Drawing) -> list[tuple]:
    """All forbidden homotopic configurations among the base edges.

    Returns tuples ("loop", e) for contractible self-loops and
    ("pair", e1, e2) for homotopic parallel pairs, in deterministic
    order.  An empty list is required for every optimal drawing.
    """
    real = d.real_vertices
    plane = d.plane
    out: list[tuple] = []
    groups: dict[tuple, list[int]] = {}
    for e in sorted(d.base_edges):
        u, v = d.base_edges[e]
        groups.setdefault(tuple(sorted((u, v))), []).append(e)
        if u == v:
            if curve_is_contractible(plane, d.edge_paths[e], real=real):
                out.append(("loop", e))
    for key in sorted(groups):
        edges = groups[key]
        for i, e1 in enumerate(edges):
            for e2 in edges[i + 1:]:
                # close the curve: e1 forward, then e2 from e1's head
                # back to its tail (stored orientations may differ)
                if d.base_edges[e2] == d.base_edges[e1]:
                    tail = [plane.twin(x)
                            for x in reversed(d.edge_paths[e2])]
                else:
                    tail = list(d.edge_paths[e2])
                curve = list(d.edge_paths[e1]) + tail
                if curve_is_contractible(plane, curve, real=real):
                    out.append(("pair", e1, e2))
    return out


def remove_base_edge(d: Drawing, e: int) -> Drawing:
    """A new Drawing with base edge e deleted and its crossings healed.

    Every crossing vertex on e's path disappears; the other edge through
    each such vertex gets its two adjacent segments merged back into one.
    """
    if e not in d.base_edges:
        raise KeyError(f"no base edge {e}")
    plane = d.plane
    gone_path = d.edge_paths[e]
    dead_vertices = {plane.head(g) for g in gone_path[:-1]}
    dead_darts = set()
    for dart in gone_path:
        dead_darts.add(dart)
        dead_darts.add(plane.twin(dart))

    new_twin = {dart: plane.twin(dart) for dart in plane.darts
                if dart not in dead_darts}
    new_paths: dict[int, tuple[Dart, ...]] = {}
    for g in sorted(d.base_edges):
        if g == e:
            continue
        old = d.edge_paths[g]
        merged: list[Dart] = []
        i = 0
        while i < len(old):
            j = i
            while plane.head(old[j]) in dead_vertices:
                j += 1
            if j > i:
                # the run old[i..j] passes only vanished crossing points;
                # fuse it into the single planarization edge (old[i], twin(old[j]))
                for k in range(i + 1, j + 1):
                    dead_darts.add(old[k])
                for k in range(i, j):
                    dead_darts.add(plane.twin(old[k]))
                new_twin[old[i]] = plane.twin(old[j])
                new_twin[plane.twin(old[j])] = old[i]
            merged.append(old[i])
            i = j + 1
        new_paths[g] = tuple(merged)

    rotations = {}
    for v in sorted(plane.vertices):
        if v in dead_vertices:
            continue
        kept = [dart for dart in plane.rotation(v) if dart not in dead_darts]
        rotations[v] = kept
    new_twin = {dart: t for dart, t in new_twin.items()
                if dart not in dead_darts}

    new_plane = PlaneMultigraph.build(rotations, new_twin)
    base = {g: uv for g, uv in d.base_edges.items() if g != e}
    return Drawing(new_plane, d.crossing_vertices - dead_vertices,
                   base, new_paths, d.metadata)
