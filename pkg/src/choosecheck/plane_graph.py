"""Embedded planar graphs stored as rotation systems.

A rotation lists, for every vertex, its neighbours in clockwise order.
Faces are traced with the previous-neighbour rule: the dart following
``(u, v)`` on a face boundary is ``(v, w)`` where ``w`` precedes ``u`` in
the rotation of ``v``.  Mirroring every rotation traces the same faces in
the opposite direction, so the face degree multiset does not depend on
this choice.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass

Edge = tuple[int, int]
Dart = tuple[int, int]


class EmbeddingError(ValueError):
    """Rotation data that does not describe a connected simple plane graph."""


class AsymmetricRotation(EmbeddingError):
    def __init__(self, u, v):
        self.dart = (u, v)
        super().__init__(f"{v!r} is listed in the rotation of {u!r} but {u!r} is not listed in the rotation of {v!r}")


class SelfLoop(EmbeddingError):
    def __init__(self, v):
        self.vertex = v
        super().__init__(f"self-loop at {v!r}")


class RepeatedNeighbor(EmbeddingError):
    def __init__(self, u, v):
        self.dart = (u, v)
        super().__init__(f"{v!r} appears more than once in the rotation of {u!r} (multigraphs are not supported)")


class Disconnected(EmbeddingError):
    def __init__(self, unreached):
        self.unreached = unreached
        super().__init__(f"graph is disconnected; unreachable vertices: {unreached!r}")


class EulerViolation(EmbeddingError):
    def __init__(self, v, e, f):
        self.counts = (v, e, f)
        super().__init__(f"V - E + F = {v} - {e} + {f} = {v - e + f} != 2; rotation is not a planar embedding")


class UnknownId(LookupError):
    pass


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[Dart, ...]

    @property
    def degree(self) -> int:
        # a bridge is walked twice and counts twice
        return len(self.boundary)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Boundary vertices in walk order; repeats are kept."""
        return tuple(u for u, _ in self.boundary)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(edge_key(u, v) for u, v in self.boundary)

    @property
    def is_simple(self) -> bool:
        """True when the boundary walk is a cycle (no repeated vertex)."""
        return len(self.vertex_set) == self.degree


class PlaneGraph:
    """A connected simple plane graph given by a rotation system.

    Vertex ids are dense integers ``0..n-1``; ``labels[i]`` is the label the
    caller used for vertex ``i``.  Instances are treated as immutable.
    """

    def __init__(self, rotation: Sequence[Sequence[int]], labels: Sequence[Hashable] | None = None):
        self.rotation: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rotation)
        n = len(self.rotation)
        self.labels: tuple = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise ValueError("labels and rotation differ in length")
        self._validate()
        self.edges: tuple[Edge, ...] = tuple(sorted({edge_key(u, v) for u in range(n) for v in self.rotation[u]}))
        self._edge_set = frozenset(self.edges)
        self._pos = [{w: i for i, w in enumerate(r)} for r in self.rotation]
        self._check_connected()
        self.faces, self._dart_face = self._trace_faces()
        if n - len(self.edges) + len(self.faces) != 2:
            raise EulerViolation(n, len(self.edges), len(self.faces))
        self.has_bridge = any(self._dart_face[(u, v)] == self._dart_face[(v, u)] for u, v in self.edges)

    # construction helpers

    def _validate(self):
        n = len(self.rotation)
        lab = self.labels
        for u, nbrs in enumerate(self.rotation):
            seen = set()
            for v in nbrs:
                if not (isinstance(v, int) and 0 <= v < n):
                    raise UnknownId(f"rotation of {lab[u]!r} refers to unknown vertex {v!r}")
                if v == u:
                    raise SelfLoop(lab[u])
                if v in seen:
                    raise RepeatedNeighbor(lab[u], lab[v])
                seen.add(v)
        for u, nbrs in enumerate(self.rotation):
            for v in nbrs:
                if u not in self.rotation[v]:
                    raise AsymmetricRotation(lab[u], lab[v])

    def _check_connected(self):
        n = len(self.rotation)
        if n == 0:
            raise EmbeddingError("empty graph")
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.rotation[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        if len(seen) != n:
            raise Disconnected(sorted((self.labels[v] for v in range(n) if v not in seen), key=str))

    def _next_dart(self, u: int, v: int) -> Dart:
        rot = self.rotation[v]
        return (v, rot[self._pos[v][u] - 1])

    def _trace_faces(self):
        dart_face: dict[Dart, int] = {}
        faces: list[Face] = []
        if not self.edges:
            # K1 has a single face with an empty boundary
            return (Face(0, ()),), dart_face
        for u, v in sorted((a, b) for a in range(len(self.rotation)) for b in self.rotation[a]):
            if (u, v) in dart_face:
                continue
            fid = len(faces)
            walk = []
            d = (u, v)
            while d not in dart_face:
                dart_face[d] = fid
                walk.append(d)
                d = self._next_dart(*d)
            faces.append(Face(fid, tuple(walk)))
        return tuple(faces), dart_face

    # queries

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def vertices(self) -> range:
        return range(len(self.rotation))

    def _vertex(self, v) -> int:
        if not (isinstance(v, int) and 0 <= v < len(self.rotation)):
            raise UnknownId(f"unknown vertex {v!r}")
        return v

    def _face(self, f) -> Face:
        if isinstance(f, Face):
            f = f.id
        if not (isinstance(f, int) and 0 <= f < len(self.faces)):
            raise UnknownId(f"unknown face {f!r}")
        return self.faces[f]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[self._vertex(v)]

    def vertex_degree(self, v: int) -> int:
        return len(self.rotation[self._vertex(v)])

    def face_degree(self, f) -> int:
        return self._face(f).degree

    def face(self, f) -> Face:
        return self._face(f)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edge_set

    def face_of_dart(self, u: int, v: int) -> int:
        try:
            return self._dart_face[(u, v)]
        except KeyError:
            raise UnknownId(f"({u!r}, {v!r}) is not a dart of the graph") from None

    def incident_faces(self, v: int) -> list[int]:
        """Face ids around ``v`` in rotation order, one per incidence."""
        v = self._vertex(v)
        return [self._dart_face[(v, w)] for w in self.rotation[v]]

    def faces_sharing_edge(self, u: int, v: int) -> tuple[int, int]:
        """The faces on the two sides of edge ``uv`` (equal for a bridge)."""
        if not self.has_edge(u, v):
            raise UnknownId(f"({u!r}, {v!r}) is not an edge")
        return self._dart_face[(u, v)], self._dart_face[(v, u)]

    def adjacent_faces(self, f) -> list[int]:
        """Distinct faces, other than ``f``, sharing at least one edge with ``f``."""
        face = self._face(f)
        out = []
        for u, v in face.boundary:
            g = self._dart_face[(v, u)]
            if g != face.id and g not in out:
                out.append(g)
        return out

    def shared_edges(self, f, g) -> frozenset[Edge]:
        return self._face(f).edge_set & self._face(g).edge_set

    def adjacency(self) -> dict[int, frozenset[int]]:
        return {v: frozenset(self.rotation[v]) for v in self.vertices}

    def label(self, v: int):
        return self.labels[v]

    def rotation_by_label(self) -> dict:
        return {self.labels[v]: [self.labels[w] for w in self.rotation[v]] for v in self.vertices}

    def mirror(self) -> "PlaneGraph":
        return PlaneGraph([tuple(reversed(r)) for r in self.rotation], self.labels)

    def degree_sequence(self) -> list[int]:
        return sorted(len(r) for r in self.rotation)

    def face_degrees(self) -> list[int]:
        return sorted(f.degree for f in self.faces)

    def __repr__(self):
        return f"PlaneGraph(V={self.n}, E={len(self.edges)}, F={len(self.faces)})"


def build_from_rotation(rotation: Mapping[Hashable, Iterable[Hashable]]) -> PlaneGraph:
    """Build a :class:`PlaneGraph` from ``{label: [neighbour labels, clockwise]}``.

    Labels are mapped to dense ids in the mapping's iteration order.
    """
    labels = list(rotation)
    index = {lab: i for i, lab in enumerate(labels)}
    rot = []
    for lab in labels:
        row = []
        for w in rotation[lab]:
            if w not in index:
                raise UnknownId(f"rotation of {lab!r} refers to unknown vertex {w!r}")
            row.append(index[w])
        rot.append(row)
    return PlaneGraph(rot, labels)


def degree_histogram(values: Iterable[int]) -> dict[int, int]:
    return dict(sorted(Counter(values).items()))
