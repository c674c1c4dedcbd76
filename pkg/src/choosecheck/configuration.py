"""Vertex and face taxonomy used by the discharging rules.

Terminology: a *k-vertex* (face) has degree k, *k+* at least k and *k-*
at most k.  A *trio* is a fan of three triangular faces ``xuv, xyv, yvw``
around a centre ``v``; within it ``v`` is the *worst* vertex, ``x`` and
``y`` are *worse* and ``u`` and ``w`` are *bad*.  A *W5* is a 4-vertex hub
all of whose four faces are triangles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .plane_graph import Face, PlaneGraph

ROLE_RANK = {"good": 0, "bad": 1, "worse": 2, "worst": 3}


class NotExactlyOneSharedEdge(ValueError):
    pass


def _token_ok(d: int, tok) -> bool:
    if isinstance(tok, int):
        return d == tok
    if tok.endswith("+"):
        return d >= int(tok[:-1])
    if tok.endswith("-"):
        return d <= int(tok[:-1])
    return d == int(tok)


def matches_pattern(degrees, pattern) -> bool:
    """Multiset match of degrees against tokens such as ``(4, "5+", "5+")``."""
    degrees = list(degrees)
    if len(degrees) != len(pattern):
        return False
    toks = list(pattern)

    def go(i, used):
        if i == len(degrees):
            return True
        for j, tok in enumerate(toks):
            if not used >> j & 1 and _token_ok(degrees[i], tok) and go(i + 1, used | 1 << j):
                return True
        return False

    return go(0, 0)


@dataclass(frozen=True)
class VertexProfile:
    vertex: int
    degree: int
    incident_face_degrees: tuple[int, ...]
    is_flaw: bool
    good: bool


@dataclass(frozen=True)
class Trio:
    u: int
    v: int
    w: int
    x: int
    y: int
    faces: tuple[int, int, int]  # xuv, xyv, yvw

    @property
    def roles(self) -> dict[tuple[int, int], str]:
        f1, f2, f3 = self.faces
        out = {(self.v, f): "worst" for f in self.faces}
        out.update({(self.x, f1): "worse", (self.x, f2): "worse", (self.y, f2): "worse", (self.y, f3): "worse"})
        out.update({(self.u, f1): "bad", (self.w, f3): "bad"})
        return out

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset((self.u, self.v, self.w, self.x, self.y))


@dataclass(frozen=True)
class WheelW5:
    hub: int
    rim: tuple[int, int, int, int]
    faces: tuple[int, int, int, int]


@dataclass(frozen=True)
class Cluster:
    """A maximal edge-connected set of at least two triangular faces."""

    kind: str  # trio | w5 | cluster
    faces: tuple[int, ...]


def face_vertex_degrees(G: PlaneGraph, f) -> list[int]:
    return [G.vertex_degree(x) for x in G.face(f).vertices]


def _corner_faces(G: PlaneGraph, v: int) -> list[int]:
    # face j lies between rotation[v][j] and rotation[v][j + 1]
    return G.incident_faces(v)


def _fans(G: PlaneGraph) -> list[Trio]:
    out = []
    for v in G.vertices:
        rot = G.neighbors(v)
        d = len(rot)
        if d < 4:
            continue
        fs = _corner_faces(G, v)
        for j in range(d):
            three = [fs[(j + k) % d] for k in range(3)]
            if len(set(three)) < 3:
                continue
            u, x, y, w = (rot[(j + k) % d] for k in range(4))
            if u == w:
                continue
            want = [{v, u, x}, {v, x, y}, {v, y, w}]
            if all(G.face(f).degree == 3 and G.face(f).vertex_set == s for f, s in zip(three, want)):
                out.append(Trio(u, v, w, x, y, tuple(three)))
    return out


def _w5(G: PlaneGraph) -> list[WheelW5]:
    out = []
    for h in G.vertices:
        if G.vertex_degree(h) != 4:
            continue
        fs = _corner_faces(G, h)
        if len(set(fs)) == 4 and all(G.face(f).degree == 3 for f in fs):
            out.append(WheelW5(h, tuple(G.neighbors(h)), tuple(fs)))
    return out


def find_trios(G: PlaneGraph) -> list[Trio]:
    """Trios formed by faces, omitting those lying inside a W5."""
    return classify(G).trios


def find_w5(G: PlaneGraph) -> list[WheelW5]:
    return _w5(G)


def poor_5faces(G: PlaneGraph) -> list[int]:
    """5-faces adjacent to at least four distinct 3-faces whose boundary
    vertices are five 4-vertices, or four 4-vertices and one 5-vertex."""
    out = []
    for f in G.faces:
        if f.degree != 5:
            continue
        tri = [g for g in G.adjacent_faces(f.id) if G.face(g).degree == 3]
        if len(tri) < 4:
            continue
        degs = sorted(face_vertex_degrees(G, f.id))
        if degs in ([4, 4, 4, 4, 4], [4, 4, 4, 4, 5]):
            out.append(f.id)
    return out


def sources_of(G: PlaneGraph, P, T) -> int | None:
    """The vertex of triangle ``T`` not on face ``P``; ``None`` when the
    third vertex of ``T`` also lies on ``P``."""
    P, T = G.face(P), G.face(T)
    if T.degree != 3:
        raise ValueError(f"face {T.id} is not a 3-face")
    shared = P.edge_set & T.edge_set
    if len(shared) != 1:
        raise NotExactlyOneSharedEdge(f"faces {P.id} and {T.id} share {len(shared)} edges")
    (e,) = shared
    (apex,) = T.vertex_set - set(e)
    return None if apex in P.vertex_set else apex


@dataclass
class Taxonomy:
    graph: PlaneGraph
    profiles: list[VertexProfile]
    trios: list[Trio]
    all_trios: list[Trio]
    wheels: list[WheelW5]
    poor_faces: list[int]
    clusters: list[Cluster]
    isolated_triangles: frozenset[int]
    _roles: dict[tuple[int, int], str] = field(default_factory=dict, repr=False)

    @cached_property
    def flaw(self) -> frozenset[int]:
        return frozenset(p.vertex for p in self.profiles if p.is_flaw)

    @cached_property
    def hubs(self) -> dict[int, WheelW5]:
        return {w.hub: w for w in self.wheels}

    @cached_property
    def wheel_faces(self) -> dict[int, WheelW5]:
        return {f: w for w in self.wheels for f in w.faces}

    @cached_property
    def cluster_of(self) -> dict[int, Cluster]:
        return {f: c for c in self.clusters for f in c.faces}

    def role(self, v: int, f: int) -> str:
        return self._roles.get((v, f), "good")

    def in_trio(self, f: int) -> bool:
        return any(f in t.faces for t in self.trios)


def classify(G: PlaneGraph) -> Taxonomy:
    wheels = _w5(G)
    wheel_face_sets = {frozenset(w.faces) for w in wheels}
    all_trios = _fans(G)
    trios = [t for t in all_trios if not any(set(t.faces) <= s for s in wheel_face_sets)]
    in_any_trio = set().union(*(t.vertex_set for t in all_trios)) if all_trios else set()

    profiles = []
    for v in G.vertices:
        fd = tuple(sorted(G.face_degree(f) for f in G.incident_faces(v)))
        flaw = len(fd) == 4 and fd[:3] == (3, 3, 5) and fd[3] >= 5
        profiles.append(VertexProfile(v, G.vertex_degree(v), fd, flaw, v not in in_any_trio))

    # clusters of edge-adjacent triangles
    tri_faces = [f.id for f in G.faces if f.degree == 3]
    parent = {f: f for f in tri_faces}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for f in tri_faces:
        for g in G.adjacent_faces(f):
            if g in parent:
                ra, rb = find(f), find(g)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for f in tri_faces:
        groups.setdefault(find(f), []).append(f)
    trio_face_sets = {frozenset(t.faces) for t in all_trios}
    clusters = []
    isolated = set()
    for faces in sorted(groups.values()):
        if len(faces) == 1:
            isolated.add(faces[0])
            continue
        s = frozenset(faces)
        kind = "w5" if s in wheel_face_sets else "trio" if s in trio_face_sets else "cluster"
        clusters.append(Cluster(kind, tuple(sorted(faces))))

    roles: dict[tuple[int, int], str] = {}
    for t in trios:
        for key, r in t.roles.items():
            if ROLE_RANK[r] > ROLE_RANK[roles.get(key, "good")]:
                roles[key] = r
    # W5 membership takes precedence over any trio overlapping the wheel
    for w in wheels:
        for f in w.faces:
            for x in G.face(f).vertex_set:
                roles[(x, f)] = "worst" if x == w.hub else "worse"

    return Taxonomy(G, profiles, trios, all_trios, wheels, poor_5faces(G), clusters, frozenset(isolated), roles)


def classify_vertices(G: PlaneGraph) -> list[VertexProfile]:
    return classify(G).profiles


def face_role(G: PlaneGraph, v: int, f: int, taxonomy: Taxonomy | None = None) -> str:
    """good | bad | worse | worst for vertex ``v`` on triangular face ``f``.

    Faces that are not triangles adjacent to another triangle are ``good``.
    When several trios give ``v`` different roles on ``f`` the strongest
    membership wins (worst > worse > bad).
    """
    tax = taxonomy or classify(G)
    if v not in G.face(f).vertex_set:
        raise ValueError(f"vertex {v} is not on face {f}")
    return tax.role(v, f)


# measured structural predicates (they hold in a minimal counterexample and
# are reported, never enforced, on arbitrary input)


def _five_plus_on(G: PlaneGraph, face: Face) -> int:
    return sum(1 for x in face.vertex_set if G.vertex_degree(x) >= 5)


def structural_checks(G: PlaneGraph, tax: Taxonomy | None = None) -> dict:
    tax = tax or classify(G)
    out: dict = {}

    out["min_degree_4"] = {
        "holds": min(G.degree_sequence()) >= 4,
        "violations": [v for v in G.vertices if G.vertex_degree(v) < 4],
    }

    rows = []
    for P in tax.poor_faces:
        for T in G.adjacent_faces(P):
            if G.face_degree(T) != 3 or len(G.shared_edges(P, T)) != 1:
                continue
            s = sources_of(G, P, T)
            rows.append({
                "face": P, "triangle": T, "source": s,
                "holds": s is not None and G.vertex_degree(s) >= 5,
            })
    out["poor_face_sources_5plus"] = {"holds": all(r["holds"] for r in rows), "checked": rows}

    failures = []
    checked = 0
    for f in G.faces:
        for g in G.adjacent_faces(f.id):
            if g <= f.id:
                continue
            shared = G.shared_edges(f.id, g)
            if len(shared) != 1:
                continue
            (e,) = shared
            pool = f.vertex_set | G.face(g).vertex_set
            for xi in e:
                if G.vertex_degree(xi) > 5:
                    continue
                checked += 1
                if not any(G.vertex_degree(z) >= 5 for z in pool - {xi}):
                    failures.append({"faces": [f.id, g], "vertex": xi})
    out["single_shared_edge_has_5plus"] = {"holds": not failures, "checked": checked, "failures": failures}

    for deg, need, key in ((5, 3, "five_vertex_rich_faces"), (6, 2, "six_vertex_rich_faces")):
        bad = []
        for v in G.vertices:
            if G.vertex_degree(v) != deg:
                continue
            rich = sum(1 for f in set(G.incident_faces(v)) if _five_plus_on(G, G.face(f)) >= 2)
            if rich < need:
                bad.append({"vertex": v, "rich_faces": rich})
        out[key] = {"holds": not bad, "failures": bad}

    bad = []
    for w in tax.wheels:
        vs = (w.hub,) + w.rim
        degs = [G.vertex_degree(x) for x in vs]
        if max(degs) <= 5 and degs.count(5) < 3:
            bad.append({"hub": w.hub, "five_vertices": degs.count(5)})
    out["small_wheel_has_three_5_vertices"] = {"holds": not bad, "failures": bad}
    return out
