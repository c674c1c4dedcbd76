"""Short cycles, cycle adjacency, the cycle-adjacency hypothesis and the
four forbidden configurations.

Two cycles are *adjacent* when they share at least one edge.
"""
from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations

from .plane_graph import Edge, PlaneGraph, edge_key

MIN_LEN, MAX_LEN = 3, 8
HYPOTHESIS_LENGTHS = (3, 4, 5, 6)


class SameCycle(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle in canonical form: smallest vertex first, and its
    smaller neighbour on the cycle second."""

    vertices: tuple[int, ...]
    chords: frozenset[Edge] = field(default=frozenset(), compare=False)
    is_face_boundary: bool = field(default=False, compare=False)

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> frozenset[Edge]:
        vs = self.vertices
        return frozenset(edge_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


def canonical_cycle(vs: Iterable[int]) -> tuple[int, ...]:
    vs = list(vs)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if len(vs) > 2 and vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


def simple_cycles(adj: Mapping[int, Iterable[int]], max_len: int) -> list[tuple[int, ...]]:
    """All simple cycles of length ``3..max_len`` as canonical vertex tuples.

    Each cycle is grown from its smallest vertex through larger vertices
    only, and kept in the direction whose second vertex is smaller than its
    last, so it is produced exactly once.
    """
    nbrs = {v: sorted(ws) for v, ws in adj.items()}
    out = []
    for s in sorted(nbrs):
        path = [s]
        on_path = {s}

        def extend(u):
            for w in nbrs[u]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        out.append(tuple(path))
                elif w > s and w not in on_path and len(path) < max_len:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    out.sort(key=lambda c: (len(c), c))
    return out


def enumerate_cycles(G: PlaneGraph, max_len: int = 6) -> list[Cycle]:
    if not (MIN_LEN <= max_len <= MAX_LEN):
        raise ValueError(f"max_len must lie in [{MIN_LEN}, {MAX_LEN}], got {max_len}")
    facial = {f.edge_set for f in G.faces if f.is_simple}
    cycles = []
    for vs in simple_cycles(G.adjacency(), max_len):
        n = len(vs)
        chords = frozenset(
            edge_key(vs[i], vs[j])
            for i, j in combinations(range(n), 2)
            if (j - i) % n not in (1, n - 1) and G.has_edge(vs[i], vs[j])
        )
        edges = frozenset(edge_key(vs[i], vs[(i + 1) % n]) for i in range(n))
        cycles.append(Cycle(vs, chords, edges in facial))
    return cycles


class CycleIndex:
    """Cycles of one graph indexed by length and by edge."""

    def __init__(self, G: PlaneGraph, max_len: int = 6, cycles: list[Cycle] | None = None):
        self.graph = G
        self.cycles = cycles if cycles is not None else enumerate_cycles(G, max_len)
        self.by_length: dict[int, list[Cycle]] = defaultdict(list)
        self.by_edge: dict[Edge, list[Cycle]] = defaultdict(list)
        for c in self.cycles:
            self.by_length[c.length].append(c)
            for e in c.edges:
                self.by_edge[e].append(c)

    def of_length(self, n: int) -> list[Cycle]:
        return self.by_length.get(n, [])

    def touching(self, edges: Iterable[Edge]) -> list[Cycle]:
        """Cycles sharing at least one of ``edges``, in canonical order."""
        seen = set()
        for e in edges:
            seen.update(self.by_edge.get(e, ()))
        return sorted(seen)

    def sharing_exactly_one(self, edges: frozenset[Edge], lengths: Iterable[int], exclude=()) -> list[Cycle]:
        lengths = set(lengths)
        return [
            c for c in self.touching(edges)
            if c.length in lengths and c not in exclude and len(c.edges & edges) == 1
        ]


@dataclass(frozen=True)
class AdjacencyFinding:
    cycle_a: Cycle
    cycle_b: Cycle
    shared_edges: tuple[Edge, ...]
    relation: str  # exactly_one_edge | adjacent | intersecting_only | disjoint

    @property
    def is_adjacent(self) -> bool:
        return bool(self.shared_edges)


def cycle_adjacency(a: Cycle, b: Cycle) -> AdjacencyFinding:
    if a == b:
        raise SameCycle(f"cannot compare cycle {a.vertices} with itself")
    shared = tuple(sorted(a.edges & b.edges))
    if len(shared) == 1:
        rel = "exactly_one_edge"
    elif shared:
        rel = "adjacent"
    elif a.vertex_set & b.vertex_set:
        rel = "intersecting_only"
    else:
        rel = "disjoint"
    return AdjacencyFinding(a, b, shared, rel)


@dataclass(frozen=True)
class Witness:
    cycle: Cycle
    partners: tuple[Cycle, ...]  # one adjacent cycle per forbidden length, in increasing length


@dataclass(frozen=True)
class HypothesisReport:
    i: int
    holds: bool
    witnesses: tuple[Witness, ...]


def hypothesis_holds(G: PlaneGraph, i: int, index: CycleIndex | None = None) -> HypothesisReport:
    """Check that no ``i``-cycle is simultaneously adjacent to cycles of all
    three other lengths in {3, 4, 5, 6}."""
    if i not in HYPOTHESIS_LENGTHS:
        raise ValueError(f"i must be one of {HYPOTHESIS_LENGTHS}, got {i}")
    index = index or CycleIndex(G, 6)
    others = [n for n in HYPOTHESIS_LENGTHS if n != i]
    witnesses = []
    for c in index.of_length(i):
        # prefer partners that share few edges with c
        near = sorted(index.touching(c.edges), key=lambda d: (len(d.edges & c.edges), d))
        partners = []
        for n in others:
            hit = next((d for d in near if d.length == n), None)
            if hit is None:
                break
            partners.append(hit)
        else:
            witnesses.append(Witness(c, tuple(partners)))
    return HypothesisReport(i, not witnesses, tuple(witnesses))


@dataclass(frozen=True)
class Prop2Finding:
    """One forbidden configuration.

    ``anchor`` is the chorded cycle (items 1 and 3), the facial 4-cycle
    (item 2) or the rim of the wheel (item 4, with ``hub`` set).
    ``config_edges`` is the edge set partners are measured against and
    ``partners`` lists ``(reading, cycle)`` pairs, each cycle sharing exactly
    one edge with the relevant part of the configuration.  For item 1 the
    reading says what the partner was measured against (``anchor`` or
    ``chord triangle (a, b, c)``); elsewhere it names the partner's length.
    """

    item: int
    anchor: Cycle
    config_edges: frozenset[Edge]
    partners: tuple[tuple[str, Cycle], ...]
    face: int | None = None
    hub: int | None = None


def _chords_triangles(c: Cycle) -> list[Cycle]:
    (chord,) = c.chords
    a, b = chord
    vs = c.vertices
    tris = []
    for x in vs:
        if x not in chord:
            tri = canonical_cycle((a, x, b))
            if all(e in c.edges or e == chord for e in Cycle(tri).edges):
                tris.append(Cycle(tri))
    return tris


def _item1(index: CycleIndex) -> list[Prop2Finding]:
    out = []
    for c in index.of_length(4):
        if len(c.chords) != 1:
            continue
        partners = [("anchor", d) for d in index.sharing_exactly_one(c.edges, (4, 5), exclude=(c,))]
        for t in _chords_triangles(c):
            partners += [(f"chord triangle {t.vertices}", d) for d in index.sharing_exactly_one(t.edges, (4, 5), exclude=(c,))]
        if partners:
            out.append(Prop2Finding(1, c, c.edges | c.chords, tuple(partners)))
    return out


def _item2(G: PlaneGraph, index: CycleIndex) -> list[Prop2Finding]:
    out = []
    for f in G.faces:
        if f.degree != 4 or not f.is_simple:
            continue
        fc = Cycle(canonical_cycle(f.vertices))
        tris = index.sharing_exactly_one(f.edge_set, (3,), exclude=(fc,))
        small = index.sharing_exactly_one(f.edge_set, (3, 4), exclude=(fc,))
        # need a 3-cycle and a different cycle of length <= 4
        if tris and len(small) >= 2:
            partners = [("3-cycle", t) for t in tris] + [("4-cycle", d) for d in small if d.length == 4]
            out.append(Prop2Finding(2, fc, f.edge_set, tuple(partners), face=f.id))
    return out


def _item3(index: CycleIndex) -> list[Prop2Finding]:
    out = []
    for c in index.of_length(5):
        if len(c.chords) != 1:
            continue
        conf = c.edges | c.chords
        fives = index.sharing_exactly_one(conf, (5,), exclude=(c,))
        if len(fives) >= 2:
            out.append(Prop2Finding(3, c, conf, tuple(("5-cycle", d) for d in fives)))
    return out


def wheels_w5(G: PlaneGraph, index: CycleIndex) -> list[tuple[int, Cycle]]:
    """Every W5 subgraph as (hub, rim 4-cycle); not restricted to faces."""
    out = []
    for rim in index.of_length(4):
        common = set(G.vertices)
        for v in rim.vertices:
            common &= set(G.neighbors(v))
        for h in sorted(common - rim.vertex_set):
            out.append((h, rim))
    return sorted(out, key=lambda p: (p[0], p[1]))


def _item4(G: PlaneGraph, index: CycleIndex) -> list[Prop2Finding]:
    out = []
    for h, rim in wheels_w5(G, index):
        conf = rim.edges | {edge_key(h, v) for v in rim.vertices}
        hits = index.sharing_exactly_one(conf, (3, 4, 5, 6))
        if hits:
            out.append(Prop2Finding(4, rim, frozenset(conf), tuple((f"{d.length}-cycle", d) for d in hits), hub=h))
    return out


def prop2_violations(G: PlaneGraph, index: CycleIndex | None = None) -> list[Prop2Finding]:
    """Detect the four forbidden configurations on arbitrary input.

    1. a 4-cycle with exactly one chord sharing exactly one edge with a
       4- or 5-cycle (measured against the 4-cycle and against each chord
       triangle; the reading is recorded per partner);
    2. a 4-face sharing exactly one edge with a 3-cycle and with another
       cycle of length at most 4;
    3. a 5-cycle with exactly one chord sharing exactly one edge with two
       different 5-cycles;
    4. a W5 sharing exactly one edge with a cycle of length at most 6.
    """
    index = index or CycleIndex(G, 6)
    return _item1(index) + _item2(G, index) + _item3(index) + _item4(G, index)
