"""Generators for standard plane graph families.

Everything returns a :class:`PlaneGraph` whose rotations are clockwise.
"""
from __future__ import annotations

import math
import random
from collections.abc import Iterable, Mapping, Sequence

from .plane_graph import PlaneGraph


class BadParams(ValueError):
    pass


def from_coordinates(coords: Mapping | Sequence, edges: Iterable[tuple]) -> PlaneGraph:
    """Rotation system of a straight-line drawing.

    ``coords`` maps vertex -> (x, y); neighbours are sorted clockwise by
    angle.  A drawing with crossings yields a non-planar rotation and is
    rejected by the Euler check.
    """
    if not isinstance(coords, Mapping):
        coords = dict(enumerate(coords))
    labels = list(coords)
    index = {lab: i for i, lab in enumerate(labels)}
    nbrs: list[list[int]] = [[] for _ in labels]
    for a, b in edges:
        nbrs[index[a]].append(index[b])
        nbrs[index[b]].append(index[a])
    rot = []
    for i, lab in enumerate(labels):
        x0, y0 = coords[lab]

        def angle(j, x0=x0, y0=y0):
            x, y = coords[labels[j]]
            return math.atan2(y - y0, x - x0)

        rot.append(sorted(nbrs[i], key=lambda j: -angle(j)))
    return PlaneGraph(rot, labels)


def cycle(n: int) -> PlaneGraph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return PlaneGraph([[(i - 1) % n, (i + 1) % n] for i in range(n)])


def wheel(n: int) -> PlaneGraph:
    """Wheel on ``n`` vertices: hub 0 joined to a rim cycle ``1..n-1``."""
    if n < 4:
        raise BadParams("wheel needs n >= 4 (hub plus a rim of at least 3)")
    m = n - 1
    rot = [list(range(1, n))]
    for i in range(m):
        rot.append([0, 1 + (i - 1) % m, 1 + (i + 1) % m])
    return PlaneGraph(rot)


def prism(n: int = 3) -> PlaneGraph:
    """Prism over an ``n``-gon: inner cycle ``0..n-1``, outer ``n..2n-1``."""
    if n < 3:
        raise BadParams("prism needs n >= 3")
    coords = {}
    for i in range(n):
        t = 2 * math.pi * i / n
        coords[i] = (math.cos(t), math.sin(t))
        coords[n + i] = (2 * math.cos(t), 2 * math.sin(t))
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return from_coordinates(coords, edges)


def octahedron() -> PlaneGraph:
    # north pole 0, equator 1 2 3 4 counter-clockwise, south pole 5 on the outside
    rot = [
        [4, 3, 2, 1],
        [0, 2, 5, 4],
        [0, 3, 5, 1],
        [0, 4, 5, 2],
        [0, 1, 5, 3],
        [1, 2, 3, 4],
    ]
    return PlaneGraph(rot)


def stacked_triangulation(n: int, seed: int = 0) -> PlaneGraph:
    """Apollonian network on ``n`` vertices: repeatedly insert a degree-3
    vertex into a bounded triangular face chosen by ``random.Random(seed)``."""
    if n < 3:
        raise BadParams("stacked triangulation needs n >= 3")
    rng = random.Random(seed)
    # rot[v] is clockwise; start from a triangle 0,1,2 drawn counter-clockwise
    rot: list[list[int]] = [[2, 1], [0, 2], [1, 0]]
    faces = [(0, 1, 2)]  # bounded faces, counter-clockwise
    while len(rot) < n:
        a, b, c = faces.pop(rng.randrange(len(faces)))
        x = len(rot)
        # inside ccw triangle abc, x lies clockwise-after c and before b around a
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            ring = rot[p]
            i = ring.index(q)
            ring.insert(i, x)  # clockwise: ..., r, x, q, ... since r precedes q
        rot.append([a, c, b])
        faces += [(a, b, x), (b, c, x), (c, a, x)]
    return PlaneGraph(rot)
