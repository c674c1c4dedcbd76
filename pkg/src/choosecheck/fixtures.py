"""Hand-built plane graphs used by the test suite, the acceptance run and
the scripts.  All of them are straight-line drawings, so a mistake in the
coordinates shows up as an Euler violation at construction time.
"""
from __future__ import annotations

import math

from . import families
from .plane_graph import PlaneGraph


def _regular(n, r=1.0, phase=math.pi / 2):
    return [(r * math.cos(phase + 2 * math.pi * k / n), r * math.sin(phase + 2 * math.pi * k / n)) for k in range(n)]


class Drawing:
    """Incrementally built straight-line drawing."""

    def __init__(self):
        self.coords: dict = {}
        self.edges: list[tuple] = []

    def add(self, name, xy):
        self.coords[name] = tuple(xy)
        return name

    def edge(self, a, b):
        self.edges.append((a, b))

    def path(self, *names):
        for a, b in zip(names, names[1:]):
            self.edge(a, b)

    def glue(self, p, q, m, prefix, bulge=0.6):
        """Close edge ``pq`` into an ``m``-cycle with ``m - 2`` new vertices on
        an arc bulging away from the origin."""
        (x1, y1), (x2, y2) = self.coords[p], self.coords[q]
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        dx, dy = x2 - x1, y2 - y1
        nx, ny = -dy, dx
        if nx * mx + ny * my < 0:
            nx, ny = -nx, -ny
        k = m - 2
        new = []
        for j in range(1, k + 1):
            t = j / (k + 1)
            h = bulge * math.sin(math.pi * t)
            new.append(self.add(f"{prefix}{j}", (x1 + t * dx + h * nx, y1 + t * dy + h * ny)))
        self.path(p, *new, q)
        return new

    def graph(self) -> PlaneGraph:
        return families.from_coordinates(self.coords, self.edges)


def pentagon_gadget(glued=(3, 4, 6)) -> PlaneGraph:
    """A 5-cycle ``c0..c4`` with cycles of the given lengths glued onto
    distinct edges (edges 0, 2, 3 in that order)."""
    d = Drawing()
    pts = _regular(5)
    names = [d.add(f"c{k}", pts[k]) for k in range(5)]
    for k in range(5):
        d.edge(names[k], names[(k + 1) % 5])
    for slot, m in zip((0, 2, 3), glued):
        if m:
            d.glue(names[slot], names[(slot + 1) % 5], m, f"g{m}_", bulge=0.35 * m)
    return d.graph()


def item1_gadget() -> PlaneGraph:
    """4-cycle abcd with chord ac and a 4-cycle abef glued on ab."""
    d = Drawing()
    for n, xy in dict(a=(0, 0), b=(1, 0), c=(1, 1), d=(0, 1), e=(1, -1), f=(0, -1)).items():
        d.add(n, xy)
    d.path("a", "b", "c", "d", "a")
    d.edge("a", "c")
    d.path("b", "e", "f", "a")
    return d.graph()


def item2_gadget() -> PlaneGraph:
    """4-face abcd with triangles glued on ab and cd."""
    d = Drawing()
    for n, xy in dict(a=(0, 0), b=(1, 0), c=(1, 1), d=(0, 1), e=(0.5, -1), f=(0.5, 2)).items():
        d.add(n, xy)
    d.path("a", "b", "c", "d", "a")
    d.path("a", "e", "b")
    d.path("c", "f", "d")
    return d.graph()


def item3_gadget() -> PlaneGraph:
    """5-cycle with chord c0c2 and 5-cycles glued onto edges c2c3 and c3c4."""
    d = Drawing()
    pts = _regular(5)
    names = [d.add(f"c{k}", pts[k]) for k in range(5)]
    for k in range(5):
        d.edge(names[k], names[(k + 1) % 5])
    d.edge("c0", "c2")
    d.glue("c2", "c3", 5, "p", bulge=1.0)
    d.glue("c3", "c4", 5, "q", bulge=1.0)
    return d.graph()


def item4_gadget() -> PlaneGraph:
    """W5 (hub h, rim r0..r3) with a 4-cycle glued onto rim edge r0r1."""
    d = Drawing()
    d.add("h", (0, 0))
    rim = [d.add(f"r{k}", xy) for k, xy in enumerate(_regular(4, phase=math.pi / 4))]
    for k in range(4):
        d.edge("h", rim[k])
        d.edge(rim[k], rim[(k + 1) % 4])
    d.glue("r0", "r1", 4, "s", bulge=0.8)
    return d.graph()


def poor_face_gadget(promote: bool = False) -> PlaneGraph:
    """A 5-face whose five boundary vertices have degree 4 and which is
    surrounded by five 3-faces (a pentagonal antiprism, so the outer face is
    a second such 5-face).  With ``promote`` the inner boundary vertex a0
    reaches degree 6 while the faces around the inner 5-face stay
    triangles."""
    d = Drawing()
    inner = [d.add(f"a{k}", xy) for k, xy in enumerate(_regular(5, 1.0))]
    outer = [d.add(f"b{k}", xy) for k, xy in enumerate(_regular(5, 2.0, math.pi / 2 + math.pi / 5))]
    for k in range(5):
        d.edge(inner[k], inner[(k + 1) % 5])
        d.edge(outer[k], outer[(k + 1) % 5])
        d.edge(inner[k], outer[k])
        d.edge(inner[(k + 1) % 5], outer[k])
    if promote:
        # stack two vertices into the triangle a0 b0 b4 so that a0 reaches degree 6
        d.add("t", (0.0, 1.45))
        d.path("a0", "t", "b0")
        d.edge("t", "b4")
        d.add("s", (-0.39, 1.356))
        d.path("a0", "s", "b0")
        d.edge("s", "t")
    return d.graph()


def trio_gadget() -> PlaneGraph:
    """Three 3-faces xuv, xyv, yvw (worst vertex v of degree 4, worse
    vertices x and y of degree 4, bad vertices u and w of degree 5) with no
    other 3-face sharing an edge with them."""
    d = Drawing()
    pts = dict(
        v=(0, 0), u=(-2, 1), x=(-1, 2), y=(1, 2), w=(2, 1),
        b=(0, -2), p=(-1.5, 4), q=(1.5, 4), r=(-4, 1), s=(4, 1),
        t=(-3, -2), z=(3, -2), o=(0, 6),
    )
    for n, xy in pts.items():
        d.add(n, xy)
    d.path("u", "x", "y", "w")
    for n in "uxyw":
        d.edge("v", n)
    d.path("u", "b", "w")
    d.edge("x", "p")
    d.edge("y", "q")
    d.path("r", "p", "o", "q", "s")
    d.path("u", "r")
    d.path("w", "s")
    d.path("u", "t", "b")
    d.path("w", "z", "b")
    d.path("r", "t")
    d.path("s", "z")
    return d.graph()


def case5_gadget() -> PlaneGraph:
    """Triangle abc whose vertices are non-flaw 4-vertices and whose three
    neighbouring faces are 4-faces."""
    d = Drawing()
    tri = [d.add(n, xy) for n, xy in zip("abc", _regular(3, 1.0))]
    hexa = [d.add(f"p{k}", xy) for k, xy in enumerate(_regular(6, 3.0, math.pi / 2 - math.pi / 6))]
    d.path("a", "b", "c", "a")
    for k in range(6):
        d.edge(hexa[k], hexa[(k + 1) % 6])
    d.edge("a", "p0")
    d.edge("a", "p1")
    d.edge("b", "p2")
    d.edge("b", "p3")
    d.edge("c", "p4")
    d.edge("c", "p5")
    return d.graph()


def bowtie(face_len: int = 6) -> PlaneGraph:
    """Vertex v of degree 4 whose faces in rotation order have degrees
    3, face_len, 3, face_len: a bowtie whose two gaps are closed by paths.
    ``face_len=5`` makes v a flaw vertex."""
    d = Drawing()
    pts = dict(v=(0, 0), a=(-1, 1), b=(1, 1), c=(1, -1), e=(-1, -1))
    for n, xy in pts.items():
        d.add(n, xy)
    for n in "abce":
        d.edge("v", n)
    d.edge("a", "b")
    d.edge("c", "e")
    d.glue("b", "c", face_len - 1, "r", bulge=1.0)
    d.glue("e", "a", face_len - 1, "l", bulge=1.0)
    return d.graph()


def flaw_triangle_gadget() -> PlaneGraph:
    """``bowtie(5)`` with a triangle hung on a and one on b in the outer
    face, so the flaw vertex v lies on the isolated (4,5,5)-face vab."""
    d = Drawing()
    pts = dict(v=(0, 0), a=(-1, 1), b=(1, 1), c=(1, -1), e=(-1, -1))
    for n, xy in pts.items():
        d.add(n, xy)
    for n in "abce":
        d.edge("v", n)
    d.edge("a", "b")
    d.edge("c", "e")
    d.glue("b", "c", 4, "r", bulge=1.0)
    d.glue("e", "a", 4, "l", bulge=1.0)
    for n, xy in dict(p1=(-1.6, 2.0), p2=(-0.6, 2.2), q1=(0.6, 2.2), q2=(1.6, 2.0)).items():
        d.add(n, xy)
    d.path("a", "p1", "p2", "a")
    d.path("b", "q1", "q2", "b")
    return d.graph()


def w5_heptagon_gadget() -> PlaneGraph:
    """W5 (hub h, rim r0..r3) with a 7-cycle glued onto rim edge r0r1; the
    7-face inside the glued cycle shares exactly one edge with triangle
    h r0 r1."""
    d = Drawing()
    d.add("h", (0, 0))
    rim = [d.add(f"r{k}", xy) for k, xy in enumerate(_regular(4, phase=math.pi / 4))]
    for k in range(4):
        d.edge("h", rim[k])
        d.edge(rim[k], rim[(k + 1) % 4])
    d.glue("r0", "r1", 7, "s", bulge=1.2)
    return d.graph()


def fixture_set() -> dict[str, PlaneGraph]:
    """The named fixture graphs used for conservation and determinism."""
    out = {}
    for n in range(3, 10):
        out[f"cycle{n}"] = families.cycle(n)
    for n in range(4, 9):
        out[f"wheel{n}"] = families.wheel(n)
    for n in range(3, 6):
        out[f"prism{n}"] = families.prism(n)
    out["octahedron"] = families.octahedron()
    for n, seed in ((6, 0), (9, 1), (14, 2)):
        out[f"stacked{n}_s{seed}"] = families.stacked_triangulation(n, seed)
    out["prop2_item1"] = item1_gadget()
    out["prop2_item2"] = item2_gadget()
    out["prop2_item3"] = item3_gadget()
    out["prop2_item4"] = item4_gadget()
    out["hyp5_gadget"] = pentagon_gadget()
    out["poor_face"] = poor_face_gadget()
    out["trio"] = trio_gadget()
    out["case5"] = case5_gadget()
    out["bowtie6"] = bowtie(6)
    out["bowtie5"] = bowtie(5)
    out["flaw_triangle"] = flaw_triangle_gadget()
    out["w5_heptagon"] = w5_heptagon_gadget()
    return out
