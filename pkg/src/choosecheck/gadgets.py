"""Residual list-colouring gadgets.

Each gadget is a small graph ``Z`` cut out of a hypothetical host graph in
which every vertex has a 4-list.  After the rest of the host is coloured, a
vertex of ``Z`` keeps at least ``4 - (host neighbours outside Z)`` colours.
The host is reducible at ``Z`` when ``Z`` is colourable from *every*
assignment of those sizes; that is what these checks decide exhaustively.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .choosability import ListAssignment, ResidualSpec, as_adjacency, residual_always_colorable, residual_sizes


@dataclass(frozen=True)
class Gadget:
    name: str
    description: str
    spec: ResidualSpec
    distinct: bool = False
    expected: bool | None = None  # the claimed outcome, None for control runs


@dataclass(frozen=True)
class GadgetReport:
    name: str
    description: str
    sizes: dict
    distinct: bool
    expected: bool | None
    always: bool
    counterexample: ListAssignment | None

    @property
    def agrees(self) -> bool | None:
        return None if self.expected is None else self.expected == self.always


def _spec(edges, host_degree, name, override=None):
    nbrs: dict = {v: set() for v in host_degree}
    for a, b in edges:
        nbrs[a].add(b)
        nbrs[b].add(a)
    adj = as_adjacency(nbrs)
    sizes = residual_sizes(adj, host_degree)
    sizes.update(override or {})
    return ResidualSpec(adj, sizes, name)


def cycle_gadget(n: int) -> Gadget:
    names = [f"c{i}" for i in range(n)]
    adj = {names[i]: frozenset({names[i - 1], names[(i + 1) % n]}) for i in range(n)}
    spec = ResidualSpec(adj, {v: 2 for v in names}, f"cycle{n}")
    return Gadget(
        f"cycle{n}_two_lists",
        f"C{n}, every list of size 2, at least two different lists",
        spec, distinct=True, expected=True,
    )


def wheel_gadget(pattern: str = "adjacent", hub_size: int | None = None) -> Gadget:
    """W5 with hub x5 (4-vertex), rim 5-vertices x1, x2 and rim 4-vertices
    x3, x4.  ``adjacent`` puts x1 next to x2 on the rim, ``opposite`` does not."""
    rim = ["x1", "x2", "x3", "x4"] if pattern == "adjacent" else ["x1", "x3", "x2", "x4"]
    edges = [("x5", r) for r in rim] + [(rim[i], rim[(i + 1) % 4]) for i in range(4)]
    host = {"x1": 5, "x2": 5, "x3": 4, "x4": 4, "x5": 4}
    override = {"x5": hub_size} if hub_size is not None else None
    name = f"w5_{pattern}" + (f"_hub{hub_size}" if hub_size is not None else "")
    desc = f"W5, two 5-vertices {'adjacent' if pattern == 'adjacent' else 'opposite'} on the rim"
    if hub_size is not None:
        desc += f", hub list cut to {hub_size} (control)"
    expected = True if hub_size is None and pattern == "adjacent" else None
    return Gadget(name, desc, _spec(edges, host, name, override), expected=expected)


def six_vertex_gadget(closed: bool = True) -> Gadget:
    """Faces v w_i z_i w_{i+1} around a 6-vertex v whose face boundary
    vertices other than v are 4-vertices.  ``closed`` keeps all six faces;
    otherwise the face between w6 and w1 is left out of Z."""
    k = 6 if closed else 5
    edges = [("v", f"w{i}") for i in range(1, 7)]
    for i in range(1, k + 1):
        nxt = i % 6 + 1
        edges += [(f"w{i}", f"z{i}"), (f"z{i}", f"w{nxt}")]
    host = {"v": 6} | {f"w{i}": 4 for i in range(1, 7)} | {f"z{i}": 4 for i in range(1, k + 1)}
    name = "six_vertex_all_faces" if closed else "six_vertex_five_faces"
    desc = (
        "6-vertex, all six incident faces are (4,4,4,6)-faces"
        if closed else
        "6-vertex, five incident (4,4,4,6)-faces; the sixth face is outside Z"
    )
    return Gadget(name, desc, _spec(edges, host, name), expected=True)


def five_vertex_gadget() -> Gadget:
    edges = [("v", f"w{i}") for i in range(1, 6)]
    for i in range(1, 6):
        edges += [(f"w{i}", f"z{i}"), (f"z{i}", f"w{i % 5 + 1}")]
    host = {"v": 5} | {f"w{i}": 4 for i in range(1, 6)} | {f"z{i}": 4 for i in range(1, 6)}
    return Gadget(
        "five_vertex_all_faces",
        "5-vertex, all five incident faces are (4,4,4,5)-faces (data only)",
        _spec(edges, host, "five_vertex_all_faces"),
    )


def standard_gadgets() -> list[Gadget]:
    out = [cycle_gadget(n) for n in range(3, 9)]
    out += [
        wheel_gadget("adjacent"),
        wheel_gadget("opposite"),
        wheel_gadget("adjacent", hub_size=3),
        six_vertex_gadget(True),
        six_vertex_gadget(False),
        five_vertex_gadget(),
    ]
    return out


def run_gadget(g: Gadget) -> GadgetReport:
    r = residual_always_colorable(g.spec, distinct=g.distinct)
    return GadgetReport(g.name, g.description, dict(g.spec.sizes), g.distinct, g.expected, r.always, r.counterexample)


def verify_gadget_lemmas(jobs: int = 1, gadgets: list[Gadget] | None = None) -> list[GadgetReport]:
    gadgets = gadgets if gadgets is not None else standard_gadgets()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(run_gadget, gadgets))
    return [run_gadget(g) for g in gadgets]
