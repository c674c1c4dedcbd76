import os
import sys
from functools import lru_cache

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from choosecheck import families  # noqa: E402
from choosecheck.fixtures import fixture_set  # noqa: E402
from choosecheck.plane_graph import Disconnected, PlaneGraph  # noqa: E402

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@lru_cache(maxsize=1)
def fixtures() -> dict:
    return fixture_set()


def delete_edge(G: PlaneGraph, u: int, v: int) -> PlaneGraph | None:
    """``G`` minus edge uv with the inherited embedding, or None when the
    deletion disconnects the graph."""
    rot = [[w for w in r if not ({x, w} == {u, v})] for x, r in enumerate(G.rotation)]
    try:
        return PlaneGraph(rot, G.labels)
    except Disconnected:
        return None


def relabel(G: PlaneGraph, perm: list[int]) -> PlaneGraph:
    """Same embedding with vertex ``v`` renamed ``perm[v]``."""
    rot = [None] * G.n
    for v in G.vertices:
        rot[perm[v]] = [perm[w] for w in G.rotation[v]]
    return PlaneGraph(rot)


base_graphs = st.one_of(
    st.builds(families.stacked_triangulation, st.integers(3, 12), st.integers(0, 10**6)),
    st.builds(families.wheel, st.integers(4, 9)),
    st.builds(families.prism, st.integers(3, 6)),
    st.builds(families.cycle, st.integers(3, 9)),
    st.just(families.octahedron()),
    st.sampled_from(sorted(fixture_set())).map(lambda name: fixtures()[name]),
)


@st.composite
def thinned(draw, graphs=base_graphs, max_deletions=4):
    """A base graph with a few edges removed, keeping it connected."""
    G = draw(graphs)
    for _ in range(draw(st.integers(0, max_deletions))):
        if not G.edges:
            break
        u, v = draw(st.sampled_from(G.edges))
        H = delete_edge(G, u, v)
        if H is not None:
            G = H
    return G


plane_graphs = st.one_of(base_graphs, thinned())


@st.composite
def relabelled(draw, graphs=plane_graphs):
    G = draw(graphs)
    perm = draw(st.permutations(list(G.vertices)))
    return G, relabel(G, perm), perm
