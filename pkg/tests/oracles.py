"""Independent reference implementations used only by the tests.

Nothing here imports the search code it checks; the oracles are written
the slow, obvious way.
"""
from __future__ import annotations

from itertools import combinations, permutations, product

import networkx as nx
import numpy as np


def edges_of(adj) -> set[frozenset]:
    return {frozenset((u, v)) for u in adj for v in adj[u]}


def brute_cycles(adj, max_len: int) -> set[frozenset]:
    """Every simple cycle of length 3..max_len as its edge set, found by
    trying all vertex sequences."""
    E = edges_of(adj)
    out = set()
    vs = sorted(adj)
    for L in range(3, max_len + 1):
        for seq in permutations(vs, L):
            es = [frozenset((seq[j], seq[(j + 1) % L])) for j in range(L)]
            if all(e in E for e in es):
                out.add(frozenset(es))
    return out


def nx_faces(G) -> list[int]:
    """Face degrees of the embedding, traced by networkx from the same
    clockwise rotation."""
    emb = nx.PlanarEmbedding()
    emb.set_data({v: list(G.neighbors(v)) for v in G.vertices})
    seen = set()
    degrees = []
    for u, v in emb.edges():
        if (u, v) in seen:
            continue
        face = emb.traverse_face(u, v, mark_half_edges=seen)
        degrees.append(len(face))
    return sorted(degrees)


def naive_l_colorable(adj, L) -> bool:
    vs = sorted(adj)
    for cols in product(*(sorted(L[v]) for v in vs)):
        c = dict(zip(vs, cols))
        if all(c[u] != c[w] for u in vs for w in adj[u]):
            return True
    return False


def naive_choosable(adj, k: int, universe: int):
    """Exhaustive over every assignment of k-subsets of ``range(universe)``,
    with no symmetry reduction.  Returns (choosable, bad assignment)."""
    vs = sorted(adj)
    n = len(vs)
    pos = {v: i for i, v in enumerate(vs)}
    lists = np.array(list(combinations(range(universe), k)), dtype=np.int16)
    m = len(lists)
    idx = np.indices((m,) * n).reshape(n, -1).T  # every assignment, one row each
    edges = sorted({(min(pos[u], pos[w]), max(pos[u], pos[w])) for u in vs for w in adj[u]})
    ok = np.zeros(len(idx), dtype=bool)
    for choice in product(range(k), repeat=n):
        cols = np.stack([lists[idx[:, j], choice[j]] for j in range(n)], axis=1)
        proper = np.ones(len(idx), dtype=bool)
        for a, b in edges:
            proper &= cols[:, a] != cols[:, b]
        ok |= proper
    if ok.all():
        return True, None
    row = idx[np.argmin(ok)]
    return False, {vs[j]: frozenset(int(c) for c in lists[row[j]]) for j in range(n)}


def two_choosable_by_structure(adj) -> bool:
    """Characterisation of 2-choosable connected graphs: repeatedly delete
    degree-1 vertices; the result must be K1, an even cycle, or a theta
    graph theta(2, 2, 2m)."""
    H = {v: set(ws) for v, ws in adj.items()}
    changed = True
    while changed:
        changed = False
        for v in list(H):
            if len(H) > 1 and len(H[v]) <= 1:
                for w in H.pop(v):
                    H[w].discard(v)
                changed = True
    n = len(H)
    m = sum(len(ws) for ws in H.values()) // 2
    if n == 1:
        return True
    degs = sorted(len(ws) for ws in H.values())
    if m == n:  # a cycle
        return n % 2 == 0
    if m != n + 1 or degs.count(3) != 2 or degs.count(2) != n - 2:
        return False
    a, b = [v for v, ws in H.items() if len(ws) == 3]
    # three internally disjoint a-b paths; measure their lengths
    lengths = []
    for start in H[a]:
        prev, cur, L = a, start, 1
        while cur not in (a, b):
            nxt = next(w for w in H[cur] if w != prev)
            prev, cur, L = cur, nxt, L + 1
        if cur == a:  # a cycle hanging off a: two cycles joined by a path
            return False
        lengths.append(L)
    lengths.sort()
    return lengths[0] == 2 and lengths[1] == 2 and lengths[2] % 2 == 0


def connected_graphs(max_n: int):
    """All connected graphs with 1..max_n vertices, one per isomorphism
    class, from the networkx graph atlas."""
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= max_n and nx.is_connected(g):
            yield g


def as_adj(g) -> dict:
    return {v: set(g[v]) for v in g}


def facial_triangle_sets(G) -> dict[frozenset, int]:
    return {f.vertex_set: f.id for f in G.faces if f.degree == 3 and f.is_simple}


def brute_w5(G) -> set[tuple]:
    """(hub, face ids) for every hub whose four wheel triangles are faces,
    by trying every hub and every ordered 4-tuple of other vertices."""
    tri = facial_triangle_sets(G)
    out = set()
    for h in G.vertices:
        others = [v for v in G.vertices if v != h]
        for rim in permutations(others, 4):
            sets = [frozenset((h, rim[j], rim[(j + 1) % 4])) for j in range(4)]
            if all(s in tri for s in sets):
                out.add((h, frozenset(tri[s] for s in sets)))
    return out


def brute_trios(G) -> set[frozenset]:
    """Face-id triples of every trio, by trying all 5-tuples of vertices."""
    tri = facial_triangle_sets(G)
    out = set()
    for u, v, w, x, y in permutations(G.vertices, 5):
        sets = [frozenset((x, u, v)), frozenset((x, y, v)), frozenset((y, v, w))]
        if all(s in tri for s in sets):
            out.add(frozenset(tri[s] for s in sets))
    return out
