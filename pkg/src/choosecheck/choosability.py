"""List colouring and exhaustive choosability checks for small graphs.

The exhaustive search runs over vertices in a fixed order and keeps, for
the assigned prefix, the set of proper colourings projected onto the
*frontier* (assigned vertices with an unassigned neighbour).  Colours that
appear neither in that set nor in a pinned list cannot interact with the
rest of the graph, so they are interchangeable with fresh colours; the
next list is therefore drawn from the relevant colours plus fresh ones.
States are memoised after relabelling relevant colours to ``0..r-1`` in
an order fixed by a relabelling-invariant signature.  A state is settled
early when one of its colourings leaves every remaining vertex more
colours than remaining neighbours in some peeling order, since then no
choice of the remaining lists can block it.  Every search has a step
budget and raises :class:`TooLarge` instead of guessing when it runs out.
"""
from __future__ import annotations

import random
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from itertools import combinations

ListAssignment = dict[int, frozenset[int]]

CHOOSABLE_CAP = {2: 10, 3: 10}
CHOOSABLE_CAP_LARGE_K = 8
RESIDUAL_CAP = 16
# list-expansion steps before a search gives up with TooLarge; a step
# costs 0.05 to 0.5 ms depending on how many colourings a state carries
SEARCH_BUDGET = 500_000


class MissingList(KeyError):
    pass


class TooLarge(ValueError):
    pass


def as_adjacency(G) -> dict[int, frozenset[int]]:
    if hasattr(G, "adjacency"):
        return G.adjacency()
    adj = {v: set() for v in G}
    for v, ws in G.items():
        for w in ws:
            if w == v:
                raise ValueError(f"self-loop at {v!r}")
            adj[v].add(w)
            adj.setdefault(w, set()).add(v)
    return {v: frozenset(ws) for v, ws in adj.items()}


def is_proper(adj: Mapping, L: Mapping, coloring: Mapping) -> bool:
    return all(coloring[v] in L[v] for v in adj) and all(
        coloring[v] != coloring[w] for v in adj for w in adj[v]
    )


def l_colorable(G, L: Mapping[int, Iterable[int]]) -> dict[int, int] | None:
    """A proper colouring with ``coloring[v] in L[v]``, or ``None``.

    Backtracking on the vertex with the fewest remaining colours, removing
    a chosen colour from the neighbours' remaining sets as it goes.
    """
    adj = as_adjacency(G)
    missing = [v for v in adj if v not in L]
    if missing:
        raise MissingList(f"no list for vertices {sorted(missing, key=repr)}")
    avail = {v: set(L[v]) for v in adj}
    coloring: dict[int, int] = {}

    def solve():
        if len(coloring) == len(adj):
            return True
        v = min((u for u in adj if u not in coloring), key=lambda u: (len(avail[u]), -len(adj[u]), repr(u)))
        for c in sorted(avail[v]):
            touched = [w for w in adj[v] if w not in coloring and c in avail[w]]
            if any(len(avail[w]) == 1 for w in touched):
                continue
            coloring[v] = c
            for w in touched:
                avail[w].discard(c)
            if solve():
                return True
            for w in touched:
                avail[w].add(c)
            del coloring[v]
        return False

    return dict(coloring) if solve() else None


def _stable(vs) -> list:
    return sorted(vs, key=lambda v: (0, v, "") if isinstance(v, int) else (1, 0, repr(v)))


def _order(adj: Mapping) -> list:
    """Vertex order keeping the frontier narrow: start at a vertex of max
    degree, then repeatedly take the vertex with most placed neighbours."""
    rank = {v: i for i, v in enumerate(_stable(adj))}
    left = set(adj)
    order = []
    placed: set = set()
    while left:
        if not any(adj[v] & placed for v in left):
            v = max(left, key=lambda u: (len(adj[u]), -rank[u]))
        else:
            v = max(left, key=lambda u: (len(adj[u] & placed), -len(adj[u] - placed), -rank[u]))
        order.append(v)
        placed.add(v)
        left.discard(v)
    return order


class _Search:
    def __init__(self, adj, sizes, distinct=False, budget=SEARCH_BUDGET):
        self.adj = adj
        self.budget = budget
        self.steps = 0
        self.order = _order(adj)
        self.sizes = [sizes[v] for v in self.order]
        self.distinct = distinct
        pos = {v: i for i, v in enumerate(self.order)}
        n = len(self.order)
        # frontier[i]: placed vertices (index < i) with a neighbour at index >= i
        self.frontier = []
        for i in range(n + 1):
            self.frontier.append([u for u in self.order[:i] if any(pos[w] >= i for w in adj[u])])
        self.back = [[self.frontier[i].index(w) for w in adj[v] if pos[w] < i] for i, v in enumerate(self.order)]
        # for the slack test: suffix adjacency and, per suffix vertex, the
        # frontier positions of its placed neighbours
        self.suffix = []
        for i in range(n + 1):
            rest = self.order[i:]
            idx = {v: k for k, v in enumerate(self.frontier[i])}
            self.suffix.append([
                (
                    self.sizes[i + j],
                    [pos[w] - i for w in adj[v] if pos[w] >= i],
                    [idx[w] for w in adj[v] if pos[w] < i],
                )
                for j, v in enumerate(rest)
            ])
        self.memo: dict = {}
        self.states = 0

    def _slack(self, i, t) -> bool:
        """True when, after the frontier colouring ``t``, the unassigned
        vertices can be coloured greedily from *any* lists of their sizes:
        peel vertices whose list size minus the distinct colours already on
        their placed neighbours exceeds their remaining degree."""
        rows = self.suffix[i]
        m = len(rows)
        eff = [s - len({t[k] for k in back}) for s, _, back in rows]
        deg = [len(fwd) for _, fwd, _ in rows]
        alive = [True] * m
        stack = [j for j in range(m) if eff[j] > deg[j]]
        removed = 0
        while stack:
            j = stack.pop()
            if not alive[j]:
                continue
            alive[j] = False
            removed += 1
            for q in rows[j][1]:
                if alive[q]:
                    deg[q] -= 1
                    if eff[q] > deg[q]:
                        stack.append(q)
        return removed == m

    def _lists(self, relevant, size):
        rel = sorted(relevant)
        fresh_start = (max(rel) + 1) if rel else 0
        for j in range(min(size, len(rel)), -1, -1):
            fresh = tuple(range(fresh_start, fresh_start + size - j))
            for old in combinations(rel, j):
                yield frozenset(old + fresh)

    def _step(self, i, state, L):
        self.steps += 1
        if self.budget is not None and self.steps > self.budget:
            raise TooLarge(f"search exceeded its budget of {self.budget} list-expansion steps")
        v = self.order[i]
        nxt = self.frontier[i + 1]
        cur = self.frontier[i]
        src = [cur.index(u) if u != v else -1 for u in nxt]
        back = self.back[i]
        out = set()
        for t in state:
            banned = {t[k] for k in back}
            for c in L:
                if c not in banned:
                    out.add(tuple(t[k] if k >= 0 else c for k in src))
        return frozenset(out)

    def _key(self, i, state, pinned):
        rel = set()
        for t in state:
            rel.update(t)
        if pinned:
            rel.update(pinned)
        # order colours by a relabelling-invariant signature so that
        # equivalent states tend to share a key; ties fall back to the value
        width = len(self.frontier[i])
        sig = {c: [0] * width for c in rel}
        for t in state:
            for k, c in enumerate(t):
                sig[c][k] += 1
        m = {c: k for k, c in enumerate(sorted(rel, key=lambda c: (pinned is not None and c in pinned, sig[c], c)))}
        st = frozenset(tuple(m[c] for c in t) for t in state)
        pin = None if pinned is None else frozenset(m[c] for c in pinned)
        return (i, st, pin), rel

    def bad(self, i, state, pinned):
        """True when the lists of vertices ``i..`` can be chosen so that the
        whole assignment has no proper colouring (and, with ``distinct``,
        not every list is the same)."""
        n = len(self.order)
        if i == n:
            return False
        key, rel = self._key(i, state, pinned)
        if key in self.memo:
            return self.memo[key]
        self.states += 1
        if any(self._slack(i, t) for t in state):
            self.memo[key] = False
            return False
        if i == n - 1:
            result = self._last_bad(state, pinned) is not None
            self.memo[key] = result
            return result
        result = False
        for L in self._lists(rel, self.sizes[i]):
            new_pin = self._pin(i, pinned, L)
            nstate = self._step(i, state, L)
            if not nstate:
                if not self.distinct or new_pin is None or i < n - 1:
                    result = True
                    break
                continue
            if self.bad(i + 1, nstate, new_pin):
                result = True
                break
        self.memo[key] = result
        return result

    def _last_bad(self, state, pinned):
        """A list for the last vertex that every surviving colouring blocks."""
        back = self.back[-1]
        common = None
        for t in state:
            banned = {t[k] for k in back}
            common = banned if common is None else common & banned
        s = self.sizes[-1]
        for L in combinations(sorted(common), s):
            L = frozenset(L)
            if not self.distinct or pinned is None or L != pinned:
                return L
        return None

    def _pin(self, i, pinned, L):
        if not self.distinct:
            return None
        if i == 0:
            return L
        if pinned is not None and pinned == L:
            return pinned
        return None

    def witness(self) -> ListAssignment | None:
        n = len(self.order)
        state = frozenset({()})
        pinned = None
        lists: ListAssignment = {}
        if not self.bad(0, state, pinned):
            return None
        for i in range(n):
            if i == n - 1:
                lists[self.order[i]] = self._last_bad(state, pinned)
                return lists
            _, rel = self._key(i, state, pinned)
            for L in self._lists(rel, self.sizes[i]):
                new_pin = self._pin(i, pinned, L)
                nstate = self._step(i, state, L)
                if not nstate:
                    if not self.distinct or new_pin is None or i < n - 1:
                        lists[self.order[i]] = L
                        return self._complete(lists, new_pin)
                    continue
                if self.bad(i + 1, nstate, new_pin):
                    lists[self.order[i]] = L
                    state, pinned = nstate, new_pin
                    break
            else:  # pragma: no cover - bad() promised a continuation
                raise AssertionError("witness reconstruction lost its way")
        raise AssertionError("witness reconstruction ran past the last vertex")

    def _complete(self, lists, pinned):
        # the prefix is already uncolourable; finish with fresh colours
        top = max((c for L in lists.values() for c in L), default=-1) + 1
        for i in range(len(lists), len(self.order)):
            s = self.sizes[i]
            lists[self.order[i]] = frozenset(range(top, top + s))
            top += s
        return lists


def _check_sizes(sizes):
    bad = [v for v, s in sizes.items() if s < 1]
    if bad:
        raise ValueError(f"list sizes must be >= 1 (vertices {bad})")


def find_bad_assignment(
    G, sizes: Mapping[int, int], distinct: bool = False, budget: int | None = SEARCH_BUDGET
) -> ListAssignment | None:
    """A list assignment with ``|L(v)| = sizes[v]`` admitting no proper
    colouring, or ``None`` if every such assignment is colourable.  With
    ``distinct`` only assignments using at least two different lists count."""
    adj = as_adjacency(G)
    _check_sizes(sizes)
    if not adj:
        return None
    L = _Search(adj, sizes, distinct, budget).witness()
    if L is not None and l_colorable(adj, L) is not None:
        raise AssertionError(f"search returned a colourable assignment {L}")
    return L


def core(G, k: int) -> dict[int, frozenset[int]]:
    """Repeatedly delete vertices of degree < k; such vertices can always be
    coloured last, so the core is k-choosable iff the graph is."""
    adj = {v: set(ws) for v, ws in as_adjacency(G).items()}
    changed = True
    while changed:
        changed = False
        for v in _stable(adj):
            if len(adj[v]) < k:
                for w in adj.pop(v):
                    adj[w].discard(v)
                changed = True
    return {v: frozenset(ws) for v, ws in adj.items()}


@dataclass(frozen=True)
class ChoosabilityResult:
    choosable: bool
    bad_assignment: ListAssignment | None
    core_size: int


def k_choosable(
    G, k: int, cap: int | None = None, reduce: bool = True, budget: int | None = SEARCH_BUDGET
) -> ChoosabilityResult:
    """Exact k-choosability by exhaustive search over k-list assignments
    (up to renaming colours).  ``cap`` bounds the number of vertices left
    after degree reduction."""
    if k < 1:
        raise ValueError("k must be >= 1")
    adj = as_adjacency(G)
    work = core(adj, k) if reduce else adj
    limit = cap if cap is not None else CHOOSABLE_CAP.get(k, CHOOSABLE_CAP_LARGE_K if k > 3 else 10)
    if len(work) > limit:
        raise TooLarge(f"{len(work)} vertices to search exceeds the engine cap of {limit} for k={k}")
    bad = find_bad_assignment(work, {v: k for v in work}, budget=budget) if work else None
    if bad is None:
        return ChoosabilityResult(True, None, len(work))
    top = max(c for L in bad.values() for c in L) + 1
    full = {}
    for v in _stable(adj):
        if v in bad:
            full[v] = bad[v]
        else:
            full[v] = frozenset(range(top, top + k))
            top += k
    return ChoosabilityResult(False, full, len(work))


@dataclass(frozen=True)
class ResidualSpec:
    """Gadget graph ``Z`` with a required list size per vertex."""

    graph: dict[int, frozenset[int]]
    sizes: dict[int, int]
    name: str = ""

    def __post_init__(self):
        for v, s in self.sizes.items():
            if not 1 <= s <= 4:
                raise ValueError(f"residual list size of {v!r} is {s}, expected 1..4")
        if set(self.sizes) != set(self.graph):
            raise ValueError("sizes must cover exactly the gadget's vertices")


@dataclass(frozen=True)
class ResidualResult:
    always: bool
    counterexample: ListAssignment | None


def residual_sizes(Z: Mapping, host_degree: Mapping[int, int], k: int = 4) -> dict[int, int]:
    """List sizes left after colouring everything outside ``Z``: each
    neighbour outside the gadget can remove one colour."""
    adj = as_adjacency(Z)
    return {v: k - (host_degree[v] - len(adj[v])) for v in adj}


def residual_always_colorable(
    spec: ResidualSpec, distinct: bool = False, cap: int = RESIDUAL_CAP, budget: int | None = SEARCH_BUDGET
) -> ResidualResult:
    if len(spec.graph) > cap:
        raise TooLarge(f"gadget has {len(spec.graph)} vertices, engine cap is {cap}")
    bad = find_bad_assignment(spec.graph, spec.sizes, distinct, budget)
    return ResidualResult(bad is None, bad)


def random_assignment(vertices, k: int, rng: random.Random, universe: int | None = None) -> ListAssignment:
    vs = list(vertices)
    u = universe or max(k, k * len(vs))
    return {v: frozenset(rng.sample(range(u), k)) for v in vs}


def smoke_check(G, k: int, samples: int = 1000, seed: int = 0) -> bool:
    """Random k-assignments must all be colourable on a k-choosable graph."""
    adj = as_adjacency(G)
    rng = random.Random(seed)
    for _ in range(samples):
        u = rng.randint(k, max(k, k * len(adj)))
        if l_colorable(adj, random_assignment(adj, k, rng, u)) is None:
            return False
    return True
