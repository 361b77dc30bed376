"""Independent brute-force oracles for the test suite.

Each oracle deliberately avoids the algorithm it checks: reachability
closure instead of lowpoint DFS, set-partition enumeration instead of
branch and bound, subset enumeration instead of flow, trail backtracking
instead of the tour construction.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from dichroma.core import Digraph, Multigraph


# --- strong components by pairwise reachability ---------------------------


def reachability_scc(d: Digraph) -> list[frozenset[int]]:
    reach = [set([v]) for v in range(d.n)]
    for v in range(d.n):
        stack = [v]
        while stack:
            x = stack.pop()
            for y in d.out_sets[x]:
                if y not in reach[v]:
                    reach[v].add(y)
                    stack.append(y)
    comps = []
    seen = set()
    for v in range(d.n):
        if v in seen:
            continue
        comp = {w for w in reach[v] if v in reach[w]}
        seen |= comp
        comps.append(frozenset(comp))
    return comps


# --- blocks by cutvertex enumeration ---------------------------------------


def brute_blocks(d: Digraph) -> set[frozenset[int]]:
    """2-connected components as inclusion-maximal vertex sets inducing a
    connected cutvertex-free underlying subgraph with at least one edge."""
    und = [set(d.und_sets[v]) for v in range(d.n)]

    def induced_connected(s: set[int]) -> bool:
        start = next(iter(s))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in und[x] & s:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen == s

    def two_connected(s: set[int]) -> bool:
        if len(s) < 2 or not induced_connected(s):
            return False
        if len(s) == 2:
            a, b = sorted(s)
            return b in und[a]
        return all(induced_connected(s - {v}) for v in s)

    cands = []
    for size in range(2, d.n + 1):
        for comb in itertools.combinations(range(d.n), size):
            s = set(comb)
            if two_connected(s):
                cands.append(frozenset(s))
    return {s for s in cands if not any(s < t for t in cands)}


# --- minimum acyclic partition by restricted growth strings ----------------


def is_acyclic_subset(d: Digraph, s: Iterable[int]) -> bool:
    inside = set(s)
    indeg = {v: len(d.in_sets[v] & inside) for v in inside}
    ready = [v for v in inside if indeg[v] == 0]
    done = 0
    while ready:
        v = ready.pop()
        done += 1
        for w in d.out_sets[v]:
            if w in inside:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
    return done == len(inside)


def brute_min_acyclic_partition(d: Digraph) -> int:
    """Minimum class count over all set partitions with acyclic classes."""
    n = d.n
    if n == 0:
        return 0
    best = n

    def grow(i: int, classes: list[list[int]]):
        nonlocal best
        if len(classes) >= best:
            return
        if i == n:
            best = min(best, len(classes))
            return
        for cls in classes:
            cls.append(i)
            if is_acyclic_subset(d, cls):
                grow(i + 1, classes)
            cls.pop()
        classes.append([i])
        grow(i + 1, classes)
        classes.pop()

    grow(0, [])
    return best


# --- euler tours by trail backtracking --------------------------------------


def brute_has_closed_trail(g: Multigraph) -> bool:
    m = g.m()
    if m == 0:
        return True
    start = g.edges[0][0]

    def walk(v: int, used: int) -> bool:
        if used == (1 << m) - 1:
            return v == start
        for w, ei in g.adj[v]:
            if not (used >> ei) & 1:
                if walk(w, used | (1 << ei)):
                    return True
        return False

    return walk(start, 0)


# --- minimum dicut by subset enumeration ------------------------------------


def brute_lambda(d: Digraph, s: int, t: int) -> int:
    best = None
    for mask in range(1 << d.n):
        if not (mask >> s) & 1 or (mask >> t) & 1:
            continue
        cut = sum(
            1 for u, v in d.arcs if (mask >> u) & 1 and not (mask >> v) & 1
        )
        best = cut if best is None else min(best, cut)
    return best or 0


# --- hubs by subset enumeration ---------------------------------------------


def brute_maximal_hubs(d: Digraph) -> set[frozenset[int]]:
    hubs = []
    for size in range(1, d.n):
        for comb in itertools.combinations(range(d.n), size):
            s = set(comb)
            sub, _ = d.induced(comb)
            if not sub.is_strong:
                continue
            if any(s <= d.in_sets[x] for x in range(d.n) if x not in s):
                hubs.append(frozenset(s))
    maximal = {h for h in hubs if not any(h < g for g in hubs)}
    return maximal


def brute_maximal_weak_hubs(d: Digraph) -> set[frozenset[int]]:
    hubs = []
    for size in range(1, d.n):
        for comb in itertools.combinations(range(d.n), size):
            s = set(comb)
            sub, _ = d.induced(comb)
            if not sub.is_strong:
                continue
            ok = False
            for x in range(d.n):
                if x in s:
                    continue
                if s <= d.out_sets[x] - d.in_sets[x]:
                    ok = True
                if s <= d.in_sets[x] - d.out_sets[x]:
                    ok = True
            if ok:
                hubs.append(frozenset(s))
    return {h for h in hubs if not any(h < g for g in hubs)}


# --- cyclic orders -----------------------------------------------------------


def brute_inround_exists(d: Digraph) -> bool:
    from dichroma.localstruct import satisfies_in_round

    if d.n == 1:
        return True
    rest = list(range(1, d.n))
    for perm in itertools.permutations(rest):
        if satisfies_in_round(d, (0,) + perm):
            return True
    return False


# --- undirected exact chromatic number (for line graphs) --------------------


def undirected_chromatic(n: int, edges: Sequence[tuple[int, int]]) -> int:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    order = sorted(range(n), key=lambda v: -len(adj[v]))

    def feasible(k: int) -> bool:
        colour = {}

        def go(i: int) -> bool:
            if i == n:
                return True
            v = order[i]
            used = {colour[w] for w in adj[v] if w in colour}
            top = min(k, max(colour.values(), default=0) + 1)
            for c in range(1, top + 1):
                if c in used:
                    continue
                colour[v] = c
                if go(i + 1):
                    return True
                del colour[v]
            return False

        return go(0)

    k = 1
    while not feasible(k):
        k += 1
    return k


# --- random digraph / multigraph generators ---------------------------------


def random_digraph(rng, n: int, p: float) -> Digraph:
    arcs = frozenset(
        (i, j) for i in range(n) for j in range(n) if i != j and rng.random() < p
    )
    return Digraph(n, arcs)


def random_regular_multigraph(rng, n: int, deg: int) -> Multigraph:
    """Configuration model with loop rejection; retries until loop-free."""
    while True:
        stubs = [v for v in range(n) for _ in range(deg)]
        rng.shuffle(stubs)
        edges = []
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            edges.append((min(u, v), max(u, v)))
        if ok:
            return Multigraph(n, tuple(edges))


# --- structured digraph generators ------------------------------------------


def random_in_round(rng, n: int) -> Digraph:
    """Strong in-round oriented graph: each in-neighbourhood is the cyclic
    interval just before its vertex (interval lengths below n/2 keep the
    graph oriented)."""
    assert n >= 3
    top = max(1, -(-n // 2) - 1)
    arcs = set()
    for v in range(n):
        k = rng.randint(1, top)
        for step in range(1, k + 1):
            arcs.add(((v - step) % n, v))
    return Digraph(n, frozenset(arcs))


def random_lot_instance(rng, max_quotient: int = 7) -> Digraph:
    """Strong locally out-transitive oriented graph built as an in-round
    quotient whose vertices are substituted by strong parts, with all arcs
    into a part landing on a fixed transitive entry set."""
    from dichroma.core import Digraph as DG

    nq = rng.randint(3, max_quotient)
    quotient = random_in_round(rng, nq)
    parts = []
    entries = []
    offset = 0
    offsets = []
    for h in range(nq):
        kind = rng.random()
        if kind < 0.55:
            part_arcs, size = [], 1
            entry = [0]
        elif kind < 0.8:
            part_arcs, size = [(0, 1), (1, 2), (2, 0)], 3
            entry = [0] if rng.random() < 0.5 else [0, 1]
        else:
            size = rng.randint(3, 5)
            sub = random_in_round(rng, size)
            part_arcs = sorted(sub.arcs)
            entry = [0] + sorted(sub.out_sets[0]) if rng.random() < 0.5 else [0]
        offsets.append(offset)
        parts.append((part_arcs, size))
        entries.append([offset + v for v in entry])
        offset += size
    arcs = set()
    for h, (part_arcs, size) in enumerate(parts):
        for u, v in part_arcs:
            arcs.add((offsets[h] + u, offsets[h] + v))
    for g, h in quotient.arcs:
        for u in range(offsets[g], offsets[g] + parts[g][1]):
            for t in entries[h]:
                arcs.add((u, t))
    return DG(offset, frozenset(arcs))


def random_out_round_girth(rng, n: int, min_girth: int, tries: int = 200) -> Digraph:
    """Strong out-round oriented graph with no dicycle shorter than
    min_girth (rejection sampling on the interval construction)."""
    from dichroma.localstruct import shortest_dicycle_length

    for _ in range(tries):
        d = random_in_round(rng, n).reverse()
        g = shortest_dicycle_length(d)
        if g is not None and g >= min_girth:
            return d
    raise RuntimeError("no instance found")
