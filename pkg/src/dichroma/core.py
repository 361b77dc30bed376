"""Foundational graph values and shared algorithms.

Digraphs and multigraphs are immutable values over dense integer vertex
indices 0..n-1.  Adjacency is kept both as frozensets (for iteration) and
as integer bitsets (for the exact solvers); every traversal breaks ties by
ascending vertex index so downstream certificates are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateArc,
    IndexOutOfRange,
    InvalidPartition,
    LoopArc,
)

Arc = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """A loop-free digraph with a duplicate-free set of ordered arcs.

    Digons (both uv and vu) are allowed; `is_oriented` reports their
    absence.
    """

    n: int
    arcs: frozenset[Arc]

    @cached_property
    def out_sets(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].add(v)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def in_sets(self) -> tuple[frozenset[int], ...]:
        inn: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].add(u)
        return tuple(frozenset(s) for s in inn)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        out = [0] * self.n
        for u, v in self.arcs:
            out[u] |= 1 << v
        return tuple(out)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        inn = [0] * self.n
        for u, v in self.arcs:
            inn[v] |= 1 << u
        return tuple(inn)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def has_digon(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs and (v, u) in self.arcs

    def d_plus(self, v: int) -> int:
        return len(self.out_sets[v])

    def d_minus(self, v: int) -> int:
        return len(self.in_sets[v])

    def d_min(self, v: int) -> int:
        return min(self.d_plus(v), self.d_minus(v))

    def d_max(self, v: int) -> int:
        return max(self.d_plus(v), self.d_minus(v))

    @cached_property
    def delta_min(self) -> int:
        return max((self.d_min(v) for v in range(self.n)), default=0)

    @cached_property
    def delta_max(self) -> int:
        return max((self.d_max(v) for v in range(self.n)), default=0)

    @cached_property
    def is_oriented(self) -> bool:
        return all((v, u) not in self.arcs for u, v in self.arcs)

    @cached_property
    def und_sets(self) -> tuple[frozenset[int], ...]:
        """Neighbourhoods of the underlying graph."""
        return tuple(self.out_sets[v] | self.in_sets[v] for v in range(self.n))

    def reverse(self) -> "Digraph":
        return Digraph(self.n, frozenset((v, u) for u, v in self.arcs))

    def add_arcs(self, extra: Iterable[Arc]) -> "Digraph":
        return build_digraph(self.n, set(self.arcs) | set(extra))

    def remove_arcs(self, gone: Iterable[Arc]) -> "Digraph":
        return Digraph(self.n, self.arcs - frozenset(gone))

    def induced(self, vertices: Sequence[int]) -> tuple["Digraph", list[int]]:
        """Induced subdigraph plus the list mapping new index -> old label."""
        labels = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(labels)}
        arcs = frozenset(
            (pos[u], pos[v]) for u, v in self.arcs if u in pos and v in pos
        )
        return Digraph(len(labels), arcs), labels

    @cached_property
    def is_connected(self) -> bool:
        """Weak connectivity of the underlying graph (true for n <= 1)."""
        if self.n <= 1:
            return True
        seen = _closure(self.und_sets, {0})
        return len(seen) == self.n

    @cached_property
    def is_strong(self) -> bool:
        if self.n <= 1:
            return True
        fwd = _closure(self.out_sets, {0})
        if len(fwd) != self.n:
            return False
        return len(_closure(self.in_sets, {0})) == self.n

    @cached_property
    def is_biconnected(self) -> bool:
        """2-connectedness of the underlying graph (no cutvertex, n >= 3)."""
        if self.n < 3 or not self.is_connected:
            return False
        return not _cutvertices(self.und_sets, self.n)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def __repr__(self) -> str:  # compact, deterministic
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()})"


@dataclass(frozen=True)
class Multigraph:
    """An undirected loop-free multigraph; `edges` is an instance list.

    Edge instances keep their input order, so per-edge colourings can be
    serialized positionally.  Endpoints are normalized to u < v.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adj(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: (neighbour, edge index) pairs in edge order."""
        a: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            a[u].append((v, i))
            a[v].append((u, i))
        return tuple(tuple(x) for x in a)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def delta(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def multiplicity(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        return sum(1 for f in self.edges if f == e)

    @cached_property
    def mu(self) -> int:
        from collections import Counter

        c = Counter(self.edges)
        return max(c.values(), default=0)

    @cached_property
    def is_simple(self) -> bool:
        return self.mu <= 1

    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class VertexSetPartition:
    """Disjoint vertex sets covering 0..n-1, in a fixed order."""

    n: int
    parts: tuple[frozenset[int], ...]

    def part_of(self) -> list[int]:
        owner = [-1] * self.n
        for i, p in enumerate(self.parts):
            for v in p:
                owner[v] = i
        return owner


def build_digraph(n: int, arcs: Iterable[Arc]) -> Digraph:
    """Validate and build a digraph; rejects loops, duplicates, bad indices."""
    if n < 0:
        raise IndexOutOfRange(f"negative vertex count {n}")
    seen: set[Arc] = set()
    for a in arcs:
        u, v = a
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"arc {a} outside 0..{n - 1}")
        if u == v:
            raise LoopArc(f"loop at vertex {u}")
        if (u, v) in seen:
            raise DuplicateArc(f"duplicate arc {a}")
        seen.add((u, v))
    return Digraph(n, frozenset(seen))


def build_multigraph(n: int, edges: Iterable[tuple[int, int]]) -> Multigraph:
    norm: list[tuple[int, int]] = []
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge {e} outside 0..{n - 1}")
        if u == v:
            raise LoopArc(f"loop at vertex {u}")
        norm.append((u, v) if u < v else (v, u))
    return Multigraph(n, tuple(norm))


def partition(n: int, parts: Iterable[Iterable[int]]) -> VertexSetPartition:
    ps = tuple(frozenset(p) for p in parts)
    seen: set[int] = set()
    for p in ps:
        for v in p:
            if not (0 <= v < n):
                raise InvalidPartition(f"vertex {v} outside 0..{n - 1}")
            if v in seen:
                raise InvalidPartition(f"vertex {v} in two parts")
            seen.add(v)
    if len(seen) != n:
        raise InvalidPartition("parts do not cover the vertex set")
    return VertexSetPartition(n, ps)


def _closure(nbrs: Sequence[frozenset[int]], start: set[int]) -> set[int]:
    seen = set(start)
    stack = sorted(start)
    while stack:
        v = stack.pop()
        for w in nbrs[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _cutvertices(und: Sequence[frozenset[int]], n: int) -> list[int]:
    """Articulation points of the underlying graph (iterative lowpoint DFS)."""
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack: list[tuple[int, int, Iterable[int]]] = [(root, -1, iter(sorted(und[root])))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(sorted(und[w]))))
                    advanced = True
                    break
                elif w != parent:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if p != root and low[v] >= disc[p]:
                        cut[p] = True
        if root_children > 1:
            cut[root] = True
    return [v for v in range(n) if cut[v]]


def strong_components(d: Digraph) -> VertexSetPartition:
    """Strongly connected components, topologically ordered.

    Arcs between distinct components always go from an earlier part to a
    later one.  Iterative Tarjan; tie-breaks by ascending index.
    """
    n = d.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, Iterable[int]]] = [(root, iter(sorted(d.out_sets[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(sorted(d.out_sets[w]))))
                    advanced = True
                    break
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
            if not advanced:
                work.pop()
                if work:
                    p = work[-1][0]
                    low[p] = min(low[p], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(frozenset(comp))
    # Tarjan emits components in reverse topological order.
    comps.reverse()
    return VertexSetPartition(n, tuple(comps))


def weak_components(d: Digraph) -> list[frozenset[int]]:
    seen: set[int] = set()
    out = []
    for v in range(d.n):
        if v not in seen:
            comp = _closure(d.und_sets, {v})
            seen |= comp
            out.append(frozenset(comp))
    return out


def blocks(d: Digraph) -> list[frozenset[int]]:
    """2-connected components of the underlying multigraph, as vertex sets.

    A bridge forms a block of its own; isolated vertices form none.
    Deterministic order (by smallest discovery time).
    """
    n = d.n
    und = d.und_sets
    disc = [-1] * n
    low = [0] * n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    out: list[frozenset[int]] = []
    for root in range(n):
        if disc[root] != -1 or not und[root]:
            continue
        stack: list[tuple[int, int, Iterable[int]]] = [(root, -1, iter(sorted(und[root])))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(sorted(und[w]))))
                    advanced = True
                    break
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] >= disc[p]:
                        comp: set[int] = set()
                        while edge_stack:
                            x, y = edge_stack.pop()
                            comp.add(x)
                            comp.add(y)
                            if (x, y) == (p, v):
                                break
                        out.append(frozenset(comp))
    return out


def contract(d: Digraph, part: VertexSetPartition) -> Digraph:
    """Quotient digraph of a vertex partition.

    Part i becomes vertex i.  Loops produced by intra-part arcs are
    dropped; digons may appear even if the input is oriented.
    """
    if part.n != d.n:
        raise InvalidPartition("partition over a different vertex count")
    owner = part.part_of()
    arcs = set()
    for u, v in d.arcs:
        a, b = owner[u], owner[v]
        if a != b:
            arcs.add((a, b))
    return Digraph(len(part.parts), frozenset(arcs))


@dataclass(frozen=True)
class EulerResult:
    """Either a closed trail covering all edges, or a witness of absence."""

    tour_vertices: tuple[int, ...] | None = None
    tour_edges: tuple[int, ...] | None = None
    odd_vertex: int | None = None
    disconnected_pair: tuple[int, int] | None = None

    @property
    def exists(self) -> bool:
        return self.tour_edges is not None


def euler_tour(g: Multigraph) -> EulerResult:
    """Closed trail using every edge exactly once (Hierholzer), or why not.

    Exists iff all degrees are even and the non-isolated vertices are
    connected.  The tour starts at the least non-isolated vertex.
    """
    for v in range(g.n):
        if g.degree(v) % 2 == 1:
            return EulerResult(odd_vertex=v)
    active = [v for v in range(g.n) if g.degree(v) > 0]
    if not active:
        return EulerResult(tour_vertices=(), tour_edges=())
    start = active[0]
    seen = {start}
    stack = [start]
    und = [[w for w, _ in g.adj[v]] for v in range(g.n)]
    while stack:
        v = stack.pop()
        for w in und[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    for v in active:
        if v not in seen:
            return EulerResult(disconnected_pair=(start, v))
    used = [False] * g.m()
    ptr = [0] * g.n
    path: list[tuple[int, int]] = []  # (vertex, edge used to get there)
    circuit_v: list[int] = []
    circuit_e: list[int] = []
    stack2: list[tuple[int, int]] = [(start, -1)]
    while stack2:
        v, via = stack2[-1]
        moved = False
        while ptr[v] < len(g.adj[v]):
            w, ei = g.adj[v][ptr[v]]
            ptr[v] += 1
            if not used[ei]:
                used[ei] = True
                stack2.append((w, ei))
                moved = True
                break
        if not moved:
            stack2.pop()
            circuit_v.append(v)
            if via >= 0:
                circuit_e.append(via)
    circuit_v.reverse()
    circuit_e.reverse()
    return EulerResult(tour_vertices=tuple(circuit_v), tour_edges=tuple(circuit_e))


def bfs_order(d: Digraph, root: int) -> list[int]:
    """BFS order of the underlying multigraph from `root`.

    Neighbours are explored in ascending index; raises Disconnected when
    some vertex is unreachable in the underlying graph.
    """
    if not (0 <= root < d.n):
        raise IndexOutOfRange(f"root {root}")
    from collections import deque

    order = [root]
    seen = {root}
    q = deque([root])
    while q:
        v = q.popleft()
        for w in sorted(d.und_sets[v]):
            if w not in seen:
                seen.add(w)
                order.append(w)
                q.append(w)
    if len(order) != d.n:
        missing = next(v for v in range(d.n) if v not in seen)
        raise Disconnected(f"vertex {missing} unreachable from {root}")
    return order


def induced_multigraph(g: Multigraph, vertices: Iterable[int]) -> tuple[Multigraph, list[int], list[int]]:
    """Induced sub-multigraph, its vertex labels, and kept edge indices."""
    labels = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(labels)}
    edges = []
    kept = []
    for i, (u, v) in enumerate(g.edges):
        if u in pos and v in pos:
            edges.append((pos[u], pos[v]))
            kept.append(i)
    return Multigraph(len(labels), tuple(edges)), labels, kept


def multigraph_components(g: Multigraph) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for v in range(g.n):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for w, _ in g.adj[x]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps
