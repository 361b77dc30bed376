"""Dicolouring semantics: verification, exact dichromatic number, and the
generic colouring constructions (greedy, longest-backward-path,
odd-cycle-free, dipolar combination).

A dicolouring is valid when every colour class induces an acyclic
subdigraph; the witness for invalidity is always a concrete monochromatic
directed cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Digraph, strong_components
from .errors import (
    BudgetExceeded,
    InvalidInput,
    NotDipolar,
    PartialColouring,
)


@dataclass(frozen=True)
class Dicolouring:
    """Total assignment vertex -> colour in 1..k."""

    colours: tuple[int, ...]
    k: int

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colours):
            out[c - 1].append(v)
        return out

    def used(self) -> int:
        return len(set(self.colours))


def dicolouring(colours: Sequence[int], k: int | None = None) -> Dicolouring:
    cols = tuple(colours)
    kk = max(cols, default=0) if k is None else k
    if any(c < 1 or c > kk for c in cols):
        raise InvalidInput(f"colours must lie in 1..{kk}")
    return Dicolouring(cols, kk)


def _acyclic_mask(out_masks: Sequence[int], s: int) -> bool:
    """Does the vertex bitset s induce an acyclic subdigraph?"""
    while s:
        t = s
        m = s
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if out_masks[v] & s == 0:
                s &= ~(1 << v)
        if s == t:
            return False
    return True


def find_cycle_in(d: Digraph, vertices: Sequence[int]) -> list[int] | None:
    """A directed cycle inside d[vertices], as a vertex list, or None."""
    inside = set(vertices)
    colour = {v: 0 for v in inside}  # 0 new, 1 active, 2 done
    for root in sorted(inside):
        if colour[root] != 0:
            continue
        stack = [(root, iter(sorted(d.out_sets[root] & inside)))]
        colour[root] = 1
        path = [root]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if colour[w] == 0:
                    colour[w] = 1
                    path.append(w)
                    stack.append((w, iter(sorted(d.out_sets[w] & inside))))
                    advanced = True
                    break
                elif colour[w] == 1:
                    i = path.index(w)
                    return path[i:]
            if not advanced:
                stack.pop()
                path.pop()
                colour[v] = 2
    return None


@dataclass(frozen=True)
class VerifyResult:
    valid: bool
    witness_cycle: tuple[int, ...] | None = None
    witness_colour: int | None = None


def verify_dicolouring(d: Digraph, c: Dicolouring) -> VerifyResult:
    """Valid iff each colour class is acyclic; else a monochromatic dicycle."""
    if len(c.colours) != d.n:
        raise PartialColouring(f"{len(c.colours)} colours for {d.n} vertices")
    for col in range(1, c.k + 1):
        cls = [v for v in range(d.n) if c.colours[v] == col]
        cyc = find_cycle_in(d, cls)
        if cyc is not None:
            return VerifyResult(False, tuple(cyc), col)
    return VerifyResult(True)


def greedy_dicolour(d: Digraph, order: Sequence[int]) -> Dicolouring:
    """Greedy dicolouring along `order`.

    Each vertex receives the smaller of: the least colour absent among its
    already-coloured out-neighbours, and the least colour absent among its
    already-coloured in-neighbours.  Always valid, and never more than
    min-degree-max + 1 colours.
    """
    if sorted(order) != list(range(d.n)):
        raise InvalidInput("order must be a permutation of the vertices")
    colour = [0] * d.n
    for v in order:
        out_used = {colour[w] for w in d.out_sets[v] if colour[w]}
        in_used = {colour[w] for w in d.in_sets[v] if colour[w]}
        c_out = 1
        while c_out in out_used:
            c_out += 1
        c_in = 1
        while c_in in in_used:
            c_in += 1
        colour[v] = min(c_out, c_in)
    return Dicolouring(tuple(colour), max(colour, default=0))


def gallai_roy_colour(d: Digraph, order: Sequence[int]) -> Dicolouring:
    """Colour vertices by the longest backward-arcs-only dipath ending there.

    Arcs u->v with u later than v in `order` are backward; f(v) counts the
    vertices of the longest all-backward dipath ending at v.  The classes
    f^-1(i) contain no backward arc, hence no dicycle.
    """
    if sorted(order) != list(range(d.n)):
        raise InvalidInput("order must be a permutation of the vertices")
    pos = [0] * d.n
    for i, v in enumerate(order):
        pos[v] = i
    f = [1] * d.n
    # A backward dipath strictly decreases position, so process vertices in
    # decreasing position: predecessors along backward arcs come earlier.
    for v in sorted(range(d.n), key=lambda x: -pos[x]):
        best = 1
        for u in d.in_sets[v]:
            if pos[u] > pos[v]:
                if f[u] + 1 > best:
                    best = f[u] + 1
        f[v] = best
    return Dicolouring(tuple(f), max(f, default=0))


def backward_path_bound(d: Digraph, order: Sequence[int]) -> int:
    """Max vertex count of a dipath using only backward arcs of `order`."""
    return gallai_roy_colour(d, order).k


@dataclass(frozen=True)
class BackwardPathCertificate:
    """A vertex ordering witnessing a dichromatic upper bound: no dipath on
    bound+1 vertices uses only backward arcs of the ordering."""

    ordering: tuple[int, ...]
    bound: int

    def check(self, d: Digraph) -> bool:
        return backward_path_bound(d, self.ordering) <= self.bound


def backward_certificate(d: Digraph, c: Dicolouring) -> BackwardPathCertificate:
    """Certificate extracted from a valid dicolouring: its colour classes
    in topological order give an ordering whose longest all-backward
    dipath has at most k vertices."""
    order = class_topological_order(d, c)
    return BackwardPathCertificate(tuple(order), c.k)


def class_topological_order(d: Digraph, c: Dicolouring) -> list[int]:
    """Order vertices by colour class, topologically within each class."""
    order: list[int] = []
    for cls in c.classes():
        inside = set(cls)
        indeg = {v: len(d.in_sets[v] & inside) for v in cls}
        ready = sorted(v for v in cls if indeg[v] == 0)
        out: list[int] = []
        import heapq

        heapq.heapify(ready)
        while ready:
            v = heapq.heappop(ready)
            out.append(v)
            for w in d.out_sets[v]:
                if w in inside:
                    indeg[w] -= 1
                    if indeg[w] == 0:
                        heapq.heappush(ready, w)
        if len(out) != len(cls):
            raise InvalidInput("colour class is not acyclic")
        order.extend(out)
    return order


@dataclass(frozen=True)
class TwoColourResult:
    colouring: Dicolouring | None = None
    odd_cycle: tuple[int, ...] | None = None

    @property
    def ok(self) -> bool:
        return self.colouring is not None


def two_colour_odd_free(d: Digraph) -> TwoColourResult:
    """2-dicolouring of a digraph with no odd dicycle, or an odd dicycle.

    Per strong component the underlying graph is bipartite when no odd
    dicycle exists; an odd underlying cycle is rerouted through shortest
    dipaths into an odd closed trail, which always contains an odd dicycle.
    """
    colour = [1] * d.n
    for comp in strong_components(d).parts:
        res = _two_colour_component(d, sorted(comp))
        if isinstance(res, tuple):
            return TwoColourResult(odd_cycle=res)
        for v, c in res.items():
            colour[v] = c
    return TwoColourResult(colouring=Dicolouring(tuple(colour), 2 if d.n else 0))


def _two_colour_component(d: Digraph, comp: list[int]):
    """Bipartition of one strong component, or an odd dicycle (tuple)."""
    inside = set(comp)
    side: dict[int, int] = {}
    from collections import deque

    for root in comp:
        if root in side:
            continue
        side[root] = 1
        q = deque([root])
        while q:
            v = q.popleft()
            for w in sorted(d.und_sets[v] & inside):
                if w not in side:
                    side[w] = 3 - side[v]
                    q.append(w)
                elif side[w] == side[v]:
                    cyc = _odd_dicycle_from_conflict(d, inside, v, w)
                    return tuple(cyc)
    return side


def _odd_dicycle_from_conflict(d: Digraph, inside: set[int], v: int, w: int) -> list[int]:
    """An odd dicycle inside a strong set with an odd underlying closed walk.

    Walks an odd closed trail built from shortest dipaths between the
    vertices of an odd underlying cycle, then pops the first odd dicycle
    out of the trail.
    """
    und_cycle = _underlying_odd_cycle(d, inside)
    trail: list[int] = []
    for i, a in enumerate(und_cycle):
        b = und_cycle[(i + 1) % len(und_cycle)]
        if (a, b) in d.arcs:
            seg = [a, b]
        else:
            seg = _shortest_dipath(d, inside, a, b)
            # an even-length dipath plus the reverse arc closes an odd
            # dicycle directly
            if len(seg) % 2 == 1:
                return seg
        trail.extend(seg[:-1])
    return _odd_cycle_from_trail(trail)


def _underlying_odd_cycle(d: Digraph, inside: set[int]) -> list[int]:
    """Some odd cycle of the underlying graph of d[inside]."""
    from collections import deque

    comp = sorted(inside)
    side: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for root in comp:
        if root in side:
            continue
        side[root] = 1
        parent[root] = None
        q = deque([root])
        while q:
            v = q.popleft()
            for w in sorted(d.und_sets[v] & inside):
                if w not in side:
                    side[w] = 3 - side[v]
                    parent[w] = v
                    q.append(w)
                elif side[w] == side[v]:
                    pv = _path_to_root(parent, v)
                    pw = _path_to_root(parent, w)
                    common = (set(pv) & set(pw))
                    # lowest common ancestor = first shared vertex
                    lca = next(x for x in pv if x in common)
                    cyc = pv[: pv.index(lca) + 1]
                    cyc += list(reversed(pw[: pw.index(lca)]))
                    return cyc
    raise InvalidInput("no odd underlying cycle found")


def _path_to_root(parent: dict[int, int | None], v: int) -> list[int]:
    out = [v]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])  # type: ignore[arg-type]
    return out


def _shortest_dipath(d: Digraph, inside: set[int], a: int, b: int) -> list[int]:
    from collections import deque

    prev = {a: -1}
    q = deque([a])
    while q:
        v = q.popleft()
        if v == b:
            break
        for w in sorted(d.out_sets[v] & inside):
            if w not in prev:
                prev[w] = v
                q.append(w)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def _odd_cycle_from_trail(trail: list[int]) -> list[int]:
    """Extract an odd dicycle from a closed trail of odd length.

    Scanning the trail, every vertex repeat pops a dicycle; the lengths of
    popped dicycles sum to the trail length, so one of them is odd.
    """
    stack: list[int] = []
    where: dict[int, int] = {}
    cycles: list[list[int]] = []
    for v in trail + [trail[0]]:
        if v in where:
            i = where[v]
            cyc = stack[i:]
            if len(cyc) % 2 == 1:
                return cyc
            cycles.append(cyc)
            for x in cyc:
                if x != v:
                    where.pop(x, None)
            del stack[i:]
        where[v] = len(stack)
        stack.append(v)
    for cyc in cycles:
        if len(cyc) % 2 == 1:
            return cyc
    raise InvalidInput("trail contained no odd dicycle")


def is_dipolar(d: Digraph, s: set[int]) -> bool:
    return all(d.out_sets[x] <= s or d.in_sets[x] <= s for x in s)


def dipolar_combine(
    d: Digraph,
    s: set[int],
    inner: Dicolouring,
    outer: Dicolouring,
) -> Dicolouring:
    """Combine a c-dicolouring of d[s] with a 2c-dicolouring of d minus s.

    Vertices of s whose in-neighbourhood stays inside s keep their inner
    colour; the rest get inner colour + c.  Every dicycle crossing the
    boundary then meets both colour ranges.
    """
    s = set(s)
    if not s <= set(range(d.n)):
        raise InvalidInput("s is not a vertex subset")
    if not is_dipolar(d, s):
        raise NotDipolar("some member has out- and in-neighbours outside s")
    sub, labels = d.induced(sorted(s))
    if len(inner.colours) != sub.n:
        raise InvalidInput("inner colouring size mismatch")
    rest = sorted(set(range(d.n)) - s)
    if len(outer.colours) != len(rest):
        raise InvalidInput("outer colouring size mismatch")
    c = inner.k
    if outer.k > 2 * c:
        raise InvalidInput("outer colouring uses more than 2c colours")
    if not verify_dicolouring(sub, inner).valid:
        raise InvalidInput("inner colouring invalid")
    if rest:
        outside, _ = d.induced(rest)
        if not verify_dicolouring(outside, outer).valid:
            raise InvalidInput("outer colouring invalid")
    colour = [0] * d.n
    for i, v in enumerate(rest):
        colour[v] = outer.colours[i]
    for i, v in enumerate(labels):
        if d.in_sets[v] <= s:
            colour[v] = inner.colours[i]
        else:
            colour[v] = inner.colours[i] + c
    return Dicolouring(tuple(colour), 2 * c)


@dataclass(frozen=True)
class ExactResult:
    value: int
    colouring: Dicolouring


def exact_dichromatic(d: Digraph, budget: int | None = None) -> ExactResult:
    """Exact dichromatic number with an optimal witness colouring.

    Solves each strong component separately (the dichromatic number is the
    maximum over strong components, and classes can be shared across
    them).  Per component: iterative deepening on k with a deterministic
    branch-and-bound over vertices in reverse degeneracy order, symmetry
    breaking on first use of each colour, and incremental acyclicity
    checks on classes.  `budget` caps total search nodes; exhausting it
    raises BudgetExceeded carrying the best known bounds.
    """
    if d.n == 0:
        return ExactResult(0, Dicolouring((), 0))
    colour = [1] * d.n
    best = 1
    state = _Budget(budget)
    for comp in strong_components(d).parts:
        sub, labels = d.induced(sorted(comp))
        val, cols = _exact_component(sub, state)
        best = max(best, val)
        for i, v in enumerate(labels):
            colour[v] = cols[i]
    return ExactResult(best, Dicolouring(tuple(colour), best))


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.nodes = 0

    def tick(self, lower: int, upper: int | None):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded(lower, upper)


def _degeneracy_order(d: Digraph) -> list[int]:
    """Repeatedly remove a min-total-degree vertex; returns removal order."""
    deg = [len(d.und_sets[v]) for v in range(d.n)]
    alive = set(range(d.n))
    order = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        order.append(v)
        alive.remove(v)
        for w in d.und_sets[v]:
            if w in alive:
                deg[w] -= 1
    return order


def _digon_clique_bound(d: Digraph) -> list[int]:
    """Greedy clique in the digon graph: its vertices need distinct colours."""
    digon_nbrs = [
        {w for w in d.out_sets[v] if v in d.out_sets[w]} for v in range(d.n)
    ]
    best: list[int] = []
    for start in sorted(range(d.n), key=lambda v: (-len(digon_nbrs[v]), v)):
        clique = [start]
        cand = set(digon_nbrs[start])
        while cand:
            v = min(cand, key=lambda x: (-len(digon_nbrs[x] & cand), x))
            clique.append(v)
            cand &= digon_nbrs[v]
        if len(clique) > len(best):
            best = clique
    return best


def _exact_component(d: Digraph, state: _Budget) -> tuple[int, list[int]]:
    n = d.n
    if n == 1:
        return 1, [1]
    greedy = greedy_dicolour(d, list(range(n)))
    ub = greedy.k
    lb = max(1, len(_digon_clique_bound(d)))
    if not _acyclic_mask(d.out_masks, (1 << n) - 1):
        lb = max(lb, 2)
    if lb >= ub:
        return ub, list(greedy.colours)
    order = list(reversed(_degeneracy_order(d)))
    for k in range(lb, ub):
        cols = _feasible_k(d, order, k, state, lb, ub)
        if cols is not None:
            return k, cols
    return ub, list(greedy.colours)


def _feasible_k(
    d: Digraph,
    order: list[int],
    k: int,
    state: _Budget,
    lb: int,
    ub: int,
) -> list[int] | None:
    """Depth-first search for a k-dicolouring along a fixed vertex order."""
    n = d.n
    out_masks = d.out_masks
    colour = [0] * n
    class_mask = [0] * (k + 1)
    forward_check = n > 10

    def feasible(v: int, c: int) -> bool:
        return _acyclic_mask(out_masks, class_mask[c] | (1 << v))

    def dfs(i: int, used: int) -> bool:
        if i == len(order):
            return True
        state.tick(lb, ub)
        v = order[i]
        top = min(used + 1, k)
        for c in range(1, top + 1):
            if not feasible(v, c):
                continue
            class_mask[c] |= 1 << v
            colour[v] = c
            ok = True
            if forward_check:
                for j in range(i + 1, len(order)):
                    w = order[j]
                    t2 = min(max(used, c) + 1, k)
                    if not any(feasible(w, c2) for c2 in range(1, t2 + 1)):
                        ok = False
                        break
            if ok and dfs(i + 1, max(used, c)):
                return True
            class_mask[c] &= ~(1 << v)
            colour[v] = 0
        return False

    if dfs(0, 0):
        return colour
    return None
