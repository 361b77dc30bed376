"""Locally semicomplete machinery: cyclic orders, hub decomposition,
2-dicolouring of locally out-transitive oriented graphs, the three-case
structure of locally semicomplete digraphs, 2-kings, and the low-outdegree
witness for short-cycle-free locally in-tournament oriented graphs.

A cyclic order is a vertex permutation up to rotation, canonicalized to
start at vertex 0.  "In-round" means every in-neighbourhood is the
interval just before its vertex; "round" additionally puts every
out-neighbourhood just after.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .colouring import Dicolouring
from .core import Digraph, contract, partition, strong_components
from .errors import (
    InvalidInput,
    NotOriented,
    NotStrong,
    PreconditionViolated,
)


def _is_tournament(d: Digraph, s: frozenset[int] | set[int]) -> bool:
    s = list(s)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            a, b = s[i], s[j]
            fwd, bwd = (a, b) in d.arcs, (b, a) in d.arcs
            if fwd == bwd:  # non-adjacent or digon
                return False
    return True


def _is_semicomplete(d: Digraph, s) -> bool:
    s = list(s)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            a, b = s[i], s[j]
            if (a, b) not in d.arcs and (b, a) not in d.arcs:
                return False
    return True


def _is_acyclic(d: Digraph, s) -> bool:
    inside = set(s)
    indeg = {v: len(d.in_sets[v] & inside) for v in inside}
    ready = [v for v in inside if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in d.out_sets[v]:
            if w in inside:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
    return seen == len(inside)


def _is_transitive_tournament(d: Digraph, s) -> bool:
    return _is_tournament(d, s) and _is_acyclic(d, s)


@dataclass(frozen=True)
class LocalClassFlags:
    locally_out_semicomplete: bool
    locally_out_transitive: bool
    locally_in_tournament: bool
    locally_semicomplete: bool
    in_round_condition: bool
    round_condition: bool
    witnesses: dict


def check_local_class(d: Digraph) -> LocalClassFlags:
    """Per-vertex neighbourhood checks with the first failing vertex as
    witness per flag."""
    flags = {
        "locally_out_semicomplete": True,
        "locally_out_transitive": True,
        "locally_in_tournament": True,
        "locally_semicomplete": True,
        "in_round_condition": True,
        "round_condition": True,
    }
    wit: dict = {}

    def fail(key: str, v: int):
        if flags[key]:
            flags[key] = False
            wit[key] = v

    for v in range(d.n):
        outs = d.out_sets[v]
        ins = d.in_sets[v]
        if not _is_semicomplete(d, outs):
            fail("locally_out_semicomplete", v)
            fail("locally_semicomplete", v)
        if not _is_semicomplete(d, ins):
            fail("locally_semicomplete", v)
        if not _is_transitive_tournament(d, outs):
            fail("locally_out_transitive", v)
        if not _is_tournament(d, ins):
            fail("locally_in_tournament", v)
        if not (_is_tournament(d, outs) and _is_acyclic(d, ins)):
            fail("in_round_condition", v)
        if not (
            _is_transitive_tournament(d, outs) and _is_transitive_tournament(d, ins)
        ):
            fail("round_condition", v)
    return LocalClassFlags(**flags, witnesses=wit)


@dataclass(frozen=True)
class CyclicOrder:
    """Vertex permutation up to rotation, canonicalized to start at 0."""

    order: tuple[int, ...]

    @staticmethod
    def from_sequence(seq: Sequence[int]) -> "CyclicOrder":
        seq = list(seq)
        if 0 in seq:
            i = seq.index(0)
            seq = seq[i:] + seq[:i]
        return CyclicOrder(tuple(seq))

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


def interval_between(order: Sequence[int], x: int, y: int) -> list[int]:
    """Open cyclic interval ]x, y[ of a cyclic order."""
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    out = []
    i = (pos[x] + 1) % n
    while i != pos[y]:
        out.append(order[i])
        i = (i + 1) % n
    return out


def satisfies_in_round(d: Digraph, order: Sequence[int]) -> bool:
    """For every arc x->y, every z strictly between x and y also sees y."""
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    for x, y in d.arcs:
        i = (pos[x] + 1) % n
        while i != pos[y]:
            if (order[i], y) not in d.arcs:
                return False
            i = (i + 1) % n
    return True


def satisfies_round(d: Digraph, order: Sequence[int]) -> bool:
    """For every arc x->y, every z strictly between is seen by x and sees y."""
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    for x, y in d.arcs:
        i = (pos[x] + 1) % n
        while i != pos[y]:
            z = order[i]
            if (z, y) not in d.arcs or (x, z) not in d.arcs:
                return False
            i = (i + 1) % n
    return True


@dataclass(frozen=True)
class InRoundResult:
    order: CyclicOrder | None = None
    failing_vertex: int | None = None
    failing_condition: str | None = None

    @property
    def ok(self) -> bool:
        return self.order is not None


def inround_order(d: Digraph) -> InRoundResult:
    """Cyclic order witnessing the in-round property of a strong oriented
    graph, or a refutation of the local condition.

    Checks that every out-neighbourhood is a tournament and every
    in-neighbourhood acyclic; then follows, from each vertex x, the chosen
    in-neighbour f(x) whose out-neighbours avoid x's in-neighbourhood
    (least index among the sinks of the in-neighbourhood).  The arcs
    f(x)->x close into a Hamiltonian cycle, which is the order.
    """
    if not d.is_oriented:
        raise NotOriented("digons present")
    if not d.is_strong:
        raise NotStrong("not strongly connected")
    if d.n == 1:
        return InRoundResult(order=CyclicOrder((0,)))
    for v in range(d.n):
        if not _is_tournament(d, d.out_sets[v]):
            return InRoundResult(failing_vertex=v, failing_condition="out-not-tournament")
        if not _is_acyclic(d, d.in_sets[v]):
            return InRoundResult(failing_vertex=v, failing_condition="in-not-acyclic")
    f = [0] * d.n
    for x in range(d.n):
        sinks = [y for y in sorted(d.in_sets[x]) if not (d.out_sets[y] & d.in_sets[x])]
        f[x] = sinks[0]
    # follow x -> f(x); every vertex has in-degree 1 in the f-arc digraph
    succ_of = {}
    for x in range(d.n):
        succ_of[f[x]] = succ_of.get(f[x], []) + [x]
    start = 0
    cycle = [start]
    seen = {start}
    cur = start
    while True:
        nxt = f[cur]
        if nxt == start:
            break
        if nxt in seen:
            return InRoundResult(failing_vertex=nxt, failing_condition="not-hamiltonian")
        cycle.append(nxt)
        seen.add(nxt)
        cur = nxt
    if len(cycle) != d.n:
        return InRoundResult(failing_vertex=None, failing_condition="not-hamiltonian")
    order = list(reversed(cycle))  # f(x) precedes x along the cyclic order
    if not satisfies_in_round(d, order):
        return InRoundResult(failing_vertex=None, failing_condition="order-check-failed")
    return InRoundResult(order=CyclicOrder.from_sequence(order))


# ---------------------------------------------------------------------------
# hubs


def _hub_candidates(d: Digraph) -> list[frozenset[int]]:
    """Strong components of in-neighbourhoods: every hub is contained in
    one, and each such component is itself a hub."""
    cands: set[frozenset[int]] = set()
    for x in range(d.n):
        ins = sorted(d.in_sets[x])
        if not ins:
            continue
        sub, labels = d.induced(ins)
        for comp in strong_components(sub).parts:
            cands.add(frozenset(labels[i] for i in comp))
    return sorted(cands, key=lambda s: (-len(s), sorted(s)))


def _maximal_of(cands: list[frozenset[int]]) -> list[frozenset[int]]:
    uniq = set(cands)
    return [c for c in uniq if not any(c < o for o in uniq)]


def maximal_hubs(d: Digraph) -> list[frozenset[int]]:
    """Inclusion-maximal hubs (strong sets in-dominated by an outside
    vertex), plus leftover singletons; they partition the vertex set of a
    strong locally out-transitive oriented graph (the caller's partition
    constructor rejects overlaps loudly)."""
    chosen = _maximal_of(_hub_candidates(d))
    covered = {v for c in chosen for v in c}
    for v in range(d.n):
        if v not in covered:
            chosen.append(frozenset({v}))
    return sorted(chosen, key=lambda s: sorted(s))


@dataclass(frozen=True)
class HubPartition:
    parts: tuple[frozenset[int], ...]
    quotient: Digraph
    order: CyclicOrder  # cyclic order of the quotient, by part index


def hub_decomposition(d: Digraph) -> HubPartition:
    """Partition a strong locally out-transitive oriented graph into its
    maximal hubs; the quotient is a strong in-round oriented graph."""
    flags = check_local_class(d)
    if not d.is_oriented:
        raise PreconditionViolated("digons present")
    if not d.is_strong:
        raise PreconditionViolated("not strong")
    if not flags.locally_out_transitive:
        raise PreconditionViolated("not locally out-transitive")
    hubs = maximal_hubs(d)
    part = partition(d.n, hubs)
    q = contract(d, part)
    res = inround_order(q)
    if not res.ok:
        raise InvalidInput(
            f"quotient not in-round ({res.failing_condition}); hub extraction broken"
        )
    return HubPartition(tuple(hubs), q, res.order)


# ---------------------------------------------------------------------------
# 2-dicolouring of locally out-transitive oriented graphs


def monochromatic_out_ball_colouring(d: Digraph, x: int) -> Dicolouring:
    """2-dicolouring of a strong in-round oriented graph keeping {x} and
    x's out-neighbourhood on one colour.

    Takes the longest arc x->y (most vertices strictly between, ties by
    least head); the closed interval [x, y] sits inside y's
    in-neighbourhood plus y, the rest carries only forward arcs, so both
    classes are acyclic.
    """
    res = inround_order(d)
    if not res.ok:
        raise PreconditionViolated("not a strong in-round oriented graph")
    order = res.order.order
    pos = res.order.position()
    n = d.n
    if not d.out_sets[x]:
        raise PreconditionViolated("in-round strong graph needs out-arcs")
    best_y = None
    best_len = -1
    for y in sorted(d.out_sets[x]):
        length = (pos[y] - pos[x]) % n
        if length > best_len:
            best_len = length
            best_y = y
    colour = [0] * n
    i = pos[x]
    while True:
        colour[order[i]] = 1
        if order[i] == best_y:
            break
        i = (i + 1) % n
    for v in range(n):
        if colour[v] == 0:
            colour[v] = 2
    return Dicolouring(tuple(colour), 2)


def two_dicolour_lot(d: Digraph, t: Sequence[int]) -> Dicolouring:
    """2-dicolouring of a locally out-transitive oriented graph with the
    prescribed transitive tournament t monochromatic.

    Strong components are handled independently; within one, the maximal
    hubs are contracted, the in-round quotient is 2-coloured keeping the
    first hub and its out-neighbourhood monochromatic, and the hubs are
    recursively coloured with their entry tournaments pinned to the colour
    of their quotient vertex.
    """
    tset = list(dict.fromkeys(t))
    if any(not 0 <= v < d.n for v in tset):
        raise PreconditionViolated("t outside the vertex range")
    flags = check_local_class(d)
    if not d.is_oriented or not flags.locally_out_transitive:
        raise PreconditionViolated("not a locally out-transitive oriented graph")
    if not _is_transitive_tournament(d, tset):
        raise PreconditionViolated("t does not induce a transitive tournament")
    colour = [0] * d.n
    for comp in strong_components(d).parts:
        sub, labels = d.induced(sorted(comp))
        pos = {v: i for i, v in enumerate(labels)}
        t_local = [pos[v] for v in tset if v in pos]
        cols = _two_colour_strong(sub, t_local, 1)
        for i, v in enumerate(labels):
            colour[v] = cols[i]
    return Dicolouring(tuple(colour), 2 if d.n else 0)


def _two_colour_strong(d: Digraph, t_local: list[int], want: int) -> list[int]:
    """2-colouring of one strong locally out-transitive oriented graph with
    t_local monochromatic in colour `want`."""
    if d.n == 1:
        return [want]
    hubs = maximal_hubs(d)
    part = partition(d.n, hubs)
    q = contract(d, part)
    owner = part.part_of()
    qn = q.n
    if qn == 1:
        raise InvalidInput("single maximal hub covering a strong graph")
    # anchor hub: the one holding the source of t, else the hub of vertex 0
    if t_local:
        src = next(
            v for v in t_local if all((v, w) in d.arcs for w in t_local if w != v)
        )
        h1 = owner[src]
    else:
        h1 = owner[0]
    qcols = monochromatic_out_ball_colouring(q, h1)
    # entry tournaments: vertices of a hub with an in-neighbour outside
    entry: list[list[int]] = [[] for _ in range(qn)]
    for i, hub in enumerate(hubs):
        for v in sorted(hub):
            if d.in_sets[v] - hub:
                entry[i].append(v)
    cols = [0] * d.n
    for i, hub in enumerate(hubs):
        sub, labels = d.induced(sorted(hub))
        pos = {v: j for j, v in enumerate(labels)}
        want_i = qcols.colours[i]
        if i == h1:
            pinned = [pos[v] for v in t_local if owner[v] == i]
        else:
            pinned = [pos[v] for v in entry[i]]
            for v in t_local:
                if owner[v] == i and pos[v] not in pinned:
                    pinned.append(pos[v])
        sub_cols = _two_colour_strong(sub, pinned, want_i)
        for j, v in enumerate(labels):
            cols[v] = sub_cols[j]
    # pinned vertices got the quotient colour; flip the whole component if
    # the prescribed tournament missed `want` (flips preserve validity)
    if t_local and cols[t_local[0]] != want:
        cols = [3 - c for c in cols]
    return cols


# ---------------------------------------------------------------------------
# locally semicomplete structure


def _weak_hub_candidates(d: Digraph) -> list[frozenset[int]]:
    """Strong components of strict in/out-neighbourhoods."""
    cands: set[frozenset[int]] = set()
    for x in range(d.n):
        for side in (
            d.out_sets[x] - d.in_sets[x],
            d.in_sets[x] - d.out_sets[x],
        ):
            if not side:
                continue
            sub, labels = d.induced(sorted(side))
            for comp in strong_components(sub).parts:
                cands.add(frozenset(labels[i] for i in comp))
    return sorted(cands, key=lambda s: (-len(s), sorted(s)))


def maximal_weak_hubs(d: Digraph) -> list[frozenset[int]]:
    """Inclusion-maximal weak hubs: strong sets strictly in- or
    out-dominated by an outside vertex.  May overlap when some hub is
    mixed; pairwise disjoint otherwise."""
    return sorted(_maximal_of(_weak_hub_candidates(d)), key=lambda s: (sorted(s), len(s)))


def _is_mixed_weak_hub(d: Digraph, hub: frozenset[int]) -> bool:
    for x in range(d.n):
        if x in hub:
            continue
        has_out = bool(d.out_sets[x] & hub)
        has_in = bool(d.in_sets[x] & hub)
        if has_out and has_in:
            return True
    return False


@dataclass(frozen=True)
class SemicompleteStructure:
    case: str  # "UniversalVertex" | "RoundBlowup" | "FourSetPartition"
    universal_vertex: int | None = None
    parts: tuple[frozenset[int], ...] | None = None
    order: CyclicOrder | None = None
    e: frozenset[int] | None = None
    f: frozenset[int] | None = None
    g: frozenset[int] | None = None
    h: frozenset[int] | None = None
    notes: tuple[str, ...] = ()


def semicomplete_structure(d: Digraph) -> SemicompleteStructure:
    """Three-case structure of a connected locally semicomplete digraph:
    a universal vertex, a round blow-up (strong semicomplete parts whose
    contraction is round), or the four-set domination partition extracted
    from a mixed maximal weak hub."""
    if not d.is_connected:
        raise PreconditionViolated("not connected")
    flags = check_local_class(d)
    if not flags.locally_semicomplete:
        raise PreconditionViolated("not locally semicomplete")
    for v in range(d.n):
        if d.out_sets[v] == d.in_sets[v] == (set(range(d.n)) - {v}):
            return SemicompleteStructure("UniversalVertex", universal_vertex=v)
    hubs = maximal_weak_hubs(d)
    mixed = next((h for h in hubs if _is_mixed_weak_hub(d, h)), None)
    if mixed is None:
        # maximal weak hubs are pairwise disjoint when none is mixed;
        # vertices with identical non-universal in/out neighbourhoods are
        # in no hub and stay singletons
        covered = {v for h in hubs for v in h}
        parts = hubs + [frozenset({v}) for v in range(d.n) if v not in covered]
        part = partition(d.n, parts)
        q = contract(d, part)
        order = _round_order(q)
        return SemicompleteStructure(
            "RoundBlowup", parts=tuple(parts), order=order
        )
    x = mixed
    g_set = set()
    h_set = set()
    f_set = set()
    for u in range(d.n):
        if u in x:
            continue
        has_out = bool(d.out_sets[u] & x)
        has_in = bool(d.in_sets[u] & x)
        if has_out and has_in:
            g_set.add(u)
        elif has_out:
            h_set.add(u)
        elif has_in:
            f_set.add(u)
    leftover = set(range(d.n)) - set(x) - g_set - h_set - f_set
    notes = [
        "four-set nonemptiness follows the constructive split: the first "
        "and third sets are non-empty and at least one of the other two is"
    ]
    if leftover:
        raise InvalidInput("vertices unrelated to the mixed hub; not connected?")
    return SemicompleteStructure(
        "FourSetPartition",
        e=frozenset(x),
        f=frozenset(f_set),
        g=frozenset(g_set),
        h=frozenset(h_set),
        notes=tuple(notes),
    )


def _round_order(q: Digraph) -> CyclicOrder:
    """Round order of an oriented quotient: the in-round construction for
    strong quotients, the unique-source topological order for acyclic ones
    (a connected non-strong round oriented graph is an acyclic one whose
    order is a Hamiltonian dipath)."""
    if q.n == 1:
        return CyclicOrder((0,))
    if q.is_strong:
        res = inround_order(q)
        if res.ok and satisfies_round(q, res.order.order):
            return res.order
        raise InvalidInput("quotient of weak hubs is not round")
    if not _is_acyclic(q, range(q.n)):
        raise InvalidInput("quotient neither strong nor acyclic")
    order: list[int] = []
    indeg = [q.d_minus(v) for v in range(q.n)]
    remaining = set(range(q.n))
    while remaining:
        sources = [v for v in remaining if indeg[v] == 0]
        if len(sources) != 1 and len(remaining) > 1:
            # a round acyclic connected digraph peels a unique source
            sources.sort()
        v = sources[0]
        order.append(v)
        remaining.remove(v)
        for w in q.out_sets[v]:
            if w in remaining:
                indeg[w] -= 1
    if not satisfies_round(q, order):
        raise InvalidInput("quotient of weak hubs is not round")
    return CyclicOrder.from_sequence(order)


def find_2king(d: Digraph) -> int | None:
    """Least vertex reaching every other by a dipath of length at most 2."""
    for v in range(d.n):
        reach = {v} | d.out_sets[v]
        for w in d.out_sets[v]:
            reach |= d.out_sets[w]
        if len(reach) == d.n:
            return v
    return None


# ---------------------------------------------------------------------------
# low out-degree in short-cycle-free locally in-tournament graphs


def shortest_dicycle_length(d: Digraph) -> int | None:
    """Length of a shortest directed cycle, or None when acyclic."""
    from collections import deque

    best: int | None = None
    for s in range(d.n):
        dist = {s: 0}
        q = deque([s])
        while q:
            v = q.popleft()
            if best is not None and dist[v] + 1 >= best:
                continue
            for w in d.out_sets[v]:
                if w == s:
                    cand = dist[v] + 1
                    if best is None or cand < best:
                        best = cand
                elif w not in dist:
                    dist[w] = dist[v] + 1
                    q.append(w)
    return best


@dataclass(frozen=True)
class OutDegreeWitness:
    vertex: int
    out_degree: int
    bound: float

    @property
    def verdict(self) -> bool:
        return self.out_degree < self.bound


def min_outdegree_witness(d: Digraph, k: int) -> OutDegreeWitness:
    """The minimum-out-degree vertex of a locally in-tournament oriented
    graph with no directed cycle of length at most k; its out-degree is
    always below n/k."""
    if k < 2:
        raise PreconditionViolated("k must be at least 2")
    if not d.is_oriented:
        raise PreconditionViolated("digons present")
    flags = check_local_class(d)
    if not flags.locally_in_tournament:
        raise PreconditionViolated("not locally in-tournament")
    g = shortest_dicycle_length(d)
    if g is not None and g <= k:
        raise PreconditionViolated(f"directed cycle of length {g} <= {k}")
    v = min(range(d.n), key=lambda x: (d.d_plus(x), x))
    return OutDegreeWitness(v, d.d_plus(v), d.n / k)


@dataclass(frozen=True)
class WeightedWitness:
    vertex: int
    weighted_out: float
    bound: float

    @property
    def verdict(self) -> bool:
        return self.weighted_out < self.bound


def weighted_out_round_witness(
    d: Digraph, weights: Sequence[float], k: int
) -> WeightedWitness:
    """For a strong out-round oriented graph with no directed cycle of
    length at most k and positive vertex weights: some vertex u has
    weighted out-neighbourhood below (W - w(u)) / k."""
    if len(weights) != d.n or any(w <= 0 for w in weights):
        raise PreconditionViolated("weights must be positive, one per vertex")
    rev = d.reverse()
    res = inround_order(rev)
    if not res.ok:
        raise PreconditionViolated("not a strong out-round oriented graph")
    g = shortest_dicycle_length(d)
    if g is not None and g <= k:
        raise PreconditionViolated(f"directed cycle of length {g} <= {k}")
    total = sum(weights)
    best: WeightedWitness | None = None
    for u in range(d.n):
        lhs = sum(weights[v] for v in d.out_sets[u])
        bound = (total - weights[u]) / k
        cand = WeightedWitness(u, lhs, bound)
        if cand.verdict:
            return cand
        if best is None or lhs - bound < best.weighted_out - best.bound:
            best = cand
    return best  # no witness: the caller sees verdict False
