"""Local arc-connectivity, the Hajos-join algebra, and recognition of
digraphs whose dichromatic number meets the arc-connectivity bound
(chi = lambda + 1 = k + 1, called k-extremal below).

The recognizer is a structural recursion: find one join split (directed
join, then parallel join, then star join), verify it by replaying the join
and comparing arc sets, and recurse into the parts; leaves must be the
base digraphs (symmetric complete, plus symmetric odd wheels for k = 3).
Each split kind preserves the property in both directions, so the
verdict is the conjunction over the children of the first split found.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Arc, Digraph, build_digraph
from .errors import (
    BadEmbeddingOrder,
    BudgetExceeded,
    InvalidInput,
    MissingArc,
    MissingDigon,
    ParityViolated,
    PreconditionViolated,
    UnsupportedK,
)

# ---------------------------------------------------------------------------
# max-flow / lambda profile


def _maxflow_unit(n: int, arcs: Sequence[Arc], s: int, t: int) -> tuple[int, set[int]]:
    """Max arc-disjoint s->t dipaths (unit capacities) and the residual
    source side of a minimum dicut."""
    if s == t:
        raise InvalidInput("flow endpoints must differ")
    cap: dict[Arc, int] = {}
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in arcs:
        cap[(u, v)] = cap.get((u, v), 0) + 1
        adj[u].add(v)
        adj[v].add(u)
    nbrs = [sorted(a) for a in adj]
    flow = 0
    from collections import deque

    while True:
        prev: dict[int, int] = {s: -1}
        q = deque([s])
        while q and t not in prev:
            x = q.popleft()
            for y in nbrs[x]:
                if y not in prev and cap.get((x, y), 0) > 0:
                    prev[y] = x
                    q.append(y)
        if t not in prev:
            return flow, set(prev)
        y = t
        while y != s:
            x = prev[y]
            cap[(x, y)] -= 1
            cap[(y, x)] = cap.get((y, x), 0) + 1
            y = x
        flow += 1


@dataclass(frozen=True)
class LambdaProfile:
    """lambda(u, v) for all ordered pairs, with minimum dicut witnesses."""

    n: int
    values: dict[Arc, int]
    cuts: dict[Arc, tuple[frozenset[int], frozenset[int]]]

    @property
    def value(self) -> int:
        return max(self.values.values(), default=0)

    def argmax(self) -> Arc | None:
        best = None
        for pair in sorted(self.values):
            if best is None or self.values[pair] > self.values[best]:
                best = pair
        return best


def lambda_profile(d: Digraph) -> LambdaProfile:
    """Exact local arc-connectivity for every ordered pair, by unit max-flow."""
    values: dict[Arc, int] = {}
    cuts: dict[Arc, tuple[frozenset[int], frozenset[int]]] = {}
    arcs = d.sorted_arcs()
    for u in range(d.n):
        for v in range(d.n):
            if u == v:
                continue
            f, side = _maxflow_unit(d.n, arcs, u, v)
            values[(u, v)] = f
            x = frozenset(side)
            cuts[(u, v)] = (x, frozenset(range(d.n)) - x)
    return LambdaProfile(d.n, values, cuts)


def lambda_value(d: Digraph, u: int, v: int) -> int:
    return _maxflow_unit(d.n, d.sorted_arcs(), u, v)[0]


# ---------------------------------------------------------------------------
# joins


def _append_mapping(n1: int, n2: int, glued: dict[int, int]) -> dict[int, int]:
    mapping = dict(glued)
    nxt = n1
    for x in range(n2):
        if x not in mapping:
            mapping[x] = nxt
            nxt += 1
    return mapping


def directed_hajos_join(d1: Digraph, arc1: Arc, d2: Digraph, arc2: Arc) -> Digraph:
    """Swap out one arc of each digraph, identify the head of the first arc
    with the tail of the second, and add the bridging arc.

    Labels: the first digraph keeps its labels, the identified vertex keeps
    the label of arc1's head, the rest of the second digraph follows in
    ascending order.
    """
    u, v1 = arc1
    v2, w = arc2
    if arc1 not in d1.arcs:
        raise MissingArc(f"{arc1} not in first digraph")
    if arc2 not in d2.arcs:
        raise MissingArc(f"{arc2} not in second digraph")
    mapping = _append_mapping(d1.n, d2.n, {v2: v1})
    arcs = set(d1.arcs) - {arc1}
    for a, b in d2.arcs:
        if (a, b) != arc2:
            arcs.add((mapping[a], mapping[b]))
    arcs.add((u, mapping[w]))
    return build_digraph(d1.n + d2.n - 1, arcs)


@dataclass(frozen=True)
class BijoinResult:
    digraph: Digraph
    degenerate: bool
    bidirected: bool


def hajos_bijoin(
    d1: Digraph,
    taw: tuple[int, int, int],
    d2: Digraph,
    vau: tuple[int, int, int],
) -> BijoinResult:
    """Two-arc join over one shared vertex.

    Removes t->a1->w from the first digraph and v->a2->u from the second,
    identifies a1 with a2, and adds the crossing arcs t->u and v->w.
    Requires t,w (resp. u,v) to stay connected once a1 (resp. a2) is
    deleted.  t=w and u=v are allowed; both at once is the bidirected join.
    """
    t, a1, w = taw
    v, a2, u = vau
    for arc, dd, name in (
        ((t, a1), d1, "t->a1"),
        ((a1, w), d1, "a1->w"),
        ((v, a2), d2, "v->a2"),
        ((a2, u), d2, "a2->u"),
    ):
        if arc not in dd.arcs:
            raise PreconditionViolated(f"missing arc {name} = {arc}")
    if not _same_component_without(d1, t, w, a1):
        raise PreconditionViolated("t and w separate when a1 is removed")
    if not _same_component_without(d2, u, v, a2):
        raise PreconditionViolated("u and v separate when a2 is removed")
    mapping = _append_mapping(d1.n, d2.n, {a2: a1})
    arcs = set(d1.arcs) - {(t, a1), (a1, w)}
    for x, y in d2.arcs:
        if (x, y) in {(v, a2), (a2, u)}:
            continue
        arcs.add((mapping[x], mapping[y]))
    arcs.add((t, mapping[u]))
    arcs.add((mapping[v], w))
    dig = build_digraph(d1.n + d2.n - 1, arcs)
    return BijoinResult(
        dig, degenerate=(t == w) != (u == v), bidirected=(t == w and u == v)
    )


def _same_component_without(d: Digraph, x: int, y: int, gone: int) -> bool:
    if x == gone or y == gone:
        return False
    if x == y:
        return True
    seen = {x}
    stack = [x]
    while stack:
        z = stack.pop()
        for nb in d.und_sets[z]:
            if nb != gone and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return y in seen


def _tree_structure(tree_edges: Sequence[tuple[int, int]]):
    adj: dict[int, set[int]] = {}
    for a, b in tree_edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    vs = set(adj)
    if len(vs) != len(tree_edges) + 1:
        raise InvalidInput("edge list is not a tree")
    seen = {min(vs)}
    stack = [min(vs)]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != vs:
        raise InvalidInput("edge list is not a tree")
    leaves = {v for v in vs if len(adj[v]) == 1}
    return leaves, adj


def _tree_path(adj: dict[int, set[int]], a: int, b: int) -> list[int]:
    from collections import deque

    prev = {a: -1}
    q = deque([a])
    while q:
        x = q.popleft()
        if x == b:
            break
        for y in sorted(adj[x]):
            if y not in prev:
                prev[y] = x
                q.append(y)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def hajos_tree_join(
    n: int,
    tree_edges: Sequence[tuple[int, int]],
    parts: Sequence[Iterable[Arc]],
    order: Sequence[int],
    extended: bool = False,
    check_embedding: bool = True,
) -> Digraph:
    """Glue digon-carrying parts along a tree and add a peripheral dicycle.

    Part i lives on tree edge (u_i, v_i) over the global label space,
    shares only its two tree vertices with the tree, and must contain the
    digon [u_i, v_i]; those digons are removed and the dicycle
    order[0] -> order[1] -> ... -> order[0] is added.  `order` lists the
    leaves (each exactly once) following a plane embedding of the tree;
    with `extended` it may also visit internal vertices, each at most once.

    The embedding test checks that the junction-to-junction tree paths
    between consecutive entries are pairwise arc-disjoint in the doubled
    tree; `check_embedding=False` skips it, to build crossed variants on
    purpose.
    """
    if len(tree_edges) < 2:
        raise InvalidInput("need at least two tree edges")
    if len(parts) != len(tree_edges):
        raise InvalidInput("one part per tree edge required")
    leaves, adj = _tree_structure(tree_edges)
    order = list(order)
    if len(set(order)) != len(order):
        raise BadEmbeddingOrder("repeated vertex in the peripheral order")
    if not extended:
        if set(order) != leaves:
            raise BadEmbeddingOrder("order must list exactly the leaves")
    else:
        if not leaves <= set(order):
            raise BadEmbeddingOrder("order must contain every leaf")
        if not set(order) <= set(adj):
            raise BadEmbeddingOrder("order contains a non-tree vertex")
    if check_embedding:
        used: set[tuple[int, int]] = set()
        for i, xv in enumerate(order):
            y = order[(i + 1) % len(order)]
            path = _tree_path(adj, xv, y)
            for a, b in zip(path, path[1:]):
                if (a, b) in used:
                    raise BadEmbeddingOrder(
                        f"tree arc {a}->{b} used by two junction paths"
                    )
                used.add((a, b))
    part_arcs = [frozenset(p) for p in parts]
    tree_vs = set(adj)
    owner: dict[int, int] = {}
    arcs: set[Arc] = set()
    for i, ((ui, vi), pa) in enumerate(zip(tree_edges, part_arcs)):
        if (ui, vi) not in pa or (vi, ui) not in pa:
            raise MissingDigon(f"part {i} lacks the digon on tree edge ({ui}, {vi})")
        support = {x for a in pa for x in a}
        if not support & tree_vs <= {ui, vi}:
            raise InvalidInput(f"part {i} touches tree vertices beyond its edge")
        for x in support - {ui, vi}:
            if x in owner:
                raise InvalidInput(f"vertex {x} shared by parts {owner[x]} and {i}")
            owner[x] = i
        arcs |= pa - {(ui, vi), (vi, ui)}
    for i, v in enumerate(order):
        wv = order[(i + 1) % len(order)]
        if (v, wv) in arcs:
            raise InvalidInput(f"peripheral arc {v}->{wv} already present")
        arcs.add((v, wv))
    if set(owner) | tree_vs != set(range(n)):
        raise InvalidInput("parts and tree do not cover exactly 0..n-1")
    return build_digraph(n, arcs)


def hajos_star_join(
    n: int,
    centre: int,
    rim: Sequence[int],
    parts: Sequence[Iterable[Arc]],
    check_embedding: bool = True,
) -> Digraph:
    """Tree join over a star: part i carries the digon [centre, rim[i]]."""
    edges = [(centre, r) for r in rim]
    return hajos_tree_join(n, edges, parts, list(rim), check_embedding=check_embedding)


def parallel_hajos_join(
    d_ac: Digraph,
    x: int,
    t: int,
    u: int,
    v: int,
    w: int,
    a_side: Iterable[int],
    d_b: Digraph,
    a: int,
    b: int,
) -> Digraph:
    """Splice a digon-carrying digraph into the shared vertex of a
    two-sided host.

    The host d_ac is split by x into an A side (containing t, w) and a C
    side (containing u, v) whose only crossing arcs are t->u and v->w.
    The spliced digraph d_b loses its digon [a, b]; a takes over x's
    A-side arcs, b its C-side arcs, and the crossing arcs survive.

    Labels: d_b keeps its labels, then the A side minus x in ascending
    order, then the C side minus x.
    """
    aset = set(a_side)
    if x not in aset:
        raise PreconditionViolated("x must belong to the A side")
    cset = (set(range(d_ac.n)) - aset) | {x}
    if not (t in aset and w in aset and t != x and w != x):
        raise PreconditionViolated("t and w must lie in the A side, apart from x")
    if not (u in cset and v in cset and u != x and v != x):
        raise PreconditionViolated("u and v must lie in the C side, apart from x")
    if (t, u) not in d_ac.arcs or (v, w) not in d_ac.arcs:
        raise PreconditionViolated("crossing arcs t->u and v->w must exist")
    for p, q in d_ac.arcs:
        crosses = (p in aset - {x} and q in cset - {x}) or (
            p in cset - {x} and q in aset - {x}
        )
        if crosses and (p, q) not in {(t, u), (v, w)}:
            raise PreconditionViolated(f"extra crossing arc {p}->{q}")
    if not d_b.has_digon(a, b):
        raise PreconditionViolated("d_b lacks the digon [a, b]")
    if not _same_component_without(d_ac, t, w, x):
        raise PreconditionViolated("t and w separate when x is removed")
    csub, clabels = d_ac.induced(sorted(cset))
    cpos = {lab: i for i, lab in enumerate(clabels)}
    if not _same_component_without(csub, cpos[u], cpos[v], cpos[x]):
        raise PreconditionViolated("u and v separate in the C side without x")
    mapping: dict[int, int] = {}
    nxt = d_b.n
    for z in sorted(aset - {x}):
        mapping[z] = nxt
        nxt += 1
    for z in sorted(cset - {x}):
        mapping[z] = nxt
        nxt += 1
    arcs = set(d_b.arcs) - {(a, b), (b, a)}
    for p, q in d_ac.arcs:
        if p == x:
            arcs.add((a if q in aset else b, mapping[q]))
        elif q == x:
            arcs.add((mapping[p], a if p in aset else b))
        else:
            arcs.add((mapping[p], mapping[q]))
    return build_digraph(nxt, arcs)


# ---------------------------------------------------------------------------
# necessary conditions


@dataclass(frozen=True)
class NecessaryReport:
    eulerian: bool
    strong: bool
    biconnected: bool
    lambda_all_k: bool
    lambda_value: int

    @property
    def all_pass(self) -> bool:
        return self.eulerian and self.strong and self.biconnected and self.lambda_all_k


def check_extremal_necessary(d: Digraph, k: int) -> NecessaryReport:
    """Cheap necessary filters: balanced degrees, strong, biconnected, and
    every ordered pair having local arc-connectivity exactly k."""
    eul = all(d.d_plus(v) == d.d_minus(v) for v in range(d.n))
    strong = d.is_strong
    bic = d.is_biconnected
    lam_ok = False
    lam_max = 0
    if strong and d.n >= 2:
        lam_ok = True
        arcs = d.sorted_arcs()
        for uu in range(d.n):
            for vv in range(d.n):
                if uu == vv:
                    continue
                f, _ = _maxflow_unit(d.n, arcs, uu, vv)
                lam_max = max(lam_max, f)
                if f != k:
                    lam_ok = False
    return NecessaryReport(eul, strong, bic, lam_ok, lam_max)


# ---------------------------------------------------------------------------
# certificates

BASE_COMPLETE = "BaseSymmetricComplete"
BASE_ODD_WHEEL = "BaseSymmetricOddWheel"
BASE_DICYCLE = "BaseDirectedCycle"
JOIN_DIRECTED = "DirectedHajosJoin"
JOIN_PARALLEL = "ParallelHajosJoin"
JOIN_STAR = "HajosStarJoin"
LEAF_ARCS = "RawArcs"  # internal: a child given by its explicit arc set


@dataclass(frozen=True)
class CertNode:
    """One node of a decomposition witness tree.

    Witness labels live in this node's own 0..n-1 space; each child comes
    with an embedding tuple mapping child labels to this node's labels
    (-1 marks the fresh shared vertex of a parallel split).
    """

    kind: str
    n: int
    witness: dict
    children: tuple[tuple["CertNode", tuple[int, ...]], ...] = ()

    def replay_arcs(self) -> frozenset[Arc]:
        """Rebuild the certified digraph's arc set by replaying the joins."""
        if self.kind == LEAF_ARCS:
            return self.witness["arcs"]
        if self.kind == BASE_COMPLETE:
            return frozenset(
                (i, j) for i in range(self.n) for j in range(self.n) if i != j
            )
        if self.kind == BASE_DICYCLE:
            cyc = self.witness["cycle"]
            return frozenset(
                (cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))
            )
        if self.kind == BASE_ODD_WHEEL:
            hub = self.witness["hub"]
            rim = self.witness["rim"]
            arcs: set[Arc] = set()
            for i, r in enumerate(rim):
                nxt = rim[(i + 1) % len(rim)]
                arcs |= {(r, nxt), (nxt, r), (hub, r), (r, hub)}
            return frozenset(arcs)
        if self.kind == JOIN_DIRECTED:
            (c1, e1), (c2, e2) = self.children
            a1 = {(e1[p], e1[q]) for p, q in c1.replay_arcs()}
            a2 = {(e2[p], e2[q]) for p, q in c2.replay_arcs()}
            u, v, w = self.witness["u"], self.witness["v"], self.witness["w"]
            return frozenset((a1 - {(u, v)}) | (a2 - {(v, w)}) | {(u, w)})
        if self.kind == JOIN_STAR:
            y = self.witness["centre"]
            rim = self.witness["rim"]
            arcs = set()
            for (child, emb), p in zip(self.children, rim):
                carcs = {(emb[a], emb[b]) for a, b in child.replay_arcs()}
                arcs |= carcs - {(y, p), (p, y)}
            for i, p in enumerate(rim):
                arcs.add((p, rim[(i + 1) % len(rim)]))
            return frozenset(arcs)
        if self.kind == JOIN_PARALLEL:
            a, b = self.witness["a"], self.witness["b"]
            (cac, emb_ac), (cb, emb_b) = self.children
            a_side_child = set(self.witness["a_side_child"])
            arcs = set()
            for p, q in cb.replay_arcs():
                pa, qa = emb_b[p], emb_b[q]
                if {pa, qa} == {a, b}:
                    continue
                arcs.add((pa, qa))
            for p, q in cac.replay_arcs():
                if emb_ac[p] == -1:
                    arcs.add((a if q in a_side_child else b, emb_ac[q]))
                elif emb_ac[q] == -1:
                    arcs.add((emb_ac[p], a if p in a_side_child else b))
                else:
                    arcs.add((emb_ac[p], emb_ac[q]))
            return frozenset(arcs)
        raise InvalidInput(f"unknown certificate kind {self.kind}")


DecompositionCertificate = CertNode


def certificate_to_dict(node: CertNode) -> dict:
    return {
        "kind": node.kind,
        "n": node.n,
        "witness": {
            k: list(v) if isinstance(v, tuple) else v
            for k, v in node.witness.items()
        },
        "children": [
            {"embed": list(emb), "node": certificate_to_dict(ch)}
            for ch, emb in node.children
        ],
    }


def _leaf(d: Digraph) -> CertNode:
    return CertNode(LEAF_ARCS, d.n, {"arcs": d.arcs})


# ---------------------------------------------------------------------------
# recognition


@dataclass(frozen=True)
class RecognizeResult:
    extremal: bool
    certificate: CertNode | None = None
    reason: str | None = None


def recognize_k_extremal(
    d: Digraph, k: int, budget: int | None = None
) -> RecognizeResult:
    """Decide whether chi = lambda + 1 = k + 1 holds on this strong,
    underlying-2-connected digraph, with a replayable decomposition
    witness.

    k = 1 is the directed-cycle characterization; k = 2 is refused (open
    problem, see check_2_extremal); k >= 3 runs the join recursion.
    """
    if k == 2:
        raise UnsupportedK("k = 2 recognition is open; use check_2_extremal")
    if k < 1:
        raise UnsupportedK("k must be positive")
    if k == 1:
        if (
            d.n >= 2
            and d.is_strong
            and all(d.d_plus(v) == 1 and d.d_minus(v) == 1 for v in range(d.n))
        ):
            cyc = [0]
            while len(cyc) < d.n:
                cyc.append(min(d.out_sets[cyc[-1]]))
            cert = CertNode(BASE_DICYCLE, d.n, {"cycle": tuple(cyc)})
            return RecognizeResult(True, cert)
        return RecognizeResult(False, reason="not a directed cycle")
    state = _RecBudget(budget)
    return _recognize(d, k, state)


class _RecBudget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.calls = 0

    def tick(self):
        self.calls += 1
        if self.limit is not None and self.calls > self.limit:
            raise BudgetExceeded(0, None, "recognition budget exceeded")


def _recognize(d: Digraph, k: int, state: _RecBudget) -> RecognizeResult:
    state.tick()
    if not d.is_strong:
        return RecognizeResult(False, reason="not strong")
    if d.n >= 3 and not d.is_biconnected:
        return RecognizeResult(False, reason="not biconnected")
    if any(d.d_plus(v) != d.d_minus(v) for v in range(d.n)):
        return RecognizeResult(False, reason="not eulerian")
    base = _base_case(d, k)
    if base is not None:
        return RecognizeResult(True, base)
    for finder in (_find_directed_split, _find_parallel_split, _find_star_split):
        found = finder(d)
        if found is None:
            continue
        kind, witness, children = found
        certified = []
        for child, emb in children:
            sub = _recognize(child, k, state)
            if not sub.extremal:
                return RecognizeResult(
                    False, reason=f"{kind} part not extremal: {sub.reason}"
                )
            certified.append((sub.certificate, emb))
        node = CertNode(kind, d.n, witness, tuple(certified))
        return RecognizeResult(True, node)
    return RecognizeResult(False, reason="NoDecomposition")


def _base_case(d: Digraph, k: int) -> CertNode | None:
    symmetric = all((v, u) in d.arcs for u, v in d.arcs)
    if not symmetric:
        return None
    if d.n == k + 1 and len(d.arcs) == d.n * (d.n - 1):
        return CertNode(BASE_COMPLETE, d.n, {})
    if k == 3 and d.n >= 6 and d.n % 2 == 0:
        hubs = [v for v in range(d.n) if len(d.und_sets[v]) == d.n - 1]
        for hub in hubs:
            others = [v for v in range(d.n) if v != hub]
            if all(len(d.und_sets[v]) == 3 for v in others):
                rim = _trace_cycle(d, others, hub)
                if rim is not None:
                    return CertNode(
                        BASE_ODD_WHEEL, d.n, {"hub": hub, "rim": tuple(rim)}
                    )
    return None


def _trace_cycle(d: Digraph, others: list[int], hub: int) -> list[int] | None:
    """The rim as one symmetric odd cycle avoiding the hub, or None."""
    if len(others) < 3 or len(others) % 2 == 0:
        return None
    start = min(others)
    first = [w for w in sorted(d.und_sets[start]) if w != hub]
    if len(first) != 2:
        return None
    rim = [start, first[0]]
    while True:
        prev, cur = rim[-2], rim[-1]
        nxt = [w for w in sorted(d.und_sets[cur]) if w != hub and w != prev]
        if len(nxt) != 1:
            return None
        if nxt[0] == start:
            break
        if nxt[0] in rim:
            return None
        rim.append(nxt[0])
    if len(rim) != len(others):
        return None
    return rim


Child = tuple[Digraph, tuple[int, ...]]
Found = tuple[str, dict, list[Child]]


def _components_without(
    d: Digraph, gone: set[int], drop: frozenset[Arc] | set[Arc] = frozenset()
) -> list[set[int]]:
    """Underlying components after deleting vertices and specific arcs."""
    und: dict[int, set[int]] = {v: set() for v in range(d.n) if v not in gone}
    for p, q in d.arcs:
        if p in gone or q in gone or (p, q) in drop:
            continue
        und[p].add(q)
        und[q].add(p)
    comps: list[set[int]] = []
    seen: set[int] = set()
    for v in sorted(und):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in und[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(comp)
    return comps


def _child_plus(d: Digraph, vertices: list[int], extra: list[Arc]) -> Child:
    sub, labels = d.induced(vertices)
    pos = {v: i for i, v in enumerate(labels)}
    arcs = set(sub.arcs)
    for a, b in extra:
        arcs.add((pos[a], pos[b]))
    return Digraph(sub.n, frozenset(arcs)), tuple(labels)


def _verify_split(d: Digraph, kind: str, witness: dict, children: list[Child]) -> bool:
    node = CertNode(
        kind,
        d.n,
        witness,
        tuple((_leaf(ch), emb) for ch, emb in children),
    )
    return node.replay_arcs() == d.arcs


def _find_directed_split(d: Digraph) -> Found | None:
    """First (lex by (u, w, v)) directed-join split, replay-verified."""
    for u, w in d.sorted_arcs():
        for v in range(d.n):
            if v == u or v == w:
                continue
            if (u, v) in d.arcs or (v, w) in d.arcs:
                continue
            comps = _components_without(d, {v}, drop={(u, w)})
            if len(comps) != 2:
                continue
            cu = next((c for c in comps if u in c), None)
            cw = next((c for c in comps if w in c), None)
            if cu is None or cw is None or cu is cw:
                continue
            ch1 = _child_plus(d, sorted(cu | {v}), [(u, v)])
            ch2 = _child_plus(d, sorted(cw | {v}), [(v, w)])
            witness = {"u": u, "v": v, "w": w}
            if _verify_split(d, JOIN_DIRECTED, witness, [ch1, ch2]):
                return JOIN_DIRECTED, witness, [ch1, ch2]
    return None


def _find_star_split(d: Digraph) -> Found | None:
    """Star split: centre y plus a rim dicycle traced through the bridges
    of d minus y minus the closing arc."""
    for y in range(d.n):
        for pl, p1 in d.sorted_arcs():
            if y in (pl, p1):
                continue
            bridges = _bridges_without(d, y, (pl, p1))
            forest: dict[int, set[int]] = {}
            for a, b in bridges:
                forest.setdefault(a, set()).add(b)
                forest.setdefault(b, set()).add(a)
            if p1 not in forest or pl not in forest:
                continue
            path = _forest_path(forest, p1, pl)
            if path is None or len(path) < 2:
                continue
            if any(
                (path[i], path[i + 1]) not in d.arcs for i in range(len(path) - 1)
            ):
                continue
            rim = path
            if any(d.has_arc(y, p) or d.has_arc(p, y) for p in rim):
                continue
            cyc_arcs = {(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))}
            comps = _components_without(d, {y}, drop=cyc_arcs)
            if len(comps) != len(rim):
                continue
            comp_of: list[set[int] | None] = []
            for p in rim:
                comp_of.append(next((c for c in comps if p in c), None))
            if any(c is None for c in comp_of):
                continue
            if len({id(c) for c in comp_of}) != len(rim):
                continue
            children = [
                _child_plus(d, sorted(comp_of[i] | {y}), [(y, rim[i]), (rim[i], y)])
                for i in range(len(rim))
            ]
            witness = {"centre": y, "rim": tuple(rim)}
            if _verify_split(d, JOIN_STAR, witness, children):
                return JOIN_STAR, witness, children
    return None


def _bridges_without(d: Digraph, y: int, arc: Arc) -> list[tuple[int, int]]:
    """Bridges of the underlying graph of d minus vertex y minus one arc.

    An underlying edge backed by a digon is never a bridge candidate here,
    because dropping a single arc keeps the reverse one.
    """
    und: dict[int, dict[int, int]] = {v: {} for v in range(d.n) if v != y}
    for p, q in d.arcs:
        if p == y or q == y or (p, q) == arc:
            continue
        und[p][q] = und[p].get(q, 0) + 1
        und[q][p] = und[q].get(p, 0) + 1
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: list[tuple[int, int]] = []
    timer = [0]
    for root in sorted(und):
        if root in disc:
            continue
        stack = [(root, -1, iter(sorted(und[root])))]
        disc[root] = low[root] = timer[0]
        timer[0] += 1
        while stack:
            vtx, parent, it = stack[-1]
            advanced = False
            for nb in it:
                if nb not in disc:
                    disc[nb] = low[nb] = timer[0]
                    timer[0] += 1
                    stack.append((nb, vtx, iter(sorted(und[nb]))))
                    advanced = True
                    break
                elif nb != parent:
                    low[vtx] = min(low[vtx], disc[nb])
                elif und[vtx][nb] > 1:
                    low[vtx] = min(low[vtx], disc[nb])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[vtx])
                    if low[vtx] > disc[p] and und[p][vtx] == 1:
                        bridges.append((p, vtx))
    return bridges


def _forest_path(forest: dict[int, set[int]], a: int, b: int) -> list[int] | None:
    from collections import deque

    prev = {a: -1}
    q = deque([a])
    while q:
        x = q.popleft()
        if x == b:
            break
        for y in sorted(forest.get(x, ())):
            if y not in prev:
                prev[y] = x
                q.append(y)
    if b not in prev:
        return None
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def _find_parallel_split(d: Digraph) -> Found | None:
    """Parallel split: a non-adjacent junction pair (a, b) whose removal
    already detaches the middle digraph, plus two opposite crossing arcs
    whose removal splits the remaining component in two."""
    for a in range(d.n):
        for b in range(a + 1, d.n):
            if d.has_arc(a, b) or d.has_arc(b, a):
                continue
            comps = _components_without(d, {a, b})
            if len(comps) < 2:
                continue
            for aa, bb in ((a, b), (b, a)):
                found = _parallel_with_junctions(d, aa, bb, comps)
                if found is not None:
                    return found
    return None


def _parallel_with_junctions(d: Digraph, a: int, b: int, comps) -> Found | None:
    a_nbrs = d.und_sets[a] - {b}
    b_nbrs = d.und_sets[b] - {a}
    for s_comp in comps:
        if not (a_nbrs & s_comp) or not (b_nbrs & s_comp):
            continue
        b_union: set[int] = set()
        for c in comps:
            if c is not s_comp:
                b_union |= c
        if not b_union:
            continue
        found = _parallel_cut_search(d, a, b, s_comp, b_union)
        if found is not None:
            return found
    return None


def _parallel_cut_search(
    d: Digraph, a: int, b: int, s_comp: set[int], b_union: set[int]
) -> Found | None:
    # fully degenerate crossing: the two crossing arcs form a digon
    for p, q in d.sorted_arcs():
        if p < q and p in s_comp and q in s_comp and (q, p) in d.arcs:
            e, f = (p, q), (q, p)
            parts = [
                c
                for c in _components_without(d, {a, b}, drop={e, f})
                if c & s_comp
            ]
            if len(parts) != 2:
                continue
            found = _validate_parallel(d, a, b, e, f, parts, b_union)
            if found is not None:
                return found
    # candidate crossing arcs: inside the component, no reverse arc
    inner = [
        (p, q)
        for p, q in d.sorted_arcs()
        if p in s_comp and q in s_comp and (q, p) not in d.arcs
    ]
    sub, labels = d.induced(sorted(s_comp))
    pos = {v: i for i, v in enumerate(labels)}
    seen_pairs: set[frozenset[Arc]] = set()
    for e in inner:
        e_local = (pos[e[0]], pos[e[1]])
        bridges = _bridges_of_minus(sub, e_local)
        for fb in bridges:
            f_cands = []
            if (labels[fb[0]], labels[fb[1]]) in d.arcs:
                f_cands.append((labels[fb[0]], labels[fb[1]]))
            if (labels[fb[1]], labels[fb[0]]) in d.arcs:
                f_cands.append((labels[fb[1]], labels[fb[0]]))
            for f in f_cands:
                if f == e or (f[1], f[0]) in d.arcs:
                    continue
                key = frozenset({e, f})
                if key in seen_pairs:
                    continue
                seen_pairs.add(key)
                parts = [
                    c for c in _components_without(d, {a, b}, drop={e, f})
                    if c & s_comp
                ]
                if len(parts) != 2:
                    continue
                found = _validate_parallel(d, a, b, e, f, parts, b_union)
                if found is not None:
                    return found
    return None


def _bridges_of_minus(sub: Digraph, dropped: Arc) -> list[tuple[int, int]]:
    """Bridges of sub's underlying graph with one arc removed."""
    und: dict[int, dict[int, int]] = {v: {} for v in range(sub.n)}
    for p, q in sub.arcs:
        if (p, q) == dropped:
            continue
        und[p][q] = und[p].get(q, 0) + 1
        und[q][p] = und[q].get(p, 0) + 1
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: list[tuple[int, int]] = []
    timer = [0]
    for root in sorted(und):
        if root in disc:
            continue
        stack = [(root, -1, iter(sorted(und[root])))]
        disc[root] = low[root] = timer[0]
        timer[0] += 1
        while stack:
            vtx, parent, it = stack[-1]
            advanced = False
            for nb in it:
                if nb not in disc:
                    disc[nb] = low[nb] = timer[0]
                    timer[0] += 1
                    stack.append((nb, vtx, iter(sorted(und[nb]))))
                    advanced = True
                    break
                elif nb != parent:
                    low[vtx] = min(low[vtx], disc[nb])
                elif und[vtx][nb] > 1:
                    low[vtx] = min(low[vtx], disc[nb])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[vtx])
                    if low[vtx] > disc[p] and und[p][vtx] == 1:
                        bridges.append((p, vtx))
    return bridges


def _validate_parallel(
    d: Digraph, a: int, b: int, e: Arc, f: Arc, s_parts, b_union
) -> Found | None:
    for comp_a, comp_c in (tuple(s_parts), tuple(reversed(s_parts))):
        if not (e[0] in comp_a and e[1] in comp_c):
            continue
        if not (f[0] in comp_c and f[1] in comp_a):
            continue
        t, u = e
        v, w = f
        if not (d.und_sets[a] - {b}) & comp_a or not (d.und_sets[b] - {a}) & comp_c:
            continue
        if (d.und_sets[a] - {b}) & comp_c or (d.und_sets[b] - {a}) & comp_a:
            continue
        child_b = _child_plus(d, sorted(b_union | {a, b}), [(a, b), (b, a)])
        labels_ac = sorted(comp_a | comp_c)
        pos = {lab: i for i, lab in enumerate(labels_ac)}
        x_child = len(labels_ac)
        arcs_ac: set[Arc] = set()
        for p, q in d.arcs:
            if p in pos and q in pos:
                arcs_ac.add((pos[p], pos[q]))
            elif p == a and q in comp_a:
                arcs_ac.add((x_child, pos[q]))
            elif q == a and p in comp_a:
                arcs_ac.add((pos[p], x_child))
            elif p == b and q in comp_c:
                arcs_ac.add((x_child, pos[q]))
            elif q == b and p in comp_c:
                arcs_ac.add((pos[p], x_child))
        child_ac: Child = (
            Digraph(x_child + 1, frozenset(arcs_ac)),
            tuple(labels_ac) + (-1,),
        )
        witness = {
            "t": t,
            "u": u,
            "v": v,
            "w": w,
            "a": a,
            "b": b,
            "a_side_child": tuple(sorted(pos[z] for z in comp_a)),
        }
        children = [child_ac, child_b]
        if _verify_split(d, JOIN_PARALLEL, witness, children):
            return JOIN_PARALLEL, witness, children
    return None


# ---------------------------------------------------------------------------
# induced-dicycle hypergraph


@dataclass(frozen=True)
class CycleHypergraph:
    n: int
    hyperedges: tuple[frozenset[int], ...]
    max_intersection: int
    violating_pairs: tuple[tuple[int, int], ...]

    @property
    def pairwise_ok(self) -> bool:
        return self.max_intersection <= 1


def induced_cycle_hypergraph(
    d: Digraph, node_budget: int = 2_000_000
) -> CycleHypergraph:
    """Vertex sets of all induced dicycles, with a pairwise-intersection
    report.  DFS over chordless dipaths rooted at each cycle's smallest
    vertex; exponential in general, guarded by a node budget."""
    edges: set[frozenset[int]] = set()
    nodes = 0

    def extend(path: list[int], inside: set[int]):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(len(edges), None, "induced-cycle budget")
        v0 = path[0]
        last = path[-1]
        for nxt in sorted(d.out_sets[last]):
            if nxt in inside or nxt < v0:
                continue
            if len(path) >= 2 and (nxt, last) in d.arcs:
                continue  # reverse arc to the predecessor would be a chord
            if any((nxt, p) in d.arcs or (p, nxt) in d.arcs for p in path[1:-1]):
                continue  # adjacency with the interior breaks chordlessness
            closes = (nxt, v0) in d.arcs
            chord0 = (v0, nxt) in d.arcs
            if len(path) == 1:
                if closes and chord0:
                    edges.add(frozenset({v0, nxt}))  # digon
                    continue
                if closes:
                    edges.add(frozenset({v0, nxt} | set(path)))
                    continue
                path.append(nxt)
                inside.add(nxt)
                extend(path, inside)
                inside.remove(nxt)
                path.pop()
            else:
                if closes:
                    if not chord0:
                        edges.add(frozenset(path + [nxt]))
                    continue
                if chord0:
                    continue
                path.append(nxt)
                inside.add(nxt)
                extend(path, inside)
                inside.remove(nxt)
                path.pop()

    for v in range(d.n):
        extend([v], {v})
    uniq = sorted(edges, key=lambda e: (len(e), sorted(e)))
    worst = 0
    bad: list[tuple[int, int]] = []
    for i in range(len(uniq)):
        for j in range(i + 1, len(uniq)):
            inter = len(uniq[i] & uniq[j])
            worst = max(worst, inter)
            if inter >= 2:
                bad.append((i, j))
    return CycleHypergraph(d.n, tuple(uniq), worst, tuple(bad))


# ---------------------------------------------------------------------------
# generalized directed wheels (k = 2 exploration)


def generalized_wheel(children: Sequence[Sequence[int]]) -> Digraph:
    """Symmetric rooted tree (same parity on all root-to-leaf paths) plus a
    peripheral dicycle over the leaves in depth-first order.

    children[v] lists the children of vertex v; vertex 0 is the root.
    """
    n = len(children)
    if n < 3:
        raise InvalidInput("need at least 3 vertices")
    depth = [0] * n
    arcs: set[Arc] = set()
    order: list[int] = []

    def dfs(v: int):
        if not children[v]:
            order.append(v)
        for c in children[v]:
            depth[c] = depth[v] + 1
            arcs.add((v, c))
            arcs.add((c, v))
            dfs(c)

    dfs(0)
    if len(order) < 2:
        raise InvalidInput("need at least two leaves for the peripheral dicycle")
    if len({depth[v] % 2 for v in order}) > 1:
        raise ParityViolated("root-to-leaf paths have mixed parity")
    for i, v in enumerate(order):
        arcs.add((v, order[(i + 1) % len(order)]))
    return build_digraph(n, arcs)


def check_2_extremal(d: Digraph) -> bool:
    """Brute-force check: strong, biconnected, lambda = 2 and chi = 3."""
    from .colouring import exact_dichromatic

    if not d.is_strong or (d.n >= 3 and not d.is_biconnected):
        return False
    if lambda_profile(d).value != 2:
        return False
    return exact_dichromatic(d).value == 3
