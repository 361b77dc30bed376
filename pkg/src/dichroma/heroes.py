"""Generators for digraph families with a known dichromatic number or
known absent induced patterns, plus the induced-pattern search used to
verify the freeness claims.

Each generator returns the digraph together with its claims (expected
dichromatic number, patterns it avoids), so callers can re-verify with the
exact solver and the pattern search.  Verification is opt-in: it calls
exponential routines.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .core import Digraph, build_digraph
from .errors import BadVertex, BudgetExceeded, SizeCapExceeded, TooFewParts
from .families import dicycle, transitive_tournament

DEFAULT_CAP = 100_000


def compose_circular(parts: Sequence[Digraph]) -> Digraph:
    """Disjoint union of at least three parts plus complete domination arcs
    from each part to the next around the cycle."""
    if len(parts) < 3:
        raise TooFewParts("circular composition needs at least 3 parts")
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.n
    arcs: set[tuple[int, int]] = set()
    for p, off in zip(parts, offsets):
        for u, v in p.arcs:
            arcs.add((u + off, v + off))
    for i, p in enumerate(parts):
        q = parts[(i + 1) % len(parts)]
        qo = offsets[(i + 1) % len(parts)]
        for u in range(p.n):
            for v in range(q.n):
                arcs.add((u + offsets[i], v + qo))
    return build_digraph(total, arcs)


def compose_domination(d1: Digraph, d2: Digraph) -> Digraph:
    """Disjoint union plus all arcs from the first digraph to the second."""
    arcs = set(d1.arcs)
    for u, v in d2.arcs:
        arcs.add((u + d1.n, v + d1.n))
    for u in range(d1.n):
        for v in range(d2.n):
            arcs.add((u, v + d1.n))
    return build_digraph(d1.n + d2.n, arcs)


def circ3(a: int | Digraph, b: int | Digraph, c: int | Digraph) -> Digraph:
    """Triangle composition where integers stand for transitive tournaments."""
    conv = lambda x: transitive_tournament(x) if isinstance(x, int) else x
    return compose_circular([conv(a), conv(b), conv(c)])


def substitute(g1: Digraph, u: int, h1: Digraph) -> Digraph:
    """Replace vertex u of g1 by a copy of h1; every former neighbour
    relation of u is replicated towards all of h1.

    Labels: vertices below u keep theirs, h1 occupies u..u+|h1|-1, the rest
    shift up; substituting a single vertex is the identity.
    """
    if not 0 <= u < g1.n:
        raise BadVertex(f"vertex {u} not in the host")
    shift = h1.n - 1

    def relab(v: int) -> int:
        return v if v < u else v + shift

    arcs: set[tuple[int, int]] = set()
    for a, b in g1.arcs:
        if a == u and b == u:
            continue
        if a == u:
            for j in range(h1.n):
                arcs.add((u + j, relab(b)))
        elif b == u:
            for j in range(h1.n):
                arcs.add((relab(a), u + j))
        else:
            arcs.add((relab(a), relab(b)))
    for a, b in h1.arcs:
        arcs.add((u + a, u + b))
    return build_digraph(g1.n + shift, arcs)


@dataclass(frozen=True)
class GeneratedDigraph:
    """A generator output with its self-check claims."""

    digraph: Digraph
    name: str
    params: dict
    claimed_chi: int | None = None
    forbidden: tuple[str, ...] = ()


def gen_fk(ell: int, k: int, cap: int = DEFAULT_CAP) -> GeneratedDigraph:
    """Layered circular composition: one vertex plus ell-1 copies of the
    previous layer around a dicycle of parts; layer k needs exactly k
    colours."""
    if ell < 3:
        raise TooFewParts("ell must be at least 3")
    if k < 1:
        raise SizeCapExceeded("k must be positive")
    size = 1
    for _ in range(k - 1):
        size = 1 + (ell - 1) * size
        if size > cap:
            raise SizeCapExceeded(f"layer size exceeds cap {cap}")
    d = transitive_tournament(1)
    for _ in range(k - 1):
        d = compose_circular([transitive_tournament(1)] + [d] * (ell - 1))
    return GeneratedDigraph(d, "fk", {"ell": ell, "k": k}, claimed_chi=k)


def gen_ds(s: int, cap: int = DEFAULT_CAP) -> GeneratedDigraph:
    """Oriented complete multipartite digraph on the ordered triples of
    0..s-1, grouped by middle element.

    Consecutive triples (i,j,k) -> (j,k,l) get forward arcs; every other
    pair from distinct parts is oriented backward (from the larger middle
    to the smaller).  Parts (equal middles) stay non-adjacent.
    """
    if s < 5:
        raise SizeCapExceeded("s must be at least 5")
    triples = list(combinations(range(s), 3))
    if len(triples) > cap:
        raise SizeCapExceeded(f"vertex count exceeds cap {cap}")
    index = {t: i for i, t in enumerate(triples)}
    arcs: set[tuple[int, int]] = set()
    for t1 in triples:
        for t2 in triples:
            if t1 == t2 or t1[1] == t2[1]:
                continue
            if t1[1] < t2[1]:
                if (t1[1], t1[2]) == (t2[0], t2[1]):
                    arcs.add((index[t1], index[t2]))  # forward
                else:
                    arcs.add((index[t2], index[t1]))  # backward
    return GeneratedDigraph(
        build_digraph(len(triples), arcs),
        "ds",
        {"s": s},
        forbidden=("c3_1_2_c3", "c3_1_2_3"),
    )


def gen_chordal_c122(k: int, cap: int = DEFAULT_CAP) -> GeneratedDigraph:
    """Chordal orientation needing exactly k colours while avoiding the
    5-vertex triangle composition with two doubled parts.

    Level k+1 takes a transitive tournament on k+1 vertices and welds a
    copy of level k behind every arc u->v, dominated by v and dominating u.
    """
    if k < 1:
        raise SizeCapExceeded("k must be positive")
    sizes = [1]
    while len(sizes) < k:
        p = len(sizes) + 1
        sizes.append(p + (p * (p - 1) // 2) * sizes[-1])
        if sizes[-1] > cap:
            raise SizeCapExceeded(f"level size exceeds cap {cap}")
    arcs: set[tuple[int, int]] = set()
    n = _build_c122(k, 0, arcs)
    return GeneratedDigraph(
        build_digraph(n, arcs),
        "c122",
        {"k": k},
        claimed_chi=k,
        forbidden=("c3_1_2_2",),
    )


def _build_c122(k: int, base: int, arcs: set[tuple[int, int]]) -> int:
    if k == 1:
        return 1
    t = k  # transitive tournament on k vertices at base..base+k-1
    for i in range(t):
        for j in range(i + 1, t):
            arcs.add((base + i, base + j))
    nxt = base + t
    for i in range(t):
        for j in range(i + 1, t):
            size = _build_c122(k - 1, nxt, arcs)
            for y in range(nxt, nxt + size):
                arcs.add((base + j, y))
                arcs.add((y, base + i))
            nxt += size
    return nxt - base


def transitive_subsets(d: Digraph) -> list[tuple[int, ...]]:
    """All non-empty vertex subsets inducing a transitive tournament.

    DFS over increasing vertex indices, extending only with vertices
    adjacent to every member and keeping the set acyclic.
    """
    out: list[tuple[int, ...]] = []

    def closed(s: tuple[int, ...], v: int) -> bool:
        for u in s:
            if (u, v) not in d.arcs and (v, u) not in d.arcs:
                return False
        return _acyclic_subset(d, s + (v,))

    def extend(s: tuple[int, ...], start: int):
        out.append(s)
        for v in range(start, d.n):
            if closed(s, v):
                extend(s + (v,), v + 1)

    for v in range(d.n):
        extend((v,), v + 1)
    return out


def _acyclic_subset(d: Digraph, s: tuple[int, ...]) -> bool:
    inside = set(s)
    indeg = {v: len(d.in_sets[v] & inside) for v in s}
    ready = [v for v in s if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in d.out_sets[v]:
            if w in inside:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
    return seen == len(s)


def gen_chordal_hero_free(k: int, cap: int = 200_000) -> GeneratedDigraph:
    """Chordal orientation needing exactly k colours while avoiding the
    triangle-dominating-a-vertex pattern.

    Builds the rainbow amplifier F(G) of the previous level (one copy of G
    dominated by each transitive subtournament at every stage), then welds
    copies and apex vertices over all pairs of transitive subtournaments.
    Doubly exponential; refuses past the cap rather than sampling.
    """
    if k < 1:
        raise SizeCapExceeded("k must be positive")
    g = build_digraph(1, [])
    for level in range(2, k + 1):
        f = _rainbow_amplifier(g, level - 1, cap)
        g = _weld_hero_free(f, g, cap)
    return GeneratedDigraph(
        g, "herofree", {"k": k}, claimed_chi=k, forbidden=("c3_to_k1",)
    )


def _rainbow_amplifier(g: Digraph, chi: int, cap: int) -> Digraph:
    """After chi-1 amplification stages, every optimal colouring of the
    result contains a rainbow transitive tournament of order chi: stage i
    welds one dominated copy of g behind every transitive tournament of
    exactly i vertices."""
    f = g
    for i in range(1, chi):
        subs = [s for s in transitive_subsets(f) if len(s) == i]
        stage_new = sum(g.n for _ in subs)
        if f.n + stage_new > cap:
            raise SizeCapExceeded("amplifier exceeds cap")
        arcs = set(f.arcs)
        nxt = f.n
        for s in subs:
            for a, b in g.arcs:
                arcs.add((nxt + a, nxt + b))
            for x in s:
                for y in range(nxt, nxt + g.n):
                    arcs.add((x, y))
            nxt += g.n
        f = build_digraph(nxt, arcs)
    return f


def _weld_hero_free(f: Digraph, g_prev: Digraph, cap: int) -> Digraph:
    subs_f = transitive_subsets(f)
    arcs = set(f.arcs)
    nxt = f.n
    for t in subs_f:
        copy_base = nxt
        if nxt + f.n > cap:
            raise SizeCapExceeded("weld exceeds cap")
        for a, b in f.arcs:
            arcs.add((copy_base + a, copy_base + b))
        for x in t:
            for y in range(copy_base, copy_base + f.n):
                arcs.add((x, y))
        nxt += f.n
        copy_subs = transitive_subsets(f)
        if nxt + len(copy_subs) > cap:
            raise SizeCapExceeded("weld exceeds cap")
        for t2 in copy_subs:
            apex = nxt
            nxt += 1
            for y in t2:
                arcs.add((copy_base + y, apex))
            for x in t:
                arcs.add((apex, x))
    return build_digraph(nxt, arcs)


@dataclass(frozen=True)
class PatternEmbedding:
    """Injective pattern -> host assignment preserving exact adjacency."""

    mapping: tuple[int, ...]

    def verify(self, host: Digraph, pattern: Digraph) -> bool:
        m = self.mapping
        if len(set(m)) != len(m) or len(m) != pattern.n:
            return False
        for a in range(pattern.n):
            for b in range(pattern.n):
                if a == b:
                    continue
                if ((a, b) in pattern.arcs) != ((m[a], m[b]) in host.arcs):
                    return False
        return True


def contains_induced(
    host: Digraph, pattern: Digraph, budget: int | None = 5_000_000
) -> PatternEmbedding | None:
    """Backtracking induced-subdigraph search.

    Pattern vertices are assigned in natural order with ascending host
    candidates, so a found embedding is the lexicographically first one;
    None certifies absence.  Degree bounds prune candidates.
    """
    if pattern.n > host.n:
        return None
    nodes = 0
    mapping: list[int] = []
    used: set[int] = set()

    def compatible(pv: int, hv: int) -> bool:
        if host.d_plus(hv) < pattern.d_plus(pv) or host.d_minus(hv) < pattern.d_minus(pv):
            return False
        for pu, hu in enumerate(mapping):
            fwd = (pu, pv) in pattern.arcs
            bwd = (pv, pu) in pattern.arcs
            if fwd != ((hu, hv) in host.arcs):
                return False
            if bwd != ((hv, hu) in host.arcs):
                return False
        return True

    def search(pv: int) -> bool:
        nonlocal nodes
        if pv == pattern.n:
            return True
        for hv in range(host.n):
            if hv in used:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(0, None, "pattern search budget")
            if compatible(pv, hv):
                mapping.append(hv)
                used.add(hv)
                if search(pv + 1):
                    return True
                used.remove(hv)
                mapping.pop()
        return False

    if search(0):
        return PatternEmbedding(tuple(mapping))
    return None


def _c3_to_k1() -> Digraph:
    return compose_domination(dicycle(3), transitive_tournament(1))


def _k1_to_c3() -> Digraph:
    return compose_domination(transitive_tournament(1), dicycle(3))


PATTERNS = {
    "c3": lambda: dicycle(3),
    "tt3": lambda: transitive_tournament(3),
    "c3_1_2_2": lambda: circ3(1, 2, 2),
    "c3_1_2_3": lambda: circ3(1, 2, 3),
    "c3_1_2_c3": lambda: circ3(1, 2, dicycle(3)),
    "c3_1_1_2": lambda: circ3(1, 1, 2),
    "c3_to_k1": _c3_to_k1,
    "k1_to_c3": _k1_to_c3,
}


def pattern(name: str) -> Digraph:
    try:
        return PATTERNS[name]()
    except KeyError:
        raise BadVertex(f"unknown pattern {name!r}") from None


def verify_generated(gen: GeneratedDigraph, budget: int | None = None) -> dict:
    """Opt-in self-check of a generator's claims (exponential routines)."""
    from .colouring import exact_dichromatic

    report: dict = {"name": gen.name, "params": gen.params}
    if gen.claimed_chi is not None:
        value = exact_dichromatic(gen.digraph, budget=budget).value
        report["chi"] = value
        report["chi_ok"] = value == gen.claimed_chi
    freeness = {}
    for pname in gen.forbidden:
        emb = contains_induced(gen.digraph, pattern(pname), budget=budget)
        freeness[pname] = emb is None
    if freeness:
        report["free"] = freeness
        report["free_ok"] = all(freeness.values())
    return report
