"""Exhaustive small-graph enumeration up to isomorphism.

Digraphs are encoded as arc bitmasks over the ordered pairs of 0..n-1.
Level n is generated from the canonical representatives of level n-1 by
attaching one new vertex in every possible way and keeping the
lexicographic minimum over all vertex permutations (computed vectorized
with numpy).  Both checked families here are closed under vertex deletion,
so the augmentation reaches every isomorphism class.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from dichroma.core import Digraph


def pair_index(n: int) -> dict[tuple[int, int], int]:
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    return {p: q for q, p in enumerate(pairs)}


def mask_to_digraph(n: int, mask: int) -> Digraph:
    idx = pair_index(n)
    arcs = frozenset(p for p, q in idx.items() if (mask >> q) & 1)
    return Digraph(n, arcs)


def digraph_to_mask(d: Digraph) -> int:
    idx = pair_index(d.n)
    m = 0
    for a in d.arcs:
        m |= 1 << idx[a]
    return m


def _perm_tables(n: int):
    """For each permutation: (source bit, target bit) pair arrays."""
    idx = pair_index(n)
    tables = []
    for perm in itertools.permutations(range(n)):
        src = []
        dst = []
        for (i, j), q in idx.items():
            src.append(q)
            dst.append(idx[(perm[i], perm[j])])
        tables.append((np.array(src), np.array(dst)))
    return tables


def _canonical_min(n: int, masks: np.ndarray) -> np.ndarray:
    """Lexicographic-minimum arc mask over all vertex permutations."""
    best = masks.copy()
    for src, dst in _perm_tables(n):
        out = np.zeros_like(masks)
        for s, t in zip(src, dst):
            out |= ((masks >> np.uint64(s)) & np.uint64(1)) << np.uint64(t)
        np.minimum(best, out, out=best)
    return best


@lru_cache(maxsize=None)
def digraph_reps(n: int) -> tuple[int, ...]:
    """Canonical arc masks of all digraphs on n vertices, up to iso."""
    return _reps(n, oriented=False)


@lru_cache(maxsize=None)
def oriented_reps(n: int) -> tuple[int, ...]:
    """Canonical arc masks of all oriented graphs on n vertices, up to iso."""
    return _reps(n, oriented=True)


def _reps(n: int, oriented: bool) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    prev = _reps(n - 1, oriented)
    # embed an (n-1)-vertex mask into the n-vertex pair indexing
    idx_small = pair_index(n - 1)
    idx_big = pair_index(n)
    lift_src = np.array([q for (_, q) in sorted(idx_small.items(), key=lambda kv: kv[1])])
    lift_dst = np.array(
        [idx_big[p] for (p, _) in sorted(idx_small.items(), key=lambda kv: kv[1])]
    )
    base = np.array(prev, dtype=np.uint64)
    lifted = np.zeros_like(base)
    for s, t in zip(lift_src, lift_dst):
        lifted |= ((base >> np.uint64(s)) & np.uint64(1)) << np.uint64(t)
    # attachment patterns for the new vertex v = n-1
    out_bits = [idx_big[(n - 1, j)] for j in range(n - 1)]
    in_bits = [idx_big[(j, n - 1)] for j in range(n - 1)]
    attach_masks = []
    if oriented:
        for pattern in itertools.product((0, 1, 2), repeat=n - 1):
            m = 0
            for j, p in enumerate(pattern):
                if p == 1:
                    m |= 1 << out_bits[j]
                elif p == 2:
                    m |= 1 << in_bits[j]
            attach_masks.append(m)
    else:
        for pattern in itertools.product((0, 1, 2, 3), repeat=n - 1):
            m = 0
            for j, p in enumerate(pattern):
                if p & 1:
                    m |= 1 << out_bits[j]
                if p & 2:
                    m |= 1 << in_bits[j]
            attach_masks.append(m)
    attach = np.array(attach_masks, dtype=np.uint64)
    cands = (lifted[:, None] | attach[None, :]).reshape(-1)
    cands = np.unique(cands)
    reps = np.unique(_canonical_min(n, cands))
    return tuple(int(x) for x in reps)


def connected_digraphs_upto(n_max: int):
    """Digraph representatives with 1..n_max vertices, weakly connected."""
    for n in range(1, n_max + 1):
        for mask in digraph_reps(n):
            d = mask_to_digraph(n, mask)
            if d.is_connected:
                yield d


def strong_oriented_upto(n_max: int):
    """Oriented-graph representatives with 1..n_max vertices, strong."""
    for n in range(1, n_max + 1):
        for mask in oriented_reps(n):
            d = mask_to_digraph(n, mask)
            if d.is_strong:
                yield d


def all_labelled_digraphs(n: int):
    """Every labelled digraph on n vertices (loops excluded)."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for mask in range(1 << len(pairs)):
        arcs = frozenset(p for q, p in enumerate(pairs) if (mask >> q) & 1)
        yield Digraph(n, arcs)
