"""Proper edge colouring of simple graphs with max-degree + 1 colours,
by fan rotation and alternating-path inversion."""

from __future__ import annotations

from .core import Multigraph
from .errors import InvalidInput


def vizing_colour(g: Multigraph) -> list[int]:
    """Proper colour assignment per edge instance with <= delta + 1
    colours.  Simple graphs only.

    Each edge is coloured by building a maximal fan around one endpoint;
    when the fan's last free colour is taken at the centre, the maximal
    alternating path of that colour and a centre-free colour is inverted,
    after which some fan prefix rotates.
    """
    if not g.is_simple:
        raise InvalidInput("proper edge colouring engine needs a simple graph")
    kk = g.delta + 1
    colour = [0] * g.m()
    at: list[dict[int, int]] = [dict() for _ in range(g.n)]  # at[v][c] = edge

    def other(ei: int, v: int) -> int:
        a, b = g.edges[ei]
        return b if a == v else a

    def free(v: int) -> int:
        for c in range(1, kk + 1):
            if c not in at[v]:
                return c
        raise InvalidInput("no free colour available; engine bug")

    def set_colour(ei: int, c: int):
        a, b = g.edges[ei]
        old = colour[ei]
        if old:
            del at[a][old]
            del at[b][old]
        colour[ei] = c
        if c:
            at[a][c] = ei
            at[b][c] = ei

    def invert_path(start: int, c1: int, c2: int):
        """Flip the maximal path from `start` alternating c1 then c2.

        Clears the whole path before recolouring: a sequential flip would
        momentarily duplicate a colour at the shared vertices.
        """
        v = start
        want = c1
        path = []
        while want in at[v]:
            ei = at[v][want]
            path.append(ei)
            v = other(ei, v)
            want = c2 if want == c1 else c1
        flipped = [c2 if colour[ei] == c1 else c1 for ei in path]
        for ei in path:
            set_colour(ei, 0)
        for ei, c in zip(path, flipped):
            set_colour(ei, c)

    def rotate_prefix(fe: list[int], idx: int, final: int):
        for i in range(idx):
            nxt = colour[fe[i + 1]]
            set_colour(fe[i + 1], 0)
            set_colour(fe[i], nxt)
        set_colour(fe[idx], final)

    for ei in range(g.m()):
        u, v0 = g.edges[ei]
        fan = [v0]
        fe = [ei]
        while True:
            dcol = free(fan[-1])
            if dcol not in at[u]:
                break
            e2 = at[u][dcol]
            w = other(e2, u)
            if w in fan:
                break
            fan.append(w)
            fe.append(e2)
        if dcol not in at[u]:
            rotate_prefix(fe, len(fe) - 1, dcol)
            continue
        ccol = free(u)
        invert_path(u, dcol, ccol)
        # dcol is now free at u; rotate the first fan prefix that is still
        # consistent and whose end vertex has dcol free
        done = False
        for idx in range(len(fan) - 1, -1, -1):
            wv = fan[idx]
            if dcol in at[wv]:
                continue
            ok = True
            for i in range(idx):
                if colour[fe[i + 1]] in at[fan[i]]:
                    ok = False
                    break
            if ok:
                rotate_prefix(fe, idx, dcol)
                done = True
                break
        if not done:
            raise InvalidInput("fan recolouring found no rotation; engine bug")
    return colour
