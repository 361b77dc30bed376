"""Batch front door: parse graph files, dispatch commands, emit JSON
reports with certificates.

Graph files are whitespace-delimited and 0-indexed; comment lines start
with '#'.  A digraph file is a ``digraph n`` header followed by ``u v``
arc lines; a multigraph file is a ``multigraph n`` header followed by
``u v`` edge lines whose repetitions accumulate multiplicity.

Every numeric claim in a report ships a certificate that the matching
verify operation accepts (the CLI re-verifies before emitting).  Exit
codes: 0 ok, 1 verdict-false (extremal/free), 2 error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import brooks as brooks_mod
from . import colouring as col_mod
from . import defective as def_mod
from . import extremal as ext_mod
from . import heroes as hero_mod
from . import localstruct as loc_mod
from .core import Digraph, Multigraph, build_digraph, build_multigraph
from .errors import (
    DichromaError,
    DuplicateArc,
    FileSemanticError,
    FileSyntaxError,
    LoopArc,
    UsageError,
)
from .families import shannon_multigraph


def parse_digraph_file(text: str) -> Digraph:
    header, rows = _parse_rows(text)
    kind, n = header
    if kind != "digraph":
        raise FileSyntaxError(f"expected 'digraph' header, got {kind!r}", 1)
    arcs = []
    for line_no, (u, v) in rows:
        arcs.append((u, v))
    try:
        return build_digraph(n, arcs)
    except (LoopArc, DuplicateArc) as exc:
        offender = _find_offender(rows, arcs_seen=True)
        raise FileSemanticError(str(exc), offender) from exc
    except DichromaError as exc:
        raise FileSemanticError(str(exc), rows[0][0] if rows else 1) from exc


def parse_multigraph_file(text: str) -> Multigraph:
    header, rows = _parse_rows(text)
    kind, n = header
    if kind != "multigraph":
        raise FileSyntaxError(f"expected 'multigraph' header, got {kind!r}", 1)
    try:
        return build_multigraph(n, [e for _, e in rows])
    except DichromaError as exc:
        raise FileSemanticError(str(exc), rows[0][0] if rows else 1) from exc


def _parse_rows(text: str):
    header = None
    rows: list[tuple[int, tuple[int, int]]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if header is None:
            if len(toks) != 2:
                raise FileSyntaxError("header must be '<kind> <n>'", line_no)
            try:
                n = int(toks[1])
            except ValueError:
                raise FileSyntaxError("vertex count is not an integer", line_no, len(toks[0]) + 2)
            header = (toks[0], n)
            continue
        if len(toks) != 2:
            raise FileSyntaxError("expected two endpoints", line_no)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise FileSyntaxError("endpoints are not integers", line_no)
        rows.append((line_no, (u, v)))
    if header is None:
        raise FileSyntaxError("empty file", 1)
    return header, rows


def _find_offender(rows, arcs_seen: bool) -> int:
    seen = set()
    for line_no, (u, v) in rows:
        if u == v or (u, v) in seen:
            return line_no
        seen.add((u, v))
    return rows[0][0] if rows else 1


def format_digraph(d: Digraph) -> str:
    lines = [f"digraph {d.n}"]
    lines += [f"{u} {v}" for u, v in d.sorted_arcs()]
    return "\n".join(lines) + "\n"


def format_multigraph(g: Multigraph) -> str:
    lines = [f"multigraph {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _load(path: str):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str):
    text = _load(path)
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            kind = line.split()[0]
            break
    else:
        raise FileSyntaxError("empty file", 1)
    if kind == "digraph":
        return parse_digraph_file(text), text
    if kind == "multigraph":
        return parse_multigraph_file(text), text
    raise FileSyntaxError(f"unknown header {kind!r}", 1)


def _need_digraph(g, path):
    if not isinstance(g, Digraph):
        raise UsageError(f"{path} is not a digraph file")
    return g


def _need_multigraph(g, path):
    if not isinstance(g, Multigraph):
        raise UsageError(f"{path} is not a multigraph file")
    return g


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dichroma", description=__doc__)
    p.add_argument("--budget", type=int, default=None, help="search node budget")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled bounds")
    p.add_argument("--json", action="store_true", help="machine output (always on)")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("chi", help="exact dichromatic number")
    sp.add_argument("file")

    sp = sub.add_parser("verify", help="verify a dicolouring or edge colouring")
    sp.add_argument("file")
    sp.add_argument("--colours", required=True, help="comma list, one per vertex/edge")
    sp.add_argument("--d", type=int, default=None, help="defect (multigraph files)")

    sp = sub.add_parser("brooks", help="tight-case classification and colouring")
    sp.add_argument("file")

    sp = sub.add_parser("lambda", help="local arc-connectivity profile")
    sp.add_argument("file")

    sp = sub.add_parser("extremal", help="recognize chi = lambda + 1 = k + 1")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, required=True)

    sp = sub.add_parser("gen", help="emit a generated graph")
    sp.add_argument("name", choices=["fk", "ds", "c122", "herofree", "wheel", "shannon"])
    sp.add_argument("--l", type=int, default=3)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--s", type=int, default=5)
    sp.add_argument("--children", default=None, help="JSON children lists for wheel")
    sp.add_argument("--verify", action="store_true", help="re-check the claims")

    sp = sub.add_parser("free", help="is the host free of an induced pattern?")
    sp.add_argument("file")
    sp.add_argument("--pattern", default=None, help="pattern digraph file")
    sp.add_argument("--pattern-name", default=None, help=f"one of {sorted(hero_mod.PATTERNS)}")

    sp = sub.add_parser("round", help="in-round cyclic order or refutation")
    sp.add_argument("file")

    sp = sub.add_parser("hubs", help="maximal-hub decomposition")
    sp.add_argument("file")

    sp = sub.add_parser("dicolour2", help="2-dicolouring with a monochromatic tournament")
    sp.add_argument("file")
    sp.add_argument("--tt", default="", help="comma list of prescribed vertices")

    sp = sub.add_parser("structure", help="locally semicomplete three-case structure")
    sp.add_argument("file")

    sp = sub.add_parser("king", help="least 2-king")
    sp.add_argument("file")

    sp = sub.add_parser("defective", help="defective edge colouring")
    sp.add_argument("file")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--exact", action="store_true")
    sp.add_argument("--simple", action="store_true", help="use the simple-graph route")

    sp = sub.add_parser("gadget", help="hardness gadgets")
    sp.add_argument("kind", choices=["deltamin", "defective"])
    sp.add_argument("file")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, default=3)
    return p


def run_command(argv: list[str]) -> tuple[dict, int]:
    """Execute a command line; returns (report, exit code)."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        raise UsageError("bad usage") from exc
    if ns.budget is None:
        env = os.environ.get("DICHROMA_BUDGET")
        ns.budget = int(env) if env else None
    t0 = time.monotonic()
    report, code = _dispatch(ns)
    report["command"] = ns.command
    report["wall_ms"] = round((time.monotonic() - t0) * 1000, 3)
    return report, code


def _dispatch(ns) -> tuple[dict, int]:
    cmd = ns.command
    if cmd == "chi":
        g, text = _load_graph(ns.file)
        d = _need_digraph(g, ns.file)
        try:
            res = col_mod.exact_dichromatic(d, budget=ns.budget)
        except col_mod.BudgetExceeded as exc:
            return {"digest": _digest(text), "bounds": [exc.lower, exc.upper]}, 0
        assert col_mod.verify_dicolouring(d, res.colouring).valid
        return (
            {
                "digest": _digest(text),
                "chi": res.value,
                "colouring": list(res.colouring.colours),
            },
            0,
        )
    if cmd == "verify":
        g, text = _load_graph(ns.file)
        cols = [int(x) for x in ns.colours.split(",") if x != ""]
        if isinstance(g, Multigraph):
            if ns.d is None:
                raise UsageError("--d is required for multigraph files")
            res = def_mod.verify_edge_colouring(
                g, def_mod.EdgeColouring(tuple(cols), max(cols, default=0)), ns.d
            )
            rep = {"digest": _digest(text), "valid": res.valid}
            if not res.valid:
                rep["witness"] = {
                    "vertex": res.vertex,
                    "colour": res.colour,
                    "count": res.count,
                }
            return rep, 0
        res = col_mod.verify_dicolouring(
            g, col_mod.Dicolouring(tuple(cols), max(cols, default=0))
        )
        rep = {"digest": _digest(text), "valid": res.valid}
        if not res.valid:
            rep["witness"] = {
                "cycle": list(res.witness_cycle),
                "colour": res.witness_colour,
            }
        return rep, 0
    if cmd == "brooks":
        g, text = _load_graph(ns.file)
        d = _need_digraph(g, ns.file)
        verdict = brooks_mod.classify_brooks(d)
        colouring = brooks_mod.brooks_colour(d)
        assert col_mod.verify_dicolouring(d, colouring).valid
        return (
            {
                "digest": _digest(text),
                "delta_max": verdict.delta_max,
                "tight": verdict.tight,
                "components": [
                    {
                        "vertices": sorted(c.vertices),
                        "delta_max": c.delta_max,
                        "exception": c.exception,
                    }
                    for c in verdict.components
                ],
                "colouring": list(colouring.colours),
                "colours_used": colouring.k,
            },
            0,
        )
    if cmd == "lambda":
        g, text = _load_graph(ns.file)
        d = _need_digraph(g, ns.file)
        prof = ext_mod.lambda_profile(d)
        pair = prof.argmax()
        rep = {"digest": _digest(text), "lambda": prof.value}
        if pair is not None:
            x, rest = prof.cuts[pair]
            crossing = sum(1 for a, b in d.arcs if a in x and b in rest)
            assert crossing == prof.values[pair]
            rep["argmax"] = list(pair)
            rep["dicut_side"] = sorted(x)
        return rep, 0
    if cmd == "extremal":
        g, text = _load_graph(ns.file)
        d = _need_digraph(g, ns.file)
        res = ext_mod.recognize_k_extremal(d, ns.k, budget=ns.budget)
        rep: dict = {"digest": _digest(text), "extremal": res.extremal, "k": ns.k}
        if res.certificate is not None:
            assert res.certificate.replay_arcs() == d.arcs
            rep["certificate"] = ext_mod.certificate_to_dict(res.certificate)
        if res.reason:
            rep["reason"] = res.reason
        return rep, 0 if res.extremal else 1
    if cmd == "gen":
        return _gen(ns)
    if cmd == "free":
        host, text = _load_graph(ns.file)
        d = _need_digraph(host, ns.file)
        if ns.pattern_name:
            pat = hero_mod.pattern(ns.pattern_name)
        elif ns.pattern:
            pg, _ = _load_graph(ns.pattern)
            pat = _need_digraph(pg, ns.pattern)
        else:
            raise UsageError("need --pattern FILE or --pattern-name NAME")
        emb = hero_mod.contains_induced(d, pat, budget=ns.budget)
        rep = {"digest": _digest(text), "free": emb is None}
        if emb is not None:
            assert emb.verify(d, pat)
            rep["embedding"] = list(emb.mapping)
        return rep, 0 if emb is None else 1
    if cmd == "round":
        g, text = _load_graph(ns.file)
        d = _need_digraph(g, ns.file)
        flags = loc_mod.check_local_class(d)
        res = loc_mod.inround_order(d)
        rep = {
            "digest": _digest(text),
            "in_round": res.ok,
            "flags": {
                "locally_out_transitive": flags.locally_out_transitive,
                "locally_semicomplete": flags.locally_semicomplete,
                "in_round_condition": flags.in_round_condition,
                "round_condition": flags.round_condition,
            },
        }
        if res.ok:
            assert loc_mod.satisfies_in_round(d, res.order.order)
            rep["order"] = list(res.order.order)
        else:
            rep["refutation"] = {
                "vertex": res.failing_vertex,
                "condition": res.failing_condition,
            }
        return rep, 0
    if cmd == "hubs":
        g, text = _load_graph(ns.file)
        d = _need_digraph(g, ns.file)
        hp = loc_mod.hub_decomposition(d)
        return (
            {
                "digest": _digest(text),
                "hubs": [sorted(p) for p in hp.parts],
                "quotient_arcs": [list(a) for a in hp.quotient.sorted_arcs()],
                "order": list(hp.order.order),
            },
            0,
        )
    if cmd == "dicolour2":
        g, text = _load_graph(ns.file)
        d = _need_digraph(g, ns.file)
        tt = [int(x) for x in ns.tt.split(",") if x != ""]
        colouring = loc_mod.two_dicolour_lot(d, tt)
        assert col_mod.verify_dicolouring(d, colouring).valid
        assert len({colouring.colours[v] for v in tt}) <= 1
        return (
            {
                "digest": _digest(text),
                "colouring": list(colouring.colours),
                "monochromatic": sorted(tt),
            },
            0,
        )
    if cmd == "structure":
        g, text = _load_graph(ns.file)
        d = _need_digraph(g, ns.file)
        st = loc_mod.semicomplete_structure(d)
        rep = {"digest": _digest(text), "case": st.case}
        if st.case == "UniversalVertex":
            rep["vertex"] = st.universal_vertex
        elif st.case == "RoundBlowup":
            rep["parts"] = [sorted(p) for p in st.parts]
            rep["order"] = list(st.order.order)
        else:
            rep["sets"] = {
                "e": sorted(st.e),
                "f": sorted(st.f),
                "g": sorted(st.g),
                "h": sorted(st.h),
            }
            rep["notes"] = list(st.notes)
        return rep, 0
    if cmd == "king":
        g, text = _load_graph(ns.file)
        d = _need_digraph(g, ns.file)
        king = loc_mod.find_2king(d)
        return {"digest": _digest(text), "king": king}, 0
    if cmd == "defective":
        g, text = _load_graph(ns.file)
        mg = _need_multigraph(g, ns.file)
        if ns.exact:
            value, colouring = def_mod.exact_defective_index(mg, ns.d, budget=ns.budget)
        else:
            colouring = def_mod.defective_colour(mg, ns.d, simple_hint=ns.simple)
            value = colouring.k
        assert def_mod.verify_edge_colouring(mg, colouring, ns.d).valid
        return (
            {
                "digest": _digest(text),
                "colours": value,
                "exact": bool(ns.exact),
                "colouring": list(colouring.colours),
            },
            0,
        )
    if cmd == "gadget":
        g, text = _load_graph(ns.file)
        if ns.kind == "deltamin":
            d = _need_digraph(g, ns.file)
            out = brooks_mod.deltamin_gadget(d, ns.k)
            return (
                {
                    "digest": _digest(text),
                    "n": out.n,
                    "graph": format_digraph(out),
                },
                0,
            )
        mg = _need_multigraph(g, ns.file)
        gad = def_mod.np_gadget_defective(mg, ns.k, ns.d)
        return (
            {
                "digest": _digest(text),
                "n": gad.graph.n,
                "edges": gad.graph.m(),
                "graph": format_multigraph(gad.graph),
            },
            0,
        )
    raise UsageError(f"unknown command {cmd!r}")


def _gen(ns) -> tuple[dict, int]:
    name = ns.name
    if name == "shannon":
        g = shannon_multigraph(ns.k)
        return {"graph": format_multigraph(g), "n": g.n, "edges": g.m()}, 0
    if name == "wheel":
        if not ns.children:
            raise UsageError("wheel needs --children JSON")
        children = json.loads(ns.children)
        d = ext_mod.generalized_wheel(children)
        return {"graph": format_digraph(d), "n": d.n}, 0
    if name == "fk":
        gen = hero_mod.gen_fk(ns.l, ns.k)
    elif name == "ds":
        gen = hero_mod.gen_ds(ns.s)
    elif name == "c122":
        gen = hero_mod.gen_chordal_c122(ns.k)
    elif name == "herofree":
        gen = hero_mod.gen_chordal_hero_free(ns.k)
    else:
        raise UsageError(f"unknown generator {name!r}")
    rep = {
        "graph": format_digraph(gen.digraph),
        "n": gen.digraph.n,
        "params": gen.params,
        "claimed_chi": gen.claimed_chi,
        "forbidden": list(gen.forbidden),
    }
    if ns.verify:
        rep["verification"] = hero_mod.verify_generated(gen, budget=ns.budget)
    return rep, 0


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        report, code = run_command(argv)
    except DichromaError as exc:
        print(
            json.dumps(
                {"error": {"type": type(exc).__name__, "message": str(exc)}},
                sort_keys=True,
            )
        )
        return 2
    print(json.dumps(report, sort_keys=True))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
