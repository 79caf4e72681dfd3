"""Decomposition-based recognition of width-2 connected monotone search.

The fast paths assemble a width-2 certificate from per-piece solver
calls: either every root component at some vertex is a fan (the whole
graph is searched out of that vertex), or the graph decomposes along a
spine of central blocks whose directional labels are consistent, in
which case the per-piece witnesses splice into one glued expansion.
Any structural precondition that fails, any inconsistent label, or any
certificate that does not validate sends the decision to the exact
solver, which is always the authority.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .blocks import Block, blocks_and_cuts
from .expansions import (
    Expansion,
    InvalidExpansion,
    expansion_cost,
    validate_expansion,
)
from .graphs import (
    Edge,
    Graph,
    RootedGraph,
    doubly_rooted,
    enhance,
    norm_edge,
    rev,
)
from .obstructions import fan_check_solver
from .solvers import cmp_decide


@dataclass(frozen=True)
class SpinePart:
    kind: str  # extremal | fan | central
    rooted: RootedGraph
    gids: tuple[int, ...]  # part vertex -> original vertex


@dataclass(frozen=True)
class SpineStructure:
    central_cuts: tuple[int, ...]
    central_blocks: tuple[Block, ...]
    parts: tuple[SpinePart, ...]  # extremal, F_1, B_1*, ..., F_{r+1}, extremal
    a1: frozenset[int]
    a2: frozenset[int]
    a3: frozenset[int]
    labels: tuple[str, ...]  # one per non-fan part, forward orientation


def root_components(g: Graph, v: int) -> list[tuple[RootedGraph, tuple[int, ...]]]:
    """Each component of g - v together with v, doubly rooted at v."""
    out = []
    allowed = ((1 << g.n) - 1) & ~(1 << v)
    rest = allowed
    while rest:
        w = (rest & -rest).bit_length() - 1
        comp = g.component_mask(w, allowed)
        rest &= ~comp
        vs = sorted([x for x in range(g.n) if comp >> x & 1] + [v])
        sub, idx = g.induced(vs)
        out.append((doubly_rooted(sub, idx[v]), tuple(vs)))
    return out


def spine_degree(g: Graph, v: int) -> int:
    return sum(
        1
        for rg, _ in root_components(g, v)
        if not fan_check_solver(rg.graph, next(iter(rg.s_in)))
    )


def label_block(b_star: RootedGraph) -> str:
    f = cmp_decide(b_star, 2)
    b = cmp_decide(rev(b_star), 2)
    if f and b:
        return "<->"
    if f:
        return "->"
    if b:
        return "<-"
    return "x"


def _part(kind: str, g: Graph, vs: Sequence[int], s_in, s_out) -> SpinePart:
    sub, idx = g.induced(vs)
    return SpinePart(
        kind,
        RootedGraph(
            sub,
            frozenset(idx[v] for v in s_in),
            frozenset(idx[v] for v in s_out),
        ),
        tuple(sorted(set(vs))),
    )


def spine_structure(g: Graph) -> SpineStructure | None:
    """Ordered spine decomposition, or None when a precondition fails."""
    if not g.is_connected() or g.m == 0:
        return None
    degrees = {v: spine_degree(g, v) for v in range(g.n)}
    if any(d > 2 for d in degrees.values()):
        return None
    central = sorted(v for v, d in degrees.items() if d == 2)
    if not central:
        return None
    dec = blocks_and_cuts(g)
    cset = set(central)
    cblocks = [b for b in dec.blocks if len(b.vertices & cset) >= 2]
    if any(len(b.vertices & cset) > 2 for b in cblocks):
        return None
    if len(cblocks) != len(central) - 1:
        return None

    # the central blocks must chain the central cuts into a path
    if len(central) == 1:
        order = [central[0]]
        border: list[Block] = []
    else:
        nbr: dict[int, list[tuple[int, Block]]] = {c: [] for c in central}
        for b in cblocks:
            x, y = sorted(b.vertices & cset)
            nbr[x].append((y, b))
            nbr[y].append((x, b))
        ends = [c for c in central if len(nbr[c]) == 1]
        if len(ends) != 2 or any(len(nbr[c]) > 2 for c in central):
            return None
        order = [min(ends)]
        border = []
        prev = -1
        while len(order) < len(central):
            nxt = [(y, b) for y, b in nbr[order[-1]] if y != prev]
            if len(nxt) != 1:
                return None
            prev = order[-1]
            order.append(nxt[0][0])
            border.append(nxt[0][1])
        if set(order) != cset:
            return None
    r = len(border)
    c_first, c_last = order[0], order[-1]

    def extremal_at(c: int, away_from: int | None) -> tuple[int, ...] | None:
        nonfan = [
            (rg, vs)
            for rg, vs in root_components(g, c)
            if not fan_check_solver(rg.graph, next(iter(rg.s_in)))
        ]
        if len(nonfan) != 2:
            return None
        if away_from is None:
            picks = sorted(vs for _, vs in nonfan)
            return picks[0]
        picks = [vs for _, vs in nonfan if away_from not in vs]
        if len(picks) != 1:
            return None
        return picks[0]

    if r == 0:
        nonfan = [
            vs
            for rg, vs in root_components(g, c_first)
            if not fan_check_solver(rg.graph, next(iter(rg.s_in)))
        ]
        if len(nonfan) != 2:
            return None
        left_vs, right_vs = sorted(nonfan)
    else:
        left_vs = extremal_at(c_first, order[1])
        right_vs = extremal_at(c_last, order[-2])
        if left_vs is None or right_vs is None:
            return None

    # extended central blocks: absorb the single hair at the one
    # non-central cut vertex, when present
    a2: set[int] = set()
    ext_blocks: list[tuple[frozenset[int], frozenset[Edge]]] = []
    for b in border:
        extra_cuts = (b.vertices & dec.cut_vertices) - cset
        if len(extra_cuts) > 1:
            return None
        verts, edges = set(b.vertices), set(b.edges)
        if extra_cuts:
            (w,) = extra_cuts
            if dec.weights.get(w) != "light":
                return None
            hangs = [
                (rg, vs)
                for rg, vs in root_components(g, w)
                if not set(vs) & (b.vertices - {w})
            ]
            if len(hangs) != 1:
                return None
            hrg, hvs = hangs[0]
            if hrg.graph.n != 2 or hrg.graph.m != 1:
                return None
            x = next(v for v in hvs if v != w)
            if g.degree(x) != 1:
                return None
            verts.add(x)
            edges.add(norm_edge(w, x))
            a2.add(w)
        ext_blocks.append((frozenset(verts), frozenset(edges)))

    fans: list[tuple[int, ...]] = []
    for c in order:
        fvs: set[int] = {c}
        for rg, vs in root_components(g, c):
            if fan_check_solver(rg.graph, next(iter(rg.s_in))):
                fvs |= set(vs)
        fans.append(tuple(sorted(fvs)))

    parts: list[SpinePart] = [
        _part("extremal", g, left_vs, [], [c_first])
    ]
    for i, c in enumerate(order):
        parts.append(_part("fan", g, fans[i], [c], [c]))
        if i < r:
            verts, edges = ext_blocks[i]
            parts.append(
                _part("central", g, sorted(verts), [c], [order[i + 1]])
            )
    parts.append(_part("extremal", g, right_vs, [c_last], []))

    # the part edge sets must partition E(g)
    covered: set[Edge] = set()
    total = 0
    for pt in parts:
        pes = {
            norm_edge(pt.gids[u], pt.gids[v]) for u, v in pt.rooted.graph.edges
        }
        total += len(pes)
        covered |= pes
    if total != g.m or covered != set(g.edges):
        return None

    labels = tuple(
        label_block(pt.rooted) for pt in parts if pt.kind != "fan"
    )
    return SpineStructure(
        tuple(order),
        tuple(border),
        tuple(parts),
        frozenset(cset),
        frozenset(a2),
        frozenset(dec.cut_vertices - cset - a2),
        labels,
    )


# ---------------------------------------------------------------------------
# certificate assembly


def _splice(
    glued: RootedGraph,
    parts: Sequence[tuple[RootedGraph, Sequence[int], Expansion]],
) -> Expansion:
    """Concatenate per-part expansions into one over the glued host.

    Later parts' entry edges have no counterpart in the glued host and
    are dropped; the first part's entry edges map onto the glued ones.
    """
    enh_g = enhance(glued)
    first_rg, first_gids, _ = parts[0]
    if frozenset(first_gids[v] for v in first_rg.s_in) != glued.s_in:
        raise InvalidExpansion("first part must carry the glued in-roots")
    sets: list[frozenset[Edge]] = []
    base: frozenset[Edge] = frozenset()
    for pi, (rg, gids, ex) in enumerate(parts):
        enh_p = enhance(rg)

        def gmap(e: Edge) -> Edge | None:
            u, v = e
            out = []
            for x in (u, v):
                if x == enh_p.u_in:
                    if pi != 0:
                        return None
                    out.append(enh_g.u_in)
                elif x == enh_p.u_out:
                    return None
                else:
                    out.append(gids[x])
            return norm_edge(*out)

        for a in ex.sets:
            mapped = {ge for e in a if (ge := gmap(e)) is not None}
            cur = base | mapped
            if not sets or sets[-1] != cur:
                sets.append(frozenset(cur))
        base = sets[-1]
    return Expansion(enh_g.host, tuple(sets))


def _shrink_to_unrooted(g: Graph, rooted_ex: Expansion, e_in: frozenset[Edge]) -> Expansion:
    """Turn an expansion for (g, {v}, {v}) into one for (g, empty, empty)."""
    host = enhance(RootedGraph(g)).host
    sets: list[frozenset[Edge]] = [frozenset()]
    for a in rooted_ex.sets:
        cur = frozenset(e for e in a if e not in e_in)
        if sets[-1] != cur:
            sets.append(cur)
    return Expansion(host, tuple(sets))


def _validated(ex: Expansion, e_in=frozenset(), e_out=frozenset()) -> bool:
    try:
        validate_expansion(ex, e_in, e_out)
    except InvalidExpansion:
        return False
    return expansion_cost(ex) <= 2


def _expansion_json(ex: Expansion) -> list[list[list[int]]]:
    return [sorted([list(e) for e in a]) for a in ex.sets]


def _fan_cover(g: Graph) -> tuple[Expansion, int] | None:
    for v in range(g.n):
        comps = root_components(g, v)
        wits = []
        for rg, vs in comps:
            ok, wit = cmp_decide(rg, 2, witness=True)
            if not ok:
                wits = None
                break
            wits.append((rg, vs, wit))
        if wits is None:
            continue
        glued = doubly_rooted(g, v)
        try:
            ex = _splice(glued, wits)
            enh = enhance(glued)
            if not _validated(ex, enh.e_in, enh.e_out):
                continue
            shrunk = _shrink_to_unrooted(g, ex, enh.e_in)
            if _validated(shrunk):
                return shrunk, v
        except InvalidExpansion:
            continue
    return None


def _spine_certificate(g: Graph, st: SpineStructure) -> Expansion | None:
    if "x" in st.labels:
        return None
    if "->" in st.labels and "<-" in st.labels:
        return None
    forward = "<-" not in st.labels
    seq = st.parts if forward else tuple(
        SpinePart(pt.kind, rev(pt.rooted), pt.gids) for pt in reversed(st.parts)
    )
    wits = []
    for pt in seq:
        ok, wit = cmp_decide(pt.rooted, 2, witness=True)
        if not ok:
            return None
        wits.append((pt.rooted, pt.gids, wit))
    try:
        ex = _splice(RootedGraph(g), wits)
    except InvalidExpansion:
        return None
    return ex if _validated(ex) else None


def decide_cmms_le_2(g: Graph) -> tuple[bool, dict]:
    """Is g searchable by 2 connected monotone searchers, with certificate."""
    if not g.is_connected():
        raise ValueError("recognizer requires a connected graph")
    if g.m == 0:
        return True, {"method": "trivial", "value_le_2": True}
    fc = _fan_cover(g)
    if fc is not None:
        ex, v = fc
        return True, {
            "method": "fan-cover",
            "anchor": v,
            "value_le_2": True,
            "expansion": _expansion_json(ex),
        }
    st = spine_structure(g)
    if st is not None:
        ex = _spine_certificate(g, st)
        if ex is not None:
            return True, {
                "method": "spine",
                "central_cuts": list(st.central_cuts),
                "labels": list(st.labels),
                "value_le_2": True,
                "expansion": _expansion_json(ex),
            }
    ok, wit = cmp_decide(RootedGraph(g), 2, witness=True)
    cert: dict = {"method": "solver", "value_le_2": ok}
    if ok:
        cert["expansion"] = _expansion_json(wit)
    return ok, cert
