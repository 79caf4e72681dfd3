"""Exact search-number solvers.

Two engines, kept deliberately independent so they can cross-check
each other:

* cmp/mp: breadth-first search over clean edge sets of the enhanced
  host.  A transition is one game move: a searcher lands on a vertex
  (by placement or slide) and cleans every contaminated edge running
  from it to an occupied vertex, plus the sliding edge.  Between moves
  searchers stand exactly on the boundary of the clean set, so the
  width of a transition is the boundary size plus the extra vertices
  that the move needs occupied.
* the game solver: state space over (clean edge set, searcher set)
  with the simulator's closure semantics; flags select the monotone
  and connected variants, optional constraints support the
  trunk-first / trunk-last / guarded-vertex checks.

Rooted instances start mid-game: the root edges E_in and the edges
inside S_in count as already clean and S_in carries searchers, so the
width of a rooted solve is never below |S_in|.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any

from .expansions import Expansion
from .graphs import Edge, Graph, RootedGraph, enhance
from .simulate import HostCtx, Move


class BudgetExceeded(Exception):
    pass


@dataclass
class SolveResult:
    value: int
    witness: Any = None
    stats: dict = field(default_factory=dict)


def _check_s_in(rg: RootedGraph) -> None:
    if rg.s_in:
        g = rg.graph
        sub, _ = g.induced(sorted(rg.s_in))
        if not sub.is_connected():
            raise ValueError("s_in must induce a connected subgraph")


class _ExpCtx:
    def __init__(self, rg: RootedGraph):
        self.enh = enhance(rg)
        self.ctx = HostCtx(self.enh.host)
        ctx = self.ctx
        self.e_in = ctx.emask(self.enh.e_in)
        self.e_out = ctx.emask(self.enh.e_out)
        self.target = ctx.full & ~self.e_out
        internal = 0
        for i, (u, v) in enumerate(ctx.edges):
            if u in rg.s_in and v in rg.s_in:
                internal |= 1 << i
        self.internal = internal
        self.start = self.e_in | internal
        self.s_in_size = len(rg.s_in)
        self.apex = (1 << self.enh.u_in) | (1 << self.enh.u_out)

    def bmask(self, a: int) -> int:
        """Vertex mask of the boundary of the clean set a."""
        out = 0
        ctx = self.ctx
        for v in range(self.enh.host.n):
            inc = ctx.inc[v]
            if inc & a and inc & ~a:
                out |= 1 << v
        return out


def _jumps(ec: _ExpCtx, a: int, k: int):
    """One-move transitions from clean set a with at most k searchers.

    Yields (a2, width, landing, slide_source, occupied) for every way a
    single move can advance the clean set: the move lands a searcher on
    v, and cleans the sliding edge plus every dirty edge from v into
    the occupied set.  Occupied = boundary guards plus freely chosen
    extra dirty neighbors of v; a dirty edge inside the occupied set
    would have been cleaned earlier, so such sets are inconsistent.
    """
    ctx = ec.ctx
    bnd = ec.bmask(a)
    dirty = ec.target & ~a
    nbase = bnd.bit_count()
    if nbase > k:
        return
    # dirty edges not incident to the landing vertex must not sit inside
    # the occupied set; collect their vertex masks once
    dirty_ev = []
    m = dirty
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        dirty_ev.append((i, ctx.ev[i]))
    for v in range(ec.enh.host.n):
        vb = 1 << v
        if vb & (bnd | ec.apex):
            continue
        vinc = ctx.inc[v] & dirty
        if not vinc:
            continue
        dn = 0  # dirty neighbors of v
        m = vinc
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            dn |= ctx.ev[i] & ~vb
        dn &= ~ec.apex
        pool = dn & ~bnd
        extras = [0]
        mm = pool
        bits = []
        while mm:
            b = mm & -mm
            mm &= mm - 1
            bits.append(b)
        for b in bits:
            extras.extend([e | b for e in extras])
        for s_extra in extras:
            occ = bnd | s_extra
            nocc = occ.bit_count()
            if nocc > k:
                continue
            bad = False
            for i, evm in dirty_ev:
                if evm & vb:
                    continue
                if evm & ~occ == 0:
                    bad = True
                    break
            if bad:
                continue
            cleanable = 0
            m = vinc
            while m:
                i = (m & -m).bit_length() - 1
                m &= m - 1
                if ctx.ev[i] & ~vb & occ:
                    cleanable |= 1 << i
            if cleanable and nocc + 1 <= k:
                yield a | cleanable, nocc + 1, v, None, occ
            wm = occ & dn
            while wm:
                wb = wm & -wm
                wm &= wm - 1
                w = wb.bit_length() - 1
                slide = ctx.eidx[
                    (w, v) if w < v else (v, w)
                ]
                d = 1 << slide
                m = vinc
                while m:
                    i = (m & -m).bit_length() - 1
                    m &= m - 1
                    if ctx.ev[i] & ~vb & occ & ~wb:
                        d |= 1 << i
                a2 = a | d
                if ec.bmask(a2) & wb:
                    continue
                yield a2, nocc, v, w, occ


def _expansion_decide(
    rg: RootedGraph, k: int, connected: bool, witness: bool
) -> tuple[bool, Expansion | None, int]:
    ec = _ExpCtx(rg)
    ctx = ec.ctx
    if ec.s_in_size > k:
        return False, None, 0
    start = ec.start
    if ec.bmask(start).bit_count() > k:
        return False, None, 0
    parent: dict[int, tuple[int, int]] = {start: (-1, -1)}
    queue = deque([start])
    explored = 0
    while queue:
        a = queue.popleft()
        explored += 1
        if a == ec.target:
            if not witness:
                return True, None, explored
            return True, _reconstruct(ec, parent, a), explored
        for a2, _w, _v, _src, _occ in _jumps(ec, a, k):
            if a2 in parent:
                continue
            if ec.bmask(a2).bit_count() > k:
                continue
            if connected and not ctx.edges_connected(a2):
                continue
            parent[a2] = (a, a2 & ~a)
            queue.append(a2)
    return False, None, explored


def _reconstruct(ec: _ExpCtx, parent: dict, last: int) -> Expansion:
    """Edge-at-a-time expansion from the chunked search path.

    The first set is E_in; the edges inside S_in follow one at a time,
    then every chunk in cleaning order, each chunk opened by an edge
    touching the part already laid out so prefixes stay connected.
    """
    ctx = ec.ctx
    chunks: list[int] = []
    cur = last
    while parent[cur][0] != -1:
        prev, arrived = parent[cur]
        chunks.append(arrived)
        cur = prev
    chunks.reverse()
    order: list[int] = []
    m = ec.internal
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        order.append(i)
    covered = 0
    mm = ec.start
    while mm:
        i = (mm & -mm).bit_length() - 1
        mm &= mm - 1
        covered |= ctx.ev[i]
    for chunk in chunks:
        items = []
        m = chunk
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            items.append(i)
        while items:
            pick = next((i for i in items if ctx.ev[i] & covered), items[0])
            items.remove(pick)
            order.append(pick)
            covered |= ctx.ev[pick]
    sets = [ctx.eset(ec.e_in)]
    acc = ec.e_in
    for i in order:
        acc |= 1 << i
        sets.append(ctx.eset(acc))
    return Expansion(ec.enh.host, tuple(sets))


def cmp_decide(rg: RootedGraph, k: int, witness: bool = False):
    _check_s_in(rg)
    ok, wit, _ = _expansion_decide(rg, k, connected=True, witness=witness)
    return (ok, wit) if witness else ok


def mp_decide(rg: RootedGraph, k: int, witness: bool = False):
    ok, wit, _ = _expansion_decide(rg, k, connected=False, witness=witness)
    return (ok, wit) if witness else ok


def _expansion_value(rg: RootedGraph, connected: bool, witness: bool) -> SolveResult:
    total = 0
    for k in range(rg.graph.n + 2):
        ok, wit, explored = _expansion_decide(rg, k, connected, witness)
        total += explored
        if ok:
            return SolveResult(k, wit, {"states": total})
    raise AssertionError("no expansion found below the trivial bound")


def cmp_value(rg: RootedGraph, witness: bool = False) -> SolveResult:
    _check_s_in(rg)
    return _expansion_value(rg, connected=True, witness=witness)


def mp_value(rg: RootedGraph, witness: bool = False) -> SolveResult:
    return _expansion_value(rg, connected=False, witness=witness)


def cmp_plain(g: Graph) -> int:
    return cmp_value(RootedGraph(g)).value


def mp_plain(g: Graph) -> int:
    """mp of a not necessarily connected graph (components solve separately)."""
    if g.is_connected():
        return mp_value(RootedGraph(g)).value
    best = 0
    for mask in g.components():
        sub, _ = g.induced([v for v in range(g.n) if mask >> v & 1])
        if sub.m:
            best = max(best, mp_value(RootedGraph(sub)).value)
    return best


# ---------------------------------------------------------------------------
# game solver


def solve_game(
    host: Graph,
    k: int,
    *,
    goal: int | None = None,
    connected: bool = False,
    monotone: bool = False,
    forbid: int = 0,
    start_clean: int = 0,
    start_occupied: int = 0,
    guard: int | None = None,
    first_clean: int | None = None,
    last_clean: int | None = None,
    witness: bool = False,
    budget: int | None = None,
) -> tuple[bool, list[Move] | None, int]:
    """Reachability for the mixed search game with at most k searchers.

    start_clean/start_occupied: mid-game initial state (the rooted
    start: E_in plus the edges inside S_in clean, searchers on S_in).
    first_clean: the first nonempty clean set must contain this edge
    mask.  last_clean: this edge mask must stay dirty until the goal is
    hit.  guard: this vertex must carry a searcher from the first move
    on.
    """
    ctx = HostCtx(host)
    if goal is None:
        goal = ctx.full
    if start_occupied.bit_count() > k:
        return False, None, 0
    start = (start_clean, start_occupied)
    if start_clean == goal:
        return True, [] if witness else None, 0
    visited = {start}
    parent: dict[tuple[int, int], tuple[tuple[int, int], Move]] = {}
    queue = deque([start])
    explored = 0
    n = host.n

    while queue:
        state = queue.popleft()
        c, pmask = state
        explored += 1
        if budget is not None and explored > budget:
            raise BudgetExceeded("game state budget exhausted")
        moves: list[tuple[Move, int, int | None]] = []
        cnt = pmask.bit_count()
        if guard is not None and pmask == 0:
            if k >= 1:
                moves.append((Move("p", guard), pmask | (1 << guard), None))
        else:
            if cnt < k:
                for v in range(n):
                    if not pmask >> v & 1:
                        moves.append((Move("p", v), pmask | (1 << v), None))
            m = pmask
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if guard is not None and v == guard:
                    continue
                moves.append((Move("r", v), pmask & ~(1 << v), None))
                for u in host.neighbors(v):
                    ei = ctx.eidx[(v, u) if v < u else (u, v)]
                    moves.append(
                        (Move("s", v, u), (pmask & ~(1 << v)) | (1 << u), ei)
                    )
        for mv, p2, slide in moves:
            newly = ctx.both_occupied(p2)
            if slide is not None:
                newly |= 1 << slide
            q = c | newly
            c2 = ctx.closure(q, p2)
            if monotone and c2 != q:
                continue
            if c2 & forbid:
                continue
            if first_clean is not None and c == 0 and c2:
                if c2 & first_clean != first_clean:
                    continue
            if last_clean is not None and c2 != goal and c2 & last_clean:
                continue
            if connected and not ctx.edges_connected(c2):
                continue
            st2 = (c2, p2)
            if st2 in visited:
                continue
            visited.add(st2)
            if witness:
                parent[st2] = (state, mv)
            if c2 == goal:
                if not witness:
                    return True, None, explored
                seq = [mv]
                cur = state
                while cur != start:
                    pst, pmv = parent[cur]
                    seq.append(pmv)
                    cur = pst
                seq.reverse()
                return True, seq, explored
            queue.append(st2)
    return False, None, explored


def _game_value(host: Graph, connected: bool, monotone: bool, witness: bool, **kw) -> SolveResult:
    total = 0
    for k in range(host.n + 1):
        ok, wit, explored = solve_game(
            host, k, connected=connected, monotone=monotone, witness=witness, **kw
        )
        total += explored
        if ok:
            return SolveResult(k, wit, {"states": total})
    raise AssertionError("unsolvable game below the trivial bound")


def ms_value(g: Graph, witness: bool = False) -> SolveResult:
    return _game_value(g, False, True, witness)


def cms_value(g: Graph, witness: bool = False) -> SolveResult:
    return _game_value(g, True, False, witness)


def cmms_value(g: Graph, witness: bool = False) -> SolveResult:
    return _game_value(g, True, True, witness)


def ms_decide(g: Graph, k: int) -> bool:
    return solve_game(g, k, monotone=True)[0]


def cms_decide(g: Graph, k: int) -> bool:
    return solve_game(g, k, connected=True)[0]


def cmms_decide(g: Graph, k: int) -> bool:
    return solve_game(g, k, connected=True, monotone=True)[0]


def _rooted_game_args(rg: RootedGraph):
    enh = enhance(rg)
    ctx = HostCtx(enh.host)
    e_in = ctx.emask(enh.e_in)
    e_out = ctx.emask(enh.e_out)
    internal = 0
    for i, (u, v) in enumerate(ctx.edges):
        if u in rg.s_in and v in rg.s_in:
            internal |= 1 << i
    occupied = 0
    for v in rg.s_in:
        occupied |= 1 << v
    return enh, ctx, {
        "goal": ctx.full & ~e_out,
        "forbid": e_out,
        "start_clean": e_in | internal,
        "start_occupied": occupied,
    }


def rooted_game_decide(rg: RootedGraph, k: int, witness: bool = False):
    """Monotone connected game on the enhanced host: the game-side of cmp."""
    _check_s_in(rg)
    enh, ctx, kw = _rooted_game_args(rg)
    ok, wit, _ = solve_game(
        enh.host, k, connected=True, monotone=True, witness=witness, **kw
    )
    return (ok, wit) if witness else ok


def rooted_game_value(rg: RootedGraph, witness: bool = False) -> SolveResult:
    _check_s_in(rg)
    enh, ctx, kw = _rooted_game_args(rg)
    return _game_value(enh.host, True, True, witness, **kw)
