"""Mixed-search simulator.

Moves are place p(v), remove r(v), slide s(v,u).  After each move the
newly cleaned edges are those with both endpoints occupied plus the
sliding edge; the closure then recontaminates every clean edge that
can reach a contaminated edge along a path whose connecting vertices
are all unguarded.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .graphs import Edge, Graph, norm_edge


@dataclass(frozen=True)
class Move:
    kind: str  # "p" | "r" | "s"
    v: int
    u: int | None = None

    def __post_init__(self):
        if self.kind not in ("p", "r", "s"):
            raise ValueError(f"unknown move kind {self.kind!r}")
        if (self.kind == "s") != (self.u is not None):
            raise ValueError("slide needs a target vertex, p/r must not have one")


def p(v: int) -> Move:
    return Move("p", v)


def r(v: int) -> Move:
    return Move("r", v)


def s(v: int, u: int) -> Move:
    return Move("s", v, u)


class HostCtx:
    """Precomputed bitmask tables for one host graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.edges = g.edges
        self.eidx = {e: i for i, e in enumerate(self.edges)}
        self.m = len(self.edges)
        self.full = (1 << self.m) - 1
        self.ev = tuple((1 << u) | (1 << v) for u, v in self.edges)
        inc = [0] * g.n
        for i, (u, v) in enumerate(self.edges):
            inc[u] |= 1 << i
            inc[v] |= 1 << i
        self.inc = tuple(inc)
        self.adj = g.adj

    def emask(self, edges: Iterable[Edge]) -> int:
        m = 0
        for e in edges:
            m |= 1 << self.eidx[norm_edge(*e)]
        return m

    def eset(self, mask: int) -> frozenset[Edge]:
        return frozenset(self.edges[i] for i in range(self.m) if mask >> i & 1)

    def both_occupied(self, pmask: int) -> int:
        out = 0
        for i in range(self.m):
            if self.ev[i] & ~pmask == 0:
                out |= 1 << i
        return out

    def closure(self, q: int, guard: int) -> int:
        """Clean set surviving recontamination from E(host) minus q."""
        dirty = self.full & ~q
        if dirty == 0:
            return q
        w = 0
        rest = dirty
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            w |= self.ev[i]
        w &= ~guard
        frontier = w
        while frontier:
            nxt = 0
            mm = frontier
            while mm:
                v = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                nxt |= self.adj[v]
            frontier = nxt & ~guard & ~w
            w |= frontier
        lost = 0
        for i in range(self.m):
            if q >> i & 1 and self.ev[i] & w:
                lost |= 1 << i
        return q & ~lost

    def edges_connected(self, emask: int) -> bool:
        """Do the edges in emask induce a connected subgraph?"""
        if emask == 0:
            return True
        first = (emask & -emask).bit_length() - 1
        verts = self.ev[first]
        seen = 1 << first
        frontier = 1 << first
        while frontier:
            nxt = 0
            vm = 0
            mm = frontier
            while mm:
                i = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                vm |= self.ev[i]
            verts |= vm
            m2 = vm
            while m2:
                v = (m2 & -m2).bit_length() - 1
                m2 &= m2 - 1
                nxt |= self.inc[v]
            frontier = nxt & emask & ~seen
            seen |= frontier
        return seen == emask


@dataclass(frozen=True)
class Step:
    move: Move
    positions: tuple[int, ...]  # sorted multiset of occupied vertices
    pre_closure: frozenset[Edge]  # Q_i
    newly: frozenset[Edge]  # E^(i)
    clean: frozenset[Edge]  # E(S,i)
    sliding: Edge | None
    recontaminated: bool


@dataclass(frozen=True)
class Trace:
    host: Graph
    steps: tuple[Step, ...]

    @property
    def final_clean(self) -> frozenset[Edge]:
        return self.steps[-1].clean if self.steps else frozenset()

    def clean_sets(self) -> list[frozenset[Edge]]:
        return [st.clean for st in self.steps]


def simulate(g: Graph, moves: Sequence[Move]) -> Trace:
    ctx = HostCtx(g)
    occ = Counter()
    clean = 0
    steps = []
    for i, mv in enumerate(moves):
        sliding = None
        if mv.kind == "p":
            if not 0 <= mv.v < g.n:
                raise ValueError(f"step {i}: vertex {mv.v} out of range")
            occ[mv.v] += 1
        elif mv.kind == "r":
            if occ[mv.v] <= 0:
                raise ValueError(f"step {i}: remove from unoccupied vertex {mv.v}")
            occ[mv.v] -= 1
        else:
            if occ[mv.v] <= 0:
                raise ValueError(f"step {i}: slide from unoccupied vertex {mv.v}")
            if not g.has_edge(mv.v, mv.u):
                raise ValueError(f"step {i}: slide along non-edge ({mv.v},{mv.u})")
            occ[mv.v] -= 1
            occ[mv.u] += 1
            sliding = norm_edge(mv.v, mv.u)
        pmask = 0
        for v, c in occ.items():
            if c > 0:
                pmask |= 1 << v
        newly = ctx.both_occupied(pmask)
        if sliding is not None:
            newly |= 1 << ctx.eidx[sliding]
        q = clean | newly
        clean = ctx.closure(q, pmask)
        steps.append(
            Step(
                mv,
                tuple(sorted(v for v in occ.elements())),
                ctx.eset(q),
                ctx.eset(newly),
                ctx.eset(clean),
                sliding,
                clean != q,
            )
        )
    return Trace(g, tuple(steps))


def width(t: Trace) -> int:
    return max((len(st.positions) for st in t.steps), default=0)


def is_complete(t: Trace) -> bool:
    return t.final_clean == frozenset(t.host.edges)


def is_monotone(t: Trace) -> bool:
    return not any(st.recontaminated for st in t.steps)


def is_connected_trace(t: Trace) -> bool:
    ctx = HostCtx(t.host)
    return all(ctx.edges_connected(ctx.emask(st.clean)) for st in t.steps)
