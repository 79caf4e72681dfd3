"""Blocks, cut vertices, and outerplanar face structure.

Block classes: hair (trivial block with a degree-1 endpoint), bridge
(other trivial blocks), cycle (chordless non-trivial), essential
(non-trivial with a chord).  A cut vertex is light when it is the cut
vertex of exactly one hair block, heavy otherwise.

For 2-connected outerplanar blocks the embedding is unique, so the
bounded faces can be read off the Hamiltonian outer cycle plus the
non-crossing chord intervals; a face is haploid when at most one of
its edges is a chord.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contractions import is_outerplanar
from .graphs import Edge, Graph, norm_edge


@dataclass(frozen=True)
class Face:
    edges: frozenset[Edge]
    haploid: bool


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: frozenset[Edge]
    kind: str  # hair | bridge | cycle | essential
    outer_cycle: tuple[int, ...] | None = None
    chords: frozenset[Edge] | None = None
    faces: tuple[Face, ...] | None = None


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    weights: dict[int, str]  # cut vertex -> light | heavy


def _biconnected_edge_groups(g: Graph) -> list[list[Edge]]:
    """Edge sets of the biconnected components (iterative Hopcroft-Tarjan)."""
    n = g.n
    num = [0] * n
    low = [0] * n
    counter = [1]
    stack: list[Edge] = []
    groups: list[list[Edge]] = []
    visited = [False] * n

    for root in range(n):
        if visited[root]:
            continue
        work = [(root, -1, iter(list(g.neighbors(root))))]
        visited[root] = True
        num[root] = low[root] = counter[0]
        counter[0] += 1
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if not visited[w]:
                    stack.append(norm_edge(v, w))
                    visited[w] = True
                    num[w] = low[w] = counter[0]
                    counter[0] += 1
                    work.append((w, v, iter(list(g.neighbors(w)))))
                    advanced = True
                    break
                elif num[w] < num[v]:
                    stack.append(norm_edge(v, w))
                    low[v] = min(low[v], num[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= num[pv]:
                    group = []
                    e = norm_edge(pv, v)
                    while stack:
                        top = stack.pop()
                        group.append(top)
                        if top == e:
                            break
                    if group:
                        groups.append(group)
    return groups


def blocks_and_cuts(g: Graph) -> BlockDecomposition:
    if not g.is_connected():
        raise ValueError("block decomposition requires a connected graph")
    if g.m < 1:
        raise ValueError("block decomposition requires at least one edge")
    blocks = []
    seen: dict[int, int] = {}  # vertex -> number of blocks containing it
    for group in _biconnected_edge_groups(g):
        vs = frozenset(v for e in group for v in e)
        for v in vs:
            seen[v] = seen.get(v, 0) + 1
        es = frozenset(group)
        if len(es) == 1:
            (u, v) = next(iter(es))
            kind = "hair" if g.degree(u) == 1 or g.degree(v) == 1 else "bridge"
            blocks.append(Block(vs, es, kind))
            continue
        kind = "cycle" if len(es) == len(vs) else "essential"
        outer = chords = faces = None
        sub, idx = g.induced(sorted(vs))
        if is_outerplanar(sub):
            back = {i: v for v, i in idx.items()}
            cyc = _hamiltonian_cycle(sub)
            if cyc is not None:
                outer = tuple(back[i] for i in cyc)
                chords, faces = _faces(sub, cyc, back)
        blocks.append(Block(vs, es, kind, outer, chords, faces))
    cuts = frozenset(v for v, c in seen.items() if c >= 2)
    weights = {}
    for c in cuts:
        hairs = sum(1 for b in blocks if b.kind == "hair" and c in b.vertices)
        weights[c] = "light" if hairs == 1 else "heavy"
    return BlockDecomposition(tuple(blocks), cuts, weights)


def _hamiltonian_cycle(g: Graph) -> list[int] | None:
    n = g.n
    if n < 3:
        return None
    path = [0]
    used = 1

    def rec() -> bool:
        nonlocal used
        if len(path) == n:
            return g.has_edge(path[-1], 0)
        for w in g.neighbors(path[-1]):
            if not used >> w & 1:
                path.append(w)
                used |= 1 << w
                if rec():
                    return True
                path.pop()
                used &= ~(1 << w)
        return False

    return path if rec() else None


def _faces(g: Graph, cyc: list[int], back: dict[int, int]):
    """Bounded faces of a 2-connected outerplanar block.

    Edges become intervals over cycle positions; the chords are
    non-crossing, and each interval spanning more than one step bounds
    the face formed with its maximal sub-intervals.
    """
    m = len(cyc)
    pos = {v: i for i, v in enumerate(cyc)}
    intervals = []
    for u, v in g.edges:
        i, j = sorted((pos[u], pos[v]))
        intervals.append((i, j))
    iset = set(intervals)
    cycle_edges = {(i, i + 1) for i in range(m - 1)} | {(0, m - 1)}
    chords = frozenset(
        norm_edge(back[cyc[i]], back[cyc[j]]) for (i, j) in iset - cycle_edges
    )
    faces = []
    for (i, j) in sorted(iset):
        if j - i < 2:
            continue
        # walk the maximal sub-intervals from i to j
        children = []
        a = i
        ok = True
        while a < j:
            best = None
            for (x, y) in iset:
                if x == a and y <= j and (x, y) != (i, j):
                    if best is None or y > best:
                        best = y
            if best is None:
                ok = False
                break
            children.append((a, best))
            a = best
        if not ok:
            continue
        edge_ivals = [(i, j)] + children
        edges = frozenset(norm_edge(back[cyc[x]], back[cyc[y]]) for x, y in edge_ivals)
        n_chords = sum(1 for iv in edge_ivals if iv not in cycle_edges)
        faces.append(Face(edges, n_chords <= 1))
    return chords, tuple(faces)
