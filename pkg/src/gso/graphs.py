"""Small simple undirected graphs with bitmask adjacency.

Vertices are always 0..n-1.  Edges are normalized (u, v) tuples with u < v.
Everything here is immutable and cheap to hash, which the solvers rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop edge ({u},{v}) not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]  # adj[v] = bitmask of neighbours of v

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            u, v = norm_edge(u, v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return tuple(out)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        m = self.adj[v]
        u = 0
        while m:
            if m & 1:
                yield u
            m >>= 1
            u += 1

    def component_mask(self, start: int, allowed: int | None = None) -> int:
        """Bitmask of the component of `start` inside the vertex mask `allowed`."""
        if allowed is None:
            allowed = (1 << self.n) - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= self.adj[v]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.component_mask(0) == (1 << self.n) - 1

    def components(self) -> list[int]:
        """Vertex bitmasks of the connected components."""
        out = []
        left = (1 << self.n) - 1
        while left:
            v = (left & -left).bit_length() - 1
            comp = self.component_mask(v, left)
            out.append(comp)
            left &= ~comp
        return out

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on `vertices`; returns it plus old->new id map."""
        vs = sorted(set(vertices))
        idx = {v: i for i, v in enumerate(vs)}
        edges = [(idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx]
        return Graph.from_edges(len(vs), edges), idx

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """New graph where old vertex v becomes perm[v]."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])


def boundary(g: Graph, f: Iterable[Edge]) -> frozenset[int]:
    """Vertices touched by both f and its complement in E(g)."""
    fset = {norm_edge(*e) for e in f}
    rest = set(g.edges) - fset
    vin = {v for e in fset for v in e}
    vout = {v for e in rest for v in e}
    return frozenset(vin & vout)


def vertex_set(edges: Iterable[Edge]) -> frozenset[int]:
    return frozenset(v for e in edges for v in e)


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = norm_edge(*e)
    if not g.has_edge(u, v):
        raise ValueError(f"no such edge ({u},{v})")
    # merged vertex keeps id u (the smaller); v disappears, ids above shift down
    def remap(x: int) -> int:
        if x == v:
            return u
        return x - 1 if x > v else x

    edges = set()
    for a, b in g.edges:
        a2, b2 = remap(a), remap(b)
        if a2 != b2:
            edges.add(norm_edge(a2, b2))
    return Graph.from_edges(g.n - 1, edges)


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    s_in: frozenset[int] = frozenset()
    s_out: frozenset[int] = frozenset()

    def __post_init__(self):
        n = self.graph.n
        object.__setattr__(self, "s_in", frozenset(self.s_in))
        object.__setattr__(self, "s_out", frozenset(self.s_out))
        for v in self.s_in | self.s_out:
            if not 0 <= v < n:
                raise ValueError(f"root vertex {v} not in graph")
        if not self.graph.is_connected():
            raise ValueError("rooted graph must be connected")


def rev(rg: RootedGraph) -> RootedGraph:
    return RootedGraph(rg.graph, rg.s_out, rg.s_in)


def doubly_rooted(g: Graph, v: int) -> RootedGraph:
    return RootedGraph(g, frozenset({v}), frozenset({v}))


def contract_edge_rooted(rg: RootedGraph, e: tuple[int, int]) -> RootedGraph:
    u, v = norm_edge(*e)
    g2 = contract_edge(rg.graph, (u, v))

    def remap(x: int) -> int:
        if x == v:
            return u
        return x - 1 if x > v else x

    return RootedGraph(
        g2,
        frozenset(remap(x) for x in rg.s_in),
        frozenset(remap(x) for x in rg.s_out),
    )


@dataclass(frozen=True)
class Enhancement:
    """The rooted graph plus apex vertices u_in/u_out wired to the roots."""

    base: RootedGraph
    host: Graph
    u_in: int
    u_out: int
    e_in: frozenset[Edge]
    e_out: frozenset[Edge]


def enhance(rg: RootedGraph) -> Enhancement:
    n = rg.graph.n
    u_in, u_out = n, n + 1
    edges = list(rg.graph.edges)
    e_in = frozenset(norm_edge(u_in, v) for v in rg.s_in)
    e_out = frozenset(norm_edge(u_out, v) for v in rg.s_out)
    host = Graph.from_edges(n + 2, edges + sorted(e_in) + sorted(e_out))
    return Enhancement(rg, host, u_in, u_out, e_in, e_out)


@dataclass(frozen=True)
class Part:
    """A rooted piece over global vertex labels, used as glue() input.

    Labels are arbitrary non-negative ints shared across parts; isolated
    root vertices are legal, so the vertex set is explicit.
    """

    vertices: frozenset[int]
    edges: frozenset[Edge]
    s_in: frozenset[int]
    s_out: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(norm_edge(*e) for e in self.edges))
        object.__setattr__(self, "s_in", frozenset(self.s_in))
        object.__setattr__(self, "s_out", frozenset(self.s_out))
        for e in self.edges:
            if not set(e) <= self.vertices:
                raise ValueError(f"edge {e} not within part vertices")
        if not (self.s_in <= self.vertices and self.s_out <= self.vertices):
            raise ValueError("roots must be part vertices")

    @classmethod
    def from_rooted(cls, rg: RootedGraph, labels: Sequence[int]) -> "Part":
        if len(labels) != rg.graph.n:
            raise ValueError("label count mismatch")
        edges = frozenset(norm_edge(labels[u], labels[v]) for u, v in rg.graph.edges)
        return cls(
            frozenset(labels),
            edges,
            frozenset(labels[v] for v in rg.s_in),
            frozenset(labels[v] for v in rg.s_out),
        )


def glue(parts: Sequence[Part]) -> tuple[RootedGraph, dict[int, int]]:
    """Chain parts whose consecutive overlap is exactly out-roots = in-roots.

    Returns the glued rooted graph (relabelled to 0..n-1 by sorted label)
    together with the label -> vertex id map.
    """
    if not parts:
        raise ValueError("glue needs at least one part")
    for a, b in zip(parts, parts[1:]):
        overlap = a.vertices & b.vertices
        if not (overlap == a.s_out == b.s_in):
            raise ValueError(
                f"glue precondition: overlap {sorted(overlap)} vs "
                f"s_out {sorted(a.s_out)} / s_in {sorted(b.s_in)}"
            )
    labels = sorted(set().union(*(p.vertices for p in parts)))
    idx = {lab: i for i, lab in enumerate(labels)}
    edges = {norm_edge(idx[u], idx[v]) for p in parts for u, v in p.edges}
    g = Graph.from_edges(len(labels), edges)
    rg = RootedGraph(
        g,
        frozenset(idx[v] for v in parts[0].s_in),
        frozenset(idx[v] for v in parts[-1].s_out),
    )
    return rg, idx


# handy constructors, mostly for tests and the paper families

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i + 1) for i in range(leaves)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def k23_plus() -> Graph:
    """K_2,3 with the two degree-3 vertices joined."""
    g = complete_bipartite(2, 3)
    return Graph.from_edges(5, list(g.edges) + [(0, 1)])
