"""Contraction (every class pair adjacency exact) and minor containment.

Both relations are decided by enumerating partitions of the host's
vertices into connected classes and matching the quotient against the
pattern.  Exponential, but the toolkit only ever runs it on small
graphs; a node budget turns runaway searches into a distinct error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .canon import certificate, canonical_graph
from .graphs import Graph, RootedGraph, complete_bipartite, complete_graph


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class ContractionWitness:
    phi: tuple[int, ...]  # phi[v in host] = pattern vertex


def _as_rooted(x) -> RootedGraph:
    return x if isinstance(x, RootedGraph) else RootedGraph(x)


def _partitions(g: Graph, parts: int, budget: list[int] | None) -> Iterator[tuple[int, ...]]:
    """Partitions of V(g) into `parts` connected nonempty classes.

    Yields class-id-per-vertex tuples in restricted-growth form.
    """
    n = g.n
    assign = [0] * n
    members = [0] * parts  # vertex bitmask per class

    def rec(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if budget is not None:
            budget[0] -= 1
            if budget[0] < 0:
                raise BudgetExceeded("partition budget exhausted")
        if v == n:
            if used == parts and all(_mask_connected(g, m) for m in members[:used]):
                yield tuple(assign)
            return
        # must still be able to open the remaining classes
        if parts - used > n - v:
            return
        hi = min(used + 1, parts)
        for c in range(hi):
            assign[v] = c
            opened = c == used
            members[c] |= 1 << v
            yield from rec(v + 1, used + 1 if opened else used)
            members[c] &= ~(1 << v)
        assign[v] = 0

    yield from rec(0, 0)


def _mask_connected(g: Graph, mask: int) -> bool:
    if mask == 0:
        return False
    start = (mask & -mask).bit_length() - 1
    return g.component_mask(start, mask) == mask


def _quotient_adj(g: Graph, assign: tuple[int, ...], parts: int) -> list[int]:
    adj = [0] * parts
    for u, v in g.edges:
        a, b = assign[u], assign[v]
        if a != b:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return adj


def _match(
    q_adj: list[int],
    q_colors: list[int],
    h: Graph,
    h_colors: list[int],
    exact: bool,
) -> tuple[int, ...] | None:
    """Bijection psi: quotient class -> V(h); exact adjacency for the
    contraction relation, h-edges-only containment for the minor relation."""
    parts = len(q_adj)
    if parts != h.n:
        return None
    psi = [-1] * parts
    taken = [False] * h.n

    def rec(c: int) -> bool:
        if c == parts:
            return True
        for w in range(h.n):
            if taken[w] or q_colors[c] != h_colors[w]:
                continue
            ok = True
            for c2 in range(c):
                q_edge = bool(q_adj[c] >> c2 & 1)
                h_edge = h.has_edge(psi[c2], w)
                if exact:
                    if q_edge != h_edge:
                        ok = False
                        break
                else:
                    if h_edge and not q_edge:
                        ok = False
                        break
            if ok:
                taken[w] = True
                psi[c] = w
                if rec(c + 1):
                    return True
                taken[w] = False
                psi[c] = -1
        return False

    return tuple(psi) if rec(0) else None


def _decide(h: RootedGraph, g: RootedGraph, exact: bool, budget: int | None) -> ContractionWitness | None:
    hg, gg = h.graph, g.graph
    if hg.n > gg.n:
        return None
    h_colors = [
        (1 if v in h.s_in else 0) | (2 if v in h.s_out else 0) for v in range(hg.n)
    ]
    bud = [budget] if budget is not None else None
    for assign in _partitions(gg, hg.n, bud):
        q_adj = _quotient_adj(gg, assign, hg.n)
        q_colors = [0] * hg.n
        for v in g.s_in:
            q_colors[assign[v]] |= 1
        for v in g.s_out:
            q_colors[assign[v]] |= 2
        psi = _match(q_adj, q_colors, hg, h_colors, exact)
        if psi is not None:
            return ContractionWitness(tuple(psi[assign[v]] for v in range(gg.n)))
    return None


def is_contraction(h, g, budget: int | None = None) -> ContractionWitness | None:
    """Witness that h is a contraction of g (h obtainable by contracting
    edges of g), respecting roots when the inputs are rooted."""
    return _decide(_as_rooted(h), _as_rooted(g), exact=True, budget=budget)


def is_minor(h, g, budget: int | None = None) -> ContractionWitness | None:
    return _decide(_as_rooted(h), _as_rooted(g), exact=False, budget=budget)


def contains_any(g, family, relation: str = "contraction", budget: int | None = None) -> bool:
    test = is_contraction if relation == "contraction" else is_minor
    return any(test(member, g, budget=budget) is not None for member in family)


def proper_contractions(g: Graph) -> set[Graph]:
    """All single-edge contractions of g, deduplicated up to isomorphism."""
    seen: dict[bytes, Graph] = {}
    from .graphs import contract_edge

    for e in g.edges:
        c = canonical_graph(contract_edge(g, e))
        seen.setdefault(certificate(c), c)
    return set(seen.values())


_K4 = complete_graph(4)
_K23 = complete_bipartite(2, 3)


def is_outerplanar(g: Graph) -> bool:
    if g.n < 4:
        return True
    comps = g.components()
    if len(comps) > 1:
        # the minor search assumes a connected host; split first
        return all(
            is_outerplanar(g.induced([v for v in range(g.n) if m >> v & 1])[0])
            for m in comps
        )
    if is_minor(_K4, g) is not None:
        return False
    if g.n >= 5 and is_minor(_K23, g) is not None:
        return False
    return True
