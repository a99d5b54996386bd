"""Maximum bipartite matching, König covers, and bipartite independent sets.

The matching search scans vertices and adjacency lists in ascending index
order, so every result here is a deterministic function of the input graph
and bipartition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Bipartition, Graph, bipartition, _canonical_edge

__all__ = [
    "Matching",
    "MatchingNotMaximumError",
    "matching_from_edges",
    "is_matching",
    "is_induced_matching",
    "maximum_matching",
    "koenig_cover",
    "maximum_independent_set_bipartite",
    "has_augmenting_path",
]


class MatchingNotMaximumError(ValueError):
    """A supposedly maximum matching admits an augmenting path."""


@dataclass(frozen=True)
class Matching:
    """Vertex-disjoint edge set; ``induced`` records the stronger validation."""

    edges: frozenset[tuple[int, int]]
    induced: bool

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)


def is_matching(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    """True iff the edges exist in g and are pairwise vertex-disjoint."""
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            return False
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def is_induced_matching(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    """True iff a matching and no host edge joins two distinct matched pairs."""
    es = [_canonical_edge(u, v) for u, v in edges]
    if not is_matching(g, es):
        return False
    for i in range(len(es)):
        a, b = es[i]
        for j in range(i + 1, len(es)):
            c, d = es[j]
            for x in (a, b):
                for y in (c, d):
                    if g.has_edge(x, y):
                        return False
    return True


def matching_from_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Matching:
    """Validate edges as a matching of g; the induced flag is computed."""
    es = frozenset(_canonical_edge(u, v) for u, v in edges)
    if not is_matching(g, es):
        raise ValueError("edge set is not a matching of the graph")
    return Matching(es, is_induced_matching(g, es))


def _validate_bipartition(g: Graph, b: Bipartition) -> None:
    if b.side_a | b.side_b != frozenset(range(g.n)) or b.side_a & b.side_b:
        raise ValueError("bipartition does not partition the vertex set")
    for u, v in g.edges:
        if (u in b.side_a) == (v in b.side_a):
            raise ValueError(f"bipartition puts edge ({u}, {v}) inside one side")


def maximum_matching(g: Graph, b: Bipartition) -> Matching:
    """Hopcroft-Karp maximum matching, pinned by ascending-index tie-breaks."""
    _validate_bipartition(g, b)
    n = g.n
    a_side = sorted(b.side_a)
    adj = [sorted(g.adjacency[u]) for u in range(n)]
    partner = [-1] * n
    NIL = n
    INF = n + 1
    dist = [0] * (n + 1)

    def bfs() -> bool:
        dq: deque[int] = deque()
        for u in a_side:
            if partner[u] == -1:
                dist[u] = 0
                dq.append(u)
            else:
                dist[u] = INF
        dist[NIL] = INF
        while dq:
            u = dq.popleft()
            if dist[u] < dist[NIL]:
                for v in adj[u]:
                    w = partner[v] if partner[v] != -1 else NIL
                    if dist[w] == INF:
                        dist[w] = dist[u] + 1
                        if w != NIL:
                            dq.append(w)
        return dist[NIL] != INF

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = partner[v] if partner[v] != -1 else NIL
            if dist[w] == dist[u] + 1 and (w == NIL or dfs(w)):
                partner[u] = v
                partner[v] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in a_side:
            if partner[u] == -1:
                dfs(u)
    edges = frozenset(
        _canonical_edge(u, partner[u]) for u in a_side if partner[u] != -1
    )
    return matching_from_edges(g, edges)


def _alternating_reachable(
    g: Graph, b: Bipartition, m: Matching
) -> tuple[set[int], set[int], bool]:
    """Alternating BFS from unmatched side-A vertices.

    Returns (reached A vertices, reached B vertices, free B vertex reached),
    the last flag meaning an augmenting path exists.
    """
    partner: dict[int, int] = {}
    for u, v in m.edges:
        partner[u] = v
        partner[v] = u
    matched_edges = m.edges
    reached_a = {u for u in b.side_a if u not in partner}
    reached_b: set[int] = set()
    found_free_b = False
    stack = sorted(reached_a)
    while stack:
        u = stack.pop()
        for v in sorted(g.adjacency[u]):
            if _canonical_edge(u, v) in matched_edges or v in reached_b:
                continue
            reached_b.add(v)
            w = partner.get(v)
            if w is None:
                found_free_b = True
            elif w not in reached_a:
                reached_a.add(w)
                stack.append(w)
    return reached_a, reached_b, found_free_b


def has_augmenting_path(g: Graph, b: Bipartition, m: Matching) -> bool:
    """True iff m is not a maximum matching of g (Berge)."""
    _validate_bipartition(g, b)
    if not is_matching(g, m.edges):
        raise ValueError("edge set is not a matching of the graph")
    return _alternating_reachable(g, b, m)[2]


def koenig_cover(g: Graph, b: Bipartition, m: Matching) -> frozenset[int]:
    """Vertex cover of size |m| from a maximum matching (König construction)."""
    _validate_bipartition(g, b)
    if not is_matching(g, m.edges):
        raise ValueError("edge set is not a matching of the graph")
    reached_a, reached_b, free_b = _alternating_reachable(g, b, m)
    if free_b:
        raise MatchingNotMaximumError(
            "matching admits an augmenting path; not maximum"
        )
    cover = frozenset(b.side_a - reached_a) | frozenset(reached_b)
    assert len(cover) == len(m.edges)
    return cover


def maximum_independent_set_bipartite(g: Graph) -> frozenset[int]:
    """Maximum independent set of a bipartite graph via the König complement."""
    b = bipartition(g)
    m = maximum_matching(g, b)
    cover = koenig_cover(g, b, m)
    return frozenset(range(g.n)) - cover
