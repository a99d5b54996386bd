"""Immutable graph values, DIMACS-style text I/O, and seeded generators.

Vertices are dense 0-based indices in memory; files use the 1-based DIMACS
edge-list convention (``p edge <n> <m>`` header followed by ``e <u> <v>``
lines). All randomness goes through :class:`SplitMix64` so generated corpora
are bit-identical across platforms and runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

__all__ = [
    "Graph",
    "Bipartition",
    "GraphConstructionError",
    "NotBipartiteError",
    "ParseError",
    "SplitMix64",
    "new_graph",
    "bipartition",
    "remove_edges",
    "parse_edge_list",
    "render_edge_list",
    "to_dot",
    "random_bipartite",
    "random_graph",
]

_MASK64 = (1 << 64) - 1


class GraphConstructionError(ValueError):
    """Raised for loop edges, out-of-range endpoints, or non-edge removals."""


class NotBipartiteError(ValueError):
    """Raised when no 2-coloring exists; carries an odd-cycle witness."""

    def __init__(self, cycle: Sequence[int]):
        super().__init__(f"graph is not bipartite: odd cycle {tuple(cycle)}")
        self.cycle = tuple(cycle)


class ParseError(ValueError):
    """Malformed edge-list text; ``line_no`` is 1-based."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _canonical_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored canonically (smaller endpoint first); two graphs are
    equal exactly when their vertex counts and edge sets are.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    @cached_property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _canonical_edge(u, v) in self.edges


@dataclass(frozen=True)
class Bipartition:
    """A 2-coloring: ``side_a`` and ``side_b`` partition the vertices."""

    side_a: frozenset[int]
    side_b: frozenset[int]


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a canonicalized, deduplicated graph, validating every edge."""
    if n < 0:
        raise GraphConstructionError("vertex count must be non-negative")
    canon: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise GraphConstructionError(f"loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError(f"endpoint out of range in edge ({u}, {v})")
        canon.add(_canonical_edge(u, v))
    return Graph(n, frozenset(canon))


def _normalize_cycle(cycle: list[int]) -> tuple[int, ...]:
    # rotate to the minimum vertex, then orient towards its smaller neighbour
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    if len(rot) > 2 and rot[1] > rot[-1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def bipartition(g: Graph) -> Bipartition:
    """2-color ``g`` deterministically.

    In every connected component the lowest-index vertex lands on side A;
    isolated vertices therefore go to side A. Raises
    :class:`NotBipartiteError` with an odd-cycle witness otherwise.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in sorted(g.adjacency[u]):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    pu, pv = [u], [v]
                    while depth[pu[-1]] > depth[pv[-1]]:
                        pu.append(parent[pu[-1]])
                    while depth[pv[-1]] > depth[pu[-1]]:
                        pv.append(parent[pv[-1]])
                    while pu[-1] != pv[-1]:
                        pu.append(parent[pu[-1]])
                        pv.append(parent[pv[-1]])
                    cycle = pu + pv[-2::-1]
                    raise NotBipartiteError(_normalize_cycle(cycle))
    side_a = frozenset(v for v in range(g.n) if color[v] == 0)
    side_b = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(side_a, side_b)


def remove_edges(g: Graph, drop: Iterable[tuple[int, int]]) -> Graph:
    """Return ``g`` minus the given edges; rejects non-edges."""
    gone = {_canonical_edge(u, v) for u, v in drop}
    missing = gone - g.edges
    if missing:
        raise GraphConstructionError(f"not an edge: {sorted(missing)[0]}")
    return Graph(g.n, g.edges - gone)


def parse_edge_list(text: str) -> Graph:
    """Parse DIMACS-style edge-list text.

    Grammar: comment lines start with ``c``; exactly one header
    ``p edge <n> <m>``; then ``m`` lines ``e <u> <v>`` with 1-based
    endpoints. Blank lines are ignored.
    """
    n = -1
    declared_m = 0
    edges: list[tuple[int, int]] = []
    e_lines = 0
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n >= 0:
                raise ParseError(line_no, "duplicate header")
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError(line_no, f"malformed header {line!r}")
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(line_no, f"malformed header {line!r}") from None
            if n < 0 or declared_m < 0:
                raise ParseError(line_no, "negative count in header")
        elif fields[0] == "e":
            if n < 0:
                raise ParseError(line_no, "edge before header")
            if len(fields) != 3:
                raise ParseError(line_no, f"malformed edge line {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(line_no, f"malformed edge line {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(line_no, f"endpoint out of range in {line!r}")
            if u == v:
                raise ParseError(line_no, f"loop edge in {line!r}")
            e_lines += 1
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(line_no, f"unrecognized line {line!r}")
    if n < 0:
        raise ParseError(last_line or 1, "missing header")
    if e_lines != declared_m:
        raise ParseError(last_line or 1, f"header declares {declared_m} edges, found {e_lines}")
    return new_graph(n, edges)


def render_edge_list(g: Graph) -> str:
    """Render in the canonical form parse_edge_list round-trips with."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edge_list)
    return "\n".join(lines) + "\n"


_DOT_STYLES = (
    "style=bold, color=red",
    "style=dashed, color=blue",
    "style=dotted, color=darkgreen",
    "style=solid, color=orange",
)


def to_dot(
    g: Graph,
    labeling: Optional[Mapping[int, object]] = None,
    highlight: Optional[Sequence[Iterable[tuple[int, int]]]] = None,
) -> str:
    """Render ``g`` as DOT text.

    ``labeling`` maps vertices to a class name shown in the node label;
    each edge set in ``highlight`` gets its own style.
    """
    labels: dict[int, str] = {}
    if labeling is not None:
        for v, cls in labeling.items():
            if not (0 <= v < g.n):
                raise GraphConstructionError(f"labeling references unknown vertex {v}")
            labels[v] = getattr(cls, "value", str(cls))
    style_of: dict[tuple[int, int], str] = {}
    if highlight:
        for idx, edge_set in enumerate(highlight):
            style = _DOT_STYLES[idx % len(_DOT_STYLES)]
            for u, v in edge_set:
                style_of.setdefault(_canonical_edge(u, v), style)
    out = ["graph g {"]
    for v in range(g.n):
        text = f"{v} {labels[v]}" if v in labels else str(v)
        out.append(f'  {v} [label="{text}"];')
    for u, v in g.edge_list:
        if (u, v) in style_of:
            out.append(f"  {u} -- {v} [{style_of[(u, v)]}];")
        else:
            out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


class SplitMix64:
    """SplitMix64 generator (Steele/Lea/Flood); the package's only PRNG.

    state' = state + 0x9E3779B97F4A7C15; the output is the state mixed by
    two xor-shift-multiply rounds. 64-bit wraparound throughout.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        # top 53 bits give a uniform double in [0, 1)
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, bound: int) -> int:
        return self.next_u64() % bound


def random_bipartite(n_a: int, n_b: int, p: float, seed: int) -> Graph:
    """Seeded bipartite G(n_a, n_b, p) with sides ``0..n_a-1`` / ``n_a..n_a+n_b-1``.

    Cross pairs are visited in lexicographic order and kept when the next
    SplitMix64 float is below ``p``, so equal seeds give identical graphs
    everywhere.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for a in range(n_a):
        for b in range(n_a, n_a + n_b):
            if rng.next_float() < p:
                edges.append((a, b))
    return new_graph(n_a + n_b, edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n, p); pair order and PRNG as in :func:`random_bipartite`."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_float() < p:
                edges.append((u, v))
    return new_graph(n, edges)
