"""Recognizer for bipartite pairs (G, M) whose dissociation number meets the
4/3 bound against the independence number of G minus a maximum matching M.

Pipeline: validate M is maximum; take a maximum matching M' of G - M and
require |M| = |M'|; the union H = M + M' splits into alternating paths and
cycles whose lengths must be 4 mod 6 (paths) and 0 mod 6 (cycles). Path
vertices then have forced positions in a six-class pattern; cycle rotations
leave three choices each, and the stray edges of G (those outside M + M')
must land on a blocked class (A4/B4), which a 2-SAT formula over the
rotation choices decides. On success the four unblocked classes form a
maximum dissociation set of size 4 * ell.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional, Union

from .graph import Bipartition, Graph, bipartition, remove_edges
from .matching import (
    Matching,
    has_augmenting_path,
    is_matching,
    maximum_matching,
)
from .exact import is_dissociation_set
from .twosat import Assignment, Literal, TwoSatFormula, solve_2sat

__all__ = [
    "SixClass",
    "SixLabeling",
    "PathComponent",
    "CycleComponent",
    "AlternatingDecomposition",
    "NotExtremalReason",
    "RecognitionFailure",
    "NotExtremal",
    "Extremal",
    "RecognitionOutcome",
    "decompose_alternating",
    "check_component_lengths",
    "label_path_components",
    "check_path_path_edges",
    "build_2sat",
    "recognize_extremal",
]


class SixClass(Enum):
    A1 = "A1"
    A2 = "A2"
    A4 = "A4"
    B1 = "B1"
    B2 = "B2"
    B4 = "B4"


# class patterns along a component, period 6, first edge in M
_A_START = (
    SixClass.A1, SixClass.B1, SixClass.A4, SixClass.B2, SixClass.A2, SixClass.B4,
)
_B_START = (
    SixClass.B1, SixClass.A1, SixClass.B4, SixClass.A2, SixClass.B2, SixClass.A4,
)
_IN_SET = frozenset({SixClass.A1, SixClass.A2, SixClass.B1, SixClass.B2})
_BLOCKED = frozenset({SixClass.A4, SixClass.B4})


@dataclass(frozen=True)
class SixLabeling:
    """Assignment of every vertex to one of the six classes; ell = |A1|."""

    classes: Mapping[int, SixClass]
    ell: int


@dataclass(frozen=True)
class PathComponent:
    vertices: tuple[int, ...]
    edges_in_m: tuple[bool, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class CycleComponent:
    # starts at the lowest-index side-A vertex, first edge in M
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class AlternatingDecomposition:
    paths: tuple[PathComponent, ...]
    cycles: tuple[CycleComponent, ...]

    @property
    def components(self) -> tuple[Union[PathComponent, CycleComponent], ...]:
        return self.paths + self.cycles


class NotExtremalReason(Enum):
    MATCHING_SIZE_MISMATCH = "MatchingSizeMismatch"
    BAD_CYCLE_LENGTH = "BadCycleLength"
    BAD_PATH_LENGTH = "BadPathLength"
    PATH_EDGE_VIOLATION = "PathEdgeViolation"
    TWO_SAT_UNSAT = "TwoSatUnsat"
    NOT_MAXIMUM_MATCHING = "NotMaximumMatching"
    NOT_BIPARTITE = "NotBipartite"


@dataclass(frozen=True)
class RecognitionFailure:
    reason: NotExtremalReason
    detail: str = ""


@dataclass(frozen=True)
class NotExtremal:
    reason: NotExtremalReason
    detail: str = ""


@dataclass(frozen=True)
class Extremal:
    labeling: SixLabeling
    max_dissociation_set: frozenset[int]


RecognitionOutcome = Union[Extremal, NotExtremal]


def _partner_array(n: int, edges: frozenset[tuple[int, int]]) -> list[int]:
    partner = [-1] * n
    for u, v in edges:
        partner[u] = v
        partner[v] = u
    return partner


def decompose_alternating(
    g: Graph, b: Bipartition, m: Matching, m2: Matching
) -> AlternatingDecomposition:
    """Split H = (V(g), m + m2) into alternating paths and cycles.

    Both matchings touch each vertex at most once, so H has maximum degree
    two and the edge tags alternate automatically. Cycles are rotated to
    start at their lowest side-A vertex with the M edge first; paths start
    at an M-covered endpoint when one exists, else at the lower endpoint.
    """
    if m.edges & m2.edges:
        raise ValueError("matchings overlap; they must be edge-disjoint")
    for edges in (m.edges, m2.edges):
        if not is_matching(g, edges):
            raise ValueError("edge set is not a matching of the graph")
    n = g.n
    pm = _partner_array(n, m.edges)
    pm2 = _partner_array(n, m2.edges)
    visited = [False] * n
    paths: list[PathComponent] = []
    cycles: list[CycleComponent] = []

    def walk(start: int, first_in_m: bool) -> list[int]:
        seq = [start]
        visited[start] = True
        take_m = first_in_m
        cur = start
        while True:
            nxt = pm[cur] if take_m else pm2[cur]
            if nxt == -1 or visited[nxt]:
                return seq
            seq.append(nxt)
            visited[nxt] = True
            cur = nxt
            take_m = not take_m

    # paths first: endpoints have degree <= 1 in H
    for v in range(n):
        if visited[v]:
            continue
        in_m = pm[v] != -1
        in_m2 = pm2[v] != -1
        if in_m and in_m2:
            continue
        seq = walk(v, in_m)
        if len(seq) > 1:
            last = seq[-1]
            last_in_m = pm[last] == seq[-2]
            first_in_m = pm[seq[0]] == seq[1]
            if not first_in_m and last_in_m:
                seq.reverse()
            elif first_in_m == last_in_m and seq[-1] < seq[0]:
                seq.reverse()
        tags = tuple(pm[seq[i]] == seq[i + 1] for i in range(len(seq) - 1))
        paths.append(PathComponent(tuple(seq), tags))

    # remaining vertices lie on cycles
    for v in range(n):
        if visited[v]:
            continue
        seq = walk(v, True)
        in_a = [u for u in seq if u in b.side_a]
        anchor = min(in_a)
        i = seq.index(anchor)
        # orient so the anchor's successor edge is its M edge
        if pm[anchor] == seq[(i + 1) % len(seq)]:
            rotated = seq[i:] + seq[:i]
        else:
            rotated = [seq[i]] + seq[:i][::-1] + seq[i + 1:][::-1]
            assert pm[anchor] == rotated[1]
        cycles.append(CycleComponent(tuple(rotated)))
    return AlternatingDecomposition(tuple(paths), tuple(cycles))


def check_component_lengths(d: AlternatingDecomposition) -> Optional[RecognitionFailure]:
    """Cycles must have length 0 mod 6, paths length 4 mod 6."""
    for cyc in d.cycles:
        if cyc.length % 6 != 0:
            return RecognitionFailure(
                NotExtremalReason.BAD_CYCLE_LENGTH,
                f"cycle {cyc.vertices} has length {cyc.length}",
            )
    for path in d.paths:
        if path.length % 6 != 4:
            return RecognitionFailure(
                NotExtremalReason.BAD_PATH_LENGTH,
                f"path {path.vertices} has length {path.length}",
            )
    return None


def label_path_components(
    d: AlternatingDecomposition, b: Bipartition, m: Matching, m2: Matching
) -> dict[int, SixClass]:
    """Fix the six-class positions of all path vertices.

    A path is read from its endpoint not covered by M'; the first edge lies
    in M, and the classes then repeat with period six (mirrored when the
    start vertex is on side B). Cycle vertices stay unlabeled here.
    """
    pm2 = {}
    for u, v in m2.edges:
        pm2[u] = v
        pm2[v] = u
    labels: dict[int, SixClass] = {}
    for path in d.paths:
        verts = path.vertices
        if len(verts) == 1 or not path.edges_in_m[0] or verts[0] in pm2:
            raise RuntimeError(
                "path labeling reached with unvalidated component "
                f"{verts}; length checks must run first"
            )
        pattern = _A_START if verts[0] in b.side_a else _B_START
        for idx, v in enumerate(verts):
            labels[v] = pattern[idx % 6]
    return labels


def check_path_path_edges(
    g: Graph, m: Matching, m2: Matching, labels: Mapping[int, SixClass]
) -> Optional[RecognitionFailure]:
    """Stray edges between two path vertices must touch A4 or B4."""
    used = m.edges | m2.edges
    for u, v in g.edge_list:
        if (u, v) in used:
            continue
        if u in labels and v in labels:
            if labels[u] not in _BLOCKED and labels[v] not in _BLOCKED:
                return RecognitionFailure(
                    NotExtremalReason.PATH_EDGE_VIOLATION,
                    f"edge ({u}, {v}) joins classes "
                    f"{labels[u].value} and {labels[v].value}",
                )
    return None


def _anchor_index_a(position: int) -> int:
    # 1-based rotation index j whose anchor sits 0 mod 6 before this A vertex
    return (position % 6) // 2 + 1


def _anchor_index_b(position: int) -> int:
    # rotation index j whose anchor sits 3 mod 6 before this B vertex
    return ((position - 3) % 6) // 2 + 1


def build_2sat(
    g: Graph,
    d: AlternatingDecomposition,
    b: Bipartition,
    m: Matching,
    m2: Matching,
    labels: Mapping[int, SixClass],
) -> tuple[TwoSatFormula, dict[tuple[int, int], int]]:
    """Formula over rotation variables x[i,j]: cycle i gets anchor j in A4.

    Per cycle: pairwise at-most-one clauses over its three variables. A
    stray edge into a cycle forces the rotation that blocks its cycle
    endpoint (unit clause) unless the path endpoint is already blocked; a
    stray edge between two cycle vertices yields the disjunction of the two
    blocking rotations.
    """
    position: dict[int, tuple[int, int]] = {}
    for ci, cyc in enumerate(d.cycles):
        for p, v in enumerate(cyc.vertices):
            position[v] = (ci, p)
    var_map = {
        (ci, j): 3 * ci + (j - 1) for ci in range(len(d.cycles)) for j in (1, 2, 3)
    }
    clauses: list[tuple[Literal, ...]] = []
    for ci in range(len(d.cycles)):
        x1, x2, x3 = (var_map[(ci, j)] for j in (1, 2, 3))
        clauses.append(((x1, False), (x2, False)))
        clauses.append(((x2, False), (x3, False)))
        clauses.append(((x1, False), (x3, False)))
    used = m.edges | m2.edges
    for u, v in g.edge_list:
        if (u, v) in used:
            continue
        if u not in position and v not in position:
            continue
        a, bb = (u, v) if u in b.side_a else (v, u)
        a_lit: Optional[Literal] = None
        b_lit: Optional[Literal] = None
        if a in position:
            ci, p = position[a]
            a_lit = (var_map[(ci, _anchor_index_a(p))], True)
        if bb in position:
            ci, q = position[bb]
            b_lit = (var_map[(ci, _anchor_index_b(q))], True)
        if a_lit is not None and b_lit is not None:
            clauses.append((a_lit, b_lit))
        elif a_lit is not None:
            if labels[bb] is not SixClass.B4:
                clauses.append((a_lit,))
        else:
            assert b_lit is not None
            if labels[a] is not SixClass.A4:
                clauses.append((b_lit,))
    formula = TwoSatFormula(3 * len(d.cycles), tuple(clauses))
    return formula, var_map


def _complete_labeling(
    d: AlternatingDecomposition,
    labels: dict[int, SixClass],
    assignment: Assignment,
) -> dict[int, SixClass]:
    classes = dict(labels)
    for ci, cyc in enumerate(d.cycles):
        anchor = 1
        for j in (1, 2, 3):
            if assignment.values[3 * ci + (j - 1)]:
                anchor = j
                break
        shift = 2 * (anchor - 1)
        for p, v in enumerate(cyc.vertices):
            classes[v] = _A_START[(p - shift + 2) % 6]
    return classes


def _validate_extremal(
    g: Graph,
    b: Bipartition,
    m: Matching,
    m2: Matching,
    d: AlternatingDecomposition,
    classes: Mapping[int, SixClass],
    ell: int,
    chosen: frozenset[int],
) -> None:
    counts = {cls: 0 for cls in SixClass}
    for v, cls in classes.items():
        counts[cls] += 1
        side_ok = v in b.side_a if cls.value[0] == "A" else v in b.side_b
        if not side_ok:
            raise RuntimeError(f"class {cls.value} assigned across sides at {v}")
    if not (
        counts[SixClass.A1] == counts[SixClass.A2]
        == counts[SixClass.B1] == counts[SixClass.B2] == ell
    ):
        raise RuntimeError("unbalanced six-class labeling")
    if len(chosen) != 4 * ell or not is_dissociation_set(g, chosen):
        raise RuntimeError("labeled vertex set is not a valid dissociation set")
    used = m.edges | m2.edges
    for u, v in g.edge_list:
        if (u, v) in used:
            continue
        if classes[u] not in _BLOCKED and classes[v] not in _BLOCKED:
            raise RuntimeError(f"stray edge ({u}, {v}) misses A4 and B4")
    # matched-pair bookkeeping of the blocked classes
    if len(d.paths) != 2 * ell - (counts[SixClass.A4] + counts[SixClass.B4]):
        raise RuntimeError("path count disagrees with blocked-class sizes")


def recognize_extremal(g: Graph, m: Matching) -> RecognitionOutcome:
    """Decide whether diss(g) equals 4/3 of alpha(g - m) for maximum m.

    Returns Extremal with the six-class labeling and a maximum dissociation
    set, or NotExtremal with the first failed necessary condition. Raises
    NotBipartiteError for non-bipartite input and ValueError when m is not
    a matching of g.
    """
    b = bipartition(g)
    if not is_matching(g, m.edges):
        raise ValueError("edge set is not a matching of the graph")
    if has_augmenting_path(g, b, m):
        return NotExtremal(
            NotExtremalReason.NOT_MAXIMUM_MATCHING,
            "matching admits an augmenting path",
        )
    m2 = maximum_matching(remove_edges(g, m.edges), b)
    if len(m.edges) != len(m2.edges):
        return NotExtremal(
            NotExtremalReason.MATCHING_SIZE_MISMATCH,
            f"|M|={len(m.edges)} |M'|={len(m2.edges)}",
        )
    d = decompose_alternating(g, b, m, m2)
    failure = check_component_lengths(d)
    if failure is not None:
        return NotExtremal(failure.reason, failure.detail)
    labels = label_path_components(d, b, m, m2)
    failure = check_path_path_edges(g, m, m2, labels)
    if failure is not None:
        return NotExtremal(failure.reason, failure.detail)
    formula, _ = build_2sat(g, d, b, m, m2, labels)
    assignment = solve_2sat(formula)
    if assignment is None:
        return NotExtremal(
            NotExtremalReason.TWO_SAT_UNSAT,
            "no consistent rotation of the cycle components exists",
        )
    classes = _complete_labeling(d, labels, assignment)
    ell = sum(1 for cls in classes.values() if cls is SixClass.A1)
    chosen = frozenset(v for v, cls in classes.items() if cls in _IN_SET)
    _validate_extremal(g, b, m, m2, d, classes, ell, chosen)
    return Extremal(SixLabeling(classes, ell), chosen)
