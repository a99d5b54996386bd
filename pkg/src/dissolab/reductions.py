"""Hardness gadget constructors with predicted-invariant metadata.

Each constructor returns a :class:`GadgetInstance`: the graph, per-vertex
role tags, and a prediction map mixing unconditional values (checked
exactly against the oracles in tests) with biconditional markers tying an
invariant equality on the gadget to a property of the source instance.

Gadget kinds (also the CLI tokens):

* ``fig3`` - one 4-clique per 3-CNF clause (three literal vertices plus a
  hub), cross edges between complementary literal occurrences in different
  clauses. Satisfiability of the formula is equivalent to diss = 2 alpha
  and to diss = 2 nu_s on the gadget.
* ``fig4`` - one octahedron-like block per clause (K6 minus a perfect
  matching), cross edges only between the literal-bearing halves.
  Satisfiability is equivalent to diss = alpha.
* ``is`` - from an Independent-Set instance (g, k): pendants on every
  vertex plus a fully joined (k-1)K2 block. alpha(g) >= k is equivalent to
  diss < alpha + nu_s on the gadget.
* ``join`` - g joined completely to a same-order clique, with the aligned
  cross perfect matching; alpha and diss survive both the join and the
  matching removal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .graph import Graph, new_graph, ParseError
from .matching import Matching, matching_from_edges
from .exact import (
    DISS_ALPHA_CUTOFF,
    dissociation_number_exact,
    independence_number_exact,
)
from .twosat import Literal

__all__ = [
    "CnfFormula",
    "GadgetInstance",
    "PreconditionFailed",
    "cnf_formula",
    "parse_cnf",
    "gadget_diss_2alpha",
    "gadget_diss_alpha",
    "gadget_diss_alpha_plus_nus",
    "gadget_join_kn",
    "render_gadget",
    "parse_gadget_metadata",
]


class PreconditionFailed(ValueError):
    """A gadget's stated input hypothesis does not hold."""


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF: every clause has exactly three literals over distinct variables."""

    var_count: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...]


def cnf_formula(
    var_count: int, clauses: Iterable[Sequence[Literal]]
) -> CnfFormula:
    checked = []
    for clause in clauses:
        lits = tuple(clause)
        if len(lits) != 3:
            raise ValueError(f"clause {lits} must have exactly 3 literals")
        variables = [var for var, _ in lits]
        if len(set(variables)) != 3:
            raise ValueError(f"clause {lits} repeats a variable")
        for var in variables:
            if not 0 <= var < var_count:
                raise ValueError(f"variable {var} out of range")
        checked.append(lits)
    return CnfFormula(var_count, tuple(checked))


def parse_cnf(text: str) -> CnfFormula:
    """DIMACS CNF: ``p cnf <vars> <clauses>`` then 0-terminated clauses."""
    var_count = -1
    declared = 0
    clauses: list[list[Literal]] = []
    current: list[Literal] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if var_count >= 0:
                raise ParseError(line_no, "duplicate header")
            if len(fields) != 4 or fields[1] != "cnf":
                raise ParseError(line_no, f"malformed header {line!r}")
            var_count, declared = int(fields[2]), int(fields[3])
            continue
        if var_count < 0:
            raise ParseError(line_no, "clause before header")
        for token in fields:
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(line_no, f"bad literal {token!r}") from None
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                var = abs(lit) - 1
                if var >= var_count:
                    raise ParseError(line_no, f"variable {abs(lit)} out of range")
                current.append((var, lit > 0))
    if var_count < 0:
        raise ParseError(1, "missing header")
    if current:
        raise ParseError(1, "unterminated clause (missing 0)")
    if len(clauses) != declared:
        raise ParseError(1, f"header declares {declared} clauses, found {len(clauses)}")
    return cnf_formula(var_count, clauses)


@dataclass(frozen=True)
class GadgetInstance:
    graph: Graph
    kind: str
    predicted: Mapping[str, object]
    vertex_roles: Mapping[int, str]


def _literal_tag(lit: Literal) -> str:
    var, positive = lit
    return f"{'' if positive else '~'}x{var + 1}"


def gadget_diss_2alpha(f: CnfFormula) -> GadgetInstance:
    """Clause-clique gadget: order 4m, alpha = m, diss = alpha + nu_s always."""
    m = len(f.clauses)
    n = 4 * m
    edges: list[tuple[int, int]] = []
    roles: dict[int, str] = {}
    occurrences: list[tuple[int, Literal]] = []
    for i, clause in enumerate(f.clauses):
        members = [3 * i, 3 * i + 1, 3 * i + 2, 3 * m + i]
        for p, lit in enumerate(clause):
            roles[3 * i + p] = f"lit:{i}:{p}:{_literal_tag(lit)}"
            occurrences.append((3 * i + p, lit))
        roles[3 * m + i] = f"hub:{i}"
        for a in range(4):
            for c in range(a + 1, 4):
                edges.append((members[a], members[c]))
    for idx, (u, (var_u, pol_u)) in enumerate(occurrences):
        for v, (var_v, pol_v) in occurrences[idx + 1:]:
            if var_u == var_v and pol_u != pol_v and u // 3 != v // 3:
                edges.append((u, v))
    predicted = {
        "order": n,
        "alpha": m,
        "diss_eq_alpha_plus_nus": "always",
        "diss_eq_2alpha": "iff-satisfiable",
        "diss_eq_2nus": "iff-satisfiable",
    }
    return GadgetInstance(new_graph(n, edges), "fig3", predicted, roles)


def gadget_diss_alpha(f: CnfFormula) -> GadgetInstance:
    """Doubled-clause gadget: order 6m, diss = 2m; diss = alpha iff satisfiable."""
    m = len(f.clauses)
    n = 6 * m
    edges: list[tuple[int, int]] = []
    roles: dict[int, str] = {}
    occurrences: list[tuple[int, Literal]] = []
    for i, clause in enumerate(f.clauses):
        block = list(range(6 * i, 6 * i + 6))
        for p, lit in enumerate(clause):
            roles[block[p]] = f"lit:{i}:{p}:{_literal_tag(lit)}"
            roles[block[p + 3]] = f"twin:{i}:{p}:{_literal_tag(lit)}"
            occurrences.append((block[p], lit))
        # clique on the six, minus the three literal/twin pairs
        for a in range(6):
            for c in range(a + 1, 6):
                if c != a + 3:
                    edges.append((block[a], block[c]))
    for idx, (u, (var_u, pol_u)) in enumerate(occurrences):
        for v, (var_v, pol_v) in occurrences[idx + 1:]:
            if var_u == var_v and pol_u != pol_v and u // 6 != v // 6:
                edges.append((u, v))
    predicted = {
        "order": n,
        "diss": 2 * m,
        "diss_eq_alpha": "iff-satisfiable",
    }
    return GadgetInstance(new_graph(n, edges), "fig4", predicted, roles)


def gadget_diss_alpha_plus_nus(g: Graph, k: int) -> GadgetInstance:
    """Independent-Set gadget with deterministic padding.

    Pads g with t = max(0, n - 2k + 3, 2 - n) isolated vertices and raises
    k by t, enforcing 2(k-1) > n >= 2; then adds a pendant per vertex and a
    (k-1)K2 block joined completely to the original vertices. Equality
    diss = alpha + nu_s on the result fails exactly when alpha(g) >= k.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    n0 = g.n
    t = max(0, n0 - 2 * k + 3, 2 - n0)
    n = n0 + t
    kk = k + t
    edges: list[tuple[int, int]] = list(g.edge_list)
    roles: dict[int, str] = {}
    for v in range(n0):
        roles[v] = f"orig:{v}"
    for v in range(n0, n):
        roles[v] = f"pad:{v}"
    for v in range(n):
        edges.append((v, n + v))
        roles[n + v] = f"pendant:{v}"
    w_start = 2 * n
    for j in range(kk - 1):
        a, c = w_start + 2 * j, w_start + 2 * j + 1
        edges.append((a, c))
        roles[a] = f"w:{j}:0"
        roles[c] = f"w:{j}:1"
    for v in range(n):
        for w in range(w_start, w_start + 2 * (kk - 1)):
            edges.append((v, w))
    order = 2 * n + 2 * (kk - 1)
    predicted = {
        "order": order,
        "alpha": n + kk - 1,
        "diss": n + 2 * (kk - 1),
        "nus_at_least": kk - 1,
        "diss_eq_alpha_plus_nus": "iff-alpha-lt-k",
        "n_original": n0,
        "k_original": k,
        "n_padded": n,
        "k_padded": kk,
    }
    return GadgetInstance(new_graph(order, edges), "is", predicted, roles)


def gadget_join_kn(
    g: Graph, *, cutoff: int = DISS_ALPHA_CUTOFF
) -> tuple[GadgetInstance, Matching]:
    """Join g to a clique of the same order; alpha and diss are preserved.

    Requires alpha(g) >= 3 (checked by the exact oracle). Also returns the
    aligned cross perfect matching M; alpha and diss are unchanged on the
    gadget minus M as well.
    """
    alpha, _ = independence_number_exact(g, cutoff=cutoff)
    if alpha < 3:
        raise PreconditionFailed(f"alpha(g) = {alpha} < 3")
    diss, _ = dissociation_number_exact(g, cutoff=cutoff)
    n = g.n
    edges: list[tuple[int, int]] = list(g.edge_list)
    roles: dict[int, str] = {}
    for v in range(n):
        roles[v] = f"orig:{v}"
        roles[n + v] = f"clique:{v}"
    for u in range(n, 2 * n):
        for v in range(u + 1, 2 * n):
            edges.append((u, v))
    for u in range(n):
        for v in range(n, 2 * n):
            edges.append((u, v))
    graph = new_graph(2 * n, edges)
    matching = matching_from_edges(graph, [(v, n + v) for v in range(n)])
    predicted = {
        "order": 2 * n,
        "alpha": alpha,
        "diss": diss,
        "alpha_minus_matching": alpha,
        "diss_minus_matching": diss,
    }
    return GadgetInstance(graph, "join", predicted, roles), matching


def render_gadget(gi: GadgetInstance, extra: Optional[Mapping[str, object]] = None) -> str:
    """Edge-list text with the metadata sidecar (``c role`` / ``c predict``).

    Vertices are 1-based as in the plain format; parse_edge_list reads the
    graph back directly since metadata lives on comment lines.
    """
    g = gi.graph
    lines = [f"p edge {g.n} {g.m}", f"c kind {gi.kind}"]
    for v in sorted(gi.vertex_roles):
        lines.append(f"c role {v + 1} {gi.vertex_roles[v]}")
    merged = dict(gi.predicted)
    if extra:
        merged.update(extra)
    for name in sorted(merged):
        lines.append(f"c predict {name} {merged[name]}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edge_list)
    return "\n".join(lines) + "\n"


def parse_gadget_metadata(text: str) -> tuple[Optional[str], dict[str, str], dict[int, str]]:
    """Extract (kind, predictions, roles) from a gadget file's comment lines."""
    kind: Optional[str] = None
    predictions: dict[str, str] = {}
    roles: dict[int, str] = {}
    for raw in text.splitlines():
        fields = raw.strip().split()
        if len(fields) >= 3 and fields[0] == "c" and fields[1] == "kind":
            kind = fields[2]
        elif len(fields) >= 4 and fields[0] == "c" and fields[1] == "predict":
            predictions[fields[2]] = " ".join(fields[3:])
        elif len(fields) >= 4 and fields[0] == "c" and fields[1] == "role":
            roles[int(fields[2]) - 1] = " ".join(fields[3:])
    return kind, predictions, roles
