"""Exhaustive oracles: dissociation number, independence number, induced
matching number, and the inequality-chain report tying them together.

All solvers are branch-and-bound over bitmask vertex sets. They are the
ground truth the approximation, recognizer, and gadget modules are tested
against, so they stay deliberately simple: max-degree branching, greedy
inclusion of vertices that cannot hurt, and the trivial counting bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph
from .matching import Matching, matching_from_edges

__all__ = [
    "InstanceTooLarge",
    "InvariantReport",
    "DISS_ALPHA_CUTOFF",
    "INDUCED_MATCHING_CUTOFF",
    "is_dissociation_set",
    "is_independent_set",
    "dissociation_number_exact",
    "independence_number_exact",
    "induced_matching_number_exact",
    "diss_via_induced_matchings",
    "check_inequality_chain",
    "matching_number_bruteforce",
]

DISS_ALPHA_CUTOFF = 30
INDUCED_MATCHING_CUTOFF = 24


class InstanceTooLarge(RuntimeError):
    def __init__(self, n: int, cutoff: int):
        super().__init__(f"instance has {n} vertices, cutoff is {cutoff}")
        self.n = n
        self.cutoff = cutoff


def is_dissociation_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex of s has at most one neighbour inside s."""
    mask = 0
    for v in s:
        mask |= 1 << v
    adj = g.adjacency_masks
    w = mask
    while w:
        b = w & -w
        w ^= b
        if (adj[b.bit_length() - 1] & mask).bit_count() > 1:
            return False
    return True


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    mask = 0
    for v in s:
        mask |= 1 << v
    adj = g.adjacency_masks
    w = mask
    while w:
        b = w & -w
        w ^= b
        if adj[b.bit_length() - 1] & mask:
            return False
    return True


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return frozenset(out)


def dissociation_number_exact(
    g: Graph, *, cutoff: int = DISS_ALPHA_CUTOFF
) -> tuple[int, frozenset[int]]:
    """Exact diss(g) with a witness.

    Branches on a maximum-residual-degree vertex (lowest index on ties);
    chosen vertices carry at most one chosen neighbour, and pairing two
    chosen vertices excludes all their other neighbours. Residual-degree-0
    and residual-degree-1 vertices are taken greedily (safe by a direct
    exchange argument).
    """
    n = g.n
    if n > cutoff:
        raise InstanceTooLarge(n, cutoff)
    if n == 0:
        return 0, frozenset()
    adj = g.adjacency_masks
    best_size = -1
    best_mask = 0

    def rec(undecided: int, chosen: int, free: int, size: int) -> None:
        nonlocal best_size, best_mask
        # sweep: settle vertices with residual degree <= 1
        progress = True
        while progress:
            progress = False
            w = undecided
            while w:
                bit = w & -w
                w ^= bit
                if not undecided & bit:
                    continue  # settled earlier in this pass
                v = bit.bit_length() - 1
                du = adj[v] & undecided
                cn = adj[v] & chosen
                if cn & (cn - 1):
                    # two chosen neighbours: v can never join
                    undecided ^= bit
                    progress = True
                elif du == 0:
                    undecided ^= bit
                    progress = True
                    if cn == 0:
                        chosen |= bit
                        free |= bit
                        size += 1
                    elif cn & free:
                        # pair v with its chosen neighbour
                        u = cn.bit_length() - 1
                        chosen |= bit
                        free &= ~cn
                        size += 1
                        undecided &= ~adj[u]
                    # else: neighbour already paired, v stays out
                elif du & (du - 1) == 0 and cn == 0:
                    # residual leaf with no chosen neighbour: take it free
                    undecided ^= bit
                    chosen |= bit
                    free |= bit
                    size += 1
                    progress = True
        if size > best_size:
            best_size = size
            best_mask = chosen
        if size + undecided.bit_count() <= best_size or not undecided:
            return
        # branch vertex: max residual degree, lowest index on ties
        bv = -1
        bd = -1
        w = undecided
        while w:
            bit = w & -w
            w ^= bit
            v = bit.bit_length() - 1
            d = (adj[v] & undecided).bit_count()
            if d > bd:
                bd = d
                bv = v
        bit = 1 << bv
        cn = adj[bv] & chosen
        if cn == 0:
            rec(undecided ^ bit, chosen | bit, free | bit, size + 1)
        elif cn & (cn - 1) == 0 and cn & free:
            u = cn.bit_length() - 1
            rec(
                undecided & ~bit & ~adj[bv] & ~adj[u],
                chosen | bit,
                free & ~cn,
                size + 1,
            )
        rec(undecided ^ bit, chosen, free, size)

    rec((1 << n) - 1, 0, 0, 0)
    witness = _mask_to_set(best_mask)
    assert is_dissociation_set(g, witness)
    return best_size, witness


def _walk_order(comp_mask: int, adj: tuple[int, ...], start: int) -> list[int]:
    """Order a path/cycle component starting at ``start`` (lowest neighbour first)."""
    size = comp_mask.bit_count()
    order = [start]
    prev = -1
    cur = start
    while len(order) < size:
        nxt = -1
        w = adj[cur] & comp_mask
        while w:
            b = w & -w
            w ^= b
            cand = b.bit_length() - 1
            if cand != prev:
                nxt = cand
                break
        if nxt == -1:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def _deg2_independent(avail: int, adj: tuple[int, ...]) -> tuple[int, int]:
    """Optimal independent set of a max-degree-<=2 residual (paths/cycles)."""
    total = 0
    mask = 0
    remaining = avail
    while remaining:
        b = remaining & -remaining
        start = b.bit_length() - 1
        comp_mask = b
        stack = [start]
        while stack:
            v = stack.pop()
            w = adj[v] & avail & ~comp_mask
            while w:
                b2 = w & -w
                comp_mask |= b2
                stack.append(b2.bit_length() - 1)
                w ^= b2
        remaining &= ~comp_mask
        size = comp_mask.bit_count()
        endpoint = -1
        w = comp_mask
        while w:
            b2 = w & -w
            w ^= b2
            v = b2.bit_length() - 1
            if (adj[v] & comp_mask).bit_count() <= 1:
                endpoint = v
                break
        if endpoint != -1:
            # path of k vertices: every other vertex, ceil(k/2) of them
            order = _walk_order(comp_mask, adj, endpoint)
            picks = range(0, size, 2)
        else:
            # cycle of k vertices: floor(k/2) alternating vertices
            order = _walk_order(comp_mask, adj, start)
            picks = range(0, 2 * (size // 2) - 1, 2)
        for i in picks:
            total += 1
            mask |= 1 << order[i]
    return total, mask


def _max_independent_set(n: int, adj: tuple[int, ...], avail0: int) -> tuple[int, int]:
    best_size = -1
    best_mask = 0

    def rec(avail: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        progress = True
        while progress:
            progress = False
            w = avail
            while w:
                bit = w & -w
                w ^= bit
                v = bit.bit_length() - 1
                d = adj[v] & avail & ~bit
                if d == 0:
                    avail ^= bit
                    chosen |= bit
                    size += 1
                    progress = True
                elif d & (d - 1) == 0:
                    # leaf: taking it is always optimal
                    avail &= ~(bit | d)
                    chosen |= bit
                    size += 1
                    progress = True
                    break
        if avail:
            max_deg = 0
            bv = -1
            w = avail
            while w:
                bit = w & -w
                w ^= bit
                v = bit.bit_length() - 1
                d = (adj[v] & avail).bit_count() - (1 if adj[v] & bit else 0)
                if d > max_deg:
                    max_deg = d
                    bv = v
            if max_deg <= 2:
                extra, emask = _deg2_independent(avail, adj)
                size += extra
                chosen |= emask
                avail = 0
            else:
                if size > best_size:
                    best_size = size
                    best_mask = chosen
                if size + avail.bit_count() <= best_size:
                    return
                bit = 1 << bv
                rec(avail & ~(bit | adj[bv]), chosen | bit, size + 1)
                rec(avail ^ bit, chosen, size)
                return
        if size > best_size:
            best_size = size
            best_mask = chosen

    rec(avail0, 0, 0)
    return best_size, best_mask


def independence_number_exact(
    g: Graph, *, cutoff: int = DISS_ALPHA_CUTOFF
) -> tuple[int, frozenset[int]]:
    """Exact independence number with a witness (branch and bound)."""
    n = g.n
    if n > cutoff:
        raise InstanceTooLarge(n, cutoff)
    if n == 0:
        return 0, frozenset()
    size, mask = _max_independent_set(n, g.adjacency_masks, (1 << n) - 1)
    witness = _mask_to_set(mask)
    assert is_independent_set(g, witness)
    return size, witness


def _edge_conflicts(g: Graph) -> tuple[list[tuple[int, int]], list[int]]:
    """Conflict masks for edges: sharing a vertex or joined by a host edge."""
    edges = list(g.edge_list)
    adj = g.adjacency_masks
    k = len(edges)
    ep = [(1 << u) | (1 << v) for u, v in edges]
    reach = [(adj[u] | adj[v]) for u, v in edges]
    conflict = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if ep[i] & ep[j] or reach[i] & ep[j]:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
    return edges, conflict


def induced_matching_number_exact(
    g: Graph, *, cutoff: int = INDUCED_MATCHING_CUTOFF
) -> tuple[int, Matching]:
    """Exact induced matching number via edge search with conflict pruning."""
    if g.n > cutoff:
        raise InstanceTooLarge(g.n, cutoff)
    edges, conflict = _edge_conflicts(g)
    k = len(edges)
    if k == 0:
        return 0, Matching(frozenset(), True)
    best_size = 0
    best_mask = 0

    def rec(avail: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        # edges with no remaining conflicts can always be added
        w = avail
        while w:
            bit = w & -w
            w ^= bit
            e = bit.bit_length() - 1
            if conflict[e] & avail == 0:
                avail ^= bit
                chosen |= bit
                size += 1
        if size > best_size:
            best_size = size
            best_mask = chosen
        if not avail or size + avail.bit_count() <= best_size:
            return
        # branch on the most-conflicted available edge
        be = -1
        bd = -1
        w = avail
        while w:
            bit = w & -w
            w ^= bit
            e = bit.bit_length() - 1
            d = (conflict[e] & avail).bit_count()
            if d > bd:
                bd = d
                be = e
        bit = 1 << be
        rec(avail & ~bit & ~conflict[be], chosen | bit, size + 1)
        rec(avail ^ bit, chosen, size)

    rec((1 << k) - 1, 0, 0)
    picked = [edges[i] for i in range(k) if (best_mask >> i) & 1]
    matching = matching_from_edges(g, picked)
    assert matching.induced
    return best_size, matching


def diss_via_induced_matchings(
    g: Graph, *, cutoff: int = INDUCED_MATCHING_CUTOFF
) -> int:
    """max over induced matchings M (empty included) of alpha(g - M).

    alpha(g - M) is monotone in M (removing more edges never shrinks it),
    so only maximal induced matchings need evaluating; the empty matching
    is the maximal one exactly when g has no edges.
    """
    if g.n > cutoff:
        raise InstanceTooLarge(g.n, cutoff)
    edges, conflict = _edge_conflicts(g)
    k = len(edges)
    base_adj = g.adjacency_masks
    full_vertices = (1 << g.n) - 1 if g.n else 0
    if k == 0:
        return g.n
    full_edges = (1 << k) - 1
    best = -1

    def evaluate(chosen: int) -> None:
        nonlocal best
        masks = list(base_adj)
        w = chosen
        while w:
            bit = w & -w
            w ^= bit
            u, v = edges[bit.bit_length() - 1]
            masks[u] &= ~(1 << v)
            masks[v] &= ~(1 << u)
        size, _ = _max_independent_set(g.n, tuple(masks), full_vertices)
        if size > best:
            best = size

    def rec(avail: int, chosen: int, blocked: int) -> None:
        if not avail:
            if full_edges & ~chosen & ~blocked:
                return  # extendable: a strictly better superset is visited elsewhere
            evaluate(chosen)
            return
        bit = avail & -avail
        e = bit.bit_length() - 1
        rec(avail & ~bit & ~conflict[e], chosen | bit, blocked | conflict[e])
        rec(avail ^ bit, chosen, blocked)

    rec(full_edges, 0, 0)
    return best


@dataclass(frozen=True)
class InvariantReport:
    """diss/alpha/nu_s with witnesses and the five equality flags."""

    diss: int
    alpha: int
    nu_s: int
    diss_witness: frozenset[int]
    alpha_witness: frozenset[int]
    nu_s_witness: Matching
    diss_eq_2alpha: bool
    diss_eq_2nus: bool
    diss_eq_alpha: bool
    diss_eq_alpha_plus_nus: bool
    alpha_plus_nus_eq_2alpha: bool


def check_inequality_chain(
    g: Graph,
    *,
    cutoff: int = DISS_ALPHA_CUTOFF,
    nus_cutoff: int = INDUCED_MATCHING_CUTOFF,
) -> InvariantReport:
    """Compute all three invariants and the equality flags between them.

    The chain max(alpha, 2 nu_s) <= diss <= alpha + nu_s <= 2 alpha is
    asserted; a violation would mean a solver bug.
    """
    diss, dw = dissociation_number_exact(g, cutoff=cutoff)
    alpha, aw = independence_number_exact(g, cutoff=cutoff)
    nu_s, mw = induced_matching_number_exact(g, cutoff=nus_cutoff)
    assert max(alpha, 2 * nu_s) <= diss <= alpha + nu_s <= 2 * alpha
    return InvariantReport(
        diss=diss,
        alpha=alpha,
        nu_s=nu_s,
        diss_witness=dw,
        alpha_witness=aw,
        nu_s_witness=mw,
        diss_eq_2alpha=diss == 2 * alpha,
        diss_eq_2nus=diss == 2 * nu_s,
        diss_eq_alpha=diss == alpha,
        diss_eq_alpha_plus_nus=diss == alpha + nu_s,
        alpha_plus_nus_eq_2alpha=alpha + nu_s == 2 * alpha,
    )


def matching_number_bruteforce(g: Graph) -> int:
    """Matching number by memoized exhaustive search (independent of HK)."""
    adj = g.adjacency_masks
    memo: dict[int, int] = {}

    def rec(avail: int) -> int:
        while avail:
            bit = avail & -avail
            v = bit.bit_length() - 1
            if adj[v] & avail:
                break
            avail ^= bit
        else:
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        bit = avail & -avail
        v = bit.bit_length() - 1
        best = rec(avail ^ bit)
        w = adj[v] & avail
        while w:
            b2 = w & -w
            w ^= b2
            best = max(best, 1 + rec(avail ^ bit ^ b2))
        memo[avail] = best
        return best

    return rec((1 << g.n) - 1 if g.n else 0)
