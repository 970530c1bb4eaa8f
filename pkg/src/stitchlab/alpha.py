"""Exact maximum independent sets by branch and bound on bitmasks."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits


@dataclass(frozen=True)
class AlphaResult:
    alpha: int
    witness: frozenset[int]


def _clique_cover_bound(adj, mask):
    """Greedy clique cover size of ``mask``: an upper bound on its independence number."""
    count = 0
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        clique = low
        cand = adj[v] & mask
        while cand:
            u_low = cand & -cand
            u = u_low.bit_length() - 1
            clique |= u_low
            cand &= adj[u]
        mask &= ~clique
        count += 1
    return count


class _MIS:
    """Search state shared by the optimisation and decision variants."""

    __slots__ = ("adj", "best", "best_set", "target")

    def __init__(self, adj, target=None):
        self.adj = adj
        self.best = -1
        self.best_set = 0
        # stop as soon as an independent set of this size is found
        self.target = target

    def run(self, mask, size=0, chosen=0):
        adj = self.adj
        # take isolated and pendant vertices greedily
        while mask:
            picked = False
            m = mask
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                nb = adj[v] & mask
                if nb & (nb - 1) == 0:
                    chosen |= low
                    size += 1
                    mask &= ~(low | nb)
                    m &= mask
                    picked = True
            if not picked:
                break
        if not mask:
            if size > self.best:
                self.best = size
                self.best_set = chosen
            return self.target is not None and self.best >= self.target
        if size + mask.bit_count() <= self.best:
            return False
        if size + _clique_cover_bound(adj, mask) <= self.best:
            return False
        # branch on a vertex of maximum degree, lowest index on ties
        best_v = -1
        best_d = -1
        for v in bits(mask):
            d = (adj[v] & mask).bit_count()
            if d > best_d:
                best_d = d
                best_v = v
        low = 1 << best_v
        if self.run(mask & ~(low | adj[best_v]), size + 1, chosen | low):
            return True
        return self.run(mask & ~low, size, chosen)


def alpha_of_mask(adj: tuple[int, ...], mask: int) -> int:
    """Independence number of the subgraph induced on ``mask``."""
    if not mask:
        return 0
    s = _MIS(adj)
    s.run(mask)
    return s.best


def mis_of_mask(adj: tuple[int, ...], mask: int) -> tuple[int, int]:
    if not mask:
        return 0, 0
    s = _MIS(adj)
    s.run(mask)
    return s.best, s.best_set


def independence_number(g: Graph) -> AlphaResult:
    size, chosen = mis_of_mask(g.adj, (1 << g.n) - 1)
    return AlphaResult(size, frozenset(bits(chosen)))


def alpha(g: Graph) -> int:
    return alpha_of_mask(g.adj, (1 << g.n) - 1)


def has_independent_set(adj: tuple[int, ...], mask: int, size: int) -> bool:
    """True iff the subgraph induced on ``mask`` has an independent set of ``size``."""
    if size <= 0:
        return True
    if mask.bit_count() < size:
        return False
    s = _MIS(adj, target=size)
    s.best = size - 1
    s.run(mask)
    return s.best >= size


def alpha_at_most(g: Graph, k: int) -> bool:
    """True iff ``alpha(g) <= k``; stops at the first independent ``(k+1)``-set."""
    if k < 0:
        raise ValueError("bound must be non-negative")
    return not has_independent_set(g.adj, (1 << g.n) - 1, k + 1)


def count_maximum_independent_sets(g: Graph) -> int:
    """Number of independent sets of size exactly ``alpha(g)``; 1 for the empty graph."""
    adj = g.adj
    a = alpha(g)
    if a == 0:
        return 1

    def count(mask, need):
        if need == 0:
            return 1
        if mask.bit_count() < need or _clique_cover_bound(adj, mask) < need:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        return count(rest & ~adj[v], need - 1) + count(rest, need)

    return count((1 << g.n) - 1, a)
