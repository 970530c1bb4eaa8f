"""Linear invariants, destabilizers, stability and edge criticality."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .alpha import alpha, alpha_of_mask, has_independent_set
from .graph import Graph, bits, graph6_encode, mask_of


@dataclass(frozen=True)
class LinearInvariant:
    """``a*e(G) - b*n(G) + c*alpha(G)``."""

    a: int
    b: int
    c: int
    name: str = ""

    def value(self, g: Graph, alpha_value: int | None = None) -> int:
        if alpha_value is None:
            alpha_value = alpha(g)
        return self.a * g.e - self.b * g.n + self.c * alpha_value


T = LinearInvariant(1, 6, 13, "t")
Q = LinearInvariant(1, 5, 10, "q")
# integer forms of the 6.8- and 8-invariants
ELL_6_8 = LinearInvariant(5, 34, 78, "5*l6.8")
ELL_8 = LinearInvariant(2, 16, 39, "2*l8")


def t_value(g: Graph, alpha_value: int | None = None) -> int:
    return T.value(g, alpha_value)


def q_value(g: Graph, alpha_value: int | None = None) -> int:
    return Q.value(g, alpha_value)


def ell_value(g: Graph, inv: LinearInvariant, alpha_value: int | None = None) -> int:
    return inv.value(g, alpha_value)


def _drops(adj, full, a, m):
    """Does removing ``m`` lower the independence number below ``a``?"""
    return not has_independent_set(adj, full & ~m, a)


def is_destabilizer(g: Graph, m) -> bool:
    """True iff deleting the vertices of ``m`` lowers the independence number."""
    mm = mask_of(m)
    if mm >> g.n:
        raise IndexError("vertex set references vertices outside the graph")
    a = alpha(g)
    if a == 0:
        return False
    return _drops(g.adj, (1 << g.n) - 1, a, mm)


@dataclass(frozen=True)
class Destabilizer:
    vertices: tuple[int, ...]
    independent: bool

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class DestabilizerCatalog:
    graph: Graph
    max_size: int
    sets: tuple[Destabilizer, ...] = field(default=())

    def vertex_sets(self) -> list[frozenset[int]]:
        return [frozenset(d.vertices) for d in self.sets]

    def to_json(self) -> dict:
        return {
            "graph": graph6_encode(self.graph),
            "max_size": self.max_size,
            "sets": [list(d.vertices) for d in self.sets],
            "independent": [d.independent for d in self.sets],
        }


def minimal_destabilizers(g: Graph, max_size: int) -> DestabilizerCatalog:
    """All inclusion-minimal destabilizers with at most ``max_size`` vertices.

    Sets come in size order, then lexicographic order.
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    adj = g.adj
    full = (1 << g.n) - 1
    a = alpha_of_mask(adj, full)
    found = []
    if a == 0:
        return DestabilizerCatalog(g, max_size, ())
    found_masks = []
    for size in range(1, min(max_size, g.n) + 1):
        for combo in combinations(range(g.n), size):
            m = mask_of(combo)
            if any(f & m == f for f in found_masks):
                continue
            if not _drops(adj, full, a, m):
                continue
            if any(_drops(adj, full, a, m & ~(1 << x)) for x in combo):
                continue
            independent = not any(adj[v] & m for v in combo)
            found.append(Destabilizer(combo, independent))
        found_masks.extend(mask_of(d.vertices) for d in found if len(d.vertices) == size)
    return DestabilizerCatalog(g, max_size, tuple(found))


def is_s_stable(g: Graph, s: int) -> bool:
    """No destabilizer of size at most ``s``.

    Supersets of destabilizers destabilize, so only sets of size
    ``min(s, n)`` need scanning.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    adj = g.adj
    full = (1 << g.n) - 1
    a = alpha_of_mask(adj, full)
    if a == 0 or s == 0:
        return True
    size = min(s, g.n)
    return not any(_drops(adj, full, a, mask_of(c)) for c in combinations(range(g.n), size))


def independent_sets_of_size(adj: tuple[int, ...], mask: int, size: int):
    """Yield bitmasks of the independent ``size``-subsets of ``mask``, lexicographically."""
    if size == 0:
        yield 0
        return

    def rec(avail, need, acc):
        if need == 0:
            yield acc
            return
        while avail and avail.bit_count() >= need:
            low = avail & -avail
            v = low.bit_length() - 1
            avail ^= low
            yield from rec(avail & ~adj[v], need - 1, acc | low)

    yield from rec(mask, size, 0)


def is_strongly_s_stable(g: Graph, s: int) -> bool:
    """s-stable, and no independent ``(s+1)``-set destabilizes.

    The independent sets are not required to be minimal destabilizers.
    """
    if not is_s_stable(g, s):
        return False
    adj = g.adj
    full = (1 << g.n) - 1
    a = alpha_of_mask(adj, full)
    if a == 0:
        return True
    return not any(_drops(adj, full, a, m) for m in independent_sets_of_size(adj, full, s + 1))


def redundant_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges whose removal leaves the independence number unchanged."""
    adj = g.adj
    full = (1 << g.n) - 1
    a = alpha_of_mask(adj, full)
    out = []
    for u, v in g.edges():
        # removing uv raises alpha iff some independent a-set of G_{u,v} avoids N(u) and N(v)
        rest = full & ~(adj[u] | adj[v] | (1 << u) | (1 << v))
        if not has_independent_set(adj, rest, a - 1):
            out.append((u, v))
    return out


def is_edge_critical(g: Graph) -> bool:
    """Every edge removal raises alpha; edgeless graphs qualify vacuously."""
    return not redundant_edges(g)
