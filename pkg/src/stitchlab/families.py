"""Deterministic constructors for chains, bicycles, loop-chains and W13.

Labelings are fixed so that every constructor output is byte-stable:

* ``bicycle(k)``: outer vertices ``d_1..d_2k`` are ``0..2k-1`` and inner
  vertices ``e_1..e_k`` are ``2k..3k-1``.
* each 2-stitch appends, in order, the joiner of the first base part, the
  joiner of the second base part, and the apex.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .alpha import alpha_of_mask, has_independent_set
from .graph import Graph, bits, mask_of
from .stability import is_edge_critical


class Attachment(enum.Enum):
    STAR13 = "star"
    PATH4 = "path"
    CYCLE4 = "cycle"

    @classmethod
    def parse(cls, text: str) -> Attachment:
        aliases = {
            "star": cls.STAR13, "star13": cls.STAR13, "k13": cls.STAR13,
            "path": cls.PATH4, "path4": cls.PATH4, "p4": cls.PATH4,
            "cycle": cls.CYCLE4, "cycle4": cls.CYCLE4, "c4": cls.CYCLE4,
        }
        try:
            return aliases[text.lower()]
        except KeyError:
            raise ValueError(f"unknown attachment {text!r}; expected star, path or cycle") from None


@dataclass(frozen=True)
class StitchBase:
    part_one: frozenset[int]
    part_two: frozenset[int]

    def __init__(self, part_one, part_two):
        object.__setattr__(self, "part_one", frozenset(part_one))
        object.__setattr__(self, "part_two", frozenset(part_two))

    @property
    def vertices(self) -> frozenset[int]:
        return self.part_one | self.part_two


@dataclass(frozen=True)
class StitchResult:
    graph: Graph
    apex: int
    joiners: tuple[int, int]


class StitchError(ValueError):
    pass


def stitch2(g: Graph, base: StitchBase, *, validate: bool = True, check_minimal: bool = False) -> StitchResult:
    """The 2-stitch of ``g`` over a bipartitioned destabilizer.

    Appends joiner ``w1`` adjacent to ``part_one``, joiner ``w2`` adjacent
    to ``part_two`` and an apex adjacent to both joiners.
    """
    adj = g.adj
    one = mask_of(base.part_one)
    two = mask_of(base.part_two)
    if (one | two) >> g.n:
        raise StitchError("base references vertices outside the graph")
    if validate:
        if not one or not two:
            raise StitchError("both base parts must be nonempty")
        if one & two:
            raise StitchError("base parts overlap")
        for part, name in ((one, "part_one"), (two, "part_two")):
            if any(adj[v] & part for v in bits(part)):
                raise StitchError(f"{name} is not independent")
        full = (1 << g.n) - 1
        a = alpha_of_mask(adj, full)
        m = one | two
        if has_independent_set(adj, full & ~m, a):
            raise StitchError("base is not a destabilizer")
        if check_minimal:
            for x in bits(m):
                if not has_independent_set(adj, full & ~(m & ~(1 << x)), a):
                    raise StitchError("base is not a minimal destabilizer")
    n = g.n
    w1, w2, apex = n, n + 1, n + 2
    rows = list(adj)
    for v in bits(one):
        rows[v] |= 1 << w1
    for v in bits(two):
        rows[v] |= 1 << w2
    rows.append(one | 1 << apex)
    rows.append(two | 1 << apex)
    rows.append(1 << w1 | 1 << w2)
    return StitchResult(Graph(n + 3, rows, check=False), apex, (w1, w2))


def stitch2_at_vertex(g: Graph, v: int, *, validate: bool = True) -> StitchResult:
    """The 2-stitch based at ``v``: base ``B(v;1)`` split as link vs centre."""
    g._check_vertex(v)
    lk = g.adj[v]
    if not lk:
        raise StitchError(f"vertex {v} is isolated; its ball has no bipartition into two parts")
    if any(g.adj[u] & lk for u in bits(lk)):
        raise StitchError(f"link of {v} is not independent (triangle at {v})")
    if validate and not is_edge_critical(g):
        raise StitchError("graph is not edge critical")
    return stitch2(g, StitchBase(bits(lk), [v]), validate=validate)


# -- small helpers -----------------------------------------------------------


def path(i: int) -> Graph:
    if i < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(i, [(v, v + 1) for v in range(i - 1)])


def cycle(i: int) -> Graph:
    if i < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(i, [(v, (v + 1) % i) for v in range(i)])


def complete_bipartite(i: int, j: int) -> Graph:
    if i < 1 or j < 1:
        raise ValueError("both sides of K_{i,j} need at least one vertex")
    return Graph.from_edges(i + j, [(u, i + v) for u in range(i) for v in range(j)])


def star(i: int) -> Graph:
    """K_{1,i} with centre 0."""
    return complete_bipartite(1, i)


def petersen() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- families ---------------------------------------------------------------


def lowest_bivalent(g: Graph) -> int:
    for v, row in enumerate(g.adj):
        if row.bit_count() == 2:
            return v
    raise ValueError("graph has no bivalent vertex")


@lru_cache(maxsize=None)
def chain(k: int) -> Graph:
    """Ch_k: C5 for k = 2, then successive 2-stitches at the lowest bivalent."""
    if k < 2:
        raise ValueError(f"chain needs k >= 2, got {k}")
    if k == 2:
        return cycle(5)
    g = chain(k - 1)
    return stitch2_at_vertex(g, lowest_bivalent(g), validate=False).graph


def outer(i: int, k: int) -> int:
    """Label of outer vertex ``d_i`` in ``bicycle(k)`` (indices mod 2k)."""
    return (i - 1) % (2 * k)


def inner(i: int, k: int) -> int:
    """Label of inner vertex ``e_i`` in ``bicycle(k)`` (indices mod k)."""
    return 2 * k + (i - 1) % k


@lru_cache(maxsize=None)
def bicycle(k: int) -> Graph:
    """BC_k: outer 2k-cycle, inner k-cycle, spokes ``d_{2i-2} e_i`` and ``d_{2i+1} e_i``."""
    if k < 4:
        raise ValueError(f"bicycle needs k >= 4, got {k}")
    edges = [(outer(i, k), outer(i + 1, k)) for i in range(1, 2 * k + 1)]
    edges += [(inner(i, k), inner(i + 1, k)) for i in range(1, k + 1)]
    for i in range(1, k + 1):
        edges.append((outer(2 * i - 2, k), inner(i, k)))
        edges.append((outer(2 * i + 1, k), inner(i, k)))
    return Graph.from_edges(3 * k, edges)


def bicycle_base(k: int, att: Attachment, anchor: int = 1) -> StitchBase:
    """The size-4 destabilizer of ``bicycle(k)`` of shape ``att`` at ``anchor``.

    ``STAR13``: ``B(d_a; 1)`` split centre vs its three neighbours.
    ``PATH4``: ``{d_{2a-1}, d_{2a}, d_{2a+1}, d_{2a+2}}`` split odd/even.
    ``CYCLE4``: ``{d_{2a}, d_{2a+1}, e_a, e_{a+1}}`` split into diagonals.
    """
    if att is Attachment.STAR13:
        g = bicycle(k)
        centre = outer(anchor, k)
        return StitchBase([centre], bits(g.adj[centre]))
    if att is Attachment.PATH4:
        a = anchor
        return StitchBase([outer(2 * a - 1, k), outer(2 * a + 1, k)], [outer(2 * a, k), outer(2 * a + 2, k)])
    if att is Attachment.CYCLE4:
        a = anchor
        return StitchBase([outer(2 * a, k), inner(a, k)], [outer(2 * a + 1, k), inner(a + 1, k)])
    raise TypeError(f"not an attachment: {att!r}")


@lru_cache(maxsize=None)
def loop_chain(l: int, m: int, att: Attachment) -> Graph:
    """A bicycle BC_l with a pending chain of ``m`` 2-stitches.

    The first stitch uses the canonical destabilizer of shape ``att``
    anchored at index 1; every later stitch is based at the previous apex.
    """
    if l < 4:
        raise ValueError(f"loop-chain needs l >= 4, got {l}")
    if m < 1:
        raise ValueError(f"loop-chain needs m >= 1, got {m}")
    att = Attachment(att)
    res = stitch2(bicycle(l), bicycle_base(l, att), validate=False)
    for _ in range(m - 1):
        res = stitch2_at_vertex(res.graph, res.apex, validate=False)
    return res.graph


@lru_cache(maxsize=None)
def w13() -> Graph:
    """The circulant on Z_13 with connection set {1, 5, 8, 12}."""
    roots = {1, 5, 8, 12}
    return Graph.from_edges(13, [(x, y) for x in range(13) for y in range(x + 1, 13) if (x - y) % 13 in roots])


def parse_family(spec: str) -> Graph:
    """Build a graph from a specifier such as ``chain:4`` or ``loopchain:4:2:path``."""
    parts = spec.strip().split(":")
    kind = parts[0].lower()
    args = parts[1:]

    def ints(count):
        if len(args) != count:
            raise ValueError(f"{kind} expects {count} parameter(s), got {spec!r}")
        try:
            return [int(x) for x in args]
        except ValueError:
            raise ValueError(f"non-integer parameter in {spec!r}") from None

    if kind == "chain":
        return chain(*ints(1))
    if kind == "bicycle":
        return bicycle(*ints(1))
    if kind == "w13":
        ints(0)
        return w13()
    if kind == "cycle":
        return cycle(*ints(1))
    if kind == "path":
        return path(*ints(1))
    if kind == "star":
        return star(*ints(1))
    if kind == "petersen":
        ints(0)
        return petersen()
    if kind in ("loopchain", "loop_chain"):
        if len(args) != 3:
            raise ValueError(f"loopchain expects l:m:attachment, got {spec!r}")
        try:
            l, m = int(args[0]), int(args[1])
        except ValueError:
            raise ValueError(f"non-integer parameter in {spec!r}") from None
        return loop_chain(l, m, Attachment.parse(args[2]))
    raise ValueError(f"unknown family {kind!r}")
