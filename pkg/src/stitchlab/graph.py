"""Immutable simple graphs on ``{0, ..., n-1}`` backed by one bitmask per row.

Vertex sets cross the public API as ``frozenset[int]``; internally every
routine works on Python ints used as bitsets.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable, Iterator

GRAPH6_MAX_N = 62

INFINITY = math.inf


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph with vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  Instances are
    immutable and hashable; equality is equality of labeled graphs.
    """

    __slots__ = ("_n", "_adj", "_e")

    def __init__(self, n: int, adj: Iterable[int] = (), *, check: bool = True) -> None:
        adj = tuple(adj)
        if not adj and n > 0:
            adj = (0,) * n
        if check:
            if n < 0:
                raise ValueError(f"vertex count must be non-negative, got {n}")
            if len(adj) != n:
                raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~full or row < 0:
                    raise ValueError(f"row {v} references a vertex outside 0..{n - 1}")
                if row >> v & 1:
                    raise ValueError(f"self-loop at vertex {v}")
                for u in bits(row):
                    if not adj[u] >> v & 1:
                        raise ValueError(f"adjacency is not symmetric at {{{u}, {v}}}")
        self._n = n
        self._adj = adj
        self._e = sum(row.bit_count() for row in adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from vertex pairs; duplicate pairs collapse."""
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, check=False)

    @property
    def n(self) -> int:
        return self._n

    vertex_count = n

    @property
    def e(self) -> int:
        return self._e

    edge_count = e

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, e={self._e})"

    def __add__(self, other: Graph) -> Graph:
        return disjoint_sum(self, other)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise IndexError(f"vertex {v} outside 0..{self._n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def link(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(bits(self._adj[v]))

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, row in enumerate(self._adj):
            yield from ((u, v) for v in bits(row >> (u + 1) << (u + 1)))

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def without_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"{{{u}, {v}}} is not an edge")
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self._n, adj, check=False)

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the image graph under ``v -> perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise ValueError("perm is not a permutation of the vertex range")
        adj = [0] * self._n
        for v, row in enumerate(self._adj):
            pv = perm[v]
            for u in bits(row):
                adj[pv] |= 1 << perm[u]
        return Graph(self._n, adj, check=False)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges)


# -- graph6 -----------------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    """Encode ``g`` in the short graph6 form (``n <= 62``), without newline."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {n}")
    adj = g.adj
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise ValueError("empty graph6 string")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"invalid graph6 byte {ch!r}")
    n = ord(text[0]) - 63
    if n > GRAPH6_MAX_N:
        raise ValueError("graph6 long form (n > 62) is not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    payload = text[1:]
    if len(payload) < need:
        raise ValueError(f"truncated graph6 payload: need {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise ValueError(f"graph6 payload too long: need {need} bytes, got {len(payload)}")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(payload[pos // 6]) - 63
            if byte >> (5 - pos % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, adj, check=False)


# -- local structure ----------------------------------------------------------


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def link(g: Graph, v: int) -> frozenset[int]:
    return g.link(v)


def second_valency(g: Graph, v: int) -> int:
    """Sum of the degrees of the neighbours of ``v``."""
    g._check_vertex(v)
    adj = g.adj
    return sum(adj[u].bit_count() for u in bits(adj[v]))


def _ball_mask(adj: tuple[int, ...], mask: int, radius: int) -> int:
    reached = mask
    frontier = mask
    for _ in range(radius):
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        frontier = nxt & ~reached
        if not frontier:
            break
        reached |= frontier
    return reached


def ball(g: Graph, s: Iterable[int], radius: int) -> frozenset[int]:
    """Union of the closed ``radius``-neighbourhoods of the vertices in ``s``."""
    m = mask_of(s)
    if not m:
        raise ValueError("ball needs a nonempty centre set")
    if m >> g.n:
        raise IndexError("centre set references vertices outside the graph")
    if radius < 0:
        raise ValueError("radius must be non-negative")
    return frozenset(bits(_ball_mask(g.adj, m, radius)))


def distance(g: Graph, u: int, v: int) -> float | int:
    """Breadth-first distance; ``math.inf`` when ``v`` is unreachable."""
    g._check_vertex(u)
    g._check_vertex(v)
    adj = g.adj
    target = 1 << v
    reached = frontier = 1 << u
    d = 0
    while frontier:
        if frontier & target:
            return d
        nxt = 0
        for w in bits(frontier):
            nxt |= adj[w]
        frontier = nxt & ~reached
        reached |= frontier
        d += 1
    return INFINITY


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    adj = g.adj
    return all(not adj[v] & m for v in bits(m))


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for u, v in g.edges():
        if adj[u] & adj[v]:
            return False
    return True


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    adj = g.adj
    n = g.n
    best = INFINITY
    for root in range(n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# -- global structure -------------------------------------------------------


def induced_subgraph(g: Graph, w: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``w``, relabeled in ascending order of original index.

    Returns the graph and the list mapping new index -> original vertex.
    """
    keep = sorted(set(w))
    if keep and not (0 <= keep[0] and keep[-1] < g.n):
        raise IndexError("vertex set references vertices outside the graph")
    return _induced(g.adj, keep), keep


def _induced(adj: tuple[int, ...], keep: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(keep)}
    keep_mask = mask_of(keep)
    rows = []
    for v in keep:
        r = 0
        for u in bits(adj[v] & keep_mask):
            r |= 1 << index[u]
        rows.append(r)
    return Graph(len(keep), rows, check=False)


def delete_closed_neighborhood(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """The graph ``G_S``: induced subgraph on ``V \\ B(S; 1)`` for an independent set ``S``."""
    m = mask_of(s)
    if not m:
        raise ValueError("closed-neighbourhood deletion needs a nonempty vertex set")
    if m >> g.n:
        raise IndexError("vertex set references vertices outside the graph")
    adj = g.adj
    if any(adj[v] & m for v in bits(m)):
        raise ValueError("vertex set is not independent")
    closed = _ball_mask(adj, m, 1)
    keep = [v for v in range(g.n) if not closed >> v & 1]
    return _induced(adj, keep), keep


def component_masks(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, ordered by least vertex."""
    adj = g.adj
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = _ball_mask(adj, 1 << v, g.n)
        seen |= comp
        out.append(comp)
    return out


def components(g: Graph) -> list[tuple[Graph, list[int]]]:
    return [(_induced(g.adj, list(bits(m))), list(bits(m))) for m in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(component_masks(g)) == 1


def disjoint_sum(a: Graph, b: Graph) -> Graph:
    shift = a.n
    return Graph(a.n + b.n, a.adj + tuple(row << shift for row in b.adj), check=False)


def degree_histogram(g: Graph) -> dict[int, int]:
    return dict(sorted(Counter(g.degrees()).items()))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


# -- short cycles ----------------------------------------------------------


def cycles(g: Graph, length: int) -> Iterator[tuple[int, ...]]:
    """Yield every cycle of the given length once, as a vertex sequence.

    Each cycle starts at its least vertex and its second vertex is smaller
    than its last.
    """
    if length < 3:
        raise ValueError("cycles have length at least 3")
    adj = g.adj
    for start in range(g.n):
        above = ~((1 << (start + 1)) - 1)
        path = [start]

        def walk(u: int, used: int) -> Iterator[tuple[int, ...]]:
            if len(path) == length:
                if adj[u] >> start & 1 and path[1] < path[-1]:
                    yield tuple(path)
                return
            for w in bits(adj[u] & above & ~used):
                path.append(w)
                yield from walk(w, used | 1 << w)
                path.pop()

        yield from walk(start, 1 << start)


def count_cycles(g: Graph, length: int, anchor: int | tuple[int, int] | None = None) -> int:
    """Number of ``length``-cycles, optionally through a vertex or an edge."""
    if length not in (4, 5, 6):
        raise ValueError(f"cycle length must be 4, 5 or 6, got {length}")
    if anchor is None:
        return sum(1 for _ in cycles(g, length))
    if isinstance(anchor, int):
        g._check_vertex(anchor)
        return sum(1 for c in cycles(g, length) if anchor in c)
    u, v = anchor
    if not g.has_edge(u, v):
        raise ValueError(f"{{{u}, {v}}} is not an edge")
    pair = {u, v}
    total = 0
    for c in cycles(g, length):
        if any({c[i], c[i - 1]} == pair for i in range(length)):
            total += 1
    return total
