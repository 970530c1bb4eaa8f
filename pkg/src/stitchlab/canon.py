"""Canonical labeling by equitable refinement and individualization search.

The search follows the classical scheme: refine the ordered partition to an
equitable one, individualize each vertex of the first non-singleton cell in
turn, and compare the relabeled adjacency matrices at the leaves.  The
canonical leaf is the one with the lexicographically largest matrix.
Automorphisms found when two leaves give the same matrix prune the tree,
and the set of automorphisms found generates the whole automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits


@dataclass(frozen=True)
class Canon:
    """Result of a canonical labeling run.

    ``order[i]`` is the original vertex placed at canonical position ``i``.
    ``generators`` are automorphisms as tuples ``p`` with ``v -> p[v]``;
    ``orbits[v]`` is the least vertex of the orbit of ``v``.
    """

    order: tuple[int, ...]
    rows: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def certificate(self) -> bytes:
        n = len(self.rows)
        width = (n + 7) // 8
        return n.to_bytes(2, "big") + b"".join(r.to_bytes(width, "big") for r in self.rows)

    @property
    def position(self) -> tuple[int, ...]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return tuple(pos)

    def graph(self) -> Graph:
        n = len(self.rows)
        # rows store neighbour position i at bit n-1-i
        adj = [0] * n
        for i, r in enumerate(self.rows):
            for b in bits(r):
                adj[i] |= 1 << (n - 1 - b)
        return Graph(n, adj, check=False)


def _refine(adj, cells, queue, n):
    """Refine ``cells`` (list of vertex lists) to the coarsest equitable partition.

    ``queue`` holds splitter bitmasks.  Fragments are ordered by their
    neighbour count, so the result depends only on the graph structure.
    """
    head = 0
    while head < len(queue) and len(cells) < n:
        w = queue[head]
        head += 1
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups = {}
            for v in cell:
                c = (adj[v] & w).bit_count()
                g = groups.get(c)
                if g is None:
                    groups[c] = [v]
                else:
                    g.append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for c in sorted(groups):
                frag = groups[c]
                out.append(frag)
                m = 0
                for v in frag:
                    m |= 1 << v
                queue.append(m)
        if changed:
            cells = out
    return cells


def _leaf_rows(adj, order, n):
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    top = n - 1
    rows = []
    for v in order:
        r = 0
        for u in bits(adj[v]):
            r |= 1 << (top - pos[u])
        rows.append(r)
    return tuple(rows)


class _Search:
    __slots__ = ("adj", "n", "gens", "first", "best", "first_path", "best_path")

    def __init__(self, adj, n):
        self.adj = adj
        self.n = n
        self.gens = []
        self.first = None
        self.best = None
        self.first_path = None
        self.best_path = None

    def _orbit_roots(self, candidates, prefix):
        parent = {v: v for v in candidates}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if any(g[p] != p for p in prefix):
                continue
            for v in candidates:
                w = g[v]
                if w in parent:
                    a, b = find(v), find(w)
                    if a != b:
                        if a < b:
                            parent[b] = a
                        else:
                            parent[a] = b
        return find

    def dfs(self, cells, path):
        n = self.n
        if len(cells) == n:
            return self._leaf(cells, path)
        depth = len(path)
        for t, cell in enumerate(cells):
            if len(cell) > 1:
                break
        candidates = sorted(cell)
        explored = []
        ngens = -1
        find = None
        for w in candidates:
            if explored:
                if ngens != len(self.gens):
                    ngens = len(self.gens)
                    find = self._orbit_roots(candidates, path)
                rw = find(w)
                if any(find(x) == rw for x in explored):
                    continue
            rest = [v for v in cell if v != w]
            child = cells[:t] + [[w], rest] + cells[t + 1:]
            child = _refine(self.adj, child, [1 << w], n)
            path.append(w)
            jump = self.dfs(child, path)
            path.pop()
            if jump is not None and jump < depth:
                return jump
            explored.append(w)
        return None

    def _leaf(self, cells, path):
        order = [c[0] for c in cells]
        rows = _leaf_rows(self.adj, order, self.n)
        if self.first is None:
            self.first = self.best = (rows, order)
            self.first_path = self.best_path = list(path)
            return None
        if rows == self.first[0]:
            self._record(self.first[1], order)
            return _common_prefix(self.first_path, path)
        if rows == self.best[0]:
            self._record(self.best[1], order)
            return _common_prefix(self.best_path, path)
        if rows > self.best[0]:
            self.best = (rows, order)
            self.best_path = list(path)
        return None

    def _record(self, src, dst):
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        self.gens.append(tuple(perm))


def _common_prefix(a, b):
    i = 0
    for x, y in zip(a, b):
        if x != y:
            break
        i += 1
    return i


def canonical_labeling(g: Graph, colors: list[int] | None = None) -> Canon:
    """Canonically label ``g``.

    ``colors`` optionally assigns an integer colour per vertex; colour classes
    form the initial partition in ascending colour order, and only
    colour-preserving relabelings are considered.
    """
    n = g.n
    adj = g.adj
    if n == 0:
        return Canon((), (), (), ())
    if colors is None:
        cells = [list(range(n))]
    else:
        if len(colors) != n:
            raise ValueError("need one colour per vertex")
        classes = {}
        for v, c in enumerate(colors):
            classes.setdefault(c, []).append(v)
        cells = [classes[c] for c in sorted(classes)]
    queue = []
    for cell in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        queue.append(m)
    cells = _refine(adj, cells, queue, n)
    search = _Search(adj, n)
    search.dfs(cells, [])
    rows, order = search.best
    return Canon(tuple(order), rows, tuple(search.gens), _orbits(n, search.gens))


def _orbits(n, gens):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return tuple(find(v) for v in range(n))


def canonical_form(g: Graph) -> tuple[Graph, bytes]:
    """The canonically relabeled graph and its certificate.

    Certificates are equal exactly when the graphs are isomorphic.
    """
    c = canonical_labeling(g)
    return c.graph(), c.certificate


def certificate(g: Graph) -> bytes:
    return canonical_labeling(g).certificate


def find_isomorphism(a: Graph, b: Graph) -> dict[int, int] | None:
    """Return a vertex bijection ``a -> b`` preserving adjacency, or None."""
    if a.n != b.n or a.e != b.e or sorted(a.degrees()) != sorted(b.degrees()):
        return None
    ca = canonical_labeling(a)
    cb = canonical_labeling(b)
    if ca.rows != cb.rows:
        return None
    return {u: v for u, v in zip(ca.order, cb.order)}


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return find_isomorphism(a, b) is not None


def is_isomorphism(a: Graph, b: Graph, phi: dict[int, int]) -> bool:
    """Check that ``phi`` is a bijection ``V(a) -> V(b)`` inducing an edge bijection."""
    if a.n != b.n or a.e != b.e:
        return False
    if sorted(phi) != list(range(a.n)) or sorted(phi.values()) != list(range(b.n)):
        return False
    return all(b.adj[phi[u]] >> phi[v] & 1 for u, v in a.edges())


def automorphism_orbits(g: Graph) -> list[frozenset[int]]:
    orbits = canonical_labeling(g).orbits
    groups = {}
    for v, r in enumerate(orbits):
        groups.setdefault(r, []).append(v)
    return [frozenset(groups[r]) for r in sorted(groups)]
