"""Brute-force reference computations, independent of the package internals."""

from __future__ import annotations

import itertools

import networkx as nx

from stitchlab.graph import Graph


def edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def is_independent(s, edges) -> bool:
    return all(frozenset(p) not in edges for p in itertools.combinations(s, 2))


def alpha_brute(g: Graph, vertices=None) -> int:
    vs = list(range(g.n)) if vertices is None else list(vertices)
    edges = edge_set(g)
    for size in range(len(vs), -1, -1):
        if any(is_independent(s, edges) for s in itertools.combinations(vs, size)):
            return size
    return 0


def alpha_bitmask_enumeration(g: Graph) -> int:
    """Maximum over all 2^n subsets; fine for n <= 16."""
    n = g.n
    rows = [0] * n
    for u, v in g.edges():
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    best = 0
    for s in range(1 << n):
        size = bin(s).count("1")
        if size <= best:
            continue
        if all(not (rows[v] & s) for v in range(n) if s >> v & 1):
            best = size
    return best


def cycles_brute(g: Graph, length: int) -> set[frozenset[frozenset[int]]]:
    """All cycles of the given length, each as its set of edges."""
    edges = edge_set(g)
    found = set()
    for s in itertools.combinations(range(g.n), length):
        for p in itertools.permutations(s[1:]):
            seq = (s[0],) + p
            cyc = [frozenset((seq[i], seq[(i + 1) % length])) for i in range(length)]
            if all(e in edges for e in cyc):
                found.add(frozenset(cyc))
    return found


def automorphisms_brute(g: Graph) -> list[tuple[int, ...]]:
    edges = edge_set(g)
    return [
        p
        for p in itertools.permutations(range(g.n))
        if all(frozenset((p[u], p[v])) in edges for u, v in g.edges())
    ]


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def labeled_triangle_free_classes(n: int) -> int:
    """Isomorphism classes of triangle-free graphs on n vertices by full labeled enumeration."""
    pairs = list(itertools.combinations(range(n), 2))
    reps: list[nx.Graph] = []
    buckets: dict[tuple, list[nx.Graph]] = {}
    for mask in range(1 << len(pairs)):
        es = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(es)
        if any(nx.triangles(h).values()):
            continue
        key = (len(es), tuple(sorted(d for _, d in h.degree())))
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(h, r) for r in bucket):
            bucket.append(h)
            reps.append(h)
    return len(reps)


def random_graph(rng, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
