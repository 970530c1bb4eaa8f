"""Isomorph-free generation of triangle-free graphs and the drivers built on it.

Generation is by canonical augmentation: a graph on ``n + 1`` vertices is
produced from its unique parent, the graph obtained by deleting a
canonically chosen vertex of maximum degree.  A child ``P + v`` with
``N(v) = N`` is accepted when

1. ``N`` is the least set (as a bitmask) in its orbit under ``Aut(P)``, and
2. ``v`` lies in the ``Aut(G)``-orbit of the canonical deletion vertex.

The deletion vertex maximises ``(degree, second valency)``; remaining ties
are broken by the canonical labeling, which is only computed when a tie
actually occurs.  New neighbourhoods are independent sets, so every graph
produced is triangle-free without post-filtering.
"""

from __future__ import annotations

import json
import logging
import os
import warnings
from collections.abc import Callable, Iterable
from dataclasses import asdict, dataclass, field
from typing import NamedTuple

from .alpha import alpha_of_mask
from .canon import canonical_labeling
from .classify import GAMMA, GAMMA_PRIME, classify_graph
from .graph import Graph, bits, component_masks, graph6_decode, graph6_encode
from .stability import independent_sets_of_size

log = logging.getLogger(__name__)

# Hard cap on the order of generated graphs.  Raising it is allowed but the
# runtime grows by roughly an order of magnitude per vertex.
N_CAP = 14


@dataclass(frozen=True)
class GenConstraints:
    """Constraints on the graphs visited by the generator.

    ``alpha_less_than`` and ``max_edges`` are hereditary and prune the whole
    search tree.  ``min_degree``, ``connected_only`` and ``max_t`` (an upper
    bound on ``e - 6n + 13*alpha``) only filter the target order.
    """

    vertex_count: int
    alpha_less_than: int | None = None
    max_edges: int | None = None
    min_degree: int | None = None
    connected_only: bool = False
    max_t: int | None = None

    def prefix(self, level: int) -> GenConstraints:
        """Constraints that hold for every ancestor at order ``level``."""
        return GenConstraints(level, self.alpha_less_than, self.max_edges)


def _check_cap(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if n > N_CAP:
        raise ValueError(f"vertex count {n} exceeds the generator cap N_CAP={N_CAP}")


def _warn_if_unpruned(n_max: int) -> None:
    if n_max >= 13:
        warnings.warn(
            f"unpruned generation up to n={n_max} visits millions of graphs and runs for minutes to hours",
            RuntimeWarning,
            stacklevel=3,
        )


Visitor = Callable[[Graph, int], "int | None"]


class TriangleFreeGenerator:
    """Depth-first canonical augmentation.

    ``visit(graph, alpha)`` is called once per isomorphism class at the
    target order.  If it returns an integer, the edge bound is tightened to
    it, which prunes every subtree with more edges from then on.
    """

    def __init__(self, constraints: GenConstraints, visit: Visitor):
        self.c = constraints
        self.visit = visit
        self.max_edges = constraints.max_edges
        self.count = 0

    def run(self) -> int:
        _check_cap(self.c.vertex_count)
        self._extend((), 0, 0, 0, ())
        return self.count

    def run_from(self, roots: Iterable[Graph]) -> int:
        """Generate only the descendants of the given roots (one per class)."""
        _check_cap(self.c.vertex_count)
        for g in roots:
            if g.n > self.c.vertex_count:
                raise ValueError("root is larger than the target order")
            a = alpha_of_mask(g.adj, (1 << g.n) - 1)
            if self.c.alpha_less_than is not None and a >= self.c.alpha_less_than:
                continue
            if self.max_edges is not None and g.e > self.max_edges:
                continue
            self._extend(g.adj, g.n, a, g.e, None)
        return self.count

    def _deliver(self, adj, n, a):
        g = Graph(n, adj, check=False)
        self.count += 1
        bound = self.visit(g, a)
        if bound is not None and (self.max_edges is None or bound < self.max_edges):
            self.max_edges = bound

    def _extend(self, adj, n, a, e, gens):
        c = self.c
        target = c.vertex_count
        if n == target:
            if self._final_ok(adj, n, a):
                self._deliver(adj, n, a)
            return
        final = n + 1 == target
        degs = [r.bit_count() for r in adj]
        top = max(degs, default=0)
        full = (1 << n) - 1
        jlim = c.alpha_less_than
        for s in range(top, n + 1):
            if self.max_edges is not None and e + s > self.max_edges:
                break
            if final and c.max_t is not None and e + s - 6 * (n + 1) + 13 * a > c.max_t:
                break
            # the new vertex must have maximum degree in the child
            allowed = 0
            for u in range(n):
                if degs[u] < s:
                    allowed |= 1 << u
            v = n
            vbit = 1 << v
            for nb in independent_sets_of_size(adj, allowed, s):
                if self.max_edges is not None and e + s > self.max_edges:
                    break
                tied = [u for u in range(n) if degs[u] + (nb >> u & 1) == s]
                if tied:
                    d2v = sum(degs[u] + 1 for u in bits(nb))
                    keep = []
                    reject = False
                    for w in tied:
                        d2w = 0
                        for x in bits(adj[w]):
                            d2w += degs[x] + (nb >> x & 1)
                        if nb >> w & 1:
                            d2w += s
                        if d2w > d2v:
                            reject = True
                            break
                        if d2w == d2v:
                            keep.append(w)
                    if reject:
                        continue
                    tied = keep
                ca = max(a, 1 + alpha_of_mask(adj, full & ~nb))
                if jlim is not None and ca >= jlim:
                    continue
                if final and c.max_t is not None and e + s - 6 * (n + 1) + 13 * ca > c.max_t:
                    continue
                if gens is None:
                    gens = canonical_labeling(Graph(n, adj, check=False)).generators
                if gens and not _least_in_orbit(nb, gens):
                    continue
                child = tuple(r | vbit if nb >> u & 1 else r for u, r in enumerate(adj)) + (nb,)
                child_gens = None
                if tied:
                    canon = canonical_labeling(Graph(n + 1, child, check=False))
                    pos = canon.position
                    best = min(tied + [v], key=pos.__getitem__)
                    if canon.orbits[best] != canon.orbits[v]:
                        continue
                    child_gens = canon.generators
                self._extend(child, n + 1, ca, e + s, child_gens)

    def _final_ok(self, adj, n, a):
        c = self.c
        if n == 0:
            return not c.connected_only
        if c.min_degree is not None and min(r.bit_count() for r in adj) < c.min_degree:
            return False
        if c.max_t is not None and sum(r.bit_count() for r in adj) // 2 - 6 * n + 13 * a > c.max_t:
            return False
        if c.connected_only:
            g = Graph(n, adj, check=False)
            if len(component_masks(g)) != 1:
                return False
        return True


def _least_in_orbit(mask: int, gens) -> bool:
    """Is ``mask`` the smallest image of itself under the group generated by ``gens``?"""
    seen = {mask}
    stack = [mask]
    while stack:
        m = stack.pop()
        for g in gens:
            img = 0
            for u in bits(m):
                img |= 1 << g[u]
            if img < mask:
                return False
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return True


def generate_triangle_free(c: GenConstraints, visit: Visitor) -> int:
    """Visit one representative of every isomorphism class meeting ``c``; return the count."""
    return TriangleFreeGenerator(c, visit).run()


def iter_triangle_free(c: GenConstraints) -> list[Graph]:
    out = []
    generate_triangle_free(c, lambda g, a: out.append(g))
    return out


# -- work units and parallel execution ----------------------------------------


@dataclass(frozen=True)
class WorkUnit:
    """A disjoint slice of a generation: the subtrees below ``roots``."""

    constraints: GenConstraints
    level: int
    roots: tuple[str, ...]

    def to_json(self) -> str:
        return json.dumps({"constraints": asdict(self.constraints), "level": self.level, "roots": list(self.roots)})

    @classmethod
    def from_json(cls, text: str) -> WorkUnit:
        d = json.loads(text)
        return cls(GenConstraints(**d["constraints"]), d["level"], tuple(d["roots"]))

    def run(self, visit: Visitor) -> int:
        return TriangleFreeGenerator(self.constraints, visit).run_from(graph6_decode(r) for r in self.roots)


def partition_workload(c: GenConstraints, parts: int) -> list[WorkUnit]:
    """Split a generation into at most ``parts`` units whose union is the whole generation.

    The split happens at the shallowest order with at least four roots per
    part, or one below the target order, whichever comes first.
    """
    if parts < 1:
        raise ValueError("parts must be at least 1")
    _check_cap(c.vertex_count)
    empty = graph6_encode(Graph(0))
    if parts == 1 or c.vertex_count == 0:
        return [WorkUnit(c, 0, (empty,))]
    roots = [Graph(0)]
    level = 0
    while level < c.vertex_count - 1 and len(roots) < 4 * parts:
        level += 1
        nxt = []
        prefix = TriangleFreeGenerator(c.prefix(level), lambda g, a: nxt.append(g))
        prefix.run_from(roots)
        roots = nxt
    codes = [graph6_encode(g) for g in roots]
    units = [WorkUnit(c, level, tuple(codes[i::parts])) for i in range(parts)]
    return [u for u in units if u.roots]


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("STITCHLAB_WORKERS", "1")))
    except ValueError:
        return 1


def _run_unit(args):
    unit, factory = args
    tally = factory()
    unit.run(tally.visit)
    return tally


def run_tally(c: GenConstraints, factory: Callable[[], Tally], workers: int = 1) -> Tally:
    """Run a generation feeding a fresh tally per unit, then merge the tallies."""
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if workers == 1:
        tally = factory()
        TriangleFreeGenerator(c, tally.visit).run()
        return tally
    import multiprocessing as mp

    units = partition_workload(c, workers * 4)
    with mp.get_context("fork").Pool(workers) as pool:
        parts = pool.map(_run_unit, [(u, factory) for u in units], chunksize=1)
    tally = factory()
    for p in parts:
        tally.merge(p)
    return tally


class Tally:
    """Accumulator fed by the generator; ``merge`` must be associative and commutative."""

    def visit(self, g: Graph, a: int) -> int | None:
        raise NotImplementedError

    def merge(self, other: Tally) -> None:
        raise NotImplementedError


class CountTally(Tally):
    def __init__(self):
        self.count = 0

    def visit(self, g, a):
        self.count += 1

    def merge(self, other):
        self.count += other.count


def count_triangle_free(c: GenConstraints, workers: int = 1) -> int:
    return run_tally(c, CountTally, workers).count


def canonical_graph6(g: Graph) -> str:
    return graph6_encode(canonical_labeling(g).graph())


# -- e-numbers ------------------------------------------------------------------


@dataclass
class ENumberResult:
    """Minimal edge count of a triangle-free ``n``-vertex graph with ``alpha < j``.

    ``value`` is None when no such graph exists (the e-number is infinite).
    """

    j: int
    n: int
    value: int | None
    realisers: list[str] = field(default_factory=list)

    @property
    def finite(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict:
        return {
            "j": self.j,
            "n": self.n,
            "value": self.value if self.finite else "infinity",
            "finite": self.finite,
            "realisers": list(self.realisers),
        }


class _EdgeMinimum(Tally):
    def __init__(self):
        self.best = None
        self.realisers = set()

    def visit(self, g, a):
        if self.best is None or g.e < self.best:
            self.best = g.e
            self.realisers = {canonical_graph6(g)}
        elif g.e == self.best:
            self.realisers.add(canonical_graph6(g))
        return self.best

    def merge(self, other):
        if other.best is None:
            return
        if self.best is None or other.best < self.best:
            self.best = other.best
            self.realisers = set(other.realisers)
        elif other.best == self.best:
            self.realisers |= other.realisers


def e_number(j: int, n: int, workers: int = 1) -> ENumberResult:
    """The e-number ``e(3, j; n)`` with all its extremal realisers.

    Branch and bound: the best edge count found so far prunes every partial
    graph with more edges, since edges only accumulate as vertices are added.
    """
    if j < 2:
        raise ValueError(f"j must be at least 2, got {j}")
    _check_cap(n)
    tally = run_tally(GenConstraints(n, alpha_less_than=j), _EdgeMinimum, workers)
    return ENumberResult(j, n, tally.best, sorted(tally.realisers))


class Prop1Value(NamedTuple):
    value: int
    within_range: bool


def prop1_formula(k: int, n: int) -> Prop1Value:
    """``max(0, n - k, 3n - 5k, 5n - 10k, 6n - 13k)``.

    The known formula for ``e(3, k+1; n)``, valid for ``k >= 4`` and either
    ``n <= 3.25k - 1`` or ``n = 3.25k``.  Outside that range the value is
    still returned but ``within_range`` is False.
    """
    if n < 0 or k < 0:
        raise ValueError("k and n must be non-negative")
    value = max(0, n - k, 3 * n - 5 * k, 5 * n - 10 * k, 6 * n - 13 * k)
    within = k >= 4 and (4 * n <= 13 * k - 4 or 4 * n == 13 * k)
    return Prop1Value(value, within)


# -- verification drivers -------------------------------------------------------


class _InvariantScan(Tally):
    """Minimum t and q, violators, and the small-t connected survivors."""

    def __init__(self):
        self.count = 0
        self.min_t = None
        self.min_q = None
        self.violators = []
        self.t_zero = []
        self.t_one_low_delta = []

    def visit(self, g, a):
        self.count += 1
        t = g.e - 6 * g.n + 13 * a
        q = g.e - 5 * g.n + 10 * a
        if self.min_t is None or t < self.min_t:
            self.min_t = t
        if self.min_q is None or q < self.min_q:
            self.min_q = q
        if t < 0 or q < 0:
            self.violators.append(graph6_encode(g))
        if g.n and len(component_masks(g)) == 1:
            if t == 0:
                self.t_zero.append(canonical_graph6(g))
            elif t == 1 and min(g.degrees()) <= 2:
                self.t_one_low_delta.append(canonical_graph6(g))

    def merge(self, other):
        self.count += other.count
        for name in ("min_t", "min_q"):
            mine, theirs = getattr(self, name), getattr(other, name)
            if mine is None or (theirs is not None and theirs < mine):
                setattr(self, name, theirs)
        self.violators += other.violators
        self.t_zero += other.t_zero
        self.t_one_low_delta += other.t_one_low_delta


@dataclass
class TNonnegReport:
    n_max: int
    counts: dict[int, int]
    min_t: dict[int, int]
    min_q: dict[int, int]
    violators: list[str]
    t_zero_connected: list[str]
    t_one_low_delta_connected: list[str]

    @property
    def passed(self) -> bool:
        return not self.violators

    def to_json(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def verify_t_nonnegative(n_max: int, workers: int = 1) -> TNonnegReport:
    """Scan every triangle-free graph with at most ``n_max`` vertices for ``t < 0`` or ``q < 0``."""
    _check_cap(n_max)
    _warn_if_unpruned(n_max)
    counts, min_t, min_q = {}, {}, {}
    violators, zeros, ones = [], [], []
    for n in range(n_max + 1):
        scan = run_tally(GenConstraints(n), _InvariantScan, workers)
        counts[n] = scan.count
        min_t[n] = scan.min_t
        min_q[n] = scan.min_q
        violators += sorted(scan.violators)
        zeros += sorted(scan.t_zero)
        ones += sorted(scan.t_one_low_delta)
        log.info("n=%d: %d graphs, min t=%s, min q=%s", n, scan.count, scan.min_t, scan.min_q)
    return TNonnegReport(n_max, counts, min_t, min_q, violators, zeros, ones)


class _TheoremScan(Tally):
    def __init__(self):
        self.checked = 0
        self.by_class = {}
        self.counterexamples = []
        self.gamma_hits = []
        self.gamma_prime_hits = []

    def visit(self, g, a):
        t = g.e - 6 * g.n + 13 * a
        delta = min(g.degrees()) if g.n else None
        if not (t == 0 or (t == 1 and delta is not None and delta <= 2)):
            return
        report = classify_graph(g, a)
        self.checked += 1
        self.by_class[report.cls] = self.by_class.get(report.cls, 0) + 1
        if not report.theorem_consistent:
            self.counterexamples.append(graph6_encode(g))
        if g.n == 0:
            return
        names = "+".join(_verdict_name(v) for v in report.verdicts)
        if report.cls == GAMMA:
            self.gamma_hits.append(names)
        elif report.cls == GAMMA_PRIME:
            self.gamma_prime_hits.append(names)

    def merge(self, other):
        self.checked += other.checked
        for k, v in other.by_class.items():
            self.by_class[k] = self.by_class.get(k, 0) + v
        self.counterexamples += other.counterexamples
        self.gamma_hits += other.gamma_hits
        self.gamma_prime_hits += other.gamma_prime_hits


def _verdict_name(v) -> str:
    if v.kind in ("Bicycle", "Chain"):
        return f"{v.kind}({v.params['k']})"
    if v.kind == "LoopChain":
        return f"LoopChain({v.params['l']},{v.params['m']},{v.params['attachment']})"
    return v.kind


@dataclass
class Theorem3Report:
    n_max: int
    checked: int
    by_class: dict[str, int]
    gamma_hits: list[str]
    gamma_prime_hits: list[str]
    counterexamples: list[str]

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def verify_theorem3(n_max: int, workers: int = 1) -> Theorem3Report:
    """Classify every triangle-free graph on at most ``n_max`` vertices with
    ``t = 0``, or with ``t = 1`` and minimum degree at most 2."""
    _check_cap(n_max)
    _warn_if_unpruned(n_max)
    total = _TheoremScan()
    for n in range(n_max + 1):
        scan = run_tally(GenConstraints(n, max_t=1), _TheoremScan, workers)
        total.merge(scan)
        log.info("n=%d: %d graphs classified", n, scan.checked)
    return Theorem3Report(
        n_max,
        total.checked,
        dict(sorted(total.by_class.items())),
        sorted(total.gamma_hits),
        sorted(total.gamma_prime_hits),
        sorted(total.counterexamples),
    )
