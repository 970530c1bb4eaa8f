"""Brute-force checks of the structural lemmas on the constructed families."""

from __future__ import annotations

from dataclasses import dataclass, field

from .alpha import alpha
from .families import Attachment, bicycle, chain, inner, loop_chain, outer, w13
from .graph import Graph, ball, count_cycles
from .stability import is_s_stable, minimal_destabilizers


def bivalent_balls(g: Graph) -> set[frozenset[int]]:
    return {ball(g, [v], 1) for v in g.vertices() if g.degree(v) == 2}


def bicycle_destabilizer_shapes(k: int) -> dict[str, set[frozenset[int]]]:
    """The size-4 destabilizers of ``bicycle(k)`` predicted by shape."""
    g = bicycle(k)
    balls = {ball(g, [outer(i, k)], 1) for i in range(1, 2 * k + 1)}
    paths = {frozenset(outer(2 * d + j, k) for j in (-1, 0, 1, 2)) for d in range(1, k + 1)}
    squares = {
        frozenset({outer(2 * d, k), outer(2 * d + 1, k), inner(d, k), inner(d + 1, k)}) for d in range(1, k + 1)
    }
    return {"ball": balls, "path": paths, "cycle": squares}


def family_members(k_max: int) -> list[tuple[str, Graph]]:
    """Chains and bicycles up to ``k_max``, W13, and loop-chains with l in 4..6, m in 1..3."""
    out = [(f"chain:{k}", chain(k)) for k in range(2, k_max + 1)]
    out += [(f"bicycle:{k}", bicycle(k)) for k in range(4, k_max + 1)]
    out.append(("w13", w13()))
    for l in (4, 5, 6):
        for m in (1, 2, 3):
            for att in Attachment:
                out.append((f"loopchain:{l}:{m}:{att.value}", loop_chain(l, m, att)))
    return out


@dataclass
class LemmaReport:
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def record(self, name: str, ok: bool) -> None:
        self.checks[name] = ok
        if not ok:
            self.failures.append(name)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"checks": self.checks, "failures": self.failures, "passed": self.passed}


def verify_lemmas(k_max: int = 6) -> LemmaReport:
    """Chain catalogs, bicycle catalogs, 4-stability of W13, and 4-cycles at high-degree vertices."""
    if k_max < 4:
        raise ValueError("k_max must be at least 4")
    rep = LemmaReport()
    for k in range(2, k_max + 1):
        g = chain(k)
        rep.record(f"chain:{k} alpha=k", alpha(g) == k)
        rep.record(f"chain:{k} 2-stable", is_s_stable(g, 2))
        cat = set(minimal_destabilizers(g, 3).vertex_sets())
        rep.record(f"chain:{k} size<=3 destabilizers are bivalent balls", cat == bivalent_balls(g))
    for k in range(4, k_max + 1):
        g = bicycle(k)
        rep.record(f"bicycle:{k} alpha=k", alpha(g) == k)
        rep.record(f"bicycle:{k} 3-stable", is_s_stable(g, 3))
        shapes = bicycle_destabilizer_shapes(k)
        expected = set().union(*shapes.values())
        cat = set(minimal_destabilizers(g, 4).vertex_sets())
        rep.record(f"bicycle:{k} size-4 destabilizers are the three shapes", cat == expected and len(cat) == 4 * k)
    rep.record("w13 4-stable", is_s_stable(w13(), 4))
    square_free = []
    for name, g in family_members(k_max):
        ok = all(count_cycles(g, 4, v) >= 1 for v in g.vertices() if g.degree(v) >= 3)
        rep.record(f"{name} 4-cycle at every vertex of degree >= 3", ok)
        if count_cycles(g, 4) == 0:
            square_free.append(name)
    rep.record("C5 is the only 4-cycle-free nonempty family member", square_free == ["chain:2"])
    return rep
