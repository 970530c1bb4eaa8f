"""Recognition of the extremal classes Gamma and Gamma' by construct-and-compare."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .alpha import alpha
from .canon import canonical_labeling
from .families import Attachment, bicycle, chain, loop_chain, w13
from .graph import Graph, components, is_connected, is_triangle_free, min_degree
from .stability import t_value

GAMMA = "Gamma"
GAMMA_PRIME = "GammaPrime"
NEITHER = "Neither"


@dataclass(frozen=True)
class ComponentVerdict:
    """``kind`` is one of Bicycle, W13, Chain, LoopChain, Other.

    ``witness`` maps the component's vertices onto the constructor output
    named by ``kind`` and ``params``.
    """

    kind: str
    params: dict = field(default_factory=dict)
    witness: dict[int, int] | None = None

    @property
    def is_gamma(self) -> bool:
        return self.kind in ("Bicycle", "W13")

    @property
    def is_pending(self) -> bool:
        return self.kind in ("Chain", "LoopChain")

    def reference(self) -> Graph | None:
        if self.kind == "Bicycle":
            return bicycle(self.params["k"])
        if self.kind == "W13":
            return w13()
        if self.kind == "Chain":
            return chain(self.params["k"])
        if self.kind == "LoopChain":
            return loop_chain(self.params["l"], self.params["m"], Attachment.parse(self.params["attachment"]))
        return None


def _candidates(n: int, e: int):
    if n == 13 and e == 26:
        yield "W13", ()
    if n % 3 == 0 and n // 3 >= 4 and e == 5 * (n // 3):
        yield "Bicycle", (n // 3,)
    if n % 3 == 2 and (n + 1) // 3 >= 2 and e == 5 * ((n + 1) // 3) - 5:
        yield "Chain", ((n + 1) // 3,)
    if n % 3 == 0 and e == 5 * (n // 3) + 1:
        s = n // 3
        for l in range(4, s):
            for att in Attachment:
                yield "LoopChain", (l, s - l, att)


def _params(kind: str, args: tuple) -> dict:
    if kind in ("Bicycle", "Chain"):
        return {"k": args[0]}
    if kind == "LoopChain":
        return {"l": args[0], "m": args[1], "attachment": args[2].value}
    return {}


_BUILDERS = {"W13": w13, "Bicycle": bicycle, "Chain": chain, "LoopChain": loop_chain}


@lru_cache(maxsize=None)
def _reference(kind: str, args: tuple):
    return canonical_labeling(_BUILDERS[kind](*args))


def recognize_component(g: Graph) -> ComponentVerdict:
    """Identify a connected graph as a family member, or ``Other``."""
    if not is_connected(g):
        raise ValueError("recognize_component needs a connected nonempty graph")
    mine = None
    for kind, args in _candidates(g.n, g.e):
        if mine is None:
            mine = canonical_labeling(g)
        ref = _reference(kind, args)
        if ref.rows == mine.rows:
            witness = {u: v for u, v in zip(mine.order, ref.order)}
            return ComponentVerdict(kind, _params(kind, args), witness)
    return ComponentVerdict("Other")


class Corollary4Bound(NamedTuple):
    value: int
    exact: bool


@dataclass(frozen=True)
class ClassificationReport:
    verdicts: tuple[ComponentVerdict, ...]
    vertex_maps: tuple[tuple[int, ...], ...]
    t: int
    delta: int | None
    cls: str
    theorem_consistent: bool

    def to_json(self) -> dict:
        comps = []
        for verdict, vmap in zip(self.verdicts, self.vertex_maps):
            entry = {"verdict": verdict.kind, "params": dict(verdict.params), "vertices": list(vmap)}
            entry.update(verdict.params)
            if verdict.witness is not None:
                # keyed by original vertex of the input graph
                entry["witness"] = {str(vmap[u]): v for u, v in sorted(verdict.witness.items())}
            else:
                entry["witness"] = None
            comps.append(entry)
        return {
            "t": self.t,
            "delta": self.delta,
            "class": self.cls,
            "components": comps,
            "theorem_consistent": self.theorem_consistent,
        }


def class_of(verdicts) -> str:
    verdicts = list(verdicts)
    if all(v.is_gamma for v in verdicts):
        return GAMMA
    pending = sum(v.is_pending for v in verdicts)
    if pending == 1 and all(v.is_gamma or v.is_pending for v in verdicts):
        return GAMMA_PRIME
    return NEITHER


def classify_graph(g: Graph, alpha_value: int | None = None) -> ClassificationReport:
    """Recognize every component and check the classification theorem on ``g``."""
    if not is_triangle_free(g):
        raise ValueError("classification is defined for triangle-free graphs only")
    verdicts = []
    maps = []
    for comp, vmap in components(g):
        verdicts.append(recognize_component(comp))
        maps.append(tuple(vmap))
    t = t_value(g, alpha(g) if alpha_value is None else alpha_value)
    delta = min_degree(g) if g.n else None
    cls = class_of(verdicts)
    consistent = True
    if t == 0 and cls != GAMMA:
        consistent = False
    if t == 1 and delta is not None and delta <= 2 and cls != GAMMA_PRIME:
        consistent = False
    return ClassificationReport(tuple(verdicts), tuple(maps), t, delta, cls, consistent)


def corollary4_bound(k: int, n: int) -> Corollary4Bound:
    """``6n - 13k + 1``, exact for ``3.25k - 1 < n < 3.25k`` and a lower bound for ``n > 3.25k``.

    The bound for ``n > 3.25k`` is believed strict, but only the
    non-strict form is proven, so that is what is reported.
    """
    if k < 5:
        raise ValueError(f"k must be at least 5, got {k}")
    if 4 * n == 13 * k:
        raise ValueError("n = 3.25k is covered by the exact e-number formula, not this bound")
    if 4 * n <= 13 * k - 4:
        raise ValueError(f"n must exceed 3.25k - 1 = {(13 * k - 4) / 4}, got {n}")
    return Corollary4Bound(6 * n - 13 * k + 1, 4 * n < 13 * k)
