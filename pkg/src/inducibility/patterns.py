"""Target patterns: directed stars, complete bipartite digraphs, explicit digraphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .digraph import MAX_ISO_ORDER, Digraph, from_json_dict, make_digraph, to_json_dict


@dataclass(frozen=True)
class Star:
    """Out-star on ``k`` vertices: vertex 0 points to ``k - 1`` independent leaves."""

    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"star order must be at least 2, got {self.k}")

    @property
    def order(self) -> int:
        return self.k

    def digraph(self) -> Digraph:
        return make_digraph(self.k, [(0, v) for v in range(1, self.k)])


@dataclass(frozen=True)
class CompleteBipartite:
    """``s`` sources each sending an arc to each of ``t`` sinks, nothing else."""

    s: int
    t: int

    def __post_init__(self):
        if self.s < 1 or self.t < 1:
            raise ValueError(f"K_(s,t) needs s, t >= 1, got ({self.s}, {self.t})")

    @property
    def order(self) -> int:
        return self.s + self.t

    def digraph(self) -> Digraph:
        s, t = self.s, self.t
        return make_digraph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


@dataclass(frozen=True)
class Explicit:
    graph: Digraph

    def __post_init__(self):
        if self.graph.n > MAX_ISO_ORDER:
            raise ValueError(f"explicit patterns are capped at order {MAX_ISO_ORDER}")

    @property
    def order(self) -> int:
        return self.graph.n

    def digraph(self) -> Digraph:
        return self.graph


PatternSpec = Union[Star, CompleteBipartite, Explicit]


def parse_pattern(text: str) -> PatternSpec:
    """Parse ``star:K`` or ``kst:S,T``."""
    kind, _, arg = text.partition(":")
    try:
        nums = [int(x) for x in arg.split(",")]
    except ValueError:
        raise ValueError(f"malformed pattern {text!r}") from None
    if kind == "star" and len(nums) == 1:
        return Star(nums[0])
    if kind == "kst" and len(nums) == 2:
        return CompleteBipartite(*nums)
    raise ValueError(f"unknown pattern {text!r}; use star:K or kst:S,T")


def pattern_to_json(p: PatternSpec) -> dict:
    if isinstance(p, Star):
        return {"kind": "star", "k": p.k}
    if isinstance(p, CompleteBipartite):
        return {"kind": "kst", "s": p.s, "t": p.t}
    return {"kind": "explicit", "digraph": to_json_dict(p.graph)}


def pattern_from_json(obj: dict) -> PatternSpec:
    kind = obj.get("kind")
    if kind == "star":
        return Star(int(obj["k"]))
    if kind == "kst":
        return CompleteBipartite(int(obj["s"]), int(obj["t"]))
    if kind == "explicit":
        return Explicit(from_json_dict(obj["digraph"]))
    raise ValueError(f"unknown pattern kind {kind!r}")


def pattern_label(p: PatternSpec) -> str:
    if isinstance(p, Star):
        return f"star:{p.k}"
    if isinstance(p, CompleteBipartite):
        return f"kst:{p.s},{p.t}"
    return f"explicit:{p.graph.n}"
