"""Exact counts of induced copies of stars, complete bipartite digraphs and
small explicit patterns.

The structured counters never enumerate ``C(n, k)`` subsets.  They reduce
both problems to counting independent sets of a fixed size inside a pure
out-neighbourhood, which :func:`count_independent` does by include/exclude
branching on a max-degree vertex, cutting as soon as the candidate set is
arc-free (closed binomial) or too small.  :func:`count_pattern_oracle` is the
slow reference every fast path must agree with.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .digraph import Digraph, induced_subdigraph, is_isomorphic, iter_bits
from .patterns import CompleteBipartite, Explicit, PatternSpec, Star

__all__ = [
    "CountResult",
    "count_independent",
    "count_stars",
    "count_kst",
    "count_pattern_oracle",
    "count_pattern",
]


@dataclass(frozen=True)
class CountResult:
    copies: int
    n: int
    pattern_order: int

    @property
    def subsets(self) -> int:
        return comb(self.n, self.pattern_order)

    @property
    def density_exact(self) -> Fraction:
        total = self.subsets
        return Fraction(self.copies, total) if total else Fraction(0)

    @property
    def density(self) -> float:
        return float(self.density_exact)


def count_independent(adj: tuple[int, ...] | list[int], cand: int, r: int, memo: dict | None = None) -> int:
    """Number of ``r``-subsets of ``cand`` with no two members adjacent.

    ``adj[v]`` is the mask of vertices joined to ``v`` in either direction.
    """
    if memo is None:
        memo = {}
    return _indep(adj, cand, r, memo)


def _indep(adj, cand: int, r: int, memo: dict) -> int:
    if r == 0:
        return 1
    size = cand.bit_count()
    if size < r:
        return 0
    if r == 1:
        return size
    key = (cand, r)
    hit = memo.get(key)
    if hit is not None:
        return hit
    pivot, pivot_deg = -1, 0
    for v in iter_bits(cand):
        deg = (adj[v] & cand).bit_count()
        if deg > pivot_deg:
            pivot, pivot_deg = v, deg
    if pivot_deg == 0:
        res = comb(size, r)
    else:
        rest = cand & ~(1 << pivot)
        res = _indep(adj, rest, r, memo) + _indep(adj, rest & ~adj[pivot], r - 1, memo)
    memo[key] = res
    return res


def _adjacency(d: Digraph) -> tuple[int, ...]:
    return tuple(d.out[v] | d.inn[v] for v in range(d.n))


def count_stars(d: Digraph, k: int) -> CountResult:
    """Induced copies of the out-star on ``k`` vertices.

    For ``k >= 3`` the centre of a copy is its unique vertex of positive
    out-degree, so summing over centres counts each copy once.  For ``k = 2``
    every arc outside a digon is one copy and the same sum applies.
    """
    if k < 2:
        raise ValueError(f"star order must be at least 2, got {k}")
    adj = _adjacency(d)
    memo: dict = {}
    by_leafset: dict[int, int] = {}
    total = 0
    for u in range(d.n):
        leaves = d.out[u] & ~d.inn[u]
        c = by_leafset.get(leaves)
        if c is None:
            c = _indep(adj, leaves, k - 1, memo)
            by_leafset[leaves] = c
        total += c
    return CountResult(total, d.n, k)


def count_kst(d: Digraph, s: int, t: int) -> CountResult:
    """Induced copies of K_(s,t) (``s`` sources, ``t`` sinks).

    Source sets are grown one vertex at a time among vertices whose pure
    out-degree is at least ``t``, keeping them independent and tracking the
    common pure out-neighbourhood; every completed source set contributes
    the number of independent ``t``-subsets of that neighbourhood.
    """
    if s < 1 or t < 1:
        raise ValueError(f"K_(s,t) needs s, t >= 1, got ({s}, {t})")
    adj = _adjacency(d)
    pure = [d.out[v] & ~d.inn[v] for v in range(d.n)]
    cands = [v for v in range(d.n) if pure[v].bit_count() >= t]
    memo: dict = {}
    total = 0

    def grow(start: int, chosen: int, common: int, blocked: int) -> None:
        nonlocal total
        if chosen == s:
            total += _indep(adj, common, t, memo)
            return
        need = s - chosen
        for idx in range(start, len(cands) - need + 1):
            v = cands[idx]
            if (blocked >> v) & 1:
                continue
            nxt = common & pure[v]
            if nxt.bit_count() < t:
                continue
            grow(idx + 1, chosen + 1, nxt, blocked | adj[v])

    full = (1 << d.n) - 1
    grow(0, 0, full, 0)
    return CountResult(total, d.n, s + t)


def count_pattern_oracle(d: Digraph, pattern: PatternSpec) -> CountResult:
    """Reference count: test every vertex subset of the pattern's order."""
    target = pattern.digraph()
    p = target.n
    arcs = target.num_arcs
    copies = 0
    for subset in combinations(range(d.n), p):
        sel = 0
        for v in subset:
            sel |= 1 << v
        if sum((d.out[v] & sel).bit_count() for v in subset) != arcs:
            continue
        if is_isomorphic(induced_subdigraph(d, subset), target):
            copies += 1
    return CountResult(copies, d.n, p)


def count_pattern(d: Digraph, pattern: PatternSpec, oracle: bool = False) -> CountResult:
    """Dispatch to the structured counter for ``pattern`` (or the oracle)."""
    if oracle or isinstance(pattern, Explicit):
        return count_pattern_oracle(d, pattern)
    if isinstance(pattern, Star):
        return count_stars(d, pattern.k)
    if isinstance(pattern, CompleteBipartite):
        return count_kst(d, pattern.s, pattern.t)
    raise TypeError(f"not a pattern: {pattern!r}")
