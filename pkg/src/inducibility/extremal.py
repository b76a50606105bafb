"""Finite constructions and brute-force ground truth.

* :func:`exhaustive_max` scans every labeled digraph on ``n`` vertices;
* :func:`iterated_blowup` and :func:`balanced_kst_blowup` build the
  conjectured extremal digraphs at finite ``n``;
* :func:`aux_3graph` and :func:`is_c5_free` cover the 3-graph whose edges are
  the induced 3-stars of a digraph, which never contains a tight 5-cycle.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations, product
from pathlib import Path
from typing import Iterable, Sequence

from .counting import count_pattern, count_pattern_oracle
from .density import solve_alpha
from .digraph import Digraph, from_json_dict, iter_bits, to_json_dict
from .patterns import PatternSpec, pattern_from_json, pattern_to_json

__all__ = [
    "ThreeGraph",
    "SearchReport",
    "SEARCH_CAPS",
    "exhaustive_max",
    "search_space_size",
    "blowup",
    "transitive_blowup",
    "iterated_blowup",
    "balanced_kst_blowup",
    "aux_3graph",
    "is_c5_free",
    "tight_c5",
]

SEARCH_CAPS = {"general": 5, "oriented": 6}
_BASE = {"general": 4, "oriented": 3}


# -- exhaustive search --------------------------------------------------------


@dataclass(frozen=True)
class SearchReport:
    n: int
    pattern: PatternSpec
    max_copies: int
    witness: Digraph
    graphs_examined: int
    mode: str

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pattern": pattern_to_json(self.pattern),
            "max_copies": self.max_copies,
            "witness": to_json_dict(self.witness),
            "graphs_examined": self.graphs_examined,
            "mode": self.mode,
        }

    @classmethod
    def from_json(cls, obj: dict | str) -> "SearchReport":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            n=obj["n"],
            pattern=pattern_from_json(obj["pattern"]),
            max_copies=obj["max_copies"],
            witness=from_json_dict(obj["witness"]),
            graphs_examined=obj["graphs_examined"],
            mode=obj["mode"],
        )


def search_space_size(n: int, mode: str) -> int:
    return _BASE[mode] ** math.comb(n, 2)


def _digraph_from_digits(n: int, pairs: Sequence[tuple[int, int]], digits: Sequence[int]) -> Digraph:
    # digit per unordered pair {u < v}: 0 none, 1 u->v, 2 v->u, 3 both
    out = [0] * n
    inn = [0] * n
    for (u, v), dg in zip(pairs, digits):
        if dg & 1:
            out[u] |= 1 << v
            inn[v] |= 1 << u
        if dg & 2:
            out[v] |= 1 << u
            inn[u] |= 1 << v
    return Digraph(n, tuple(out), tuple(inn))


def _scan_chunk(task) -> tuple[int, int, tuple[int, ...], int]:
    """Scan every digraph whose leading digits equal ``prefix``.

    Returns ``(best, rank_of_first_best, digits_of_first_best, examined)``;
    rank is the position in the global enumeration order.
    """
    n, mode, pattern, use_oracle, prefix = task
    base = _BASE[mode]
    pairs = list(combinations(range(n), 2))
    width = len(pairs)
    rest = width - len(prefix)
    counter = count_pattern_oracle if use_oracle else count_pattern
    best, best_rank, best_digits = -1, -1, ()
    offset = 0
    for dg in prefix:
        offset = offset * base + dg
    offset *= base**rest
    examined = 0
    for local, suffix in enumerate(product(range(base), repeat=rest)):
        digits = prefix + suffix
        c = counter(_digraph_from_digits(n, pairs, digits), pattern).copies
        examined += 1
        if c > best:
            best, best_rank, best_digits = c, offset + local, digits
    return best, best_rank, best_digits, examined


def exhaustive_max(
    n: int,
    pattern: PatternSpec,
    mode: str = "oriented",
    threads: int = 1,
    oracle: bool = False,
) -> SearchReport:
    """Maximum number of induced copies of ``pattern`` over all labeled digraphs.

    ``oriented`` enumerates 3^C(n,2) digraphs without digons, ``general``
    4^C(n,2) digraphs.  The witness is the first maximizer in enumeration
    order (odometer over vertex pairs in lexicographic order, last pair
    fastest) regardless of ``threads``.
    """
    if mode not in _BASE:
        raise ValueError(f"unknown mode {mode!r}; expected 'general' or 'oriented'")
    cap = SEARCH_CAPS[mode]
    if n > cap:
        raise ValueError(f"exhaustive search in {mode} mode is capped at n <= {cap}, got n = {n}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    base = _BASE[mode]
    width = math.comb(n, 2)
    lead = 0
    while lead < width and base**lead < max(1, threads) * 4:
        lead += 1
    if threads <= 1:
        lead = 0
    tasks = [(n, mode, pattern, oracle, prefix) for prefix in product(range(base), repeat=lead)]
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_scan_chunk, tasks))
    else:
        results = [_scan_chunk(t) for t in tasks]
    examined = sum(r[3] for r in results)
    best = max(r[0] for r in results)
    first = min((r for r in results if r[0] == best), key=lambda r: r[1])
    pairs = list(combinations(range(n), 2))
    witness = _digraph_from_digits(n, pairs, first[2])
    return SearchReport(n, pattern, best, Digraph.from_masks(witness.out), examined, mode)


# -- constructions ------------------------------------------------------------


def blowup(sizes: Sequence[int], class_arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Independent classes of the given sizes, consecutive labels, complete bundles along ``class_arcs``."""
    masks, start = [], 0
    for c in sizes:
        masks.append(((1 << c) - 1) << start)
        start += c
    out = [0] * start
    for a, b in class_arcs:
        if a == b:
            raise ValueError("a class cannot point to itself")
        for u in iter_bits(masks[a]):
            out[u] |= masks[b]
    return Digraph.from_masks(out)


def transitive_blowup(sizes: Sequence[int]) -> Digraph:
    """Blow-up of a transitive tournament: class ``j`` points to class ``i`` whenever ``i < j``."""
    m = len(sizes)
    return blowup(sizes, [(j, i) for i in range(m) for j in range(i + 1, m)])


def _round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def iterated_blowup(n: int, k: int, x: float | None = None) -> Digraph:
    """Split off ``A`` of size ``round(x_k * size)``, join ``A -> B``, recurse inside ``A``.

    ``|A|`` is clamped to ``[1, size - 1]`` while ``size >= 2``.  Vertices
    of ``A`` receive the lowest labels at every level.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if x is None:
        x = solve_alpha(k).x_star
    out = [0] * n
    size = n
    while size >= 2:
        a = min(max(_round_half_up(x * size), 1), size - 1)
        sink = ((1 << size) - 1) & ~((1 << a) - 1)
        for u in range(a):
            out[u] |= sink
        size = a
    return Digraph.from_masks(out)


def balanced_kst_blowup(n: int, s: int, t: int) -> Digraph:
    """Sources ``0..a-1`` with ``a = round(s n / (s + t))``, every source pointing to every sink."""
    if s < 1 or t < 1:
        raise ValueError(f"K_(s,t) needs s, t >= 1, got ({s}, {t})")
    if n < s + t:
        raise ValueError(f"balanced blow-up needs n >= s + t = {s + t}, got {n}")
    a = _round_half_up(s * n / (s + t))
    return blowup([a, n - a], [(0, 1)])


# -- auxiliary 3-graph ----------------------------------------------------------


@dataclass(frozen=True)
class ThreeGraph:
    n: int
    triples: frozenset

    def __post_init__(self):
        clean = set()
        for tr in self.triples:
            tr = tuple(sorted(tr))
            if len(tr) != 3 or len(set(tr)) != 3:
                raise ValueError(f"not a 3-subset: {tr}")
            if not all(0 <= v < self.n for v in tr):
                raise ValueError(f"triple {tr} has a vertex outside [0, {self.n})")
            clean.add(tr)
        object.__setattr__(self, "triples", frozenset(clean))

    def to_text(self) -> str:
        lines = [f"n {self.n}"] + [f"{a} {b} {c}" for a, b, c in sorted(self.triples)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ThreeGraph":
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not rows or len(rows[0]) != 2 or rows[0][0] != "n":
            raise ValueError("ThreeGraph text must start with 'n <count>'")
        n = int(rows[0][1])
        triples = []
        for row in rows[1:]:
            if len(row) != 3:
                raise ValueError(f"expected 'a b c', got {' '.join(row)!r}")
            triples.append(tuple(int(x) for x in row))
        return cls(n, frozenset(triples))

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_text())


def aux_3graph(d: Digraph) -> ThreeGraph:
    """3-graph whose edges are the vertex triples inducing an out-star ``S_3``."""
    triples = set()
    for u in range(d.n):
        leaves = list(iter_bits(d.out[u] & ~d.inn[u]))
        for i, v in enumerate(leaves):
            free = d.out[v] | d.inn[v]
            for w in leaves[i + 1 :]:
                if not (free >> w) & 1:
                    triples.add(tuple(sorted((u, v, w))))
    return ThreeGraph(d.n, frozenset(triples))


def _cyclic_orders(five: Sequence[int]):
    """The 12 cyclic orders of five vertices up to rotation and reflection."""
    first, rest = five[0], five[1:]
    for perm in permutations(rest):
        if perm[0] < perm[-1]:
            yield (first,) + perm


def is_c5_free(h: ThreeGraph) -> bool:
    """True iff no five vertices carry a tight cycle (all five consecutive triples are edges)."""
    edges = h.triples
    if len(edges) < 5:
        return True
    degree: dict[int, int] = {}
    for tr in edges:
        for v in tr:
            degree[v] = degree.get(v, 0) + 1
    # every vertex of a tight 5-cycle lies in exactly three of its edges
    verts = sorted(v for v, dg in degree.items() if dg >= 3)
    for five in combinations(verts, 5):
        for order in _cyclic_orders(five):
            if all(tuple(sorted((order[i], order[(i + 1) % 5], order[(i + 2) % 5]))) in edges for i in range(5)):
                return False
    return True


def tight_c5() -> ThreeGraph:
    """The tight 5-cycle with edges 012, 123, 234, 340, 401."""
    return ThreeGraph(5, frozenset(tuple(sorted((i, (i + 1) % 5, (i + 2) % 5))) for i in range(5)))
