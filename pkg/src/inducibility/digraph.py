"""Finite labeled digraphs stored as per-vertex bitmasks.

Vertex sets are plain Python ints used as bitsets: bit ``v`` is set when
vertex ``v`` is a member.  For ``n <= 64`` every mask fits a machine word;
larger ``n`` falls back transparently to arbitrary-precision ints with the
same semantics, so nothing else in the package cares about the size.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import permutations
from pathlib import Path
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Digraph",
    "FormatError",
    "make_digraph",
    "reverse",
    "induced_subdigraph",
    "is_isomorphic",
    "random_digraph",
    "iter_bits",
    "to_arclist",
    "from_arclist",
    "read_arclist",
    "write_arclist",
    "to_json_dict",
    "from_json_dict",
    "MAX_ISO_ORDER",
]

MAX_ISO_ORDER = 8


class FormatError(ValueError):
    """Malformed arclist or JSON digraph input."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph on vertices ``0..n-1``.

    ``out[v]`` and ``inn[v]`` are bitmasks of out- and in-neighbours.  Build
    instances with :func:`make_digraph` or :meth:`from_masks`; the raw
    constructor does not validate.
    """

    n: int
    out: tuple[int, ...]
    inn: tuple[int, ...]

    @classmethod
    def from_masks(cls, out: Sequence[int]) -> "Digraph":
        n = len(out)
        full = (1 << n) - 1
        inn = [0] * n
        for u, m in enumerate(out):
            if m & ~full:
                raise ValueError(f"vertex {u} has an out-neighbour outside [0, {n})")
            if (m >> u) & 1:
                raise ValueError(f"loop arc ({u},{u}) is not allowed")
            for v in iter_bits(m):
                inn[v] |= 1 << u
        return cls(n, tuple(out), tuple(inn))

    @classmethod
    def empty(cls, n: int) -> "Digraph":
        return cls(n, (0,) * n, (0,) * n)

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out[u])]

    @property
    def num_arcs(self) -> int:
        return sum(m.bit_count() for m in self.out)

    def adjacency(self, v: int) -> int:
        """Mask of vertices joined to ``v`` by an arc in either direction."""
        return self.out[v] | self.inn[v]

    def pure_out(self, v: int) -> int:
        """Out-neighbours ``w`` of ``v`` with no returning arc ``w -> v``."""
        return self.out[v] & ~self.inn[v]

    def has_digon(self) -> bool:
        return any(self.out[v] & self.inn[v] for v in range(self.n))

    def add_isolated(self, count: int = 1) -> "Digraph":
        return Digraph(self.n + count, self.out + (0,) * count, self.inn + (0,) * count)

    def validate(self) -> None:
        """Walk both adjacency directions and check every invariant."""
        if len(self.out) != self.n or len(self.inn) != self.n:
            raise ValueError("mask tuples do not match the vertex count")
        full = (1 << self.n) - 1
        for v in range(self.n):
            if (self.out[v] | self.inn[v]) & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if (self.out[v] >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            for w in iter_bits(self.out[v]):
                if not (self.inn[w] >> v) & 1:
                    raise ValueError(f"arc {v}->{w} missing from in-neighbours of {w}")
            for w in iter_bits(self.inn[v]):
                if not (self.out[w] >> v) & 1:
                    raise ValueError(f"in-arc {w}->{v} missing from out-neighbours of {w}")

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"


def make_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Build a digraph from ordered pairs; duplicates are ignored."""
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    out = [0] * n
    for u, v in arcs:
        if u == v:
            raise ValueError(f"loop arc ({u},{v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc ({u},{v}) has an endpoint outside [0, {n})")
        out[u] |= 1 << v
    return Digraph.from_masks(out)


def reverse(d: Digraph) -> Digraph:
    return Digraph(d.n, d.inn, d.out)


def induced_subdigraph(d: Digraph, vertices: Iterable[int]) -> Digraph:
    """Subdigraph induced on ``vertices``, relabeled in ascending order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < d.n:
            raise ValueError(f"vertex {v} outside [0, {d.n})")
    index = {v: i for i, v in enumerate(vs)}
    sel = _mask(vs)
    out = []
    for v in vs:
        out.append(_mask(index[w] for w in iter_bits(d.out[v] & sel)))
    return Digraph.from_masks(out)


def _degree_pairs(d: Digraph) -> list[tuple[int, int]]:
    return [(d.out[v].bit_count(), d.inn[v].bit_count()) for v in range(d.n)]


def is_isomorphic(a: Digraph, b: Digraph) -> bool:
    """Exhaustive isomorphism test for digraphs of order at most 8.

    Backtracks over vertex images, only mapping vertices with equal
    (out-degree, in-degree) pairs and checking arcs against every
    previously placed vertex in both directions.
    """
    if a.n > MAX_ISO_ORDER or b.n > MAX_ISO_ORDER:
        raise ValueError(f"isomorphism test is capped at order {MAX_ISO_ORDER}")
    if a.n != b.n or a.num_arcs != b.num_arcs:
        return False
    da, db = _degree_pairs(a), _degree_pairs(b)
    if sorted(da) != sorted(db):
        return False
    n = a.n
    image = [-1] * n
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        for cand in range(n):
            if (used >> cand) & 1 or db[cand] != da[i]:
                continue
            ok = True
            for j in range(i):
                pj = image[j]
                if a.has_arc(i, j) != b.has_arc(cand, pj) or a.has_arc(j, i) != b.has_arc(pj, cand):
                    ok = False
                    break
            if ok:
                image[i] = cand
                used |= 1 << cand
                if place(i + 1):
                    return True
                used &= ~(1 << cand)
        return False

    return place(0)


def random_digraph(n: int, arc_probability: float, mode: str = "general", seed: int = 0) -> Digraph:
    """Seeded random digraph.

    ``general``: every ordered pair is an arc independently with the given
    probability.  ``oriented``: every unordered pair is present with that
    probability and then oriented by a fair coin, so no digons appear.
    """
    if not 0.0 <= arc_probability <= 1.0:
        raise ValueError("arc_probability must lie in [0, 1]")
    rng = random.Random(seed)
    out = [0] * n
    if mode == "general":
        for u in range(n):
            for v in range(n):
                if u != v and rng.random() < arc_probability:
                    out[u] |= 1 << v
    elif mode == "oriented":
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < arc_probability:
                    if rng.random() < 0.5:
                        out[u] |= 1 << v
                    else:
                        out[v] |= 1 << u
    else:
        raise ValueError(f"unknown mode {mode!r}; expected 'general' or 'oriented'")
    return Digraph.from_masks(out)


# -- serialization ----------------------------------------------------------


def to_arclist(d: Digraph) -> str:
    lines = [f"n {d.n}"]
    lines.extend(f"{u} {v}" for u, v in d.arcs())
    return "\n".join(lines) + "\n"


def from_arclist(text: str) -> Digraph:
    """Parse the ``arclist v1`` text format.  Duplicate arcs are rejected."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2 or rows[0][0] != "n":
        raise FormatError("arclist must start with a line 'n <count>'")
    try:
        n = int(rows[0][1])
    except ValueError:
        raise FormatError(f"bad vertex count {rows[0][1]!r}") from None
    if n < 0:
        raise FormatError("vertex count must be nonnegative")
    seen: set[tuple[int, int]] = set()
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise FormatError(f"line {lineno}: expected '<u> <v>', got {' '.join(row)!r}")
        try:
            arc = (int(row[0]), int(row[1]))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex") from None
        if arc in seen:
            raise FormatError(f"line {lineno}: duplicate arc {arc}")
        seen.add(arc)
    try:
        return make_digraph(n, seen)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def read_arclist(path: str | Path) -> Digraph:
    return from_arclist(Path(path).read_text())


def write_arclist(d: Digraph, path: str | Path) -> None:
    Path(path).write_text(to_arclist(d))


def to_json_dict(d: Digraph) -> dict:
    return {"n": d.n, "arcs": [[u, v] for u, v in d.arcs()]}


def from_json_dict(obj: dict | str) -> Digraph:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        n = int(obj["n"])
        arcs = [tuple(a) for a in obj["arcs"]]
    except (KeyError, TypeError, ValueError):
        raise FormatError("JSON digraph needs integer 'n' and list 'arcs'") from None
    if any(len(a) != 2 for a in arcs):
        raise FormatError("each arc must be a pair [u, v]")
    if len(set(arcs)) != len(arcs):
        raise FormatError("duplicate arcs in JSON digraph")
    try:
        return make_digraph(n, arcs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def all_permutation_isomorphic(a: Digraph, b: Digraph) -> bool:
    """Plain permutation-loop isomorphism; slow reference used by tests."""
    if a.n != b.n:
        return False
    arcs_a = set(a.arcs())
    arcs_b = set(b.arcs())
    for p in permutations(range(a.n)):
        if {(p[u], p[v]) for u, v in arcs_a} == arcs_b:
            return True
    return False
