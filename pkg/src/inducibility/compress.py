"""Count-monotone reductions of a digraph toward a sorted tournament blow-up.

The pipeline only ever applies transformations that cannot lower the number
of induced copies of the target pattern:

* twin merging: two twin classes with no arcs between them are fused by
  turning every vertex of one into a twin of the other, whichever endpoint
  counts more (the count is convex in the split, so an endpoint wins);
* digon thinning: a class pair joined in both directions loses one
  direction, since no induced star or K_(s,t) copy can contain a digon;
* orientation: class bundles are pointed from smaller to larger class.

Only patterns in which non-adjacent vertices are interchangeable qualify,
i.e. :class:`~inducibility.patterns.Star` and
:class:`~inducibility.patterns.CompleteBipartite`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence, Union

from .counting import count_pattern
from .density import WeightProfile
from .digraph import Digraph, iter_bits
from .patterns import CompleteBipartite, PatternSpec, Star

__all__ = [
    "ClassPartition",
    "MergeEvaluation",
    "DigonResolution",
    "Reduction",
    "twin_partition",
    "class_relation",
    "merge_step",
    "resolve_digon",
    "compress",
    "compress_trace",
    "sort_and_orient",
    "reduce",
    "reduce_to_profile",
    "blowup_count",
]

NONE, FORWARD, BACKWARD, BOTH = "none", "forward", "backward", "both"


@dataclass(frozen=True)
class ClassPartition:
    classes: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def masks(self) -> list[int]:
        out = []
        for c in self.classes:
            m = 0
            for v in c:
                m |= 1 << v
            out.append(m)
        return out


@dataclass(frozen=True)
class MergeEvaluation:
    """Outcome of fusing twin classes ``pair = (i, j)``.

    ``z`` is the final size of class ``i``: ``x + y`` when class ``j`` was
    absorbed into ``i`` and ``0`` when ``i`` was absorbed into ``j``.
    ``candidate_counts`` holds the counts at ``(z = 0, z = x + y)``.
    """

    pair: tuple[int, int]
    class_sizes: tuple[int, int]
    original_count: int
    candidate_counts: tuple[int, int]
    chosen_z: int

    @property
    def chosen_count(self) -> int:
        return self.candidate_counts[1] if self.chosen_z else self.candidate_counts[0]


@dataclass(frozen=True)
class DigonResolution:
    """Thinning of a two-way class bundle; ``kept`` is the surviving direction."""

    pair: tuple[int, int]
    original_count: int
    candidate_counts: tuple[int, int]  # (keep i->j, keep j->i)
    kept: str

    @property
    def chosen_count(self) -> int:
        return self.candidate_counts[0] if self.kept == FORWARD else self.candidate_counts[1]


Step = Union[MergeEvaluation, DigonResolution]


def _pattern(p: int | PatternSpec) -> PatternSpec:
    if isinstance(p, int):
        return Star(p)
    if not isinstance(p, (Star, CompleteBipartite)):
        raise ValueError("compression is only sound for Star and CompleteBipartite patterns")
    return p


def _count(d: Digraph, p: PatternSpec) -> int:
    return count_pattern(d, p).copies


def twin_partition(d: Digraph) -> ClassPartition:
    """Maximal classes of vertices with equal in- and out-neighbourhoods.

    Equal neighbourhoods already force two vertices to be non-adjacent (an
    arc ``u -> v`` would put ``v`` in its own out-neighbourhood), so grouping
    by the mask pair is exact.  Classes come sorted by size descending, then
    by smallest member.
    """
    groups: dict[tuple[int, int], list[int]] = {}
    for v in range(d.n):
        groups.setdefault((d.out[v], d.inn[v]), []).append(v)
    classes = sorted((tuple(g) for g in groups.values()), key=lambda c: (-len(c), c[0]))
    return ClassPartition(tuple(classes))


def class_relation(d: Digraph, part: ClassPartition, i: int, j: int) -> str:
    """How class ``i`` is joined to class ``j``: none, forward, backward or both."""
    u, v = part.classes[i][0], part.classes[j][0]
    fwd, bwd = d.has_arc(u, v), d.has_arc(v, u)
    if fwd and bwd:
        return BOTH
    if fwd:
        return FORWARD
    if bwd:
        return BACKWARD
    return NONE


def _retarget(d: Digraph, movers: Sequence[int], template: int) -> Digraph:
    """Rewire every vertex in ``movers`` to be a twin of ``template``."""
    mm = 0
    for v in movers:
        mm |= 1 << v
    out = [m & ~mm for m in d.out]
    for v in movers:
        out[v] = d.out[template]
    for w in iter_bits(d.inn[template]):
        out[w] |= mm
    return Digraph.from_masks(out)


def _check_pair(part: ClassPartition, i: int, j: int) -> None:
    if not (0 <= i < part.m and 0 <= j < part.m) or i == j:
        raise ValueError(f"invalid class pair ({i}, {j}) for a partition with {part.m} classes")


def merge_step(d: Digraph, k: int | PatternSpec, i: int, j: int) -> tuple[Digraph, MergeEvaluation]:
    """Fuse non-adjacent twin classes ``i`` and ``j`` without losing copies.

    Both endpoints are recounted; ties go to absorbing into the earlier class.
    """
    p = _pattern(k)
    part = twin_partition(d)
    _check_pair(part, i, j)
    if class_relation(d, part, i, j) != NONE:
        raise ValueError(f"classes {i} and {j} are adjacent; only non-adjacent classes merge")
    ci, cj = part.classes[i], part.classes[j]
    original = _count(d, p)
    into_i = _retarget(d, cj, ci[0])
    into_j = _retarget(d, ci, cj[0])
    n_full, n_zero = _count(into_i, p), _count(into_j, p)
    if n_full > n_zero or (n_full == n_zero and i < j):
        out, z = into_i, len(ci) + len(cj)
    else:
        out, z = into_j, 0
    ev = MergeEvaluation((i, j), (len(ci), len(cj)), original, (n_zero, n_full), z)
    return out, ev


def _drop_bundle(d: Digraph, src: Sequence[int], dst: Sequence[int]) -> Digraph:
    dm = 0
    for v in dst:
        dm |= 1 << v
    out = list(d.out)
    for u in src:
        out[u] &= ~dm
    return Digraph.from_masks(out)


def resolve_digon(d: Digraph, k: int | PatternSpec, i: int, j: int) -> tuple[Digraph, DigonResolution]:
    """Remove one direction of a two-way bundle between classes ``i`` and ``j``."""
    p = _pattern(k)
    part = twin_partition(d)
    _check_pair(part, i, j)
    if class_relation(d, part, i, j) != BOTH:
        raise ValueError(f"classes {i} and {j} are not joined in both directions")
    ci, cj = part.classes[i], part.classes[j]
    original = _count(d, p)
    keep_fwd = _drop_bundle(d, cj, ci)
    keep_bwd = _drop_bundle(d, ci, cj)
    a, b = _count(keep_fwd, p), _count(keep_bwd, p)
    if a >= b:
        return keep_fwd, DigonResolution((i, j), original, (a, b), FORWARD)
    return keep_bwd, DigonResolution((i, j), original, (a, b), BACKWARD)


def _first_pair(d: Digraph, part: ClassPartition, relation: str) -> tuple[int, int] | None:
    for i in range(part.m):
        for j in range(i + 1, part.m):
            if class_relation(d, part, i, j) == relation:
                return i, j
    return None


def compress_trace(d: Digraph, k: int | PatternSpec) -> tuple[Digraph, list[Step]]:
    """Run merges (and digon thinning) to a fixed point, keeping the step log.

    Merges take priority; the first non-adjacent pair in lexicographic order
    is fused each time.  Only when none remain is the first two-way bundle
    thinned.  Every merge strictly lowers the class count and every thinning
    lowers the number of two-way bundles without raising the class count,
    so the loop terminates.
    """
    p = _pattern(k)
    steps: list[Step] = []
    while True:
        part = twin_partition(d)
        pair = _first_pair(d, part, NONE)
        if pair is not None:
            d, ev = merge_step(d, p, *pair)
            steps.append(ev)
            continue
        pair = _first_pair(d, part, BOTH)
        if pair is not None:
            d, ev = resolve_digon(d, p, *pair)
            steps.append(ev)
            continue
        return d, steps


def compress(d: Digraph, k: int | PatternSpec) -> Digraph:
    return compress_trace(d, k)[0]


def _sides(p: PatternSpec) -> tuple[int, int]:
    """(source-side size, sink-side size) of one copy inside a single bundle."""
    if isinstance(p, Star):
        return 1, p.k - 1
    return p.s, p.t


def _from_class_arcs(n: int, masks: list[int], arcs: list[tuple[int, int]]) -> Digraph:
    out = [0] * n
    for a, b in arcs:
        for u in iter_bits(masks[a]):
            out[u] |= masks[b]
    return Digraph.from_masks(out)


def sort_and_orient(d: Digraph, k: int | PatternSpec) -> Digraph:
    """Point every class bundle so the larger class sits on the larger side of the pattern.

    For stars (1 source, ``k - 1`` sinks) that means smaller class -> larger
    class.  Equal-size pairs, and patterns with equal sides, keep their
    current orientation.  Requires every class pair to be joined in exactly
    one direction.
    """
    p = _pattern(k)
    part = twin_partition(d)
    src_side, snk_side = _sides(p)
    sizes = part.sizes
    arcs = []
    for a in range(part.m):
        for b in range(a + 1, part.m):
            rel = class_relation(d, part, a, b)
            if rel in (NONE, BOTH):
                raise ValueError(
                    f"classes {a} and {b} are not joined in exactly one direction; run compress first"
                )
            if sizes[a] == sizes[b] or src_side == snk_side:
                arcs.append((a, b) if rel == FORWARD else (b, a))
            elif snk_side > src_side:
                arcs.append((b, a))  # sizes[a] > sizes[b]
            else:
                arcs.append((a, b))
    return _from_class_arcs(d.n, part.masks(), arcs)


def blowup_count(sizes: Sequence[int], class_arcs: Sequence[tuple[int, int]], k: int | PatternSpec) -> int:
    """Copies in a tournament blow-up, every copy living inside one bundle.

    Valid when every two classes are joined in one direction: a copy
    touching three classes would contain an arc between two leaves.
    """
    p = _pattern(k)
    src, snk = _sides(p)
    total = 0
    for a, b in class_arcs:
        total += comb(sizes[a], src) * comb(sizes[b], snk)
    return total


@dataclass(frozen=True)
class Reduction:
    digraph: Digraph
    partition: ClassPartition
    profile: WeightProfile
    steps: tuple[Step, ...]

    def class_arcs(self) -> list[tuple[int, int]]:
        part = self.partition
        arcs = []
        for a in range(part.m):
            for b in range(part.m):
                if a != b and class_relation(self.digraph, part, a, b) == FORWARD:
                    arcs.append((a, b))
        return arcs


def reduce(d: Digraph, k: int | PatternSpec) -> Reduction:
    """compress, then sort_and_orient; returns the digraph with its class profile."""
    if d.n == 0:
        raise ValueError("cannot reduce the empty digraph on 0 vertices")
    p = _pattern(k)
    compressed, steps = compress_trace(d, p)
    oriented = sort_and_orient(compressed, p)
    part = twin_partition(oriented)
    return Reduction(oriented, part, WeightProfile.from_sizes(part.sizes), tuple(steps))


def reduce_to_profile(d: Digraph, k: int | PatternSpec) -> WeightProfile:
    return reduce(d, k).profile
