"""Elementary marked vinyl graphs in slice form and their omnichrome colorings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .braid import MarkedClosure


class Segment(NamedTuple):
    """A label-1 edge: strand position (1-based) and the slice of the dumble at its
    lower end, or None for a strand circle touching no dumble."""

    strand: int
    start: int | None


class Dumble(NamedTuple):
    slice: int
    position: int
    sw: int
    se: int
    nw: int
    ne: int


class GraphStats(NamedTuple):
    level: int
    split_count: int
    connected: bool
    depth: int


@dataclass(frozen=True)
class VinylGraph:
    """Annular slice word on `level` strands.

    `slices[t]` is None for an identity slice or the position i of a dumble joining
    strands i and i+1. The mark sits on strand `mark_strand` at slot `mark_slot`
    (slot h lies just below slice h; slot 0 is the closure arc).
    """

    level: int
    slices: tuple[int | None, ...]
    mark_strand: int
    mark_slot: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "slices", tuple(self.slices))
        if self.level < 1:
            raise ValueError("level must be positive")
        for s in self.slices:
            if s is not None and not 1 <= s < self.level:
                raise ValueError(f"dumble position {s} out of range for level {self.level}")
        if not 1 <= self.mark_strand <= self.level:
            raise ValueError(f"mark strand {self.mark_strand} out of range")
        if not 0 <= self.mark_slot <= len(self.slices):
            raise ValueError(f"mark slot {self.mark_slot} out of range")

    @cached_property
    def _touches(self) -> list[list[int]]:
        touch: list[list[int]] = [[] for _ in range(self.level + 1)]
        for t, i in enumerate(self.slices):
            if i is not None:
                touch[i].append(t)
                touch[i + 1].append(t)
        return touch

    @cached_property
    def segments(self) -> tuple[Segment, ...]:
        out: list[Segment] = []
        for p in range(1, self.level + 1):
            ts = self._touches[p]
            if not ts:
                out.append(Segment(p, None))
            else:
                out.extend(Segment(p, t) for t in ts)
        return tuple(out)

    @cached_property
    def segment_index(self) -> dict[Segment, int]:
        return {s: n for n, s in enumerate(self.segments)}

    def segment_at(self, strand: int, slot: int) -> int:
        """Index of the segment of `strand` passing through `slot`."""
        ts = self._touches[strand]
        if not ts:
            return self.segment_index[Segment(strand, None)]
        below = [t for t in ts if t < slot]
        start = below[-1] if below else ts[-1]
        return self.segment_index[Segment(strand, start)]

    def _segment_ending_at(self, strand: int, t: int) -> int:
        ts = self._touches[strand]
        k = ts.index(t)
        return self.segment_index[Segment(strand, ts[k - 1])]

    @cached_property
    def dumbles(self) -> tuple[Dumble, ...]:
        out = []
        for t, i in enumerate(self.slices):
            if i is None:
                continue
            idx = self.segment_index
            out.append(
                Dumble(
                    slice=t,
                    position=i,
                    sw=self._segment_ending_at(i, t),
                    se=self._segment_ending_at(i + 1, t),
                    nw=idx[Segment(i, t)],
                    ne=idx[Segment(i + 1, t)],
                )
            )
        return tuple(out)

    def dumble_at(self, t: int) -> Dumble:
        for d in self.dumbles:
            if d.slice == t:
                return d
        raise KeyError(f"slice {t} is not a dumble")

    @property
    def marked_edge(self) -> int:
        return self.segment_at(self.mark_strand, self.mark_slot)

    @property
    def split_count(self) -> int:
        return len(self.dumbles)

    @property
    def depth(self) -> int:
        return self.level - self.mark_strand

    @cached_property
    def connected(self) -> bool:
        positions = {i for i in self.slices if i is not None}
        return all(i in positions for i in range(1, self.level))

    def stats(self) -> GraphStats:
        return GraphStats(self.level, self.split_count, self.connected, self.depth)

    def smoothed(self, t: int) -> "VinylGraph":
        """The graph with the dumble at slice t replaced by an identity slice."""
        if self.slices[t] is None:
            raise ValueError(f"slice {t} is not a dumble")
        sl = list(self.slices)
        sl[t] = None
        return VinylGraph(self.level, tuple(sl), self.mark_strand, self.mark_slot)

    @cached_property
    def coloring_table(self) -> "ColoringTable":
        return _build_colorings(self)


def graph_stats(g: VinylGraph) -> GraphStats:
    return g.stats()


def resolve(c: MarkedClosure, state: tuple[int, ...] | list[int] | str) -> VinylGraph:
    """Resolve each crossing: positive 0 -> dumble, 1 -> identity; negative the reverse."""
    bits = [int(b) for b in state]
    if len(bits) != len(c.word):
        raise ValueError(f"state has {len(bits)} bits, word has {len(c.word)} letters")
    slices: list[int | None] = []
    for (i, sign), b in zip(c.word.letters, bits):
        if b not in (0, 1):
            raise ValueError(f"state bit {b} is not 0 or 1")
        dumble = (b == 0) if sign > 0 else (b == 1)
        slices.append(i if dumble else None)
    return VinylGraph(c.strands, tuple(slices), c.strand, c.height)


def pi_graph(k: int, n: int) -> VinylGraph:
    """The depth-one graph carrying the domino basis.

    Bottom to top: dumbles at positions 1..k-1, then dumbles at positions k-n..k-1.
    For box i (1-based) the lower dumble at position k-n-1+i is e_i^bot and the upper
    one is e_i^top. The mark sits on strand k-1 at the closure arc.
    """
    if not 1 <= n <= k - 1:
        raise ValueError("pi_graph needs 1 <= n <= k-1")
    slices = tuple(range(1, k)) + tuple(range(k - n, k))
    return VinylGraph(k, slices, k - 1, 0)


def pi_dumbles(k: int, n: int) -> tuple[list[int], list[int]]:
    """Slice indices of (e_i^top, e_i^bot) for i = 1..n in pi_graph(k, n)."""
    bottom = [k - n - 2 + i for i in range(1, n + 1)]
    top = [k - 1 + i - 1 for i in range(1, n + 1)]
    return top, bottom


def circle(level: int = 1) -> VinylGraph:
    """Nested strand circles without dumbles, marked on the outermost one."""
    return VinylGraph(level, (), level, 0)


@dataclass(frozen=True)
class Coloring:
    pigments: tuple[int, ...]

    def __getitem__(self, seg: int) -> int:
        return self.pigments[seg]


class ColoringTable(NamedTuple):
    """All omnichrome colorings as an integer array of pigments (rows) per segment (columns)."""

    pigments: np.ndarray


def _closing_choices(g: VinylGraph) -> list[list[int]]:
    """Straight/swap choices whose composite fixes every position, returned as the
    seam-position label carried by each segment."""
    k = g.level
    slices = g.slices
    L = len(slices)
    seg_index = g.segment_index
    nseg = len(g.segments)
    # remaining[t][p]: does some dumble at slice >= t touch position p
    remaining = [[False] * (k + 2) for _ in range(L + 1)]
    for t in range(L - 1, -1, -1):
        remaining[t] = list(remaining[t + 1])
        i = slices[t]
        if i is not None:
            remaining[t][i] = remaining[t][i + 1] = True

    results: list[list[int]] = []
    labels = [0] * nseg
    for p in range(1, k + 1):
        if not g._touches[p]:
            labels[seg_index[Segment(p, None)]] = p

    state = list(range(k + 1))  # state[p] = seam label at position p (1-based)

    def rec(t: int) -> None:
        if t == L:
            if all(state[p] == p for p in range(1, k + 1)):
                results.append(list(labels))
            return
        for p in range(1, k + 1):
            if state[p] != p and not remaining[t][p]:
                return
        i = slices[t]
        if i is None:
            rec(t + 1)
            return
        a, b = seg_index[Segment(i, t)], seg_index[Segment(i + 1, t)]
        for swap in (False, True):
            if swap:
                state[i], state[i + 1] = state[i + 1], state[i]
            labels[a], labels[b] = state[i], state[i + 1]
            rec(t + 1)
            if swap:
                state[i], state[i + 1] = state[i + 1], state[i]

    rec(0)
    return results


def _build_colorings(g: VinylGraph) -> ColoringTable:
    k = g.level
    base = _closing_choices(g)
    nseg = len(g.segments)
    if not base:
        return ColoringTable(np.zeros((0, nseg), dtype=np.int64))
    lab = np.array(base, dtype=np.int64) - 1  # (choices, nseg), 0-based seam labels
    rows = []
    for perm in itertools.permutations(range(1, k + 1)):
        rows.append(np.array(perm, dtype=np.int64)[lab])
    return ColoringTable(np.concatenate(rows, axis=0))


def colorings(g: VinylGraph) -> list[Coloring]:
    return [Coloring(tuple(int(x) for x in row)) for row in g.coloring_table.pigments]
