"""Coloring state sums of decorated vinyl graphs, the gl1 and marked gl0 pairings,
and the rooted-tree evaluation."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from typing import Iterable, Mapping, Sequence

import numpy as np

from .vinyl import VinylGraph

# Keep int64 products below this bound; otherwise fall back to Python integers.
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class Decoration:
    """Dot exponents, one per label-1 segment of a graph (indexed as in graph.segments)."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError("dot exponents must be non-negative")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def dry(cls, g: VinylGraph) -> "Decoration":
        return cls((0,) * len(g.segments))

    @classmethod
    def dots(cls, g: VinylGraph, mapping: Mapping[int, int]) -> "Decoration":
        exps = [0] * len(g.segments)
        for seg, e in mapping.items():
            exps[seg] += e
        return cls(tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __mul__(self, other: "Decoration") -> "Decoration":
        if len(self) != len(other):
            raise ValueError("decorations belong to different graphs")
        return Decoration(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def times_dot(self, seg: int, e: int = 1) -> "Decoration":
        exps = list(self.exponents)
        exps[seg] += e
        return Decoration(tuple(exps))

    def is_capped(self, k: int) -> bool:
        return all(e <= k - 1 for e in self.exponents)

    def check_graph(self, g: VinylGraph) -> None:
        if len(self.exponents) != len(g.segments):
            raise ValueError(
                f"decoration has {len(self.exponents)} exponents, graph has {len(g.segments)} segments"
            )


def _default_point(k: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(i) for i in range(1, k + 1))


def eval_infty_constant(
    g: VinylGraph, d: Decoration, point: Sequence[object] | None = None
) -> Fraction:
    """Constant term of the coloring state sum of (g, d).

    The sum is homogeneous of degree deg(d) - S, so it vanishes unless deg(d) = S, in
    which case it is a constant and one evaluation at a point with distinct coordinates
    recovers it.
    """
    d.check_graph(g)
    if d.degree != g.split_count:
        return Fraction(0)
    x = _default_point(g.level) if point is None else tuple(Fraction(v) for v in point)
    if len(x) != g.level or len(set(x)) != g.level:
        raise ValueError("evaluation point needs pairwise distinct coordinates, one per pigment")
    total = Fraction(0)
    dumbles = g.dumbles
    active = [(s, e) for s, e in enumerate(d.exponents) if e]
    for row in g.coloring_table.pigments:
        num = Fraction(1)
        for s, e in active:
            num *= x[row[s] - 1] ** e
        den = Fraction(1)
        for db in dumbles:
            den *= x[row[db.nw] - 1] - x[row[db.ne] - 1]
        total += num / den
    return total


def pair_gl1(g: VinylGraph, d1: Decoration, d2: Decoration) -> Fraction:
    return eval_infty_constant(g, d1 * d2)


def marked_insertion(g: VinylGraph) -> Decoration:
    """k-1 dots on the marked segment."""
    return Decoration.dots(g, {g.marked_edge: g.level - 1})


def pair_gl0(g: VinylGraph, d1: Decoration, d2: Decoration) -> Fraction:
    return eval_infty_constant(g, d1 * d2 * marked_insertion(g))


class PairingEngine:
    """Vectorized gl0 pairings on one graph at the point X_i = i.

    A decoration is represented by its values on all colorings (its coloring vector);
    the gl0 pairing of two decorations of complementary degree is
    sum_c f_c g_c w_c / scale with integer weights w_c.
    """

    def __init__(self, g: VinylGraph):
        self.graph = g
        self.k = g.level
        self.S = g.split_count
        self.top_degree = self.S - (self.k - 1)
        pig = g.coloring_table.pigments
        self.pig = pig
        self.n_colorings = pig.shape[0]
        qhat = []
        for row in pig:
            v = 1
            for db in g.dumbles:
                v *= int(row[db.nw]) - int(row[db.ne])
            qhat.append(v)
        self.scale = reduce(math.lcm, (abs(v) for v in qhat), 1)
        m = g.marked_edge
        self.weights = [
            (self.scale // v) * int(row[m]) ** (self.k - 1) for v, row in zip(qhat, pig)
        ]

    @cached_property
    def _weight_bound(self) -> int:
        return sum(abs(w) for w in self.weights)

    def _dtype_for(self, max_degree: int) -> type | str:
        return np.int64 if self.k ** max(max_degree, 0) < _INT64_SAFE else object

    def fmatrix(self, exps: Sequence[Sequence[int]]) -> np.ndarray:
        """Coloring vectors of monomials: rows = monomials, columns = colorings."""
        E = np.asarray(exps, dtype=np.int64).reshape(len(exps), len(self.graph.segments))
        max_deg = int(E.sum(axis=1).max()) if len(E) else 0
        dtype = self._dtype_for(max_deg)
        F = np.ones((len(E), self.n_colorings), dtype=dtype)
        pig = self.pig.astype(dtype)
        for s in range(E.shape[1]):
            col = E[:, s]
            for e in np.unique(col):
                if e == 0:
                    continue
                rows = np.nonzero(col == e)[0]
                F[rows] = F[rows] * (pig[:, s] ** int(e))[None, :]
        return F

    def pairing_matrix(self, FA: np.ndarray, FB: np.ndarray) -> list[list[int]]:
        """Integer matrix scale * pair_gl0(a, b) for coloring-vector rows a of FA, b of FB.

        The caller guarantees complementary degrees."""
        if FA.shape[0] == 0 or FB.shape[0] == 0:
            return [[0] * FB.shape[0] for _ in range(FA.shape[0])]
        bound = _abs_max(FA) * _abs_max(FB) * self._weight_bound
        if bound < _INT64_SAFE and FA.dtype != object and FB.dtype != object:
            W = np.asarray(self.weights, dtype=np.int64)
            G = (FA * W[None, :]) @ FB.T
            return [[int(v) for v in row] for row in G]
        W = np.asarray(self.weights, dtype=object)
        G = (FA.astype(object) * W[None, :]).dot(FB.astype(object).T)
        return [[int(v) for v in row] for row in G]

    def pair(self, a: Decoration, b: Decoration) -> Fraction:
        if a.degree + b.degree != self.top_degree:
            return Fraction(0)
        F = self.fmatrix([a.exponents, b.exponents])
        return Fraction(self.pairing_matrix(F[:1], F[1:])[0][0], self.scale)


def _abs_max(F: np.ndarray) -> int:
    if F.size == 0:
        return 0
    if F.dtype == object:
        return max(abs(int(v)) for v in F.flat)
    return int(np.abs(F).max())


@dataclass(frozen=True)
class RootedTree:
    vertices: tuple
    root: object
    edges: tuple[tuple[object, object], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertices")
        if self.root not in vs:
            raise ValueError("root is not a vertex")
        if len(self.edges) != len(vs) - 1:
            raise ValueError("a tree on n vertices has n-1 edges")
        parent = {v: v for v in vs}

        def find(v: object) -> object:
            while parent[v] != v:
                v = parent[v]
            return v

        for a, b in self.edges:
            if a not in vs or b not in vs:
                raise ValueError(f"edge ({a}, {b}) leaves the vertex set")
            ra, rb = find(a), find(b)
            if ra == rb:
                raise ValueError("edges contain a cycle")
            parent[ra] = rb

    def flipped(self, index: int) -> "RootedTree":
        edges = list(self.edges)
        a, b = edges[index]
        edges[index] = (b, a)
        return RootedTree(self.vertices, self.root, tuple(edges))


def tree_eval(t: RootedTree, k: int) -> Fraction:
    """Sum over bijections phi: V -> {1..k} of prod_{v != root} phi(v) / prod_{a->b} (phi(a) - phi(b))."""
    n = len(t.vertices)
    if n != k:
        raise ValueError(f"tree has {n} vertices, expected {k}")
    pos = {v: i for i, v in enumerate(t.vertices)}
    r = pos[t.root]
    edges = [(pos[a], pos[b]) for a, b in t.edges]
    by_den: dict[int, int] = {}
    for phi in itertools.permutations(range(1, k + 1)):
        num = 1
        for i in range(n):
            if i != r:
                num *= phi[i]
        den = 1
        for a, b in edges:
            den *= phi[a] - phi[b]
        by_den[den] = by_den.get(den, 0) + num
    total = sum((Fraction(v, d) for d, v in by_den.items()), Fraction(0))
    if total.denominator != 1:
        raise ArithmeticError(f"tree evaluation {total} is not an integer")
    return total


def all_rooted_trees(n: int) -> Iterable[RootedTree]:
    """Every rooted directed tree on vertices 0..n-1 (labelled; all roots and orientations)."""
    verts = tuple(range(n))
    for undirected in _labelled_trees(n):
        for orient in itertools.product((False, True), repeat=len(undirected)):
            edges = tuple((b, a) if f else (a, b) for (a, b), f in zip(undirected, orient))
            for root in verts:
                yield RootedTree(verts, root, edges)


def _labelled_trees(n: int) -> Iterable[list[tuple[int, int]]]:
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield _prufer_decode(list(seq), n)


def _prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (i for i in range(n) if degree[i] == 1)
    edges.append((u, w))
    return edges
