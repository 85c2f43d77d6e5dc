"""Cube of resolutions, Koszul signs, grading shifts and bigraded homology."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .braid import MarkedClosure
from .qalg import BiGradedPoly, LaurentPoly
from .statespace import GradedQuotientSpace, LinearMap, state_space, unzip_map, zip_map
from .vinyl import VinylGraph, resolve

State = tuple[int, ...]


@dataclass
class ResolutionCube:
    closure: MarkedClosure
    vertices: dict[State, tuple[VinylGraph, GradedQuotientSpace]]
    edges: dict[tuple[State, State, int], tuple[LinearMap, int]]
    n_plus: int
    n_minus: int

    def t_degree(self, s: State) -> int:
        return sum(s) - self.n_minus

    def q_shift(self, s: State) -> int:
        return self.n_minus - sum(s)

    def vertex_dims_by_t(self) -> list[int]:
        n = len(self.closure.word)
        dims = [0] * (n + 1)
        for s, (_, sp) in self.vertices.items():
            dims[sum(s)] += sp.dim
        return dims


@dataclass
class BettiTable:
    dims: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.dims = {k: v for k, v in self.dims.items() if v}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BettiTable) and self.dims == other.dims

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def rows(self) -> list[dict[str, int]]:
        return [{"t": t, "q": q, "dim": d} for (t, q), d in sorted(self.dims.items())]


def edge_sign(s: State, y: int) -> int:
    return -1 if sum(s[:y]) % 2 else 1


def _vertex_space(args: tuple[MarkedClosure, State]) -> tuple[State, VinylGraph, GradedQuotientSpace]:
    c, s = args
    g = resolve(c, s)
    return s, g, state_space(g)


def build_complex(c: MarkedClosure, *, allow_unrectified: bool = False, threads: int = 1) -> ResolutionCube:
    """Vertices are state spaces of all resolutions; 0 -> 1 edges are unzip maps at
    positive crossings and zip maps at negative ones."""
    if c.strand != c.strands and not allow_unrectified:
        raise ValueError("build_complex needs the base point on the rightmost strand; rectify first")
    word = c.word
    n = len(word)
    states = list(itertools.product((0, 1), repeat=n))
    jobs = [(c, s) for s in states]
    if threads > 1 and len(states) > 8:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_vertex_space, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    else:
        results = [_vertex_space(j) for j in jobs]
    vertices = {s: (g, sp) for s, g, sp in results}

    edges: dict[tuple[State, State, int], tuple[LinearMap, int]] = {}
    for s in states:
        g, sp = vertices[s]
        for y in range(n):
            if s[y]:
                continue
            s2 = s[:y] + (1,) + s[y + 1:]
            g2, sp2 = vertices[s2]
            if not sp.dim or not sp2.dim:
                continue
            if word.letters[y][1] > 0:
                f = unzip_map(g, g2, y, sp, sp2)
            else:
                f = zip_map(g, g2, y, sp, sp2)
            edges[(s, s2, y)] = (f, edge_sign(s, y))
    return ResolutionCube(c, vertices, edges, word.n_plus, word.n_minus)


def _chain_groups(cube: ResolutionCube) -> dict[tuple[int, int], list[tuple[State, int]]]:
    """(t, q) -> list of (vertex, basis index) spanning that bigraded piece."""
    groups: dict[tuple[int, int], list[tuple[State, int]]] = {}
    for s in sorted(cube.vertices):
        _, sp = cube.vertices[s]
        t = cube.t_degree(s)
        shift = cube.q_shift(s)
        for i, qd in enumerate(sp.qdeg):
            groups.setdefault((t, qd + shift), []).append((s, i))
    return groups


def differential_blocks(cube: ResolutionCube) -> tuple[dict, dict]:
    """Matrices of d: C^{t,q} -> C^{t+1,q} keyed by (t, q), plus the chain groups."""
    groups = _chain_groups(cube)
    out: dict[tuple[int, int], linalg.Matrix] = {}
    for (t, q), src in groups.items():
        tgt = groups.get((t + 1, q), [])
        if not tgt:
            continue
        row_of = {elt: r for r, elt in enumerate(tgt)}
        M = linalg.zeros(len(tgt), len(src))
        for col, (s, j) in enumerate(src):
            for y in range(len(s)):
                if s[y]:
                    continue
                s2 = s[:y] + (1,) + s[y + 1:]
                e = cube.edges.get((s, s2, y))
                if e is None:
                    continue
                f, sign = e
                for i in range(f.target.dim):
                    v = f.matrix[i][j]
                    if v:
                        r = row_of.get((s2, i))
                        if r is None:
                            raise ArithmeticError("differential is not q-homogeneous of degree 0")
                        M[r][col] += sign * v
        out[(t, q)] = M
    return out, groups


def check_d_squared(cube: ResolutionCube, blocks: dict | None = None) -> bool:
    if blocks is None:
        blocks, _ = differential_blocks(cube)
    for (t, q), M in blocks.items():
        N = blocks.get((t + 1, q))
        if N is None or not M or not N:
            continue
        if not linalg.is_zero(linalg.matmul(N, M)):
            return False
    return True


def differential_ranks(cube: ResolutionCube) -> list[int]:
    """Total rank of d^t for t = -n_minus .. n_plus - 1."""
    blocks, _ = differential_blocks(cube)
    n = len(cube.closure.word)
    ranks = [0] * n
    for (t, q), M in blocks.items():
        ranks[t + cube.n_minus] += linalg.rank(M)
    return ranks


def homology(cube: ResolutionCube) -> BettiTable:
    blocks, groups = differential_blocks(cube)
    if not check_d_squared(cube, blocks):
        raise ArithmeticError("d o d != 0: invariant violation")
    ranks = {key: linalg.rank(M) for key, M in blocks.items()}
    dims = {}
    for (t, q), elts in groups.items():
        h = len(elts) - ranks.get((t, q), 0) - ranks.get((t - 1, q), 0)
        if h < 0:
            raise ArithmeticError("negative homology dimension")
        dims[(t, q)] = h
    return BettiTable(dims)


def chain_euler(cube: ResolutionCube) -> LaurentPoly:
    out: dict[int, int] = {}
    for s, (_, sp) in cube.vertices.items():
        sign = -1 if cube.t_degree(s) % 2 else 1
        for qd in sp.qdeg:
            q = qd + cube.q_shift(s)
            out[q] = out.get(q, 0) + sign
    return LaurentPoly(out)


def poincare(b: BettiTable) -> BiGradedPoly:
    return BiGradedPoly(b.dims)


def euler(b: BettiTable) -> LaurentPoly:
    return poincare(b).at_t(-1)


def default_threads() -> int:
    return max(1, min(8, os.cpu_count() or 1))
