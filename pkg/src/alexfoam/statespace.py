"""gl0 state spaces of marked vinyl graphs as Gram quotients, and the linear maps
between them (dots, V_e, S_e, unzip, zip, domino basis vectors)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import linalg
from .eval import Decoration, PairingEngine
from .qalg import DominoConfig, Box, LaurentPoly
from .vinyl import VinylGraph, pi_dumbles, pi_graph

# A polynomial decoration: monomial exponent tuple -> coefficient.
Poly = dict[tuple[int, ...], Fraction]
Vector = list[Fraction]


def capped_monomials(nseg: int, degree: int, cap: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree with entries <= cap, in lex order."""
    out: list[tuple[int, ...]] = []
    if degree < 0:
        return out

    def rec(prefix: list[int], left: int, slots: int) -> None:
        if slots == 0:
            if left == 0:
                out.append(tuple(prefix))
            return
        for e in range(min(cap, left), -1, -1):
            if left - e > cap * (slots - 1):
                break
            prefix.append(e)
            rec(prefix, left - e, slots - 1)
            prefix.pop()

    rec([], degree, nseg)
    return sorted(out)


def spanning_set(g: VinylGraph) -> list[Decoration]:
    """Monomials with per-segment exponent <= k-1 and total degree <= S-(k-1)."""
    top = g.split_count - (g.level - 1)
    nseg = len(g.segments)
    out: list[Decoration] = []
    for d in range(top + 1):
        out.extend(Decoration(e) for e in capped_monomials(nseg, d, g.level - 1))
    return out


@dataclass
class GradedQuotientSpace:
    graph: VinylGraph
    top_degree: int
    blocks: dict[int, list[Decoration]]
    engine: PairingEngine | None = field(default=None, repr=False)

    @cached_property
    def basis(self) -> list[Decoration]:
        return [b for d in sorted(self.blocks) for b in self.blocks[d]]

    @cached_property
    def offsets(self) -> dict[int, int]:
        out, pos = {}, 0
        for d in sorted(self.blocks):
            out[d] = pos
            pos += len(self.blocks[d])
        return out

    @property
    def dim(self) -> int:
        return len(self.basis)

    def dot_degrees(self) -> list[int]:
        return [d for d in sorted(self.blocks) for _ in self.blocks[d]]

    def qdeg_of_degree(self, d: int) -> int:
        return 2 * d - self.top_degree

    @property
    def qdeg(self) -> list[int]:
        return [self.qdeg_of_degree(d) for d in self.dot_degrees()]

    @cached_property
    def graded_dim(self) -> LaurentPoly:
        return LaurentPoly({self.qdeg_of_degree(d): len(b) for d, b in self.blocks.items() if b})

    def block_indices(self, d: int) -> range:
        if d not in self.blocks:
            return range(0)
        o = self.offsets[d]
        return range(o, o + len(self.blocks[d]))

    @cached_property
    def _fblocks(self) -> dict:
        assert self.engine is not None
        return {d: self.engine.fmatrix([b.exponents for b in bs]) for d, bs in self.blocks.items() if bs}

    @cached_property
    def _gram_inverse(self) -> dict[int, linalg.Matrix]:
        """For each degree d, the inverse of Gram(B_d, B_{top-d})."""
        out = {}
        for d in self.blocks:
            G = self.gram_block(d)
            out[d] = linalg.inverse(G)
        return out

    def gram_block(self, d: int) -> linalg.Matrix:
        e = self.top_degree - d
        if not self.blocks.get(d) or not self.blocks.get(e):
            return []
        assert self.engine is not None
        M = self.engine.pairing_matrix(self._fblocks[d], self._fblocks[e])
        return [[Fraction(v, self.engine.scale) for v in row] for row in M]

    @cached_property
    def gram(self) -> linalg.Matrix:
        n = self.dim
        G = linalg.zeros(n, n)
        for d in self.blocks:
            blk = self.gram_block(d)
            e = self.top_degree - d
            for a, i in enumerate(self.block_indices(d)):
                for b, j in enumerate(self.block_indices(e)):
                    G[i][j] = blk[a][b]
        return G

    def pairings_with_block(self, poly: Mapping[tuple[int, ...], Fraction], e: int) -> Vector:
        """(p, b) for every basis element b of dot-degree e; p must be homogeneous of degree top-e."""
        if not self.blocks.get(e) or not poly:
            return [Fraction(0)] * len(self.blocks.get(e, []))
        assert self.engine is not None
        monos = list(poly)
        F = self.engine.fmatrix(monos)
        M = self.engine.pairing_matrix(F, self._fblocks[e])
        out = []
        for j in range(len(self.blocks[e])):
            s = Fraction(0)
            for i, m in enumerate(monos):
                if M[i][j]:
                    s += poly[m] * M[i][j]
            out.append(s / self.engine.scale)
        return out

    def coords(self, poly: Mapping[tuple[int, ...], object]) -> Vector:
        """Coordinates of the class of a polynomial decoration."""
        out = [Fraction(0)] * self.dim
        by_deg: dict[int, dict[tuple[int, ...], Fraction]] = {}
        for m, c in poly.items():
            c = Fraction(c)
            if c:
                dm = by_deg.setdefault(sum(m), {})
                dm[m] = dm.get(m, 0) + c
        for d, p in by_deg.items():
            if not self.blocks.get(d):
                continue
            P = self.pairings_with_block(p, self.top_degree - d)
            a = linalg.matmul([P], self._gram_inverse[d])[0]
            for idx, v in zip(self.block_indices(d), a):
                out[idx] = v
        return out

    def pair_vectors(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        G = self.gram
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui:
                row = G[i]
                for j, vj in enumerate(v):
                    if vj and row[j]:
                        total += ui * row[j] * vj
        return total

    def dry(self) -> Vector:
        return self.coords({(0,) * len(self.graph.segments): Fraction(1)})


def zero_space(g: VinylGraph) -> GradedQuotientSpace:
    return GradedQuotientSpace(g, g.split_count - (g.level - 1), {}, None)


def state_space(g: VinylGraph) -> GradedQuotientSpace:
    """Gram quotient of the decoration space under the marked gl0 pairing.

    Degree by degree, candidates are capped one-dot extensions of the previous basis;
    they are tested against all capped monomials of the complementary degree, or
    against its basis once that is known.
    """
    k = g.level
    top = g.split_count - (k - 1)
    if not g.connected or top < 0:
        return zero_space(g)
    engine = PairingEngine(g)
    nseg = len(g.segments)
    cap = k - 1
    blocks: dict[int, list[Decoration]] = {}
    for d in range(top + 1):
        if d == 0:
            cand = [(0,) * nseg]
        else:
            seen = set()
            for b in blocks[d - 1]:
                for s in range(nseg):
                    if b.exponents[s] < cap:
                        seen.add(b.times_dot(s).exponents)
            cand = sorted(seen)
        if not cand:
            blocks[d] = []
            continue
        e = top - d
        if e < d:
            tests = [b.exponents for b in blocks[e]]
        else:
            tests = capped_monomials(nseg, e, cap)
        if not tests:
            blocks[d] = []
            continue
        G = engine.pairing_matrix(engine.fmatrix(cand), engine.fmatrix(tests))
        chosen = linalg.independent_rows(G)
        blocks[d] = [Decoration(cand[i]) for i in chosen]
        if e < d and len(blocks[d]) != len(blocks[e]):
            raise ArithmeticError("complementary degree blocks differ in dimension")
    blocks = {d: b for d, b in blocks.items() if b}
    return GradedQuotientSpace(g, top, blocks, engine)


@dataclass
class LinearMap:
    """matrix[i][j] = coefficient of target basis i in the image of source basis j."""

    source: GradedQuotientSpace
    target: GradedQuotientSpace
    matrix: linalg.Matrix
    qshift: int

    def apply(self, v: Sequence[Fraction]) -> Vector:
        out = [Fraction(0)] * self.target.dim
        for j, vj in enumerate(v):
            if vj:
                for i in range(self.target.dim):
                    if self.matrix[i][j]:
                        out[i] += self.matrix[i][j] * vj
        return out

    def compose(self, first: "LinearMap") -> "LinearMap":
        """self after first."""
        M = linalg.matmul(self.matrix, first.matrix, ncols=first.source.dim) if self.target.dim else []
        if self.target.dim and not first.source.dim:
            M = [[] for _ in range(self.target.dim)]
        return LinearMap(first.source, self.target, M, self.qshift + first.qshift)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        M = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.matrix, other.matrix)]
        return LinearMap(self.source, self.target, M, self.qshift)

    def is_zero(self) -> bool:
        return linalg.is_zero(self.matrix)

    def is_homogeneous(self) -> bool:
        sq, tq = self.source.qdeg, self.target.qdeg
        return all(
            not self.matrix[i][j] or tq[i] - sq[j] == self.qshift
            for i in range(self.target.dim)
            for j in range(self.source.dim)
        )


def _map_from_images(source: GradedQuotientSpace, target: GradedQuotientSpace,
                     images: Iterable[Poly], qshift: int) -> LinearMap:
    cols = [target.coords(img) for img in images]
    M = [[cols[j][i] for j in range(source.dim)] for i in range(target.dim)]
    return LinearMap(source, target, M, qshift)


def _monomial(exps: tuple[int, ...]) -> Poly:
    return {exps: Fraction(1)}


def multiplication_operator(sp: GradedQuotientSpace, linear: Mapping[int, int]) -> LinearMap:
    """Multiplication by the linear form sum_s c_s x_s."""
    images = []
    for b in sp.basis:
        img: Poly = {}
        for s, c in linear.items():
            if c:
                m = b.times_dot(s).exponents
                img[m] = img.get(m, 0) + Fraction(c)
        images.append(img)
    return _map_from_images(sp, sp, images, 2)


def dot_operator(sp: GradedQuotientSpace, segment: int) -> LinearMap:
    if not 0 <= segment < len(sp.graph.segments):
        raise ValueError(f"segment {segment} is not a segment of the graph")
    return multiplication_operator(sp, {segment: 1})


def _linear_difference(a: int, b: int) -> dict[int, int]:
    out: dict[int, int] = {}
    out[a] = out.get(a, 0) + 1
    out[b] = out.get(b, 0) - 1
    return out


def ve_operator(sp: GradedQuotientSpace, dumble_slice: int) -> LinearMap:
    """V_e = dot(NW) - dot(SW)."""
    db = sp.graph.dumble_at(dumble_slice)
    return multiplication_operator(sp, _linear_difference(db.nw, db.sw))


def se_operator(sp: GradedQuotientSpace, dumble_slice: int) -> LinearMap:
    """S_e = dot(NW) - dot(SE)."""
    db = sp.graph.dumble_at(dumble_slice)
    return multiplication_operator(sp, _linear_difference(db.nw, db.se))


def segment_transport(g_dumble: VinylGraph, g_smooth: VinylGraph, t: int) -> list[int]:
    """Image in g_smooth of each segment of g_dumble when the dumble at slice t is smoothed."""
    if (g_dumble.level != g_smooth.level or g_dumble.slices[t] is None
            or g_dumble.smoothed(t) != g_smooth):
        raise ValueError("graphs are not related by smoothing the dumble at the given slice")
    L = len(g_dumble.slices)
    out = []
    for seg in g_dumble.segments:
        slot = 0 if seg.start is None else seg.start + 1
        if slot == L:
            slot = 0
        out.append(g_smooth.segment_at(seg.strand, slot))
    return out


def transport(exps: Sequence[int], seg_map: Sequence[int], n_target: int, k: int) -> tuple[int, ...] | None:
    out = [0] * n_target
    for s, e in enumerate(exps):
        out[seg_map[s]] += e
    if any(e >= k for e in out):
        return None
    return tuple(out)


def unzip_map(g_dumble: VinylGraph, g_smooth: VinylGraph, crossing: int,
              source: GradedQuotientSpace | None = None,
              target: GradedQuotientSpace | None = None) -> LinearMap:
    """Dumble -> smooth: dots on NW/SW move to the left strand, NE/SE to the right."""
    seg_map = segment_transport(g_dumble, g_smooth, crossing)
    source = source or state_space(g_dumble)
    target = target or state_space(g_smooth)
    n_t, k = len(g_smooth.segments), g_smooth.level
    images = []
    for b in source.basis:
        m = transport(b.exponents, seg_map, n_t, k)
        images.append({} if m is None else _monomial(m))
    return _map_from_images(source, target, images, 1)


def zip_map(g_smooth: VinylGraph, g_dumble: VinylGraph, crossing: int,
            source: GradedQuotientSpace | None = None,
            target: GradedQuotientSpace | None = None) -> LinearMap:
    """Smooth -> dumble, the adjoint of unzip for the gl0 pairings."""
    seg_map = segment_transport(g_dumble, g_smooth, crossing)
    source = source or state_space(g_smooth)
    target = target or state_space(g_dumble)
    n_t, k = len(g_smooth.segments), g_smooth.level
    M = linalg.zeros(target.dim, source.dim)
    for d in target.blocks:
        e = target.top_degree - d
        tests = target.blocks.get(e, [])
        # zip raises dot-degree by one: source degree d-1 lands in target degree d
        src_idx = list(source.block_indices(d - 1))
        if not src_idx or not tests:
            continue
        transported: list[Poly] = []
        for t in tests:
            m = transport(t.exponents, seg_map, n_t, k)
            transported.append({} if m is None else _monomial(m))
        # P[j][l] = (source basis j, unzip(test l))_smooth
        P = []
        for j in src_idx:
            b = source.basis[j]
            row = []
            for img in transported:
                row.append(sum((c * _pair_monomials(source, b.exponents, m) for m, c in img.items()),
                               Fraction(0)))
            P.append(row)
        A = linalg.matmul(P, target._gram_inverse[d])
        for a, j in enumerate(src_idx):
            for r, i in enumerate(target.block_indices(d)):
                M[i][j] = A[a][r]
    return LinearMap(source, target, M, 1)


def _pair_monomials(sp: GradedQuotientSpace, a: Sequence[int], b: Sequence[int]) -> Fraction:
    if sp.engine is None:
        return Fraction(0)
    return sp.engine.pair(Decoration(tuple(a)), Decoration(tuple(b)))


def domino_vector(sp: GradedQuotientSpace, s: DominoConfig, side: str) -> Vector:
    """x(s) (side='top') or y(s) (side='bottom') on the domino graph."""
    k, n = sp.graph.level, s.length
    if side not in ("top", "bottom"):
        raise ValueError("side must be 'top' or 'bottom'")
    if not 1 <= n <= k - 1 or sp.graph != pi_graph(k, n):
        raise ValueError(f"configuration length {n} does not match the domino graph")
    top, bottom = pi_dumbles(k, n)
    edges = top if side == "top" else bottom
    v = sp.dry()
    for i, box in enumerate(s.boxes()):
        if box is Box.PLUS:
            v = se_operator(sp, edges[i]).apply(v)
        elif box is Box.ZERO_B:
            v = ve_operator(sp, edges[i]).apply(v)
    return v


def domino_pairing_matrix(k: int, n: int) -> tuple[list[DominoConfig], linalg.Matrix]:
    from .qalg import enumerate_dominoes

    sp = state_space(pi_graph(k, n))
    configs = enumerate_dominoes(n)
    xs = [domino_vector(sp, s, "top") for s in configs]
    ys = [domino_vector(sp, s, "bottom") for s in configs]
    return configs, [[sp.pair_vectors(x, y) for y in ys] for x in xs]
