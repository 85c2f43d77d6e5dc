"""Property suites run by `alexfoam check`."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .alex import alexander_q
from .braid import BraidWord, MarkedClosure, markov_stabilize, parse_closure, rectify
from .chain import build_complex, check_d_squared, euler, homology
from .eval import Decoration, all_rooted_trees, eval_infty_constant, tree_eval
from .qalg import enumerate_dominoes, pell, weight_polynomial
from .statespace import (
    domino_pairing_matrix,
    dot_operator,
    multiplication_operator,
    se_operator,
    segment_transport,
    state_space,
    unzip_map,
    ve_operator,
    zip_map,
)
from .vinyl import pi_graph, resolve

SUITE_KNOTS = {
    "unknot": "strands=1; word=; bp=1",
    "3_1": "strands=2; word=1 1 1; bp=2",
    "4_1": "strands=3; word=1 -2 1 -2; bp=3",
    "5_1": "strands=2; word=1 1 1 1 1; bp=2",
    "5_2": "strands=3; word=1 1 1 2 -1 2; bp=3",
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CheckOptions:
    seed: int = 0
    max_k: int = 4
    max_vertices: int = 5
    threads: int = 1


@dataclass
class SuiteReport:
    suite: str
    results: list[CheckResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def random_closure(rng: random.Random, max_strands: int = 3, max_crossings: int = 6) -> MarkedClosure:
    k = rng.randint(1, max_strands)
    n = rng.randint(0, max_crossings) if k > 1 else 0
    word = [rng.choice([1, -1]) * rng.randint(1, k - 1) for _ in range(n)]
    return MarkedClosure(BraidWord.from_ints(k, word), k, 0)


def suite_dsquared(opts: CheckOptions) -> list[CheckResult]:
    rng = random.Random(opts.seed)
    bad = []
    for _ in range(20):
        c = random_closure(rng)
        if not check_d_squared(build_complex(c)):
            bad.append(str(c))
    return [CheckResult("d o d = 0 on 20 random closures", not bad, "; ".join(bad))]


def _dumble_edges(c: MarkedClosure):
    n = len(c.word)
    for s in itertools.product((0, 1), repeat=n):
        g = resolve(c, s)
        for t in range(n):
            if g.slices[t] is not None:
                yield g, t


def suite_zip(opts: CheckOptions) -> list[CheckResult]:
    counts = {"adjoint": [0, 0], "V_e": [0, 0], "S_e": [0, 0], "unzip-zip": [0, 0]}
    for name in ("3_1", "4_1"):
        c = parse_closure(SUITE_KNOTS[name])
        for g, t in _dumble_edges(c):
            gs = g.smoothed(t)
            A, B = state_space(g), state_space(gs)
            U = unzip_map(g, gs, t, A, B)
            Z = zip_map(gs, g, t, B, A)
            ZU = Z.compose(U)
            adj = all(
                A.pair_vectors(Z.apply(_unit(B.dim, j)), _unit(A.dim, i))
                == B.pair_vectors(_unit(B.dim, j), U.apply(_unit(A.dim, i)))
                for i in range(A.dim) for j in range(B.dim)
            )
            _tally(counts["adjoint"], adj)
            _tally(counts["V_e"], (ZU - ve_operator(A, t)).is_zero())
            _tally(counts["S_e"], (ZU - se_operator(A, t)).is_zero())
            db = g.dumble_at(t)
            seg = segment_transport(g, gs, t)
            diff = multiplication_operator(B, {seg[db.nw]: 1, seg[db.ne]: -1}) if B.dim else None
            _tally(counts["unzip-zip"], diff is None or (U.compose(Z) - diff).is_zero())
    labels = {
        "adjoint": "zip adjoint to unzip",
        "V_e": "zip o unzip = V_e",
        "S_e": "zip o unzip = S_e",
        "unzip-zip": "unzip o zip = dot(left) - dot(right)",
    }
    return [
        CheckResult(labels[key], ok == total, f"{ok}/{total} trefoil/figure-eight cube edges")
        for key, (ok, total) in counts.items()
    ]


def _unit(n: int, i: int) -> list[Fraction]:
    return [Fraction(int(j == i)) for j in range(n)]


def _tally(slot: list[int], ok: bool) -> None:
    slot[0] += int(ok)
    slot[1] += 1


def suite_duality(opts: CheckOptions) -> list[CheckResult]:
    bad, seen = [], 0
    for text in SUITE_KNOTS.values():
        c = parse_closure(text)
        for s in itertools.product((0, 1), repeat=len(c.word)):
            g = resolve(c, s)
            if not g.connected:
                continue
            seen += 1
            gd = state_space(g).graded_dim
            if not gd.is_symmetric():
                bad.append(f"{c} state {''.join(map(str, s))}: {gd}")
    return [CheckResult("graded duality on connected resolutions", not bad, "; ".join(bad) or f"{seen} graphs")]


def suite_generic(opts: CheckOptions) -> list[CheckResult]:
    rng = random.Random(opts.seed + 1)
    bad, done = [], 0
    while done < 50:
        c = random_closure(rng, max_strands=opts.max_k if opts.max_k <= 4 else 4, max_crossings=5)
        g = resolve(c, [rng.randint(0, 1) for _ in range(len(c.word))])
        S = g.split_count
        nseg = len(g.segments)
        exps = [0] * nseg
        for _ in range(S):
            exps[rng.randrange(nseg)] += 1
        d = Decoration(tuple(exps))
        pts: set[Fraction] = set()
        while len(pts) < g.level:
            pts.add(Fraction(rng.randint(-50, 50), rng.randint(1, 9)))
        a = eval_infty_constant(g, d)
        b = eval_infty_constant(g, d, point=sorted(pts))
        done += 1
        if a != b:
            bad.append(f"{c}: {a} vs {b}")
    return [CheckResult("generic-point independence on 50 evaluations", not bad, "; ".join(bad))]


def suite_pell(opts: CheckOptions) -> list[CheckResult]:
    sums = all(weight_polynomial(enumerate_dominoes(n)) == pell(n) for n in range(13))
    out = [CheckResult("sum of q^w(s) over Dom_n = p_n for n <= 12", sums)]
    bad = []
    pairs = [(k, n) for k in range(2, opts.max_k + 1) for n in range(1, k)]
    for k, n in pairs:
        gd = state_space(pi_graph(k, n)).graded_dim
        if gd != pell(n):
            bad.append(f"(k,n)=({k},{n}): {gd}")
    out.append(CheckResult("graded dim of the domino graph = p_n", not bad,
                           "; ".join(bad) or f"{len(pairs)} pairs up to k={opts.max_k}"))
    return out


def anti_triangular(M: list[list[Fraction]]) -> bool:
    n = len(M)
    zero_above = all(M[a][b] == 0 for a in range(n) for b in range(n) if b > n - 1 - a)
    diag = all(M[a][n - 1 - a] != 0 for a in range(n))
    return zero_above and diag


def suite_dominoes(opts: CheckOptions) -> list[CheckResult]:
    out = []
    for k, n in [(3, 2)] + [(k, n) for k in range(4, opts.max_k + 1) for n in range(1, k)]:
        _, M = domino_pairing_matrix(k, n)
        out.append(CheckResult(f"domino pairing anti-triangular on (k,n)=({k},{n})", anti_triangular(M)))
    return out


def suite_tree(opts: CheckOptions) -> list[CheckResult]:
    bad, count = [], 0
    for n in range(1, opts.max_vertices + 1):
        for t in all_rooted_trees(n):
            count += 1
            try:
                v = tree_eval(t, n)
            except ArithmeticError as exc:
                bad.append(str(exc))
                continue
            if v == 0:
                bad.append(f"zero on {t}")
    return [CheckResult(f"tree evaluation is a nonzero integer (<= {opts.max_vertices} vertices)",
                        not bad, "; ".join(bad[:5]) or f"{count} trees")]


def suite_dotk(opts: CheckOptions) -> list[CheckResult]:
    rng = random.Random(opts.seed + 2)
    bad, done = [], 0
    while done < 10:
        c = random_closure(rng, max_strands=3, max_crossings=5)
        g = resolve(c, [rng.randint(0, 1) for _ in range(len(c.word))])
        sp = state_space(g)
        if not sp.dim:
            continue
        done += 1
        seg = rng.randrange(len(g.segments))
        D = dot_operator(sp, seg)
        P = D
        for _ in range(g.level - 1):
            P = D.compose(P)
        if not P.is_zero():
            bad.append(f"{c} segment {seg}")
    return [CheckResult("dot^k = 0 on 10 random spaces", not bad, "; ".join(bad))]


def suite_invariance(opts: CheckOptions) -> list[CheckResult]:
    out = []
    t1 = homology(build_complex(parse_closure("strands=2; word=1 1 1; bp=2")))
    t2 = homology(build_complex(parse_closure("strands=3; word=1 2 1 2; bp=3")))
    out.append(CheckResult("trefoil: sigma1^3 vs (sigma1 sigma2)^2", t1 == t2))
    t3 = homology(build_complex(rectify(parse_closure("strands=2; word=1 1 1; bp=1"))))
    out.append(CheckResult("trefoil: base point on strand 1 (rectified) vs strand 2", t1 == t3))
    for name, text in SUITE_KNOTS.items():
        c = parse_closure(text)
        h = homology(build_complex(c))
        for sign in (1, -1):
            h2 = homology(build_complex(markov_stabilize(c, sign), threads=opts.threads))
            out.append(CheckResult(f"{name} vs Markov stabilization ({'+' if sign > 0 else '-'})", h == h2))
    return out


def suite_euler(opts: CheckOptions) -> list[CheckResult]:
    out = []
    for name, text in SUITE_KNOTS.items():
        c = parse_closure(text)
        e = euler(homology(build_complex(c, threads=opts.threads)))
        a = alexander_q(c.word)
        out.append(CheckResult(f"euler = Alexander for {name}", e == a, f"{e}"))
    return out


SUITES: dict[str, Callable[[CheckOptions], list[CheckResult]]] = {
    "dsquared": suite_dsquared,
    "zip": suite_zip,
    "duality": suite_duality,
    "generic": suite_generic,
    "pell": suite_pell,
    "dominoes": suite_dominoes,
    "tree": suite_tree,
    "dotk": suite_dotk,
    "invariance": suite_invariance,
    "euler": suite_euler,
}


def run_suites(names: list[str], opts: CheckOptions) -> list[SuiteReport]:
    reports = []
    for name in names:
        t0 = time.perf_counter()
        results = SUITES[name](opts)
        reports.append(SuiteReport(name, results, time.perf_counter() - t0))
    return reports
