import itertools
from fractions import Fraction

from alexfoam.vinyl import VinylGraph


def brute_force_colorings(g: VinylGraph) -> set[tuple[int, ...]]:
    """Every pigment assignment that is a permutation on each ray and satisfies the
    flow condition at each dumble."""
    k, L = g.level, len(g.slices)
    rays = [[g.segment_at(p, h) for p in range(1, k + 1)] for h in range(L + 1)]
    found = set()
    for assign in itertools.product(range(1, k + 1), repeat=len(g.segments)):
        if any(sorted(assign[s] for s in ray) != list(range(1, k + 1)) for ray in rays):
            continue
        if all({assign[d.nw], assign[d.ne]} == {assign[d.sw], assign[d.se]} for d in g.dumbles):
            found.add(assign)
    return found


# One "[PASS]/[FAIL] criterion N: ..." line per acceptance check, echoed in the summary.
ACCEPTANCE_LINES: list[str] = []


def report(criterion: str, passed: bool, detail: str = "") -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def eval_at_point(g: VinylGraph, exponents, point) -> Fraction:
    """State sum over brute-force colorings at an explicit point, straight from the definition."""
    total = Fraction(0)
    for c in brute_force_colorings(g):
        num = Fraction(1)
        for s, e in enumerate(exponents):
            num *= Fraction(point[c[s] - 1]) ** e
        den = Fraction(1)
        for d in g.dumbles:
            den *= Fraction(point[c[d.nw] - 1]) - Fraction(point[c[d.ne] - 1])
        total += num / den
    return total
