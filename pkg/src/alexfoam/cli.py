"""Command-line front end: `alexfoam homology | statespace | check`."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .alex import alexander_q
from .braid import ParseError, parse_closure, rectify
from .chain import build_complex, homology, poincare, euler
from .checks import SUITES, CheckOptions, run_suites
from .statespace import state_space
from .vinyl import resolve

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
EXPERIMENTAL_NOTE = "experimental: invariance not guaranteed by the paper"


@dataclass
class Report:
    input: str
    closure: str
    betti: list[dict[str, int]]
    poincare: str
    alexander_q: str | None
    euler: str
    euler_matches_alexander: bool
    timings: dict[str, float] = field(default_factory=dict)
    note: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(**json.loads(text))


def compute_report(text: str, *, no_rectify: bool = False, threads: int = 1) -> Report:
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    c = parse_closure(text)
    if not no_rectify:
        c = rectify(c)
    timings["parse"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    cube = build_complex(c, allow_unrectified=no_rectify, threads=threads)
    timings["complex"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    h = homology(cube)
    timings["homology"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    try:
        alex = alexander_q(c.word)
    except ValueError:
        alex = None
    timings["alexander"] = time.perf_counter() - t0

    e = euler(h)
    return Report(
        input=text,
        closure=str(c),
        betti=h.rows(),
        poincare=str(poincare(h)),
        alexander_q=None if alex is None else str(alex),
        euler=str(e),
        euler_matches_alexander=alex is not None and e == alex,
        timings={k: round(v, 6) for k, v in timings.items()},
        note=EXPERIMENTAL_NOTE if no_rectify else None,
    )


def _print_report(r: Report) -> None:
    print(f"closure:   {r.closure}")
    print("betti:")
    print(f"  {'t':>4} {'q':>4} {'dim':>4}")
    for row in r.betti:
        print(f"  {row['t']:>4} {row['q']:>4} {row['dim']:>4}")
    print(f"poincare:  {r.poincare}")
    print(f"euler:     {r.euler}")
    print(f"alexander: {r.alexander_q if r.alexander_q is not None else 'unsupported (multi-component link)'}")
    print(f"match:     {str(r.euler_matches_alexander).lower()}")
    if r.note:
        print(f"note:      {r.note}")
    print("timings:   " + ", ".join(f"{k} {v:.3f}s" for k, v in r.timings.items()))


def cmd_homology(args: argparse.Namespace) -> int:
    r = compute_report(args.closure, no_rectify=args.no_rectify, threads=args.threads)
    if args.json:
        print(r.to_json())
    else:
        _print_report(r)
    return EXIT_OK if r.euler_matches_alexander else EXIT_FAIL


def cmd_statespace(args: argparse.Namespace) -> int:
    c = parse_closure(args.closure)
    bits = args.bits.strip()
    if len(bits) != len(c.word) or any(b not in "01" for b in bits):
        raise ParseError(f"state {bits!r} must be {len(c.word)} bits of 0/1")
    g = resolve(c, bits)
    sp = state_space(g)
    info = {
        "closure": str(c),
        "state": bits,
        "graded_dim": str(sp.graded_dim),
        "dim": sp.dim,
        "split_count": g.split_count,
        "connected": g.connected,
        "depth": g.depth,
    }
    if args.json:
        print(json.dumps(info, indent=2, sort_keys=True))
    else:
        print(info["graded_dim"])
        print(f"dim {sp.dim}, split count {g.split_count}, connected {str(g.connected).lower()}, depth {g.depth}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    names = args.suite or list(SUITES)
    for n in names:
        if n not in SUITES:
            raise ParseError(f"unknown suite {n!r}; choose from {', '.join(SUITES)}")
    opts = CheckOptions(seed=args.seed, max_k=args.max_k, max_vertices=args.max_vertices, threads=args.threads)
    reports = run_suites(names, opts)
    if args.json:
        payload = [
            {"suite": r.suite, "passed": r.passed, "seconds": round(r.seconds, 3),
             "checks": [asdict(c) for c in r.results]}
            for r in reports
        ]
        print(json.dumps(payload, indent=2))
    else:
        for r in reports:
            for c in r.results:
                status = "PASS" if c.passed else "FAIL"
                detail = f"  ({c.detail})" if c.detail else ""
                print(f"[{status}] {r.suite}: {c.name}{detail}")
        total = sum(len(r.results) for r in reports)
        failed = sum(1 for r in reports for c in r.results if not c.passed)
        print(f"{total - failed}/{total} checks passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--threads", type=int, default=1, help="worker processes for vertex state spaces")

    p = argparse.ArgumentParser(prog="alexfoam", description="Exact gl0 homology of marked braid closures.")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("homology", parents=[common], help="Betti table, Poincare polynomial, Alexander check")
    h.add_argument("closure", help='e.g. "strands=2; word=1 1 1; bp=2"')
    h.add_argument("--no-rectify", action="store_true", help="compute at the given base point (experimental)")
    h.set_defaults(func=cmd_homology)

    s = sub.add_parser("statespace", parents=[common], help="graded dimension of one resolution")
    s.add_argument("closure")
    s.add_argument("bits", help="one 0/1 per crossing")
    s.set_defaults(func=cmd_statespace)

    c = sub.add_parser("check", parents=[common], help="run property suites")
    c.add_argument("--suite", action="append", help=f"one of: {', '.join(SUITES)} (repeatable)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--max-k", type=int, default=4)
    c.add_argument("--max-vertices", type=int, default=5)
    c.set_defaults(func=cmd_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
