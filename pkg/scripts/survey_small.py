"""Survey distinguishing numbers over all small canonical parameter sets.

Enumerates every canonical (n, k, I) with k >= 1 and nonempty proper or full
I up to --max-n, runs the dispatcher, and prints one row per graph. Two
cross-checks are applied where cheap enough:

  * oracle: exhaustive brute_force_dist agreement when the vertex count is at
    most --oracle-limit
  * duality: Dist must agree between I and its complement within {1..k}

Exits nonzero on any disagreement or verification failure.

Usage:
    python3 scripts/survey_small.py [--max-n N] [--oracle-limit V]
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time

from jdist.engine import brute_force_dist, distinguishing_number, verify_certificate
from jdist.graphs import build, canonicalize


def canonical_specs(max_n: int):
    for n in range(2, max_n + 1):
        for k in range(1, n // 2 + 1):
            for r in range(1, k + 1):
                for distances in itertools.combinations(range(1, k + 1), r):
                    yield n, k, frozenset(distances)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--oracle-limit", type=int, default=10,
                        help="run the exhaustive oracle when C(n,k) <= this")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    results: dict[tuple[int, int, frozenset[int]], int] = {}
    failures = 0
    t_start = time.perf_counter()
    for n, k, distances in canonical_specs(args.max_n):
        spec = canonicalize(n, k, distances)
        t0 = time.perf_counter()
        cert = distinguishing_number(n, k, distances)
        elapsed = time.perf_counter() - t0
        results[(n, k, distances)] = cert.dist
        notes = []
        if spec.num_vertices <= args.oracle_limit:
            oracle = brute_force_dist(build(spec), spec.num_vertices, seed=args.seed)
            if oracle != cert.dist:
                notes.append(f"ORACLE DISAGREES ({oracle})")
                failures += 1
        ok, reason = verify_certificate(cert)
        if not ok:
            notes.append(f"UNVERIFIED ({reason})")
            failures += 1
        iset = ",".join(map(str, sorted(distances)))
        print(f"J({n},{k})_{{{iset}}}".ljust(18)
              + f" dist={cert.dist:<4} case={cert.case_id} "
              + f"{elapsed:6.2f}s  {' '.join(notes)}")

    # duality sweep over the collected table
    for (n, k, distances), value in sorted(results.items()):
        partner = frozenset(range(1, k + 1)) - distances
        if not partner:
            continue
        other = results.get((n, k, partner))
        if other is not None and other != value:
            print(f"DUALITY BREAK at J({n},{k}): {sorted(distances)} -> {value}, "
                  f"{sorted(partner)} -> {other}", file=sys.stderr)
            failures += 1

    total = time.perf_counter() - t_start
    print(f"{len(results)} graphs in {total:.1f}s")
    if failures:
        print(f"{failures} failure(s)", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
