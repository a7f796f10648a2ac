#!/usr/bin/env python3
"""Time bijective encode/decode round trips across bases.

    python3 scripts/bench_codec.py --limit 1000000 --bases 2,9,10,16,36
"""

import argparse
import sys
import time
from pathlib import Path

try:
    from zoli import from_bijective, to_bijective
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
    from zoli import from_bijective, to_bijective


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=10**6, help="sweep 1..LIMIT per base")
    ap.add_argument("--bases", default="2,9,10,16,36", help="comma-separated bases")
    args = ap.parse_args()

    bases = [int(b) for b in args.bases.split(",")]
    total = 0.0
    for base in bases:
        t0 = time.perf_counter()
        for n in range(1, args.limit + 1):
            if from_bijective(to_bijective(n, base), base) != n:
                raise SystemExit(f"round trip failed at n={n} base={base}")
        dt = time.perf_counter() - t0
        total += dt
        rate = args.limit / dt
        print(f"base {base:>2}: {dt:6.2f}s  ({rate:,.0f} round trips/s)")
    print(f"total:   {total:6.2f}s for {len(bases) * args.limit:,} round trips")


if __name__ == "__main__":
    main()
