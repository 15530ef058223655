"""Check the product formula for the exterior-power table over a range of groups and time it."""

import argparse
import time

from extspringer.character_theory import solomon_check
from extspringer.root_data import weyl_group


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=5)
    args = ap.parse_args()
    failures = 0
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
        for l in range(lo, args.max_rank + 1):
            t0 = time.perf_counter()
            W = weyl_group(fam, l)
            rep = solomon_check(W)
            dt = time.perf_counter() - t0
            failures += rep.verdict != "pass"
            print(f"{fam}{l:<2} |W|={W.order:<7} m={rep.exponents} {rep.verdict} {dt:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
