"""Sliding-circuit entry times on super summit elements, with a per-(n, L) summary.

    python scripts/run_conjecture.py --strands 3,4,5 --lengths 16,32,64,128 --samples 20 --out conj.csv
"""

import argparse
import statistics
import sys
from collections import defaultdict
from pathlib import Path

from braidnt.bench import CONJECTURE_HEADER, conjecture_rows, to_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--strands", default="3,4,5")
    ap.add_argument("--lengths", default="16,32,64,128")
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, default=None)
    args = ap.parse_args()

    lengths = [int(v) for v in args.lengths.split(",")]
    rows = []
    for n in (int(v) for v in args.strands.split(",")):
        rows += conjecture_rows(n, lengths, args.samples, args.seed)
    text = to_csv(CONJECTURE_HEADER, rows)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)

    groups = defaultdict(list)
    for r in rows:
        groups[r["n"], r["L"]].append(r)
    print("n    L  median r  median t  max t  max period", file=sys.stderr)
    for (n, L), rs in sorted(groups.items()):
        print(
            f"{n:<3}{L:>4}  {statistics.median(r['r'] for r in rs):>8}  "
            f"{statistics.median(r['t'] for r in rs):>8}  {max(r['t'] for r in rs):>5}  {max(r['period'] for r in rs):>10}",
            file=sys.stderr,
        )


if __name__ == "__main__":
    main()
