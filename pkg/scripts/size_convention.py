#!/usr/bin/env python3

"""
Works out how published grid sizes map to matrix orders. For each size in the
eigenvalue table it computes the smallest eigenvalue of tau(G)^{-1} G under
both readings ("intervals": n = size - 1, "points": n = size) and prints which
one reproduces the published value.
"""

import argparse
import os
import sys

sys.path.append(os.path.join(os.path.dirname(__file__), ".."))
from spectral import resolve_size_convention
from table_layouts import EIGENVALUE_TABLE, EIGENVALUE_TABLE_ALPHA


def main():
    parser = argparse.ArgumentParser(description="Resolve the grid size convention")
    parser.add_argument("--max-size", type=int, default=1024)
    parser.add_argument("--tol", type=float, default=1e-3)
    args = parser.parse_args()

    chosen = set()
    for size, expected in sorted(EIGENVALUE_TABLE.items()):
        if size > args.max_size:
            continue
        report = resolve_size_convention(EIGENVALUE_TABLE_ALPHA, size, expected, args.tol)
        values = ", ".join(f"{k}: {v:.4f}" for k, v in report.values.items())
        print(f"size {size}: expected {expected:.4f} | {values} -> {report.chosen or 'neither'}")
        chosen.add(report.chosen)

    if len(chosen) == 1 and None not in chosen:
        print(f"✅ Use --size-convention {chosen.pop()}")
        return 0
    print(f"⚠️  No single convention matched every size: {sorted(map(str, chosen))}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
