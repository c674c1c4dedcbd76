"""Run every residual gadget and print a Markdown table with timings.

    python3 scripts/gadget_table.py --only w5
"""
import argparse
import sys
import time
from dataclasses import dataclass

from choosecheck.gadgets import run_gadget, standard_gadgets


@dataclass
class TableConfig:
    only: str | None = None  # substring filter on gadget names


def _sizes(sizes: dict) -> str:
    return " ".join(f"{v}:{s}" for v, s in sorted(sizes.items()))


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--only", help="run gadgets whose name contains this")
    cfg = TableConfig(p.parse_args(argv).only)

    print("| gadget | vertices | sizes | two-lists rule | claim | always | seconds |")
    print("|---|---|---|---|---|---|---|")
    all_ok = True
    for g in standard_gadgets():
        if cfg.only and cfg.only not in g.name:
            continue
        t0 = time.perf_counter()
        r = run_gadget(g)
        dt = time.perf_counter() - t0
        claim = "-" if r.expected is None else str(r.expected)
        all_ok &= r.agrees is not False
        print(f"| {r.name} | {len(r.sizes)} | {_sizes(r.sizes)} | {r.distinct} | {claim} | {r.always} | {dt:.2f} |")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
