"""Census over random stacked triangulations.

For each (n, seed) records which cycle-adjacency hypotheses hold, how many
flaw vertices, trios and W5s the classifier finds, how many elements end
with negative charge and whether the case audit agrees.  Writes CSV.

    python3 scripts/census_stacked.py --sizes 6 8 10 12 --seeds 20 > census.csv
"""
import argparse
import csv
import sys
from dataclasses import dataclass, field

from choosecheck import cycles, discharging, families


@dataclass
class CensusConfig:
    sizes: list[int] = field(default_factory=lambda: [6, 8, 10, 12, 16])
    seeds: int = 10
    max_cycle_len: int = 6


def census_row(n: int, seed: int, max_cycle_len: int) -> dict:
    G = families.stacked_triangulation(n, seed)
    index = cycles.CycleIndex(G, max_cycle_len)
    res = discharging.discharge(G)
    tax = res.taxonomy
    row = {"n": n, "seed": seed, "edges": len(G.edges)}
    for i in cycles.HYPOTHESIS_LENGTHS:
        row[f"hyp{i}"] = int(cycles.hypothesis_holds(G, i, index).holds)
    row["forbidden"] = len(cycles.prop2_violations(G, index))
    row["flaw"] = len(tax.flaw)
    row["trios"] = len(tax.trios)
    row["w5"] = len(tax.wheels)
    row["negative"] = len(res.final.negative)
    row["audit_disagreements"] = len(res.audit.disagreements)
    row["final_sum"] = str(res.final.total)
    return row


def main(argv=None) -> int:
    cfg = CensusConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=cfg.sizes)
    p.add_argument("--seeds", type=int, default=cfg.seeds)
    p.add_argument("--max-cycle-len", type=int, default=cfg.max_cycle_len)
    a = p.parse_args(argv)
    cfg = CensusConfig(a.sizes, a.seeds, a.max_cycle_len)

    rows = [census_row(n, s, cfg.max_cycle_len) for n in cfg.sizes for s in range(cfg.seeds)]
    w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]))
    w.writeheader()
    w.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
