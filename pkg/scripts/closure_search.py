"""Sweep set sizes and index bounds for difference-tone-closed sets.

    python scripts/closure_search.py --sizes 3 4 5 --max-index 30 --top 5
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from logscale.difference import MEMBERSHIPS, WITHIN_SET, search_closed_sets


@dataclass
class SweepConfig:
    sizes: list = field(default_factory=lambda: [3, 4, 5])
    max_index: int = 30
    top: int = 5
    membership: str = WITHIN_SET


def run(cfg: SweepConfig):
    for k in cfg.sizes:
        t0 = time.perf_counter()
        reports = search_closed_sets(k, cfg.max_index, cfg.top, cfg.membership)
        dt = time.perf_counter() - t0
        for rank, r in enumerate(reports, 1):
            yield {"k": k, "rank": rank, "seconds": round(dt, 4), **r.to_record()}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--max-index", type=int, default=30)
    ap.add_argument("--top", type=int, default=5)
    ap.add_argument("--membership", choices=MEMBERSHIPS, default=WITHIN_SET)
    ap.add_argument("--json", action="store_true")
    args = vars(ap.parse_args())
    as_json = args.pop("json")
    cfg = SweepConfig(**args)
    if not as_json:
        print("#", asdict(cfg))
    for rec in run(cfg):
        if as_json:
            print(json.dumps(rec))
        else:
            print(f"k={rec['k']} #{rec['rank']:<3} {rec['set']}  "
                  f"{rec['closed_pairs']}/{rec['pair_count']} = {rec['closure_ratio']:.3f}")


if __name__ == "__main__":
    main()
