"""Render dyads and compare the measured beat with f ln(X/Y)."""

import argparse
import random
from dataclasses import dataclass

from logscale import beat_frequency, make_config, render_dyad
from logscale.synth import estimate_beat_frequency


@dataclass
class BeatExperiment:
    pairs: int = 20
    max_index: int = 64
    duration_s: float = 2.0
    seed: int = 0
    lo_hz: float = 10.0
    hi_hz: float = 500.0


def sample_pairs(exp: BeatExperiment, cfg):
    rng = random.Random(exp.seed)
    out = []
    while len(out) < exp.pairs:
        y = rng.randint(2, exp.max_index - 1)
        x = rng.randint(y + 1, exp.max_index)
        if exp.lo_hz < beat_frequency(cfg, x, y) < exp.hi_hz:
            out.append((x, y))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    exp = BeatExperiment(pairs=args.pairs, seed=args.seed)
    cfg = make_config()
    worst = 0.0
    print(f"{'X':>4}{'Y':>4}{'predicted':>12}{'measured':>12}{'error':>9}")
    for x, y in sample_pairs(exp, cfg):
        beat = beat_frequency(cfg, x, y)
        est = estimate_beat_frequency(render_dyad(cfg, x, y, exp.duration_s), (0.75 * beat, 1.25 * beat))
        worst = max(worst, abs(est - beat))
        print(f"{x:>4}{y:>4}{beat:12.3f}{est:12.3f}{est - beat:9.4f}")
    print(f"max abs error {worst:.4f} Hz")


if __name__ == "__main__":
    main()
