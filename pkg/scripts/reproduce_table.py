"""Print the keyboard octave next to the published two-decimal values."""

from logscale import make_config, twelve_tone_octave

PUBLISHED = [264.0, 306.49, 341.22, 370.57, 396.0, 418.43, 438.49, 456.64,
             473.22, 488.46, 502.57, 515.71]


def main():
    cfg = make_config(264, 4)
    print(f"fundamental f = {cfg.fundamental:.6f} Hz")
    print(f"{'note':<5}{'tone':>6}{'computed':>14}{'published':>11}{'diff':>10}")
    for i, ((note, freq), pub) in enumerate(zip(twelve_tone_octave(cfg), PUBLISHED)):
        print(f"{note.name + '*':<5}{4 + i:>5}*{freq:14.6f}{pub:11.2f}{freq - pub:10.5f}")


if __name__ == "__main__":
    main()
