"""Exit criteria for the build, one test per criterion at its stated tolerance.

A PASS/FAIL line per criterion is printed in the pytest terminal summary.
"""

import random
import time

import pytest

from logscale import (
    beat_frequency,
    classify_interval,
    export_scl,
    interval_ratio,
    is_perfect_fifth,
    make_config,
    octave_tone_count,
    parse_score,
    read_wav,
    render_dyad,
    render_score,
    search_closed_sets,
    sqrt_tone_frequency,
    tone_frequency,
    twelve_tone_octave,
    write_wav,
)
from logscale.difference import WITHIN_SET, closure_report
from logscale.errors import ScoreParseError
from logscale.score import read_score
from logscale.synth import RenderSettings, estimate_beat_frequency
from oracles import brute_common_base, brute_count, exhaustive_ranking, naive_fifth

TABLE = [264.0, 306.49, 341.22, 370.57, 396.0, 418.43, 438.49, 456.64, 473.22, 488.46, 502.57, 515.71]
HZ_TOL = 0.005


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


@pytest.mark.criterion(1, "twelve-tone table within 0.005 Hz, < 1 s")
def test_c1_twelve_tone_table():
    with Timer() as t:
        cfg = make_config(264, 4)
        freqs = [f for _, f in twelve_tone_octave(cfg)]
    assert len(freqs) == 12
    for m, f, expected in zip(range(4, 16), freqs, TABLE):
        assert abs(f - expected) <= HZ_TOL, (m, f, expected)
    assert t.elapsed < 1.0


@pytest.mark.criterion(2, "fundamental 190.44 Hz within 0.005 Hz")
def test_c2_fundamental():
    assert abs(make_config(264, 4).fundamental - 190.44) <= HZ_TOL


@pytest.mark.criterion(3, "octave census n = 1..10 vs brute force and 3*2^(2n), < 1 s")
def test_c3_octave_census():
    with Timer() as t:
        for n in range(1, 11):
            count = octave_tone_count(n)
            assert count == brute_count(4 ** n, 4 ** (n + 1)) == 3 * 2 ** (2 * n)
    assert [octave_tone_count(n) for n in (2, 3, 4)] == [48, 192, 768]
    assert t.elapsed < 1.0


@pytest.mark.criterion(4, "perfect fifth n = 2..100 within 1e-12; 1000 random non-fifths false, < 1 s")
def test_c4_fifths():
    with Timer() as t:
        for n in range(2, 101):
            assert abs(interval_ratio(n ** 3, n ** 2) - 1.5) <= 1e-12
            assert is_perfect_fifth(n ** 3, n ** 2)
        rng = random.Random(4)
        checked = 0
        while checked < 1000:
            x, y = rng.randint(2, 10 ** 6), rng.randint(2, 10 ** 4)
            if naive_fifth(x, y):
                continue
            assert not is_perfect_fifth(x, y), (x, y)
            checked += 1
    assert t.elapsed < 1.0


@pytest.mark.criterion(5, "difference tone equals tone X/Y within 1e-9 relative for X, Y <= 1000, < 5 s")
def test_c5_difference_closure():
    cfg = make_config()
    with Timer() as t:
        pairs = 0
        for y in range(2, 1001):
            for x in range(2 * y, 1001, y):
                target = tone_frequency(cfg, x // y)
                assert abs(beat_frequency(cfg, x, y) - target) <= 1e-9 * target
                pairs += 1
    assert pairs > 0
    assert t.elapsed < 5.0


@pytest.mark.criterion(6, "rationality classifier equals common-base oracle for 2 <= Y < X <= 100, < 5 s")
def test_c6_rationality():
    with Timer() as t:
        for x in range(3, 101):
            for y in range(2, x):
                found = brute_common_base(x, y)
                c = classify_interval(x, y)
                assert c.is_rational == bool(found), (x, y)
                if found:
                    assert (c.base, c.p, c.q) in found
    assert t.elapsed < 5.0


@pytest.mark.criterion(7, "closure search equals exhaustive oracle for k <= 5, max_index <= 30, < 60 s")
def test_c7_search_exactness():
    with Timer() as t:
        for k in range(2, 6):
            # one unpruned enumeration over [2, 30]; smaller pools are its prefix-filtered views
            full = exhaustive_ranking(k, 30, within=True)
            got_full = search_closed_sets(k, 30, None, WITHIN_SET)
            assert [(r.set, r.closure_ratio) for r in got_full] == full
            for max_index in range(k + 1, 31):
                expected = [e for e in full if e[0][-1] <= max_index][:25]
                got = search_closed_sets(k, max_index, 25, WITHIN_SET)
                assert [(r.set, r.closure_ratio) for r in got] == expected, (k, max_index)
        top = search_closed_sets(4, 16, 1)[0]
        assert top.set == (2, 4, 8, 16) and top.closure_ratio == 1.0
        assert closure_report([2, 4, 8, 16]).closure_ratio == 1.0
    assert t.elapsed < 60.0


@pytest.mark.criterion(8, "DSP beats of (8*,4*) and (5*,4*) within 0.5 Hz of 132.00 / 42.49, < 5 s")
def test_c8_dsp_oracle():
    cfg = make_config()
    with Timer() as t:
        b84 = estimate_beat_frequency(render_dyad(cfg, 8, 4, 2.0), (50, 300))
        b54 = estimate_beat_frequency(render_dyad(cfg, 5, 4, 2.0), (10, 100))
    assert abs(b84 - 132.00) <= 0.5
    assert abs(b54 - 42.49) <= 0.5
    assert t.elapsed < 5.0


@pytest.mark.criterion(9, "golden .scl and WAV byte-exact, cents round-trip, parser corpus")
def test_c9_file_formats(data_dir, tmp_path):
    cfg = make_config()
    scl = export_scl(cfg)
    assert scl == (data_dir / "golden_logscale12.scl").read_bytes()
    cents = [float(v) for v in scl.decode("ascii").split("\n")[2:-1]]
    freqs = [264.0] + [264.0 * 2 ** (c / 1200) for c in cents[:-1]]
    for f, expected in zip(freqs, TABLE):
        assert abs(f - expected) <= HZ_TOL

    pcm = render_score(parse_score("note 0 0.2 4* 0.5\n"), RenderSettings(sample_rate=8000), cfg)
    wav = write_wav(pcm, tmp_path / "t.wav")
    assert wav == (data_dir / "golden_tone4_8k.wav").read_bytes()
    assert len(read_wav(tmp_path / "t.wav")) == 800

    valid = sorted((data_dir / "scores" / "valid").glob("*.lsc"))
    invalid = sorted((data_dir / "scores" / "invalid").glob("*.lsc"))
    assert len(valid) >= 10 and len(invalid) >= 10
    for f in valid:
        read_score(f)
    for f in invalid:
        with pytest.raises(ScoreParseError) as exc:
            read_score(f)
        assert exc.value.errors
        assert all(e.line >= 1 and e.column >= 1 for e in exc.value.errors), f.name


@pytest.mark.criterion(10, "sqrt scale anchors at 264, doubles at 16, has a divisible pair off-scale")
def test_c10_sqrt_contrast():
    cfg = make_config()
    assert sqrt_tone_frequency(cfg, 4) == 264.0
    assert sqrt_tone_frequency(cfg, 16) == 528.0
    # differences of tones up to 100 stay below 10 * 132 Hz, so tones past 100 are never needed
    tones = [sqrt_tone_frequency(cfg, m) for m in range(1, 101)]
    witnesses = []
    for x in range(2, 101):
        for y in range(2, x):
            if x % y:
                continue
            d = sqrt_tone_frequency(cfg, x) - sqrt_tone_frequency(cfg, y)
            if not any(abs(t - d) <= 1e-6 * d for t in tones):
                witnesses.append((x, y))
    assert witnesses
    # the log scale has no such pair: every divisible beat is a scale tone
    for x, y in witnesses:
        assert abs(beat_frequency(cfg, x, y) - tone_frequency(cfg, x // y)) <= 1e-9 * tone_frequency(cfg, x // y)
