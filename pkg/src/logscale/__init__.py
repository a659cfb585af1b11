"""Logarithmic ("non-Pythagorean") musical scale toolkit."""

from .difference import (
    BeatTerm,
    Chord,
    ClosureReport,
    beat_frequency,
    chord_spectrum,
    closure_report,
    difference_tone,
    search_closed_sets,
)
from .intervals import IntervalClass, classify_interval, interval_ratio, is_perfect_fifth
from .scale import (
    KeyboardNote,
    LogTone,
    ScaleConfig,
    make_config,
    octave_tone_count,
    sqrt_tone_frequency,
    tone_frequency,
    tones_in_band,
    twelve_tone_octave,
)
from .score import NoteEvent, Score, ToneSpec, export_scl, format_score, parse_score
from .synth import (
    PcmBuffer,
    RenderSettings,
    estimate_beat_frequency,
    read_wav,
    render_dyad,
    render_score,
    write_wav,
)

__version__ = "0.1.0"
