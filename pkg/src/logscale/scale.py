"""Construction of the logarithmic scale.

Tone ``M`` sounds at ``f * ln(M)`` where the fundamental ``f = c / ln(base)``
pins tone ``base`` (4 by default) to the reference pitch ``c``.  Frequencies
are computed as ``c * (ln M / ln base)`` so the anchor and its exact powers
come out exact in floating point (``ln 16 / ln 4 == 2.0``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidConfigError, InvalidIndexError, InvalidRangeError

DEFAULT_REFERENCE_FREQ = 264.0
DEFAULT_BASE_INDEX = 4

# Keyboard names in key order; name i (0-based) sits on tone base+i.
NOTE_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")


@dataclass(frozen=True)
class ScaleConfig:
    reference_freq: float = DEFAULT_REFERENCE_FREQ
    base_index: int = DEFAULT_BASE_INDEX
    fundamental: float = field(init=False)

    def __post_init__(self):
        if isinstance(self.base_index, bool) or not isinstance(self.base_index, int):
            raise InvalidConfigError(f"base_index must be an integer, got {self.base_index!r}")
        if self.base_index < 2:
            raise InvalidConfigError(f"base_index must be >= 2, got {self.base_index}")
        if not (math.isfinite(self.reference_freq) and self.reference_freq > 0):
            raise InvalidConfigError(
                f"reference_freq must be a positive finite frequency, got {self.reference_freq!r}"
            )
        object.__setattr__(self, "fundamental", self.reference_freq / math.log(self.base_index))


@dataclass(frozen=True)
class LogTone:
    index: int
    frequency: float


@dataclass(frozen=True)
class KeyboardNote:
    name: str
    octave_shift: int = 0

    def __post_init__(self):
        if self.name not in NOTE_NAMES:
            raise InvalidIndexError(f"unknown note name {self.name!r}")

    @property
    def degree(self) -> int:
        """Keyboard position N in 1..12."""
        return NOTE_NAMES.index(self.name) + 1

    def tone_index(self, base_index: int = DEFAULT_BASE_INDEX) -> int:
        return base_index - 1 + self.degree

    def __str__(self):
        s = f"{self.name}*"
        return s + (f"{self.octave_shift:+d}" if self.octave_shift else "")


def make_config(reference_freq: float = DEFAULT_REFERENCE_FREQ,
                base_index: int = DEFAULT_BASE_INDEX) -> ScaleConfig:
    return ScaleConfig(reference_freq, base_index)


def _check_index(index) -> None:
    if isinstance(index, bool) or not isinstance(index, int):
        raise InvalidIndexError(f"tone index must be a whole number, got {index!r}")
    if index < 1:
        raise InvalidIndexError(f"tone index must be >= 1, got {index}")


def tone_frequency(cfg: ScaleConfig, index: int) -> float:
    """Frequency in Hz of tone ``index``; tone 1 is silent (0 Hz)."""
    _check_index(index)
    if index == 1:
        return 0.0
    return cfg.reference_freq * (math.log(index) / math.log(cfg.base_index))


def log_tone(cfg: ScaleConfig, index: int) -> LogTone:
    return LogTone(index, tone_frequency(cfg, index))


def note_name(index: int, base_index: int = DEFAULT_BASE_INDEX) -> str | None:
    """Keyboard name of ``index`` if it lies in the 12-tone octave above the anchor."""
    pos = index - base_index
    if 0 <= pos < len(NOTE_NAMES):
        return NOTE_NAMES[pos]
    return None


def twelve_tone_octave(cfg: ScaleConfig, octave_shift: int = 0) -> list[tuple[KeyboardNote, float]]:
    """The keyboard octave: tones base..base+11, transposed by ``2**octave_shift``."""
    factor = 2.0 ** octave_shift
    return [
        (KeyboardNote(name, octave_shift), tone_frequency(cfg, cfg.base_index + i) * factor)
        for i, name in enumerate(NOTE_NAMES)
    ]


def octave_tone_count(n: int) -> int:
    """Number of tone indices in the block ``[4**n, 4**(n+1))``.

    These blocks are what the keyboard convention calls octaves.  Only the
    first (4..15) spans a true 2:1 interval; in general the 2:1 partner of
    tone M is tone M**2.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidRangeError(f"octave number must be a whole number, got {n!r}")
    if n < 1:
        raise InvalidRangeError(f"octave number must be >= 1, got {n}")
    return 3 * 2 ** (2 * n)


def tones_in_band(cfg: ScaleConfig, lo: float, hi: float, max_tones: int = 1_000_000) -> list[LogTone]:
    """All tones with ``lo <= frequency < hi``, ascending.

    The tone count grows exponentially with ``hi``; bands holding more than
    ``max_tones`` tones are refused.
    """
    if not (0 <= lo < hi) or not math.isfinite(hi):
        raise InvalidRangeError(f"need 0 <= lo < hi, got [{lo}, {hi})")
    f = cfg.fundamental
    if hi / f > math.log(max_tones + 1) + 1:
        raise InvalidRangeError(f"band [{lo}, {hi}) holds more than {max_tones} tones")
    # Start from the float estimate, then settle boundaries with tone_frequency itself.
    m = max(1, math.floor(math.exp(lo / f)) - 1)
    while m > 1 and tone_frequency(cfg, m - 1) >= lo:
        m -= 1
    while tone_frequency(cfg, m) < lo:
        m += 1
    tones = []
    while True:
        freq = tone_frequency(cfg, m)
        if freq >= hi:
            break
        tones.append(LogTone(m, freq))
        if len(tones) > max_tones:
            raise InvalidRangeError(f"band [{lo}, {hi}) holds more than {max_tones} tones")
        m += 1
    return tones


def sqrt_fundamental(cfg: ScaleConfig) -> float:
    return cfg.reference_freq / math.sqrt(cfg.base_index)


def sqrt_tone_frequency(cfg: ScaleConfig, index: int) -> float:
    """Square-root comparison scale, anchored so tone ``base`` equals the reference."""
    _check_index(index)
    root_b = math.isqrt(cfg.base_index)
    if root_b * root_b == cfg.base_index:
        # Perfect-square anchor: exact ratio sqrt(M)/sqrt(b) keeps 16 vs 4 at exactly 2.
        root_m = math.isqrt(index)
        if root_m * root_m == index:
            return cfg.reference_freq * root_m / root_b
        return cfg.reference_freq * math.sqrt(index) / root_b
    return sqrt_fundamental(cfg) * math.sqrt(index)
