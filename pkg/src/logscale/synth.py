"""Additive sine rendering, 16-bit WAV I/O and beat-frequency estimation."""

from __future__ import annotations

import io
import math
import os
import struct
import warnings
import wave
from dataclasses import dataclass, field
from typing import BinaryIO, Union

import numpy as np

from .errors import InvalidIndexError, InvalidRangeError, NoBeatFoundError, NyquistError, ZeroBeatError
from .scale import ScaleConfig
from .score import NoteEvent, Score, ToneSpec

NORMALIZE = "normalize"
HARD_CLAMP = "hard_clamp_with_warning"

Destination = Union[str, os.PathLike, BinaryIO, None]


@dataclass(frozen=True)
class RenderSettings:
    sample_rate: int = 44100
    attack_ms: float = 5.0
    release_ms: float = 5.0
    clip_policy: str = NORMALIZE
    strict: bool = True

    def __post_init__(self):
        if self.sample_rate <= 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        if self.attack_ms < 0 or self.release_ms < 0:
            raise ValueError("attack_ms and release_ms must be >= 0")
        if self.clip_policy not in (NORMALIZE, HARD_CLAMP):
            raise ValueError(f"unknown clip policy {self.clip_policy!r}")


@dataclass
class PcmBuffer:
    sample_rate: int
    samples: np.ndarray = field(default_factory=lambda: np.zeros(0))

    def __len__(self):
        return len(self.samples)

    @property
    def duration(self) -> float:
        return len(self.samples) / self.sample_rate


def _n_samples(seconds: float, sr: int) -> int:
    # tolerate float noise like 1.0000000000000002 * 44100
    return max(0, math.ceil(seconds * sr - 1e-9))


def envelope(n: int, attack: int, release: int) -> np.ndarray:
    """Linear attack/release gain curve over ``n`` samples; ramps shrink proportionally if too long."""
    if attack + release > n:
        scale = n / (attack + release)
        attack = int(attack * scale)
        release = n - attack
    env = np.ones(n)
    if attack > 0:
        env[:attack] = np.arange(attack) / attack
    if release > 0:
        env[n - release:] = np.minimum(env[n - release:], np.arange(release - 1, -1, -1) / release)
    return env


def _reject(settings: RenderSettings, exc: Exception):
    if settings.strict:
        raise exc
    warnings.warn(f"skipping note: {exc}", RuntimeWarning, stacklevel=3)


def render_score(score: Score, settings: RenderSettings = RenderSettings(),
                 cfg: ScaleConfig = ScaleConfig()) -> PcmBuffer:
    sr = settings.sample_rate
    spb = score.seconds_per_beat
    total = _n_samples(score.duration_beats * spb, sr) if score.events else 0
    out = np.zeros(total)
    attack = round(settings.attack_ms * sr / 1000)
    release = round(settings.release_ms * sr / 1000)
    nyquist = sr / 2

    for ev in score.events:
        if ev.tone.is_rest:
            continue
        if ev.tone.index == 1:
            _reject(settings, InvalidIndexError(f"tone 1* is silent; use R for a rest ({ev})"))
            continue
        freq = ev.tone.frequency(cfg)
        if freq >= nyquist:
            _reject(settings, NyquistError(
                f"{ev.tone} at beat {ev.start} is {freq:.2f} Hz, at or above Nyquist {nyquist:g} Hz", ev))
            continue
        n0 = round(ev.start * spb * sr)
        n1 = min(round(ev.end * spb * sr), total)
        n = n1 - n0
        if n <= 0:
            continue
        t = np.arange(n) / sr
        out[n0:n1] += ev.amplitude * envelope(n, attack, release) * np.sin(2 * np.pi * freq * t)

    peak = float(np.max(np.abs(out))) if total else 0.0
    if peak > 1.0:
        if settings.clip_policy == NORMALIZE:
            out /= peak
        else:
            warnings.warn(f"mix peaks at {peak:.3f}; clamping to [-1, 1]", RuntimeWarning, stacklevel=2)
            np.clip(out, -1.0, 1.0, out=out)
    return PcmBuffer(sr, out)


def render_dyad(cfg: ScaleConfig, x: int, y: int, duration_s: float = 2.0,
                settings: RenderSettings = RenderSettings()) -> PcmBuffer:
    """Two tones at amplitude 0.4 each, sounding together for ``duration_s`` seconds."""
    for v in (x, y):
        if isinstance(v, bool) or not isinstance(v, int) or v < 2:
            raise InvalidIndexError(f"dyad tones must be whole numbers >= 2, got {v!r}")
    if x == y:
        raise ZeroBeatError(f"dyad {x}*, {y}* is a unison")
    beats = duration_s / 0.5  # tempo 120: one beat is half a second
    events = (NoteEvent(0.0, beats, ToneSpec(x), 0.4), NoteEvent(0.0, beats, ToneSpec(y), 0.4))
    return render_score(Score(120.0, events), settings, cfg)


def wav_bytes(pcm: PcmBuffer) -> bytes:
    """Mono 16-bit PCM RIFF/WAVE image of ``pcm``."""
    q = np.rint(np.clip(pcm.samples, -1.0, 1.0) * 32767).astype("<i2")
    data = q.tobytes()
    sr = int(pcm.sample_rate)
    header = struct.pack(
        "<4sI4s4sIHHIIHH4sI",
        b"RIFF", 36 + len(data), b"WAVE",
        b"fmt ", 16, 1, 1, sr, sr * 2, 2, 16,
        b"data", len(data),
    )
    return header + data


def write_wav(pcm: PcmBuffer, destination: Destination = None) -> bytes:
    data = wav_bytes(pcm)
    if destination is None:
        return data
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "wb") as fh:
            fh.write(data)
    else:
        destination.write(data)
    return data


def read_wav(source: Union[str, os.PathLike, BinaryIO, bytes]) -> PcmBuffer:
    if isinstance(source, (bytes, bytearray)):
        source = io.BytesIO(source)
    try:
        with wave.open(source if not isinstance(source, os.PathLike) else os.fspath(source), "rb") as w:
            if w.getsampwidth() != 2:
                raise ValueError(f"only 16-bit WAV is supported, got {8 * w.getsampwidth()}-bit")
            channels = w.getnchannels()
            raw = np.frombuffer(w.readframes(w.getnframes()), dtype="<i2")
            sr = w.getframerate()
    except wave.Error as exc:
        raise ValueError(f"not a PCM WAV file: {exc}") from exc
    if channels > 1:
        raw = raw.reshape(-1, channels).mean(axis=1)
    return PcmBuffer(sr, raw.astype(np.float64) / 32767)


def _peak_count(mag: np.ndarray, rel: float) -> int:
    thresh = rel * mag.max()
    inner = mag[1:-1]
    return int(np.count_nonzero((inner > mag[:-2]) & (inner >= mag[2:]) & (inner > thresh)))


def estimate_beat_frequency(pcm: PcmBuffer, search_band: tuple[float, float],
                            floor: float = 1e-3) -> float:
    """Recover the beat frequency of a mix from the spectrum of its square.

    Squaring turns ``sin(a) sin(b)`` into a ``cos(a - b)`` term.  The strongest
    bin of the Hann-windowed squared signal within ``search_band`` is refined
    by a parabola through the log magnitudes of the peak and its neighbours.
    A mix needs at least two carriers to beat; otherwise, or when the band
    peak is below ``floor`` times the spectrum maximum, NoBeatFoundError.
    """
    lo, hi = search_band
    if not 0 < lo < hi:
        raise InvalidRangeError(f"search band must satisfy 0 < lo < hi, got {search_band}")
    sr = pcm.sample_rate
    x = np.asarray(pcm.samples, dtype=np.float64)
    n = len(x)
    if n < 4 * sr / lo:
        raise InvalidRangeError(
            f"{n / sr:.3f} s of audio is too short for a band starting at {lo} Hz (need {4 / lo:.3f} s)")
    win = np.hanning(n)
    carriers = np.abs(np.fft.rfft(x * win))
    if carriers.max() == 0 or _peak_count(carriers, 0.1) < 2:
        raise NoBeatFoundError("fewer than two carriers present; nothing can beat")
    sq = x * x
    sq -= sq.mean()
    mag = np.abs(np.fft.rfft(sq * win))
    freqs = np.fft.rfftfreq(n, 1.0 / sr)
    in_band = np.flatnonzero((freqs >= lo) & (freqs <= hi))
    if in_band.size == 0:
        raise NoBeatFoundError(f"band ({lo}, {hi}) Hz contains no spectral bins")
    i = int(in_band[np.argmax(mag[in_band])])
    if mag[i] <= floor * mag.max():
        raise NoBeatFoundError(f"no beat above the noise floor in ({lo}, {hi}) Hz")
    offset = 0.0
    if 0 < i < len(mag) - 1 and mag[i - 1] > 0 and mag[i + 1] > 0:
        a, b, c = np.log(mag[i - 1 : i + 2])
        denom = a - 2 * b + c
        if denom < 0:
            offset = 0.5 * (a - c) / denom
    return float((i + offset) * sr / n)
