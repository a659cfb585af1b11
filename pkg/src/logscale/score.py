"""Plain-text scores (``.lsc``) and Scala tuning export.

Score grammar, one statement per line::

    # comment (a token starting with '#' ends the line)
    tempo 96
    note <start> <dur> <tone> <amp>

``start`` and ``dur`` are in beats, ``amp`` in (0, 1].  A tone is ``7*``,
``7*+1`` (raw index, octave shift), ``G*-1`` (keyboard name) or ``R`` (rest).
"""

from __future__ import annotations

import io
import math
import os
import re
from dataclasses import dataclass, field
from typing import BinaryIO, Union

from .errors import ScoreParseError
from .scale import NOTE_NAMES, ScaleConfig, tone_frequency

DEFAULT_TEMPO = 120.0

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?\Z")
_TONE = re.compile(r"(?:(?P<index>\d+)|(?P<name>[A-Za-z][A-Za-z#]*))\*(?P<shift>[+-]\d+)?\Z")


@dataclass(frozen=True)
class ToneSpec:
    """A pitch reference: raw tone index or keyboard name, plus octave shift.

    ``index`` is ``None`` for a rest.  For keyboard names ``index`` holds the
    resolved tone (C -> 4 ... B -> 15 under the default anchor).
    """

    index: int | None
    shift: int = 0
    name: str | None = None

    @classmethod
    def rest(cls) -> "ToneSpec":
        return cls(None)

    @classmethod
    def from_name(cls, name: str, shift: int = 0, base_index: int = 4) -> "ToneSpec":
        return cls(base_index + NOTE_NAMES.index(name), shift, name)

    @property
    def is_rest(self) -> bool:
        return self.index is None

    def frequency(self, cfg: ScaleConfig) -> float:
        if self.index is None:
            return 0.0
        return tone_frequency(cfg, self.index) * 2.0 ** self.shift

    def __str__(self):
        if self.index is None:
            return "R"
        head = f"{self.name}*" if self.name else f"{self.index}*"
        return head + (f"{self.shift:+d}" if self.shift else "")


@dataclass(frozen=True)
class NoteEvent:
    start: float
    duration: float
    tone: ToneSpec
    amplitude: float

    def __post_init__(self):
        for v in (self.start, self.duration, self.amplitude):
            if not math.isfinite(v):
                raise ValueError(f"note fields must be finite: {self}")
        if self.start < 0:
            raise ValueError(f"note start must be >= 0, got {self.start}")
        if self.duration <= 0:
            raise ValueError(f"note duration must be > 0, got {self.duration}")
        if not 0 < self.amplitude <= 1:
            raise ValueError(f"note amplitude must be in (0, 1], got {self.amplitude}")

    @property
    def end(self) -> float:
        return self.start + self.duration


@dataclass(frozen=True)
class Score:
    tempo: float = DEFAULT_TEMPO
    events: tuple[NoteEvent, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not (math.isfinite(self.tempo) and self.tempo > 0):
            raise ValueError(f"tempo must be > 0, got {self.tempo}")
        object.__setattr__(self, "events", tuple(sorted(self.events, key=lambda e: e.start)))

    @property
    def seconds_per_beat(self) -> float:
        return 60.0 / self.tempo

    @property
    def duration_beats(self) -> float:
        return max((e.end for e in self.events), default=0.0)


@dataclass(frozen=True)
class ParseIssue:
    line: int
    column: int
    message: str

    def __str__(self):
        return f"line {self.line}, column {self.column}: {self.message}"


def _tokens(line: str) -> list[tuple[int, str]]:
    out = []
    for m in re.finditer(r"\S+", line):
        if m.group().startswith("#"):
            break
        out.append((m.start() + 1, m.group()))
    return out


def _parse_tone(tok: str, base_index: int):
    """Return (ToneSpec, None) or (None, message)."""
    if tok == "R":
        return ToneSpec.rest(), None
    m = _TONE.match(tok)
    if not m:
        return None, f"malformed tone {tok!r} (expected e.g. 7*, 7*+1, G*-1 or R)"
    shift = int(m["shift"]) if m["shift"] else 0
    if m["name"] is not None:
        if m["name"] not in NOTE_NAMES:
            return None, f"unknown note name {m['name']!r}"
        return ToneSpec.from_name(m["name"], shift, base_index), None
    index = int(m["index"])
    if index < 1:
        return None, f"tone index must be >= 1, got {index}"
    return ToneSpec(index, shift), None


def parse_score(text: str, base_index: int = 4) -> Score:
    """Parse score text; raises :class:`ScoreParseError` listing every problem."""
    issues: list[ParseIssue] = []
    tempo = None
    events = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        col, kw = toks[0]
        args = toks[1:]

        def number(i, what):
            c, t = args[i]
            if not _NUMBER.match(t):
                issues.append(ParseIssue(lineno, c, f"malformed number {t!r} for {what}"))
                return None
            return float(t)

        if kw == "tempo":
            if len(args) != 1:
                c = args[1][0] if len(args) > 1 else len(line.rstrip()) + 1
                issues.append(ParseIssue(lineno, c, "tempo takes exactly one value"))
                continue
            value = number(0, "tempo")
            if value is None:
                continue
            if tempo is not None:
                issues.append(ParseIssue(lineno, col, "duplicate tempo"))
            elif not (math.isfinite(value) and value > 0):
                issues.append(ParseIssue(lineno, args[0][0], f"tempo must be > 0, got {args[0][1]}"))
            else:
                tempo = value
        elif kw == "note":
            if len(args) != 4:
                c = args[4][0] if len(args) > 4 else len(line.rstrip()) + 1
                issues.append(ParseIssue(
                    lineno, c, f"note takes 4 fields <start> <dur> <tone> <amp>, got {len(args)}"))
                continue
            before = len(issues)
            start = number(0, "start")
            dur = number(1, "duration")
            tone, msg = _parse_tone(args[2][1], base_index)
            if msg:
                issues.append(ParseIssue(lineno, args[2][0], msg))
            amp = number(3, "amplitude")
            if start is not None and not (math.isfinite(start) and start >= 0):
                issues.append(ParseIssue(lineno, args[0][0], f"start must be >= 0, got {args[0][1]}"))
            if dur is not None and not (math.isfinite(dur) and dur > 0):
                issues.append(ParseIssue(lineno, args[1][0], f"duration must be > 0, got {args[1][1]}"))
            if amp is not None and not (0 < amp <= 1):
                issues.append(ParseIssue(lineno, args[3][0], f"amplitude must be in (0, 1], got {args[3][1]}"))
            if len(issues) == before:
                events.append(NoteEvent(start, dur, tone, amp))
        else:
            issues.append(ParseIssue(lineno, col, f"unknown keyword {kw!r}"))
    if issues:
        raise ScoreParseError(issues)
    return Score(DEFAULT_TEMPO if tempo is None else tempo, tuple(events))


def format_score(score: Score) -> str:
    lines = [f"tempo {score.tempo!r}"]
    for e in score.events:
        lines.append(f"note {e.start!r} {e.duration!r} {e.tone} {e.amplitude!r}")
    return "\n".join(lines) + "\n"


def read_score(path: Union[str, os.PathLike], base_index: int = 4) -> Score:
    with open(path, encoding="utf-8") as fh:
        return parse_score(fh.read(), base_index)


def scl_cents(cfg: ScaleConfig) -> list[tuple[int, float]]:
    """(tone, cents above the anchor) for tones base+1 .. base**2."""
    b = cfg.base_index
    lb = math.log(b)
    out = []
    for m in range(b + 1, b * b + 1):
        if m == b * b:
            out.append((m, 1200.0))
        else:
            out.append((m, 1200.0 * math.log2(math.log(m) / lb)))
    return out


def scl_text(cfg: ScaleConfig) -> str:
    entries = scl_cents(cfg)
    b = cfg.base_index
    lines = [f"Logarithmic scale, tones {b}* to {b * b}* (tone M at ln M / ln {b} times the anchor)",
             str(len(entries))]
    lines += [f"{c:.5f}" for _, c in entries]
    return "\n".join(lines) + "\n"


def export_scl(cfg: ScaleConfig, destination: Union[str, os.PathLike, BinaryIO, None] = None) -> bytes:
    """Write the keyboard octave as a Scala ``.scl`` file and return its bytes."""
    data = scl_text(cfg).encode("ascii")
    if destination is None:
        return data
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "wb") as fh:
            fh.write(data)
    elif isinstance(destination, io.TextIOBase):
        destination.write(data.decode("ascii"))
    else:
        destination.write(data)
    return data
