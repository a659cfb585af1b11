"""Difference-tone algebra over positive rationals.

Since ``f ln X - f ln Y = f ln(X/Y)``, the beat between tones X and Y is the
(possibly fractional) tone ``X/Y``.  Beats between beats are again quotients,
so the whole beat structure of a chord lives in exact ``Fraction`` arithmetic
and only the final frequencies touch floating point.
"""

from __future__ import annotations

import heapq
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    InvalidIndexError,
    InvalidOrderError,
    InvalidPairError,
    InvalidSearchError,
    InvalidSetError,
    ZeroBeatError,
)
from .scale import ScaleConfig, tone_frequency

FULL_SCALE = "full_scale"
WITHIN_SET = "within_set"
MEMBERSHIPS = (FULL_SCALE, WITHIN_SET)


def _check_index(v):
    if isinstance(v, bool) or not isinstance(v, int) or v < 2:
        raise InvalidIndexError(f"beating tones need whole-number indices >= 2, got {v!r}")


@dataclass(frozen=True)
class Chord:
    indices: tuple[int, ...]

    def __init__(self, indices: Iterable[int]):
        vals = list(indices)
        for v in vals:
            _check_index(v)
        if len(set(vals)) != len(vals):
            raise InvalidSetError(f"chord has duplicate tones: {vals}")
        if len(vals) < 2:
            raise InvalidSetError("a chord needs at least two tones")
        object.__setattr__(self, "indices", tuple(sorted(vals)))


Provenance = Union[tuple[int, int], tuple["BeatTerm", "BeatTerm"]]


@dataclass(frozen=True)
class BeatTerm:
    """One beat of a given order; ``ratio`` is canonical (> 1, lowest terms).

    ``provenance`` holds the two tone indices that produced an order-1 term,
    or the two lower-order terms for higher orders (larger ratio first).
    """

    ratio: Fraction
    order: int
    frequency: float
    provenance: Provenance = field(compare=False, repr=False)

    @property
    def in_scale(self) -> bool:
        return self.ratio.denominator == 1 and self.ratio >= 2

    @property
    def tone_index(self) -> int | None:
        return self.ratio.numerator if self.in_scale else None


@dataclass(frozen=True)
class ClosureReport:
    set: tuple[int, ...]
    pair_count: int
    closed_pairs: int
    closure_ratio: float
    witnesses: tuple[tuple[int, int, int], ...]
    membership: str = WITHIN_SET

    def to_record(self) -> dict:
        return {
            "set": list(self.set),
            "membership": self.membership,
            "pair_count": self.pair_count,
            "closed_pairs": self.closed_pairs,
            "closure_ratio": self.closure_ratio,
            "witnesses": [list(w) for w in self.witnesses],
        }


def beat_frequency(cfg: ScaleConfig, x: int, y: int) -> float:
    _check_index(x)
    _check_index(y)
    if x == y:
        raise ZeroBeatError(f"tones {x}* and {y}* are in unison and do not beat")
    hi, lo = max(x, y), min(x, y)
    if lo > 0 and hi % lo == 0:
        # Integer quotient: reuse tone_frequency so in-scale beats agree exactly.
        return tone_frequency(cfg, hi // lo)
    return cfg.fundamental * math.log(hi / lo)


def difference_tone(x: int, y: int) -> int | None:
    """Scale tone produced by tones ``x > y``, or ``None`` if ``y`` does not divide ``x``."""
    if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
        raise InvalidPairError(f"need whole numbers, got ({x!r}, {y!r})")
    if not x > y >= 2:
        raise InvalidPairError(f"need x > y >= 2, got ({x}, {y})")
    return x // y if x % y == 0 else None


def ratio_frequency(cfg: ScaleConfig, ratio: Fraction) -> float:
    if ratio.denominator == 1:
        return tone_frequency(cfg, ratio.numerator)
    return cfg.fundamental * (math.log(ratio.numerator) - math.log(ratio.denominator))


def chord_spectrum(cfg: ScaleConfig, chord: Chord | Sequence[int], max_order: int = 1) -> list[BeatTerm]:
    """Beat terms of orders 1..max_order, grouped by order and sorted by ratio."""
    if not isinstance(chord, Chord):
        chord = Chord(chord)
    if isinstance(max_order, bool) or not isinstance(max_order, int) or max_order < 1:
        raise InvalidOrderError(f"max_order must be a whole number >= 1, got {max_order!r}")

    level: dict[Fraction, BeatTerm] = {}
    for y, x in itertools.combinations(chord.indices, 2):
        r = Fraction(x, y)
        if r not in level:
            level[r] = BeatTerm(r, 1, ratio_frequency(cfg, r), (x, y))
    terms = sorted(level.values(), key=lambda t: t.ratio)
    out = list(terms)
    for order in range(2, max_order + 1):
        level = {}
        for a, b in itertools.combinations(terms, 2):
            # terms are sorted and distinct, so b.ratio > a.ratio and the quotient exceeds 1
            r = b.ratio / a.ratio
            if r not in level:
                level[r] = BeatTerm(r, order, ratio_frequency(cfg, r), (b, a))
        terms = sorted(level.values(), key=lambda t: t.ratio)
        if not terms:
            break
        out.extend(terms)
    return out


def expand_provenance(term: BeatTerm) -> tuple[Counter, Counter]:
    """Numerator and denominator chord-index multisets whose quotient is ``term.ratio``."""
    if term.order == 1:
        x, y = term.provenance
        return Counter([x]), Counter([y])
    hi, lo = term.provenance
    hn, hd = expand_provenance(hi)
    ln_, ld = expand_provenance(lo)
    return hn + ld, hd + ln_


def _validate_set(values) -> tuple[int, ...]:
    vals = list(values)
    for v in vals:
        if isinstance(v, bool) or not isinstance(v, int) or v < 2:
            raise InvalidSetError(f"set elements must be whole numbers >= 2, got {v!r}")
    if len(set(vals)) != len(vals):
        raise InvalidSetError(f"set has duplicates: {vals}")
    if len(vals) < 2:
        raise InvalidSetError("a set needs at least two elements")
    return tuple(sorted(vals))


def _check_membership(membership):
    if membership not in MEMBERSHIPS:
        raise InvalidSetError(f"membership must be one of {MEMBERSHIPS}, got {membership!r}")


def closure_report(values: Iterable[int], membership: str = WITHIN_SET) -> ClosureReport:
    _check_membership(membership)
    s = _validate_set(values)
    members = set(s)
    witnesses = []
    for y, x in itertools.combinations(s, 2):
        if x % y:
            continue
        d = x // y
        if membership == FULL_SCALE or d in members:
            witnesses.append((x, y, d))
    k = len(s)
    pairs = k * (k - 1) // 2
    return ClosureReport(s, pairs, len(witnesses), len(witnesses) / pairs, tuple(witnesses), membership)


def search_closed_sets(k: int, max_index: int, top_t: int | None = 10,
                       membership: str = WITHIN_SET) -> list[ClosureReport]:
    """Best ``top_t`` subsets of ``[2, max_index]`` of size ``k`` by closure ratio.

    Ties go to the lexicographically smallest sorted set.  Subsets are visited
    depth-first in lexicographic order with a branch-and-bound cut: a branch
    is dropped only when even closing every remaining pair cannot strictly
    beat the current ``top_t``-th entry, which under lexicographic visiting
    order cannot change the result.  ``top_t=None`` returns the full ranking.
    """
    _check_membership(membership)
    for name, v in (("k", k), ("max_index", max_index)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidSearchError(f"{name} must be a whole number, got {v!r}")
    if k < 2 or max_index < 3 or k > max_index - 1:
        raise InvalidSearchError(f"need 2 <= k <= max_index - 1, got k={k}, max_index={max_index}")
    if top_t is not None and (isinstance(top_t, bool) or not isinstance(top_t, int) or top_t < 1):
        raise InvalidSearchError(f"top_t must be a positive whole number or None, got {top_t!r}")

    within = membership == WITHIN_SET
    pool = list(range(2, max_index + 1))
    total_pairs = k * (k - 1) // 2
    # heap of (closed, negated set) so heap[0] is the current worst kept entry
    heap: list[tuple[int, tuple[int, ...]]] = []
    chosen: list[int] = []
    in_set = [False] * (max_index + 1)

    def gain(z: int) -> int:
        # z exceeds every chosen element, so a quotient z/y can only land on an
        # element already chosen; no earlier pair can produce a quotient of z.
        g = 0
        for y in chosen:
            if z % y == 0 and (not within or in_set[z // y]):
                g += 1
        return g

    def visit(start: int, closed: int, pairs_done: int):
        depth = len(chosen)
        if depth == k:
            key = tuple(chosen)
            neg = tuple(-v for v in key)
            if top_t is None or len(heap) < top_t:
                heapq.heappush(heap, (closed, neg))
            elif (closed, neg) > heap[0]:
                heapq.heapreplace(heap, (closed, neg))
            return
        if top_t is not None and len(heap) == top_t and closed + (total_pairs - pairs_done) <= heap[0][0]:
            return
        remaining = k - depth
        for i in range(start, len(pool) - remaining + 1):
            z = pool[i]
            g = gain(z)
            chosen.append(z)
            in_set[z] = True
            visit(i + 1, closed + g, pairs_done + depth)
            in_set[z] = False
            chosen.pop()

    visit(0, 0, 0)
    ranked = sorted(heap, key=lambda e: (-e[0], tuple(-v for v in e[1])))
    return [closure_report([-v for v in neg], membership) for _, neg in ranked]
