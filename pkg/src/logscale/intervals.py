"""Exact classification of intervals between whole-numbered tones.

The ratio of tones X and Y is ``ln X / ln Y``.  It is rational exactly when X
and Y are integer powers of one common base, which follows from unique
factorization.  Every decision here uses integer arithmetic only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidIndexError

UNISON = "unison"
POWER_RELATION = "power_relation"
PERFECT_FIFTH = "perfect_fifth"
RATIONAL = "rational"
IRRATIONAL = "irrational"


@dataclass(frozen=True)
class IntervalClass:
    """Outcome of :func:`classify_interval`.

    For every kind except ``irrational``, ``X == base**p`` and ``Y == base**q``
    with ``gcd(p, q) == 1``; the three fields are ``None`` for irrational
    intervals.  ``power_relation`` has ``q == 1`` and ``p == k >= 2``.
    """

    kind: str
    ratio: float
    p: int | None = None
    q: int | None = None
    base: int | None = None

    @property
    def is_rational(self) -> bool:
        return self.kind != IRRATIONAL

    @property
    def k(self) -> int | None:
        return self.p if self.kind == POWER_RELATION else None


def _check(x, y):
    for v in (x, y):
        if isinstance(v, bool) or not isinstance(v, int) or v < 2:
            raise InvalidIndexError(f"interval endpoints must be whole numbers >= 2, got {v!r}")


def integer_root(n: int, k: int) -> int | None:
    """Exact k-th root of ``n`` if ``n`` is a perfect k-th power."""
    if k == 1:
        return n
    r = round(n ** (1.0 / k)) if n < 2 ** 1000 else _iroot_floor(n, k)
    # Float seed may be off by one; fix with integers.
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == n:
            return cand
    r = _iroot_floor(n, k)
    return r if r ** k == n else None


def _iroot_floor(n: int, k: int) -> int:
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def primitive_power(n: int) -> tuple[int, int]:
    """Write ``n = b**e`` with the smallest possible base ``b``."""
    for e in range(n.bit_length(), 1, -1):
        b = integer_root(n, e)
        if b is not None and b >= 2:
            return b, e
    return n, 1


def interval_ratio(x: int, y: int) -> float:
    _check(x, y)
    return math.log(x) / math.log(y)


def is_perfect_fifth(x: int, y: int) -> bool:
    """True iff ``x**2 == y**3``, i.e. ``x = n**3`` and ``y = n**2``."""
    _check(x, y)
    return x * x == y * y * y


def classify_interval(x: int, y: int) -> IntervalClass:
    _check(x, y)
    ratio = math.log(x) / math.log(y)
    if x == y:
        return IntervalClass(UNISON, 1.0, 1, 1, x)
    bx, ex = primitive_power(x)
    by, ey = primitive_power(y)
    if bx != by:
        return IntervalClass(IRRATIONAL, ratio)
    g = math.gcd(ex, ey)
    p, q, base = ex // g, ey // g, bx ** g
    if x * x == y * y * y:
        kind = PERFECT_FIFTH
    elif q == 1:
        kind = POWER_RELATION
    else:
        kind = RATIONAL
    return IntervalClass(kind, ratio, p, q, base)
