"""Independent reference computations used by the tests.

None of these call into the code they check: high-precision values come from
mpmath, integer questions are answered by brute-force search.
"""

import itertools
import math

import mpmath

mpmath.mp.dps = 40


def hp_tone(m, c=264, base=4):
    """Tone frequency at 40 significant digits."""
    return c * mpmath.log(m) / mpmath.log(base)


def hp_cents(m, base=4):
    return 1200 * mpmath.log(mpmath.log(m) / mpmath.log(base), 2)


def brute_common_base(x, y):
    """All (b, p, q) with b**p == x and b**q == y, 2 <= b <= max(x, y)."""
    found = []
    for b in range(2, max(x, y) + 1):
        p = 0
        v = 1
        px = None
        while v < x:
            v *= b
            p += 1
        if v == x:
            px = p
        q = 0
        v = 1
        qy = None
        while v < y:
            v *= b
            q += 1
        if v == y:
            qy = q
        if px and qy:
            found.append((b, px, qy))
    return found


def brute_count(lo, hi):
    n = 0
    for _ in range(lo, hi):
        n += 1
    return n


def closed_pair_count(s, within):
    members = set(s)
    n = 0
    for x in s:
        for y in s:
            if x > y and x % y == 0 and (not within or x // y in members):
                n += 1
    return n


def exhaustive_ranking(k, max_index, within=True):
    """Every k-subset of [2, max_index] scored, fully sorted: closure desc, then set asc."""
    scored = []
    for s in itertools.combinations(range(2, max_index + 1), k):
        scored.append((closed_pair_count(s, within), s))
    scored.sort(key=lambda e: (-e[0], e[1]))
    pairs = k * (k - 1) // 2
    return [(s, c / pairs) for c, s in scored]


def naive_fifth(x, y):
    """Is there n with x == n**3 and y == n**2?"""
    n = 2
    while n ** 2 <= y:
        if n ** 2 == y and n ** 3 == x:
            return True
        n += 1
    return False


def dft_peak(samples, sr, lo, hi):
    """Brute-force DFT of the squared signal on a 0.01 Hz grid inside [lo, hi]."""
    import numpy as np

    sq = np.asarray(samples) ** 2
    sq = sq - sq.mean()
    t = np.arange(len(sq)) / sr
    best, best_f = -1.0, None
    for f in np.arange(lo, hi, 0.01):
        v = abs(np.dot(sq, np.exp(-2j * math.pi * f * t)))
        if v > best:
            best, best_f = v, f
    return best_f
