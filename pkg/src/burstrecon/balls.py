"""Brute-force ball enumeration, exhaustive overlap search, membership tests.

These are the oracles the closed-form counts are checked against, so the
enumerations stay strictly operational: apply every burst at every legal
position, round by round, and deduplicate.  Nothing here consults a formula
except to refuse hopeless enumerations up front.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Literal

from .combinatorics import ins_ball_size
from .errors import EnumerationCapExceeded
from .sequences import Word, all_words, validate_word

BallKind = Literal["insertion", "deletion"]

DEFAULT_CAP = 10**7


def _check_kind(kind: str) -> None:
    if kind not in ("insertion", "deletion"):
        raise ValueError(f"ball kind must be 'insertion' or 'deletion', got {kind!r}")


def _payloads(q: int, b: int) -> list[Word]:
    return [bytes(p) for p in product(range(q), repeat=b)]


def enumerate_insertion_ball(
    x: Word, q: int, t: int, b: int, cap: int = DEFAULT_CAP
) -> frozenset[Word]:
    """The exact set of words reachable from x by t bursts of b insertions.

    Refuses up front (EnumerationCapExceeded) when the known final size
    exceeds the cap; intermediate rounds are never larger than the final one.
    """
    validate_word(x, q)
    if t < 0:
        raise ValueError(f"radius must be nonnegative, got {t}")
    if b < 1:
        raise ValueError(f"burst length must be at least 1, got {b}")
    expected = ins_ball_size(q, b, len(x), t)
    if expected > cap:
        raise EnumerationCapExceeded(expected, cap)
    payloads = _payloads(q, b)
    words = {x}
    for _ in range(t):
        grown: set[Word] = set()
        add = grown.add
        for w in words:
            for i in range(len(w) + 1):
                head = w[:i]
                tail = w[i:]
                for p in payloads:
                    add(head + p + tail)
        words = grown
    return frozenset(words)


def enumerate_deletion_ball(
    x: Word, t: int, b: int, cap: int = DEFAULT_CAP
) -> frozenset[Word]:
    """The exact set of words reachable from x by t bursts of b deletions."""
    if t < 0:
        raise ValueError(f"radius must be nonnegative, got {t}")
    if b < 1:
        raise ValueError(f"burst length must be at least 1, got {b}")
    if len(x) < t * b:
        raise ValueError(
            f"word of length {len(x)} too short for {t} bursts of {b} deletions"
        )
    words = {x}
    for _ in range(t):
        shrunk: set[Word] = set()
        add = shrunk.add
        for w in words:
            for i in range(len(w) - b + 1):
                add(w[:i] + w[i + b :])
        words = shrunk
        if len(words) > cap:
            raise EnumerationCapExceeded(len(words), cap)
    return frozenset(words)


def intersection(a: Iterable[Word], b: Iterable[Word]) -> frozenset[Word]:
    """Exact overlap of two output sets; nonempty sets must share one word length."""
    sa = frozenset(a)
    sb = frozenset(b)
    if sa and sb:
        la = len(next(iter(sa)))
        lb = len(next(iter(sb)))
        if la != lb:
            raise ValueError(f"word length mismatch: {la} vs {lb}")
    return sa & sb


def max_intersection_exhaustive(
    n: int, q: int, b: int, t: int, kind: BallKind, cap: int = DEFAULT_CAP
) -> tuple[int, tuple[Word, Word]]:
    """Exhaustive maximum ball overlap over all pairs of distinct length-n centers.

    Returns the maximum and the lexicographically smallest maximizing pair.
    This is the oracle the closed-form overlap maxima are judged against.
    """
    _check_kind(kind)
    if n < 1:
        raise ValueError(f"need words of length at least 1, got {n}")
    if kind == "deletion" and n < t * b:
        raise ValueError(f"length {n} words cannot absorb {t} bursts of {b} deletions")
    if q**n > cap:
        raise EnumerationCapExceeded(q**n, cap)
    centers: list[Word] = []
    balls: list[frozenset[Word]] = []
    for x in all_words(q, n):
        centers.append(x)
        if kind == "insertion":
            balls.append(enumerate_insertion_ball(x, q, t, b, cap))
        else:
            balls.append(enumerate_deletion_ball(x, t, b, cap))
    best = -1
    witness = (centers[0], centers[1])
    for i in range(len(centers)):
        ball_i = balls[i]
        for j in range(i + 1, len(centers)):
            m = len(ball_i & balls[j])
            if m > best:
                best = m
                witness = (centers[i], centers[j])
    return best, witness


def is_deletion_descendant(v: Word, y: Word, t: int, b: int) -> bool:
    """True iff y is reachable from v by exactly t bursts of b deletions.

    Dynamic program over (symbols of v consumed, bursts used); the number of
    matched symbols of y is forced by those two, so there are O(len(v) * t)
    states with constant work each.
    """
    if t < 0:
        raise ValueError(f"radius must be nonnegative, got {t}")
    if b < 1:
        raise ValueError(f"burst length must be at least 1, got {b}")
    if len(y) != len(v) - t * b:
        raise ValueError(
            f"length mismatch: expected {len(v) - t * b}, got {len(y)}"
        )
    nv, ny = len(v), len(y)
    feasible: list[set[int]] = [set() for _ in range(nv + 1)]
    feasible[0].add(0)
    for i in range(nv):
        for f in feasible[i]:
            j = i - f * b
            if j < ny and v[i] == y[j]:
                feasible[i + 1].add(f)
            if f < t and i + b <= nv:
                feasible[i + b].add(f + 1)
    return t in feasible[nv]


def is_insertion_descendant(x: Word, y: Word, t: int, b: int) -> bool:
    """True iff y is reachable from x by exactly t bursts of b insertions.

    Equivalent to x being reachable from y by t bursts of b deletions, since
    the inserted blocks are exactly the removable ones.
    """
    if len(y) != len(x) + t * b:
        raise ValueError(
            f"length mismatch: expected {len(x) + t * b}, got {len(y)}"
        )
    return is_deletion_descendant(y, x, t, b)


def greedy_is_deletion_descendant(v: Word, y: Word, t: int, b: int) -> bool:
    """Left-to-right scan variant of is_deletion_descendant.

    At the first disagreement, drop the smallest burst multiple that realigns
    the longer word v with the next undecided symbol of y; deleted blocks can
    always be slid up to the first mismatch, so the smallest jump is safe.
    Kept as an independent linear-time cross-check; the dynamic program is
    authoritative.
    """
    if t < 0 or b < 1:
        raise ValueError("radius must be nonnegative and burst length positive")
    if len(y) != len(v) - t * b:
        raise ValueError(
            f"length mismatch: expected {len(v) - t * b}, got {len(y)}"
        )
    i = j = 0
    remaining = t
    nv, ny = len(v), len(y)
    while True:
        while j < ny and v[i] == y[j]:
            i += 1
            j += 1
        if j == ny:
            # lengths force the leftover suffix to be exactly the unspent bursts
            return nv - i == remaining * b
        jump = 0
        for f in range(1, remaining + 1):
            if i + f * b < nv and v[i + f * b] == y[j]:
                jump = f
                break
        if jump == 0:
            return False
        i += jump * b
        remaining -= jump
