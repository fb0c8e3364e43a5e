"""Exact counts for burst-error channels: ball sizes, overlap maxima, bounds.

All arithmetic is arbitrary-precision integer arithmetic; the sphere-packing
bound is an exact ``Fraction``.  No floating point enters this module.

Conventions used throughout (they make every formula total):

* ``binom(n, k) == 0`` whenever ``n < k``, including negative ``n``;
* a radius-0 ball has size 1 and two radius-0 balls never overlap;
* deletion-side counts are 0 when the radius is negative or the word is
  shorter than ``b*t``, and 1 when the word length is exactly ``b*t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

MAX_ALPHABET = 255


@dataclass(frozen=True)
class ChannelParams:
    """Channel description: alphabet size q, burst length b, radius t, word length n."""

    q: int
    b: int
    t: int
    n: int

    def __post_init__(self):
        if not 2 <= self.q <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in [2, {MAX_ALPHABET}], got {self.q}")
        if self.b < 1:
            raise ValueError(f"burst length must be at least 1, got {self.b}")
        if self.t < 0:
            raise ValueError(f"radius must be nonnegative, got {self.t}")
        if self.n < 0:
            raise ValueError(f"word length must be nonnegative, got {self.n}")


def binom(n: int, k: int) -> int:
    """Binomial coefficient with ``binom(n, k) == 0`` for every ``n < k``.

    ``k`` must be nonnegative; ``n`` may be any integer.
    """
    if k < 0:
        raise ValueError(f"lower index must be nonnegative, got {k}")
    if n < k:
        return 0
    return math.comb(n, k)


def _check_alphabet_burst(q: int, b: int) -> None:
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    if b < 1:
        raise ValueError(f"burst length must be at least 1, got {b}")


def ins_ball_size(q: int, b: int, n: int, t: int) -> int:
    """Size of the radius-t burst-insertion ball around any length-n word.

    Equals ``q**(t*(b-1)) * sum(binom(n+t, i) * (q-1)**i for i in 0..t)``;
    the count does not depend on the chosen center.
    """
    _check_alphabet_burst(q, b)
    if n < 0 or t < 0:
        raise ValueError("word length and radius must be nonnegative")
    return q ** (t * (b - 1)) * sum(
        binom(n + t, i) * (q - 1) ** i for i in range(t + 1)
    )


def ins_intersection_max(q: int, b: int, n: int, t: int) -> int:
    """Largest burst-insertion ball overlap between two distinct length-n words.

    Equals ``q**(t*(b-1)) * sum(binom(n+t, i) * (q-1)**i * (1 - (-1)**(t-i)))``
    over ``i in 0..t-1``; returns 0 for ``t == 0``.
    """
    _check_alphabet_burst(q, b)
    if n < 0 or t < 0:
        raise ValueError("word length and radius must be nonnegative")
    return q ** (t * (b - 1)) * sum(
        binom(n + t, i) * (q - 1) ** i * (1 - (-1) ** (t - i)) for i in range(t)
    )


def ins_recurrence_check(q: int, b: int, n: int, t: int) -> tuple[bool, bool]:
    """Re-derive the insertion counts through their recurrences (n, t >= 1).

    Returns ``(sizes_ok, overlaps_ok)``: whether the ball-size recurrences and
    the overlap recurrences reproduce the closed forms at these parameters.
    Used as a self-test surface; both components hold identically.
    """
    if n < 1 or t < 1:
        raise ValueError("recurrences need n >= 1 and t >= 1")
    size = ins_ball_size
    over = ins_intersection_max
    step = (q - 1) * q ** (b - 1)
    sizes_ok = (
        size(q, b, n, t) == size(q, b, n - 1, t) + step * size(q, b, n, t - 1)
        and size(q, b, n, t)
        == sum((q - 1) ** i * q ** (i * (b - 1)) * size(q, b, n - 1, t - i) for i in range(t + 1))
    )
    overlaps_ok = (
        over(q, b, n - 1, t) + q ** (b - 1) * over(q, b, n, t - 1)
        == 2 * q ** (b - 1) * size(q, b, n, t - 1)
        and over(q, b, n, t) == over(q, b, n - 1, t) + step * over(q, b, n, t - 1)
        and over(q, b, n, t)
        == sum((q - 1) ** i * q ** (i * (b - 1)) * over(q, b, n - 1, t - i) for i in range(t))
        and over(q, b, n, t)
        == 2 * q ** (b - 1) * size(q, b, n, t - 1) + (q - 2) * q ** (b - 1) * over(q, b, n, t - 1)
        and over(q, b, n, t)
        == 2 * sum((q - 2) ** (i - 1) * q ** (i * (b - 1)) * size(q, b, n, t - i) for i in range(1, t + 1))
    )
    return sizes_ok, overlaps_ok


@lru_cache(maxsize=None)
def _unit_burst_del_max(q: int, n: int, t: int) -> int:
    """Largest radius-t deletion ball for unit bursts (b = 1), q-ary alphabet.

    Memoized on the (q, n, t) triple down to the one-symbol base case.
    """
    if t < 0 or n < t:
        return 0
    if q == 1 or t == 0 or n == t:
        return 1
    return sum(binom(n - t, i) * _unit_burst_del_max(q - 1, t, t - i) for i in range(t + 1))


@lru_cache(maxsize=None)
def del_ball_max(q: int, b: int, n: int, t: int) -> int:
    """Largest radius-t burst-deletion ball size over all length-n centers.

    Returns 0 when ``t < 0`` or ``n < b*t`` and 1 when ``n == b*t``; otherwise
    ``sum(binom(n - b*t, i) * unit(q-1, t, t-i) for i in 0..t)`` where ``unit``
    is the b = 1 count.  For q = 2 this collapses to a binomial partial sum.
    """
    _check_alphabet_burst(q, b)
    if t < 0 or n < b * t:
        return 0
    return sum(
        binom(n - b * t, i) * _unit_burst_del_max(q - 1, t, t - i) for i in range(t + 1)
    )


def del_intersection_max_binary(b: int, n: int, t: int) -> int:
    """Largest burst-deletion ball overlap between two distinct binary words.

    Proven exactly on ``b >= 2``, ``t >= 1``, ``n >= b*(t+1) - 1``; calling it
    outside that range is a usage error.  The value equals both
    ``D(n,t) - D(n-b,t) + D(n-3b,t-2)`` and ``D(n,t) - binom(n-(t+1)*b+1, t)``
    where ``D`` is the binary ``del_ball_max``.
    """
    if b < 2:
        raise ValueError(f"burst length must be at least 2, got {b}")
    if t < 1:
        raise ValueError(f"radius must be at least 1, got {t}")
    if n < b * (t + 1) - 1:
        raise ValueError(
            f"overlap maximum unproven for n < b*(t+1)-1 = {b * (t + 1) - 1}, got n={n}"
        )
    return (
        del_ball_max(2, b, n, t)
        - del_ball_max(2, b, n - b, t)
        + del_ball_max(2, b, n - 3 * b, t - 2)
    )


def del_intersection_threshold(b: int, n: int, t: int) -> int:
    """Domain-extended binary overlap bound used for reconstruction bookkeeping.

    Total in (n, t): 0 for ``t <= 0`` or ``n < b*t``, otherwise
    ``del_ball_max(2,b,n,t) - binom(n-(t+1)*b+1, t)``.  On
    ``n >= max(b*t + 1, 2*b)`` it satisfies
    ``f(n,t) == f(n-1,t) + f(n-b-1,t-1)``, which is what the deletion
    decoder's per-step accounting relies on; decoder runs with valid inputs
    never leave that range.
    """
    if b < 2:
        raise ValueError(f"burst length must be at least 2, got {b}")
    if t <= 0 or n < b * t:
        return 0
    return del_ball_max(2, b, n, t) - binom(n - (t + 1) * b + 1, t)


def del_intersection_lower_bound(q: int, b: int, n: int, t: int) -> int:
    """Deletion-ball overlap achieved by a b-cyclic center and its b-th-entry flip.

    Equals ``D(n,t) - D(n-b,t) + D(n-(q+1)*b, t-q)``.  For q = 2 this is the
    exact maximum; for q > 2 it is reported strictly as a lower bound on the
    true maximum, which is not known in closed form.
    """
    _check_alphabet_burst(q, b)
    if b < 2:
        raise ValueError(f"burst length must be at least 2, got {b}")
    if t < 1:
        raise ValueError(f"radius must be at least 1, got {t}")
    if n < (t + 1) * b - 1:
        raise ValueError(
            f"construction needs n >= (t+1)*b-1 = {(t + 1) * b - 1}, got n={n}"
        )
    return (
        del_ball_max(q, b, n, t)
        - del_ball_max(q, b, n - b, t)
        + del_ball_max(q, b, n - (q + 1) * b, t - q)
    )


def sphere_packing_bound(q: int, b: int, n: int, t: int) -> tuple[Fraction, int]:
    """Ambient-space-to-ball-size ratio bounding burst-correcting codes.

    Returns the exact rational ``q**(n+t*b) / ins_ball_size(q,b,n,t)`` and its
    integer floor.  The ratio is identical for every burst length b, so it
    also matches the unit-burst bound ``q**(n+t) / ins_ball_size(q,1,n,t)``.
    """
    _check_alphabet_burst(q, b)
    if n < 0 or t < 0:
        raise ValueError("word length and radius must be nonnegative")
    value = Fraction(q ** (n + t * b), ins_ball_size(q, b, n, t))
    return value, math.floor(value)


def count_centers_by_radius1_ball_size(q: int, b: int, n: int, i: int) -> int:
    """Number of length-n words whose radius-1 burst-deletion ball has size i.

    Equals ``q**b * (q-1)**(i-1) * binom(n-b, i-1)``; valid for ``n >= b+1``
    and ``i in [1, n-b+1]``, and the counts over all i sum to ``q**n``.
    """
    _check_alphabet_burst(q, b)
    if n < b + 1:
        raise ValueError(f"word length must be at least b+1 = {b + 1}, got {n}")
    if not 1 <= i <= n - b + 1:
        raise ValueError(f"ball size must be in [1, {n - b + 1}], got {i}")
    return q ** b * (q - 1) ** (i - 1) * binom(n - b, i - 1)
