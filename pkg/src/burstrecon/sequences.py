"""Words over {0..q-1}, their text forms, and the extremal deletion centers.

A word is a ``bytes`` object whose entries are the symbol values; the
alphabet size q travels alongside wherever it matters.  Bytes keep words
hashable, compact, and lexicographically comparable, and cap symbols at 255.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .combinatorics import MAX_ALPHABET

Word = bytes


def word(symbols: Iterable[int]) -> Word:
    """Build a word from an iterable of symbol values."""
    return bytes(symbols)


def validate_word(x: Word, q: int) -> None:
    if not 2 <= q <= MAX_ALPHABET:
        raise ValueError(f"alphabet size must be in [2, {MAX_ALPHABET}], got {q}")
    for s in x:
        if s >= q:
            raise ValueError(f"symbol {s} out of range for alphabet of size {q}")


def parse_word(text: str, q: int) -> Word:
    """Parse the text form of a word: digit string for q <= 10, comma-separated integers otherwise."""
    text = text.strip()
    if not text:
        return b""
    if q <= 10:
        if not text.isdigit():
            raise ValueError(f"expected a digit string for alphabet of size {q}: {text!r}")
        x = bytes(int(c) for c in text)
    else:
        x = bytes(int(part) for part in text.split(","))
    validate_word(x, q)
    return x


def format_word(x: Word, q: int) -> str:
    """Render a word as text; inverse of parse_word for the same q."""
    if q <= 10:
        return "".join(str(s) for s in x)
    return ",".join(str(s) for s in x)


def all_words(q: int, n: int) -> Iterator[Word]:
    """Yield every length-n word over {0..q-1} in lexicographic order."""
    for symbols in product(range(q), repeat=n):
        yield bytes(symbols)


def b_cyclic(n: int, q: int, b: int, start: int = 0) -> Word:
    """The word whose symbol at 0-based index i is (start + i // b) mod q.

    Blocks of b equal symbols stepping cyclically through the alphabet; among
    all length-n words it has the most length-b runs, hence the largest
    radius-1 burst-deletion ball.
    """
    if not 0 <= start < q:
        raise ValueError(f"start symbol {start} out of range for alphabet of size {q}")
    if b < 1:
        raise ValueError(f"burst length must be at least 1, got {b}")
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    return bytes((start + i // b) % q for i in range(n))


def y_sequence(n: int, q: int, b: int, start: int = 0, prefix_len: int = 0) -> Word:
    """prefix_len copies of start, then the b-cyclic word opening at start+1.

    For every prefix_len in [0, b-1] the radius-t burst-deletion ball of this
    word attains the maximum size over all length-n centers.
    """
    if not 0 <= prefix_len <= b - 1:
        raise ValueError(f"prefix length must be in [0, {b - 1}], got {prefix_len}")
    if not 0 <= start < q:
        raise ValueError(f"start symbol {start} out of range for alphabet of size {q}")
    if n < prefix_len:
        raise ValueError(f"length {n} shorter than the prefix {prefix_len}")
    return bytes([start]) * prefix_len + b_cyclic(n - prefix_len, q, b, (start + 1) % q)


def radius1_del_ball_size(x: Word, b: int) -> int:
    """Exact size of the radius-1 burst-deletion ball of x.

    Counts the length-b runs of x: one plus the number of positions whose
    symbol differs from the symbol b places earlier.  Needs len(x) >= b+1.
    """
    if b < 1:
        raise ValueError(f"burst length must be at least 1, got {b}")
    if len(x) < b + 1:
        raise ValueError(f"word of length {len(x)} too short for burst length {b}")
    return 1 + sum(1 for j in range(b, len(x)) if x[j] != x[j - b])


@dataclass(frozen=True)
class ArrayRepresentation:
    """Column-major b-row layout of a word, short rows padded by repetition.

    ``rows[i][c]`` holds the symbol at 0-based index ``c*b + i`` of the word;
    rows that end early repeat their final symbol out to the full width, so
    padding never adds a run.  ``run_counts[i]`` is the number of runs in row
    i (0 for a row with no symbols at all).
    """

    rows: tuple[Word, ...]
    run_counts: tuple[int, ...]

    @property
    def width(self) -> int:
        return len(self.rows[0])


def array_representation(x: Word, b: int) -> ArrayRepresentation:
    """Lay x out column by column into b rows and count runs per row.

    The total of (runs - 1) over the rows, plus one, reproduces
    radius1_del_ball_size whenever every row is populated (len(x) >= b).
    """
    if b < 1:
        raise ValueError(f"burst length must be at least 1, got {b}")
    if len(x) < 1:
        raise ValueError("word must be nonempty")
    width = math.ceil(len(x) / b)
    rows = []
    for r in range(b):
        row = x[r::b]
        if row and len(row) < width:
            row = row + row[-1:] * (width - len(row))
        rows.append(row)
    run_counts = tuple(
        1 + sum(1 for k in range(1, len(row)) if row[k] != row[k - 1]) if row else 0
        for row in rows
    )
    return ArrayRepresentation(tuple(rows), run_counts)
