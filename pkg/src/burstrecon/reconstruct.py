"""Threshold reconstruction of a transmitted word from distinct channel outputs.

Both decoders peel the transmitted word from the front, one symbol per step,
using exact class-size thresholds:

* the insertion decoder compares, for each pair of symbols, how many outputs
  show one before the other on the burst grid (positions 1, b+1, ..., t*b+1),
  then descends into the largest same-prefix class;
* the deletion decoder (binary only) takes the first-symbol majority; a
  suspiciously small majority class proves a burst ate the word's front, in
  which case b-1 positions are deferred as unknowns and a final containment
  filter picks the unique completion.

Given at least one more output than the worst-case ball overlap, the peeled
word is exact; with fewer outputs the decoders refuse.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .balls import is_deletion_descendant
from .combinatorics import (
    del_intersection_max_binary,
    del_intersection_threshold,
    ins_intersection_max,
)
from .errors import (
    AmbiguousSymbol,
    BelowThreshold,
    CandidateFilterError,
    InconsistentOutputs,
    ThresholdNotMet,
)
from .sequences import Word, validate_word


@dataclass(frozen=True)
class FirstSymbolClasses:
    """Partition of an output set by first symbol appearances on the burst grid.

    ``classes[(symbol, slot)]`` holds the outputs whose first occurrence of
    ``symbol`` among grid positions 1, b+1, ..., t*b+1 is at slot ``slot``
    (1-based); an output missing the symbol on the whole grid is in no class
    for it.  ``precedence[(alpha, beta)]`` counts outputs whose grid shows
    alpha strictly before beta.
    """

    classes: dict[tuple[int, int], frozenset[Word]]
    precedence: dict[tuple[int, int], int]


def classify_first_symbol(outputs: Iterable[Word], q: int, b: int, t: int) -> FirstSymbolClasses:
    """Scan each output at positions 1, b+1, ..., t*b+1 and bucket it."""
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    if b < 1 or t < 0:
        raise ValueError("burst length must be positive and radius nonnegative")
    words = set(outputs)
    for w in words:
        if len(w) < t * b + 1:
            raise ValueError(
                f"output of length {len(w)} too short for the grid (needs >= {t * b + 1})"
            )
    classes: dict[tuple[int, int], set[Word]] = {
        (symbol, slot): set() for symbol in range(q) for slot in range(1, t + 2)
    }
    precedence = {
        (alpha, beta): 0 for alpha in range(q) for beta in range(q) if alpha != beta
    }
    never = t + 2  # sentinel slot for symbols absent from the grid
    for w in words:
        first: dict[int, int] = {}
        for slot in range(t + 1):
            symbol = w[slot * b]
            if symbol not in first:
                first[symbol] = slot + 1
        for symbol, slot in first.items():
            classes[(symbol, slot)].add(w)
        for alpha, slot in first.items():
            for beta in range(q):
                if beta != alpha and slot < first.get(beta, never):
                    precedence[(alpha, beta)] += 1
    return FirstSymbolClasses(
        {key: frozenset(value) for key, value in classes.items()}, precedence
    )


def _largest_stripped_class(
    class_words: Iterable[Word], prefix_len: int
) -> tuple[Word, frozenset[Word]]:
    """Largest same-prefix subclass (ties: smallest prefix), prefix removed."""
    groups: dict[Word, list[Word]] = {}
    for w in class_words:
        groups.setdefault(w[:prefix_len], []).append(w)
    prefix, members = min(groups.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    return prefix, frozenset(w[prefix_len:] for w in members)


@dataclass(frozen=True)
class StepInfo:
    """Diagnostics for one decoding step: which symbol won, at what cost."""

    position: int  # 1-based index of the decided symbol
    symbol: int
    consumed_bursts: int
    class_sizes: tuple[int, ...]


@dataclass(frozen=True)
class ReconstructionResult:
    word: Word
    iterations: int
    steps: tuple[StepInfo, ...]
    phase1_seconds: float
    phase2_seconds: float = 0.0


@dataclass(frozen=True)
class PartialWord:
    """A length-n binary word with some cells still undecided (None)."""

    cells: tuple[int | None, ...]

    def __post_init__(self):
        for c in self.cells:
            if c is not None and c not in (0, 1):
                raise ValueError(f"cells must be 0, 1, or None, got {c!r}")

    @property
    def unknown_positions(self) -> tuple[int, ...]:
        """0-based indices of the undecided cells."""
        return tuple(i for i, c in enumerate(self.cells) if c is None)


def candidate_expansion(partial: PartialWord) -> list[Word]:
    """All binary completions, unknown cells counted up in lexicographic order."""
    slots = partial.unknown_positions
    out = []
    for fill in product((0, 1), repeat=len(slots)):
        cells = list(partial.cells)
        for idx, value in zip(slots, fill):
            cells[idx] = value
        out.append(bytes(cells))
    return out


def reconstruct_from_insertions(
    outputs: Iterable[Word], n: int, q: int, b: int, t: int
) -> ReconstructionResult:
    """Recover the length-n word whose insertion ball produced the outputs.

    Needs strictly more outputs than the worst-case overlap between two
    distinct insertion balls; with fewer it raises BelowThreshold.  Each step
    decides one symbol by strict pairwise precedence, locates the deepest
    burst count whose first-symbol class clears its pigeonhole bound, and
    restarts on the stripped largest same-prefix subclass.
    """
    started = time.perf_counter()
    if n < 1:
        raise ValueError(f"word length must be at least 1, got {n}")
    if q < 2 or b < 1 or t < 1:
        raise ValueError("need q >= 2, b >= 1, t >= 1")
    words = frozenset(outputs)
    for w in words:
        validate_word(w, q)
        if len(w) != n + t * b:
            raise ValueError(
                f"outputs must have length n + t*b = {n + t * b}, got {len(w)}"
            )
    threshold = ins_intersection_max(q, b, n, t)
    if len(words) < threshold + 1:
        raise BelowThreshold(len(words), threshold + 1)

    current: frozenset[Word] = words
    n_rem = n
    t_rem = t
    recovered: list[int] = []
    steps: list[StepInfo] = []
    while len(recovered) < n:
        if len(current) < ins_intersection_max(q, b, n_rem, t_rem) + 1:
            raise InconsistentOutputs(
                "class sizes fell below the running threshold; the outputs do "
                "not all come from one insertion ball"
            )
        grid = classify_first_symbol(current, q, b, t_rem)
        winner = None
        for beta in range(q):
            if all(
                grid.precedence[(alpha, beta)] < grid.precedence[(beta, alpha)]
                for alpha in range(q)
                if alpha != beta
            ):
                winner = beta
                break
        if winner is None:
            raise AmbiguousSymbol(
                "no symbol wins every pairwise precedence comparison"
            )
        recovered.append(winner)
        chosen_j = None
        for j in range(t_rem, -1, -1):
            need = (q - 1) ** j * q ** (j * (b - 1)) * ins_intersection_max(
                q, b, n_rem - 1, t_rem - j
            ) + 1
            if len(grid.classes[(winner, j + 1)]) >= need:
                chosen_j = j
                break
        if chosen_j is None:
            raise ThresholdNotMet(
                "no first-symbol class clears its pigeonhole bound"
            )
        steps.append(
            StepInfo(
                len(recovered),
                winner,
                chosen_j,
                tuple(len(grid.classes[(winner, s)]) for s in range(1, t_rem + 2)),
            )
        )
        _, stripped = _largest_stripped_class(
            grid.classes[(winner, chosen_j + 1)], chosen_j * b + 1
        )
        if chosen_j == t_rem:
            # burst budget exhausted before this symbol: the survivors carry
            # the untouched tail verbatim
            if len(stripped) != 1:
                raise InconsistentOutputs(
                    "several distinct tails remain after the last burst"
                )
            recovered.extend(next(iter(stripped)))
            break
        current = stripped
        t_rem -= chosen_j
        n_rem -= 1
    return ReconstructionResult(
        bytes(recovered), len(steps), tuple(steps), time.perf_counter() - started
    )


def reconstruct_from_deletions(
    outputs: Iterable[Word], n: int, b: int, t: int
) -> ReconstructionResult:
    """Recover the length-n binary word whose deletion ball produced the outputs.

    Phase 1 walks the word front to back: the first-symbol majority is always
    the true symbol; when the majority class is no bigger than the next
    overlap bound, the front was eaten by a burst, so the symbol one burst
    ahead is the complement, the b-1 in-between cells become unknowns, and
    decoding resumes past them on the complement class.  Phase 2 expands the
    at most t*(b-1) unknowns and keeps the unique candidate whose ball
    contains every output.
    """
    started = time.perf_counter()
    if b < 2 or t < 1:
        raise ValueError("need b >= 2 and t >= 1")
    if n < b * (t + 1) - 1:
        raise ValueError(
            f"word length must be at least b*(t+1)-1 = {b * (t + 1) - 1}, got {n}"
        )
    words = frozenset(outputs)
    for w in words:
        validate_word(w, 2)
        if len(w) != n - t * b:
            raise ValueError(
                f"outputs must have length n - t*b = {n - t * b}, got {len(w)}"
            )
    threshold = del_intersection_max_binary(b, n, t)
    if len(words) < threshold + 1:
        raise BelowThreshold(len(words), threshold + 1)

    cells: list[int | None] = [None] * n
    current: set[Word] = set(words)
    n_rem = n
    t_rem = t
    i = 0  # 0-based index of the next cell to decide
    steps: list[StepInfo] = []
    while t_rem > 0:
        if n_rem <= t_rem * b:
            raise InconsistentOutputs(
                "outputs exhausted before all bursts were accounted for"
            )
        ones = sum(w[0] for w in current)
        zeros = len(current) - ones
        if zeros == ones:
            raise AmbiguousSymbol("first-symbol counts tie")
        beta = 0 if zeros > ones else 1
        majority_size = max(zeros, ones)
        cells[i] = beta
        if majority_size > del_intersection_threshold(b, n_rem - 1, t_rem):
            steps.append(StepInfo(i + 1, beta, 0, (zeros, ones)))
            current = {w[1:] for w in current if w[0] == beta}
            i += 1
            n_rem -= 1
        else:
            # a burst consumed the front: the complement sits one burst ahead
            # and the b-1 cells between stay open for phase 2
            steps.append(StepInfo(i + 1, beta, 1, (zeros, ones)))
            cells[i + b] = 1 - beta
            current = {w[1:] for w in current if w[0] == 1 - beta}
            i += b + 1
            n_rem -= b + 1
            t_rem -= 1
            if t_rem == 0:
                if len(current) != 1:
                    raise InconsistentOutputs(
                        "tail not unique once the burst budget ran out"
                    )
                tail = next(iter(current))
                cells[i:] = list(tail)
                break
    unknown_count = sum(1 for c in cells if c is None)
    assert unknown_count <= t * (b - 1), "unknown budget exceeded"
    phase1_seconds = time.perf_counter() - started

    started2 = time.perf_counter()
    partial = PartialWord(tuple(cells))
    survivors = [
        v
        for v in candidate_expansion(partial)
        if all(is_deletion_descendant(v, u, t, b) for u in words)
    ]
    if len(survivors) != 1:
        raise CandidateFilterError(len(survivors))
    return ReconstructionResult(
        survivors[0],
        len(steps),
        tuple(steps),
        phase1_seconds,
        time.perf_counter() - started2,
    )
