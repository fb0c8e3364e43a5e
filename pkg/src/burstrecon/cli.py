"""Command line front end: exact counts, oracle sweeps, simulation, decoding.

Exit codes: 0 success, 2 precondition violation, 3 oracle mismatch,
4 enumeration cap exceeded.  The ``BURSTRECON_CAP`` environment variable
overrides the default enumeration cap; an explicit ``--cap`` flag wins over
both.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import combinatorics as comb
from .balls import (
    DEFAULT_CAP,
    enumerate_deletion_ball,
    enumerate_insertion_ball,
    intersection,
    max_intersection_exhaustive,
)
from .channel import format_event, sample_distinct_outputs, trial_seed
from .errors import (
    BallTooSmall,
    EnumerationCapExceeded,
    ReconstructionError,
)
from .reconstruct import reconstruct_from_deletions, reconstruct_from_insertions
from .sequences import all_words, b_cyclic, format_word, parse_word, y_sequence

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_MISMATCH = 3
EXIT_CAP = 4

COUNT_KINDS = ("ins-ball", "ins-int", "del-ball", "del-int", "del-int-lb", "sphere")

VERIFY_KINDS = (
    "ins-ball",
    "ins-ball-rec",
    "ins-int",
    "ins-int-rec",
    "del-ball",
    "del-ball-rec",
    "del-extremal",
    "del-int",
    "del-int-rec",
    "del-int-lb",
    "sphere",
    "roundtrip-ins",
    "roundtrip-del",
)

CSV_HEADER = "q,b,t,n,kind,formula,oracle,match,ms"


def default_cap() -> int:
    raw = os.environ.get("BURSTRECON_CAP")
    return int(raw) if raw else DEFAULT_CAP


@dataclass(frozen=True)
class SweepConfig:
    q_values: tuple[int, ...]
    b_values: tuple[int, ...]
    t_values: tuple[int, ...]
    n_values: tuple[int, ...]
    kinds: tuple[str, ...]
    cap: int
    seed: int
    trials: int
    fmt: str
    jobs: int
    corrupt: str | None = None

    def __post_init__(self):
        for name, values in (
            ("q", self.q_values),
            ("b", self.b_values),
            ("t", self.t_values),
            ("n", self.n_values),
        ):
            if not values:
                raise ValueError(f"empty range for {name}")


@dataclass(frozen=True)
class ResultRow:
    q: int
    b: int
    t: int
    n: int
    kind: str
    formula: str  # empty when skipped before evaluation
    oracle: str  # empty when skipped
    match: str  # "true" | "false" | "skip"
    ms: float


class _Skip(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def _flip_pair(q: int, b: int, n: int):
    x = bytes(b) + b_cyclic(n - b, q, b, 1 % q)
    y = bytearray(x)
    y[b - 1] = 1
    return x, bytes(y)


def _roundtrip_insertion(q, b, t, n, cap, rng):
    need = comb.ins_intersection_max(q, b, n, t) + 1
    if comb.ins_ball_size(q, b, n, t) < need:
        raise _Skip("no center admits threshold+1 distinct outputs")
    if need > cap:
        raise _Skip("threshold exceeds cap")
    center = bytes(rng.randrange(q) for _ in range(n))
    sample = sample_distinct_outputs(
        center, q, t, b, "insertion", need, rng.getrandbits(48), cap
    )
    result = reconstruct_from_insertions(sample.outputs, n, q, b, t)
    return result.word == center


def _roundtrip_deletion(b, t, n, cap, eligible, rng):
    need = comb.del_intersection_max_binary(b, n, t) + 1
    center = eligible[rng.randrange(len(eligible))]
    sample = sample_distinct_outputs(
        center, 2, t, b, "deletion", need, rng.getrandbits(48), cap
    )
    result = reconstruct_from_deletions(sample.outputs, n, b, t)
    return result.word == center


def _row_values(kind, q, b, t, n, cap, seed, trials):
    """Return (formula, oracle) for one grid point, or raise _Skip."""
    if kind == "ins-ball":
        if t < 0:
            raise _Skip("needs t >= 0")
        size = comb.ins_ball_size(q, b, n, t)
        if q**n * max(size, 1) > cap:
            raise _Skip("work exceeds cap")
        observed = {len(enumerate_insertion_ball(x, q, t, b, cap)) for x in all_words(q, n)}
        oracle = observed.pop() if len(observed) == 1 else f"irregular{sorted(observed)}"
        return size, oracle
    if kind == "ins-ball-rec":
        if n < 1 or t < 1:
            raise _Skip("needs n >= 1 and t >= 1")
        return (
            comb.ins_ball_size(q, b, n, t),
            comb.ins_ball_size(q, b, n - 1, t)
            + (q - 1) * q ** (b - 1) * comb.ins_ball_size(q, b, n, t - 1),
        )
    if kind == "ins-int":
        if n < 1 or t < 1:
            raise _Skip("needs n >= 1 and t >= 1")
        if q**n * (q**n - 1) // 2 > cap or q**n * comb.ins_ball_size(q, b, n, t) > cap:
            raise _Skip("work exceeds cap")
        oracle, _ = max_intersection_exhaustive(n, q, b, t, "insertion", cap)
        return comb.ins_intersection_max(q, b, n, t), oracle
    if kind == "ins-int-rec":
        if n < 1 or t < 1:
            raise _Skip("needs n >= 1 and t >= 1")
        return (
            comb.ins_intersection_max(q, b, n, t),
            comb.ins_intersection_max(q, b, n - 1, t)
            + (q - 1) * q ** (b - 1) * comb.ins_intersection_max(q, b, n, t - 1),
        )
    if kind == "del-ball":
        if n < b * t:
            raise _Skip("needs n >= b*t")
        if q**n > cap:
            raise _Skip("work exceeds cap")
        oracle = max(len(enumerate_deletion_ball(x, t, b, cap)) for x in all_words(q, n))
        return comb.del_ball_max(q, b, n, t), oracle
    if kind == "del-ball-rec":
        if n < b * t + 1:
            raise _Skip("needs n >= b*t + 1")
        return (
            comb.del_ball_max(q, b, n, t),
            sum(comb.del_ball_max(q, b, n - i * b - 1, t - i) for i in range(q)),
        )
    if kind == "del-extremal":
        if n < b * t + 1:
            raise _Skip("needs n >= b*t + 1")
        center = y_sequence(n, q, b, 0, 0)
        return comb.del_ball_max(q, b, n, t), len(enumerate_deletion_ball(center, t, b, cap))
    if kind == "del-int":
        if q != 2:
            raise _Skip("exact value known only for q = 2")
        if b < 2 or t < 1 or n < b * (t + 1) - 1:
            raise _Skip("needs b >= 2, t >= 1, n >= b*(t+1)-1")
        if 2**n * (2**n - 1) // 2 > cap:
            raise _Skip("work exceeds cap")
        oracle, _ = max_intersection_exhaustive(n, 2, b, t, "deletion", cap)
        return comb.del_intersection_max_binary(b, n, t), oracle
    if kind == "del-int-rec":
        if q != 2 or b < 2 or t < 1 or n < max(b * t + 1, 2 * b):
            raise _Skip("needs q = 2, b >= 2, t >= 1, n >= max(b*t + 1, 2*b)")
        return (
            comb.del_intersection_threshold(b, n, t),
            comb.del_intersection_threshold(b, n - 1, t)
            + comb.del_intersection_threshold(b, n - b - 1, t - 1),
        )
    if kind == "del-int-lb":
        if b < 2 or t < 1 or n < (t + 1) * b - 1:
            raise _Skip("needs b >= 2, t >= 1, n >= (t+1)*b-1")
        x, y = _flip_pair(q, b, n)
        pair_overlap = len(
            intersection(
                enumerate_deletion_ball(x, t, b, cap),
                enumerate_deletion_ball(y, t, b, cap),
            )
        )
        return comb.del_intersection_lower_bound(q, b, n, t), pair_overlap
    if kind == "sphere":
        if t < 1:
            raise _Skip("needs t >= 1")
        value, _ = comb.sphere_packing_bound(q, b, n, t)
        reference, _ = comb.sphere_packing_bound(q, 1, n, t)
        return value, reference
    if kind == "roundtrip-ins":
        if n < 1 or t < 1:
            raise _Skip("needs n >= 1 and t >= 1")
        rng = random.Random(trial_seed(seed, _row_seed_index(kind, q, b, t, n)))
        successes = sum(
            1 for _ in range(trials) if _roundtrip_insertion(q, b, t, n, cap, rng)
        )
        return trials, successes
    if kind == "roundtrip-del":
        if q != 2:
            raise _Skip("decoder defined for q = 2 only")
        if b < 2 or t < 1 or n < b * (t + 1) - 1:
            raise _Skip("needs b >= 2, t >= 1, n >= b*(t+1)-1")
        if 2**n > cap:
            raise _Skip("work exceeds cap")
        need = comb.del_intersection_max_binary(b, n, t) + 1
        eligible = [
            x
            for x in all_words(2, n)
            if len(enumerate_deletion_ball(x, t, b, cap)) >= need
        ]
        if not eligible:
            raise _Skip("no center admits threshold+1 distinct outputs")
        rng = random.Random(trial_seed(seed, _row_seed_index(kind, q, b, t, n)))
        successes = sum(
            1
            for _ in range(trials)
            if _roundtrip_deletion(b, t, n, cap, eligible, rng)
        )
        return trials, successes
    raise ValueError(f"unknown verify kind {kind!r}")


def _row_seed_index(kind, q, b, t, n) -> int:
    return (((q * 64 + b) * 64 + t) * 4096 + n) * 64 + VERIFY_KINDS.index(kind)


def _compute_row(item) -> ResultRow:
    q, b, t, n, kind, cap, seed, trials, corrupt = item
    started = time.perf_counter()
    try:
        formula, oracle = _row_values(kind, q, b, t, n, cap, seed, trials)
    except (_Skip, EnumerationCapExceeded, ValueError) as exc:
        reason = exc.reason if isinstance(exc, _Skip) else str(exc)
        ms = round((time.perf_counter() - started) * 1000.0, 3)
        return ResultRow(q, b, t, n, kind, "", f"skipped: {reason}", "skip", ms)
    if corrupt == kind and isinstance(formula, (int, Fraction)):
        formula = formula + 1
    match = "true" if formula == oracle else "false"
    ms = round((time.perf_counter() - started) * 1000.0, 3)
    return ResultRow(q, b, t, n, kind, str(formula), str(oracle), match, ms)


def run_sweep(config: SweepConfig) -> list[ResultRow]:
    """Evaluate every grid point of the sweep, ordered by parameter tuple."""
    specs = [
        (q, b, t, n, kind, config.cap, config.seed, config.trials, config.corrupt)
        for q in config.q_values
        for b in config.b_values
        for t in config.t_values
        for n in config.n_values
        for kind in config.kinds
    ]
    specs.sort(key=lambda s: (s[0], s[1], s[2], s[3], VERIFY_KINDS.index(s[4])))
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            return list(pool.map(_compute_row, specs))
    return [_compute_row(item) for item in specs]


def rows_to_csv(rows: list[ResultRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for r in rows:
        writer.writerow([r.q, r.b, r.t, r.n, r.kind, r.formula, r.oracle, r.match, r.ms])
    return buffer.getvalue()


def rows_from_csv(text: str) -> list[ResultRow]:
    """Parse rows_to_csv output back into ResultRow values."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != CSV_HEADER.split(","):
        raise ValueError(f"unexpected CSV header: {header}")
    return [
        ResultRow(
            int(rec[0]), int(rec[1]), int(rec[2]), int(rec[3]),
            rec[4], rec[5], rec[6], rec[7], float(rec[8]),
        )
        for rec in reader
    ]


def rows_to_json(rows: list[ResultRow]) -> str:
    return json.dumps(
        [
            {
                "q": r.q,
                "b": r.b,
                "t": r.t,
                "n": r.n,
                "kind": r.kind,
                "formula": r.formula,
                "oracle": r.oracle,
                "match": r.match,
                "ms": r.ms,
            }
            for r in rows
        ],
        indent=2,
    )


def _parse_range(text: str) -> tuple[int, ...]:
    """Accept '3', '1:4' (inclusive), or '1,3,5'."""
    text = text.strip()
    if ":" in text:
        lo, hi = text.split(":", 1)
        return tuple(range(int(lo), int(hi) + 1))
    if "," in text:
        return tuple(int(part) for part in text.split(","))
    return (int(text),)


def cmd_count(args) -> int:
    q, b, t, n = args.q, args.b, args.t, args.n
    try:
        if args.kind == "sphere":
            value, floor = comb.sphere_packing_bound(q, b, n, t)
        elif args.kind == "ins-ball":
            value = comb.ins_ball_size(q, b, n, t)
        elif args.kind == "ins-int":
            value = comb.ins_intersection_max(q, b, n, t)
        elif args.kind == "del-ball":
            value = comb.del_ball_max(q, b, n, t)
        elif args.kind == "del-int":
            if q != 2:
                raise ValueError(
                    "exact deletion overlap is known only for q = 2; "
                    "use 'del-int-lb' for the general-q lower bound"
                )
            value = comb.del_intersection_max_binary(b, n, t)
        else:  # del-int-lb
            value = comb.del_intersection_lower_bound(q, b, n, t)
    except ValueError as exc:
        print(f"error[precondition]: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.as_json:
        payload = {"params": {"q": q, "b": b, "t": t, "n": n}, "kind": args.kind}
        if args.kind == "sphere":
            payload["value"] = str(value)
            payload["floor"] = floor
        else:
            payload["value"] = value
        print(json.dumps(payload))
    elif args.kind == "sphere":
        print(f"{value} floor {floor}")
    else:
        print(value)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        config = SweepConfig(
            q_values=_parse_range(args.q),
            b_values=_parse_range(args.b),
            t_values=_parse_range(args.t),
            n_values=_parse_range(args.n),
            kinds=tuple(VERIFY_KINDS)
            if args.kinds == "all"
            else tuple(args.kinds.split(",")),
            cap=args.cap if args.cap is not None else default_cap(),
            seed=args.seed,
            trials=args.trials,
            fmt=args.format,
            jobs=args.jobs,
            corrupt=args.corrupt,
        )
        for kind in config.kinds:
            if kind not in VERIFY_KINDS:
                raise ValueError(f"unknown verify kind {kind!r}")
    except ValueError as exc:
        print(f"error[precondition]: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    rows = run_sweep(config)
    if config.fmt == "csv":
        sys.stdout.write(rows_to_csv(rows))
    else:
        print(rows_to_json(rows))
    if any(r.match == "false" for r in rows):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_simulate(args) -> int:
    q = args.q
    kind = "insertion" if args.ins else "deletion"
    cap = args.cap if args.cap is not None else default_cap()
    try:
        x = parse_word(args.x, q)
        sample = sample_distinct_outputs(x, q, args.t, args.b, kind, args.N, args.seed, cap)
    except BallTooSmall as exc:
        print(f"error[ball-too-small]: ball size {exc.ball_size}", file=sys.stderr)
        return EXIT_PRECONDITION
    except EnumerationCapExceeded as exc:
        print(f"error[cap-exceeded]: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error[precondition]: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.as_json:
        print(
            json.dumps(
                {
                    "input": format_word(x, q),
                    "seed": sample.seed,
                    "rng": sample.rng_algorithm,
                    "outputs": [
                        {
                            "word": format_word(w, q),
                            "events": [format_event(e, q) for e in tr.events],
                        }
                        for w, tr in zip(sample.outputs, sample.traces)
                    ],
                }
            )
        )
    else:
        print(f"# rng {sample.rng_algorithm} seed {sample.seed}")
        for w, trace in zip(sample.outputs, sample.traces):
            print(format_word(w, q))
            for event in trace.events:
                print(f"# {format_event(event, q)}")
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    q = args.q
    try:
        if args.file:
            with open(args.file, encoding="utf-8") as fh:
                lines = fh.readlines()
        else:
            lines = sys.stdin.readlines()
        words = {
            parse_word(line, q)
            for line in (ln.strip() for ln in lines)
            if line and not line.startswith("#")
        }
        if args.ins:
            result = reconstruct_from_insertions(words, args.n, q, args.b, args.t)
        else:
            if q != 2:
                raise ValueError("deletion reconstruction is defined for q = 2 only")
            result = reconstruct_from_deletions(words, args.n, args.b, args.t)
    except ReconstructionError as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, OSError) as exc:
        print(f"error[precondition]: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.diagnostics:
        for step in result.steps:
            print(
                f"# step pos={step.position} symbol={step.symbol} "
                f"bursts={step.consumed_bursts} classes={list(step.class_sizes)}",
                file=sys.stderr,
            )
    if args.as_json:
        print(
            json.dumps(
                {
                    "word": format_word(result.word, q),
                    "iterations": result.iterations,
                    "steps": [
                        {
                            "position": s.position,
                            "symbol": s.symbol,
                            "bursts": s.consumed_bursts,
                            "class_sizes": list(s.class_sizes),
                        }
                        for s in result.steps
                    ],
                }
            )
        )
    else:
        print(format_word(result.word, q))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burstrecon",
        description="Exact burst-channel combinatorics, simulation, and decoding",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="evaluate one closed-form count")
    count.add_argument("kind", choices=COUNT_KINDS)
    count.add_argument("-q", type=int, required=True, help="alphabet size")
    count.add_argument("-b", type=int, required=True, help="burst length")
    count.add_argument("-t", type=int, required=True, help="radius (number of bursts)")
    count.add_argument("-n", type=int, required=True, help="word length")
    count.add_argument("--as-json", action="store_true")
    count.set_defaults(func=cmd_count)

    verify = sub.add_parser("verify", help="sweep formulas against brute-force oracles")
    verify.add_argument("--q", default="2:3", help="range, e.g. 2:3 or 2,3")
    verify.add_argument("--b", default="1:3")
    verify.add_argument("--t", default="1:2")
    verify.add_argument("--n", default="1:4")
    verify.add_argument("--kinds", default="all", help=f"comma list from {','.join(VERIFY_KINDS)}")
    verify.add_argument("--cap", type=int, default=None, help="enumeration cap")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--trials", type=int, default=5, help="round-trip trials per grid point")
    verify.add_argument("--format", choices=("csv", "json"), default="csv")
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--corrupt", default=None, help=argparse.SUPPRESS)
    verify.set_defaults(func=cmd_verify)

    simulate = sub.add_parser("simulate", help="sample distinct channel outputs")
    simulate.add_argument("-x", required=True, help="input word")
    group = simulate.add_mutually_exclusive_group(required=True)
    group.add_argument("--ins", action="store_true", help="burst insertions")
    group.add_argument("--del", dest="dele", action="store_true", help="burst deletions")
    simulate.add_argument("-q", type=int, default=2)
    simulate.add_argument("-b", type=int, required=True)
    simulate.add_argument("-t", type=int, required=True)
    simulate.add_argument("-N", type=int, required=True, help="distinct outputs to draw")
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--cap", type=int, default=None)
    simulate.add_argument("--as-json", action="store_true")
    simulate.set_defaults(func=cmd_simulate)

    rec = sub.add_parser("reconstruct", help="decode a word from channel outputs")
    rec.add_argument("--file", default=None, help="outputs, one per line (default stdin)")
    group = rec.add_mutually_exclusive_group(required=True)
    group.add_argument("--ins", action="store_true")
    group.add_argument("--del", dest="dele", action="store_true")
    rec.add_argument("-n", type=int, required=True, help="length of the transmitted word")
    rec.add_argument("-q", type=int, default=2)
    rec.add_argument("-b", type=int, required=True)
    rec.add_argument("-t", type=int, required=True)
    rec.add_argument("--diagnostics", action="store_true", help="per-step class sizes on stderr")
    rec.add_argument("--as-json", action="store_true")
    rec.set_defaults(func=cmd_reconstruct)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
