"""
Minimum Hamming distance of linear codes.

Two methods:

exhaustive
    Enumerate one message per projective class, (l^k - 1)/(l - 1) in all,
    in numpy blocks: the span of the last rows is tabulated once and every
    combination of the leading rows is added to the whole table.

infoset
    Information-set enumeration in the manner of Brouwer and Zimmermann.
    Systematic generators are formed on information sets chosen greedily to
    overlap the earlier ones as little as possible. Messages of weight
    w = 1, 2, ... are enumerated on every set in turn. A codeword not yet
    seen has weight above w on every finished set, so each set contributes
    max(0, w + 1 - (k - r_j)) fresh positions to a lower bound, where r_j is
    the rank of the set's new columns. The scan stops once the lower bound
    meets the best weight seen.

Both methods return a certificate codeword of minimum weight; among equal
weights the lexicographically smallest word wins, so results do not depend
on enumeration order or worker count.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from itertools import product
from logging import getLogger
from typing import List, Optional, Tuple

import numpy as np

from ..exceptions import DistanceBudgetExceeded, ParameterError
from ..gf import FieldSpec
from ..settings import Settings
from .constants import DistanceMethod
from .linear import LinearCode, row_echelon
from .packing import packer_for

logger = getLogger(__name__)

# rows of the precomputed span table in exhaustive mode
_TABLE_ROWS = 2 ** 14

# evaluations between two clock checks
_CLOCK_INTERVAL = 2 ** 14


@dataclass(frozen=True)
class Budget:
    max_evaluations: int = 10 ** 9
    max_seconds: float = 15 * 60

    @classmethod
    def from_settings(cls, settings: Settings) -> "Budget":
        return cls(max_evaluations=settings.max_evaluations, max_seconds=settings.max_seconds)


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    certificate: np.ndarray = dataclass_field(compare=False)
    method: str
    evaluations: int
    elapsed: float = dataclass_field(compare=False)

    @property
    def elapsed_ms(self) -> int:
        return int(round(self.elapsed * 1000))


class _Meter:
    """Counts evaluations against a budget."""

    def __init__(self, budget: Budget):
        self.budget = budget
        self.started = time.monotonic()
        self.evaluations = 0
        self._next_clock = _CLOCK_INTERVAL

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def exhausted(self) -> bool:
        if self.evaluations > self.budget.max_evaluations:
            return True
        if self.evaluations >= self._next_clock:
            self._next_clock = self.evaluations + _CLOCK_INTERVAL
            return self.elapsed > self.budget.max_seconds
        return False


class _Best:
    """Minimum-weight word seen so far, ties broken lexicographically."""

    def __init__(self, length: int):
        self.weight = length + 1
        self.word: Optional[np.ndarray] = None

    def offer(self, weight: int, word: np.ndarray) -> None:
        if weight < self.weight or (
            weight == self.weight and tuple(word.tolist()) < tuple(self.word.tolist())
        ):
            self.weight = weight
            self.word = np.array(word, dtype=np.int64)


def min_distance(
    code: LinearCode,
    method: str = DistanceMethod.AUTO,
    budget: Budget = None,
    threads: int = None,
    settings: Settings = None,
) -> DistanceResult:
    """
    Exact minimum distance of `code` with a codeword achieving it.

    :param method:
        `exhaustive`, `infoset`, or `auto` (exhaustive when l^k is at most
        the configured limit, 2**26 by default).
    :param budget:
        Evaluation and wall-clock limits; defaults from the settings.
    :param threads:
        Worker threads for exhaustive enumeration; defaults from the settings.

    :raises DistanceBudgetExceeded:
        if the budget runs out before the bounds meet. The exception carries
        the (lower, upper) interval and the best certificate so far.
    """
    if code.dimension == 0:
        raise ParameterError("the zero code has no minimum distance", parameter="code")

    settings = settings or Settings.from_env()
    budget = budget or Budget.from_settings(settings)
    threads = threads or settings.threads

    if method == DistanceMethod.AUTO:
        method = DistanceMethod.EXHAUSTIVE \
            if code.field.order ** code.dimension <= settings.exhaustive_limit \
            else DistanceMethod.INFOSET

    if method == DistanceMethod.EXHAUSTIVE:
        result = _exhaustive(code, budget, threads)
    elif method == DistanceMethod.INFOSET:
        result = _infoset(code, budget)
    else:
        raise ParameterError("unknown distance method {!r}".format(method), parameter="method")

    logger.info(
        "%r: d = %d by %s after %d evaluations (%.2fs)",
        code, result.distance, result.method, result.evaluations, result.elapsed
    )
    code.distance_result = result
    return result


# Exhaustive enumeration.

def _normalized(digits: np.ndarray) -> np.ndarray:
    """Rows of `digits` whose first nonzero entry is 1."""
    if digits.shape[1] == 0:
        return np.zeros(len(digits), dtype=bool)
    nonzero = digits != 0
    first = np.argmax(nonzero, axis=1)
    leading = digits[np.arange(len(digits)), first]
    return nonzero.any(axis=1) & (leading == 1)


def _span_table(rows: np.ndarray, field: FieldSpec) -> Tuple[np.ndarray, np.ndarray]:
    """
    All linear combinations of `rows` with their coefficient vectors.
    """
    words = np.zeros((1, rows.shape[1]), dtype=np.int64)
    digits = np.zeros((1, 0), dtype=np.int64)
    for row in rows:
        words = np.vstack([field.add(words, field.mul(s, row)[None, :]) for s in field.elements()])
        digits = np.vstack([
            np.hstack([digits, np.full((len(digits), 1), s, dtype=np.int64)])
            for s in field.elements()
        ])
    return words, digits


def _best_of_block(block: np.ndarray) -> Tuple[int, Optional[np.ndarray]]:
    if not len(block):
        return block.shape[1] + 1, None
    weights = np.count_nonzero(block, axis=1)
    least = int(weights.min())
    candidates = block[weights == least]
    order = np.lexsort(candidates.T[::-1])
    return least, candidates[order[0]]


def _exhaustive(code: LinearCode, budget: Budget, threads: int) -> DistanceResult:
    field, basis = code.field, code.basis
    k, length = basis.shape
    order = field.order

    total = (order ** k - 1) // (order - 1)
    meter = _Meter(budget)
    if total > budget.max_evaluations:
        raise DistanceBudgetExceeded(
            "exhaustive enumeration needs {} evaluations, budget allows {}".format(
                total, budget.max_evaluations
            ),
            lower=1, upper=None, certificate=None
        )

    low_count = 0
    while low_count < k and order ** (low_count + 1) <= _TABLE_ROWS:
        low_count += 1
    high_rows, low_rows = basis[:k - low_count], basis[k - low_count:]

    table, digits = _span_table(low_rows, field)
    table_normalized = table[_normalized(digits)]

    def scan(high_messages):
        best = _Best(length)
        count = 0
        for message in high_messages:
            if time.monotonic() - meter.started > budget.max_seconds:
                return best, count, False
            if any(message):
                offset = np.zeros(length, dtype=np.int64)
                for s, row in zip(message, high_rows):
                    if s:
                        offset = field.add(offset, field.mul(s, row))
                block = field.add(table, offset[None, :])
            else:
                block = table_normalized
            count += len(block)
            weight, word = _best_of_block(block)
            if word is not None:
                best.offer(weight, word)
        return best, count, True

    messages = [
        message
        for message in product(field.elements(), repeat=len(high_rows))
        if not any(message) or next(s for s in message if s) == 1
    ]
    chunks = [messages[i::threads] for i in range(max(1, min(threads, len(messages))))]

    if len(chunks) == 1:
        outcomes = [scan(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            outcomes = list(pool.map(scan, chunks))

    best = _Best(length)
    for partial, count, finished in outcomes:
        meter.evaluations += count
        if partial.word is not None:
            best.offer(partial.weight, partial.word)

    if not all(finished for _, _, finished in outcomes):
        raise DistanceBudgetExceeded(
            "exhaustive enumeration ran out of time after {} evaluations".format(meter.evaluations),
            lower=1, upper=best.weight if best.word is not None else None,
            certificate=best.word
        )

    return DistanceResult(
        distance=best.weight,
        certificate=best.word,
        method=DistanceMethod.EXHAUSTIVE,
        evaluations=meter.evaluations,
        elapsed=meter.elapsed,
    )


# Information-set enumeration.

@dataclass(frozen=True)
class InformationSet:
    generator: np.ndarray
    columns: Tuple[int, ...]
    relative_rank: int


def information_sets(basis: np.ndarray, field: FieldSpec) -> List[InformationSet]:
    """
    Systematic generators on greedily chosen information sets. Columns not
    covered by earlier sets are tried first, lowest index first; a set is
    kept while it contributes at least one new column.
    """
    k, length = basis.shape
    used = set()
    sets: List[InformationSet] = []
    while len(used) < length:
        fresh = [col for col in range(length) if col not in used]
        stale = [col for col in range(length) if col in used]
        generator, pivots = row_echelon(basis, field, fresh + stale)
        relative = sum(1 for col in pivots if col not in used)
        if relative == 0:
            break
        generator.setflags(write=False)
        sets.append(InformationSet(generator=generator, columns=tuple(pivots), relative_rank=relative))
        used.update(pivots)
        logger.debug("information set %d: relative rank %d of %d", len(sets), relative, k)
    return sets


def _lower_bound(sets: List[InformationSet], k: int, w: int, finished: int) -> int:
    """
    Lower bound once weight w is done on the first `finished` sets and
    weight w - 1 on the rest.
    """
    total = 0
    for index, info in enumerate(sets):
        done = w if index < finished else w - 1
        total += max(0, done + 1 - (k - info.relative_rank))
    return total


def _combinations(rows, depth: int, start: int, acc, leading: bool, add):
    """
    Sums of `depth` scaled rows with increasing indices; the first term of
    each sum uses the scalar 1 only.
    """
    last = len(rows) - depth
    for i in range(start, last + 1):
        choices = rows[i][:1] if leading else rows[i]
        for row in choices:
            value = add(acc, row)
            if depth == 1:
                yield value
            else:
                yield from _combinations(rows, depth - 1, i + 1, value, False, add)


def _infoset(code: LinearCode, budget: Budget) -> DistanceResult:
    field, basis = code.field, code.basis
    k, length = basis.shape
    packer = packer_for(field, length)
    scalars = list(field.nonzero_elements())
    zero = packer.pack(np.zeros(length, dtype=np.int64))

    sets = information_sets(basis, field)
    scaled = [
        [[packer.scale(s, packer.pack(row)) for s in scalars] for row in info.generator]
        for info in sets
    ]

    meter = _Meter(budget)
    best = _Best(length)
    lower = 0
    best_packed_weight = length + 1

    for w in range(1, k + 1):
        for index, rows in enumerate(scaled):
            for word in _combinations(rows, w, 0, zero, True, packer.add):
                meter.evaluations += 1
                weight = packer.weight(word)
                if weight <= best_packed_weight:
                    best.offer(weight, packer.unpack(word))
                    best_packed_weight = best.weight
                if meter.exhausted():
                    raise DistanceBudgetExceeded(
                        "information-set enumeration exhausted its budget at weight {}: "
                        "{} <= d <= {}".format(w, lower, best.weight),
                        lower=lower, upper=best.weight, certificate=best.word
                    )

            # weight w on the first set covers every message up to weight w
            lower = best.weight if w == k else _lower_bound(sets, k, w, index + 1)
            logger.debug("weight %d on set %d: %d <= d <= %d", w, index + 1, lower, best.weight)
            if lower >= best.weight:
                return DistanceResult(
                    distance=best.weight,
                    certificate=best.word,
                    method=DistanceMethod.INFOSET,
                    evaluations=meter.evaluations,
                    elapsed=meter.elapsed,
                )

    raise AssertionError("enumeration ended without meeting bounds")
