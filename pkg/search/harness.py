"""
Exhaustive scan of covering overlap configurations.

Each cyclically reduced word is analysed independently: its configurations are
decomposed, checked against the conjectured C^r D C^(k-r) shape and, for a
seeded sample, realized by explicit conjugators in the tree. The word space of
each length is split by prefix; partitions are merged back in enumeration
order, so output does not depend on the number of workers.
"""
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from decomposition.theorem import (
    DecompositionError, conjecture_form_check, conjecture_near_miss, separated_decompose, tail_pair,
    theorem2_decompose,
)
from overlaps.tripods import TripodError, tripod_config
from trees.axes import axis_of
from words.periodicity import primitive_root
from words.words import CyclicWord, WordError, concat, invert
from .enumeration import cyclically_reduced_with_prefix, prefixes
from .runs import coinciding_shifts, configs_for

logger = logging.getLogger(__name__)

WITNESS = 'witness'
NO_FORM = 'none'


@dataclass(frozen=True)
class SearchOptions:
    symmetry: bool = True
    oracle_sample_rate: float = 0.05
    oracle_seed: int = 0


@dataclass(frozen=True)
class Theorem2Outcome:
    """
    Decomposition of the copy starting at one of the runs, possibly of its
    inverse. ``separated`` marks a period taken from a copy of the run that
    does not overlap it, which only excess covers need.
    """
    rotation: int
    inverted: bool = False
    word: CyclicWord = None
    decomposition: object = None
    error: str = None
    tail_pair: tuple = None
    separated: bool = False

    @property
    def ok(self):
        return self.decomposition is not None

    def to_json(self):
        payload = {'rotation': self.rotation, 'inverted': self.inverted, 'separated': self.separated}
        if self.ok:
            payload['word'] = self.word.letters
            payload['decomposition'] = self.decomposition.to_json()
            T, B = self.tail_pair
            payload['tail_pair'] = {'T': T.letters, 'B': B.letters}
        else:
            payload['error'] = self.error
        return payload


@dataclass(frozen=True)
class ConfigRecord:
    config: object
    theorem2: Theorem2Outcome
    witness: object = None
    near_miss: object = None
    oracle: bool = None

    @property
    def conjecture(self):
        return WITNESS if self.witness is not None else NO_FORM

    @property
    def counterexample(self):
        return self.witness is None

    def to_json(self):
        payload = self.config.to_json()
        payload['theorem2'] = self.theorem2.to_json()
        payload['conjecture'] = {
            'outcome': self.conjecture,
            'witness': self.witness.to_json() if self.witness else None,
            'near_miss': self.near_miss.to_json() if self.near_miss else None,
        }
        payload['oracle'] = self.oracle
        payload['counterexample'] = self.counterexample
        return payload


@dataclass(frozen=True)
class SearchRecord:
    W: CyclicWord
    configs: tuple
    coinciding_shifts: tuple = ()

    @property
    def counterexample(self):
        return any(record.counterexample for record in self.configs)

    def to_json(self):
        return {
            'W': self.W.letters,
            'coinciding_shifts': list(self.coinciding_shifts),
            'configs': [record.to_json() for record in self.configs],
            'counterexample': self.counterexample,
        }


@dataclass
class SearchSummary:
    max_len: int
    symmetry: bool
    words_scanned: int = 0
    configs_found: int = 0
    theorem2_successes: int = 0
    theorem2_separated: int = 0
    theorem2_failures: int = 0
    conjecture_witnesses: int = 0
    near_misses: int = 0
    counterexamples: int = 0
    oracle_checks: int = 0
    oracle_mismatches: int = 0

    def add(self, record):
        self.words_scanned += 1
        self.configs_found += len(record.configs)
        for config_record in record.configs:
            if config_record.theorem2.ok:
                self.theorem2_successes += 1
                self.theorem2_separated += config_record.theorem2.separated
            else:
                self.theorem2_failures += 1
            if config_record.witness is not None:
                self.conjecture_witnesses += 1
            elif config_record.near_miss is not None:
                self.near_misses += 1
            if config_record.oracle is not None:
                self.oracle_checks += 1
                self.oracle_mismatches += not config_record.oracle
        self.counterexamples += record.counterexample

    def to_json(self):
        return {
            'words_scanned': self.words_scanned,
            'configs_found': self.configs_found,
            'theorem2_successes': self.theorem2_successes,
            'theorem2_separated': self.theorem2_separated,
            'theorem2_failures': self.theorem2_failures,
            'conjecture_witnesses': self.conjecture_witnesses,
            'near_misses': self.near_misses,
            'counterexamples': self.counterexamples,
            'oracle_checks': self.oracle_checks,
            'oracle_mismatches': self.oracle_mismatches,
            'max_len': self.max_len,
            'symmetry': self.symmetry,
        }


def _overlap_attempt(W, run):
    """Theorem 2 on the copy starting at ``run``, then on its mirror image"""
    rotation = run.lo % len(W)
    copy = W.rotate(rotation)
    try:
        d = theorem2_decompose(copy, len(run))
        return Theorem2Outcome(rotation, word=copy, decomposition=d, tail_pair=tail_pair(copy, d))
    except DecompositionError as e:
        if e.outcome not in (DecompositionError.UNREALIZED, DecompositionError.FAILURE):
            return Theorem2Outcome(rotation, error=e.outcome)
        first_error = e.outcome

    # a copy of the run entering it from the left is a copy entering its inverse from the right
    mirrored = CyclicWord(invert(copy.core)).rotate(len(copy) - len(run))
    try:
        d = theorem2_decompose(mirrored, len(run))
        return Theorem2Outcome(rotation, inverted=True, word=mirrored, decomposition=d, tail_pair=tail_pair(mirrored, d))
    except DecompositionError as e:
        logger.debug(f"Mirrored decomposition of {copy} failed after {first_error}: {e}")
        return Theorem2Outcome(rotation, error=e.outcome)


def _separated_attempt(W, run):
    # the run occurs at lo and at lo + shift; one of the two copies lies far enough ahead
    for rotation in (run.lo % len(W), (run.lo + run.shift) % len(W)):
        copy = W.rotate(rotation)
        try:
            d = separated_decompose(copy, len(run))
        except DecompositionError:
            continue
        return Theorem2Outcome(rotation, word=copy, decomposition=d, tail_pair=tail_pair(copy, d), separated=True)
    return None


def theorem2_for(config):
    """
    The longer run first, then the shorter one. Only a cover with excess may
    fall back to a separated copy of the longer run.
    """
    W = config.W
    longer, shorter = sorted((config.run_u, config.run_v), key=len, reverse=True)
    first = _overlap_attempt(W, longer)
    if first.ok:
        return first
    second = _overlap_attempt(W, shorter)
    if second.ok:
        return second
    if config.excess > 0:
        separated = _separated_attempt(W, longer)
        if separated is not None:
            logger.warning(
                f"{W}: overlaps overhang the copy by {config.excess}; "
                f"period taken from a separated copy at rotation {separated.rotation}"
            )
            return separated
    return first


def realizing_conjugator(axis, lo, shift):
    """g with g A(lo + shift) = A(lo); g moves the axis onto a line through the run at lo"""
    return concat(axis.vertex(lo).address, invert(axis.vertex(lo + shift).address))


def same_shift(found, expected, period):
    # for a proper power, shifts are only defined up to the root
    return found is not None and (found - expected) % period == 0


def oracle_check(config):
    """Realize both runs by conjugators and compare with the exact tree intersection"""
    axis = axis_of(config.W.core)
    g1 = realizing_conjugator(axis, config.run_u.lo, config.run_u.shift)
    g2 = realizing_conjugator(axis, config.run_v.lo, config.run_v.shift)
    period = len(primitive_root(config.W.core)[0])
    try:
        report = tripod_config(config.W, g1, g2)
    except TripodError as e:
        logger.warning(f"Oracle could not realize {config.to_json()}: {e}")
        return False
    return (
        report.U == config.run_u.label
        and report.V == config.run_v.label
        and report.u_interval == config.u_interval
        and report.v_interval == config.v_interval
        and report.uv_meet == config.uv_meet
        and report.covers
        and same_shift(report.shift_u, config.shift_u, period)
        and same_shift(report.shift_v, config.shift_v, period)
    )


def analyze_config(config, rng, sample_rate):
    theorem2 = theorem2_for(config)
    if not theorem2.ok:
        logger.error(f"Theorem 2 failed on {config.W} ({config.to_json()}): {theorem2.error}")

    witness = conjecture_form_check(config.copy, config)
    near_miss = None
    if witness is None:
        near_miss = conjecture_near_miss(config.copy, config)
        logger.warning(f"Counterexample candidate {config.W}: {config.to_json()}")

    # one draw per config
    sampled = rng.random() < sample_rate
    oracle = None
    if sampled or witness is None:
        oracle = oracle_check(config)
        if not oracle:
            logger.error(f"Tree oracle disagrees with {config.W}: {config.to_json()}")

    return ConfigRecord(config, theorem2, witness, near_miss, oracle)


def analyze_word(W, options):
    rng = random.Random(f"{options.oracle_seed}:{W.letters}")
    records = tuple(analyze_config(config, rng, options.oracle_sample_rate) for config in configs_for(W))
    return SearchRecord(W, records, tuple(coinciding_shifts(W)))


def scan_partition(task):
    length, prefix, options = task
    return [analyze_word(W, options) for W in cyclically_reduced_with_prefix(prefix, length, options.symmetry)]


def iter_records(max_len, options, jobs=1):
    """SearchRecords by length, then in x < y < X < Y order"""
    if max_len < 2:
        raise WordError(f"max_len must be at least 2, got {max_len}")

    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for length in range(1, max_len + 1):
            tasks = [(length, prefix, options) for prefix in prefixes(length)]
            chunks = executor.map(scan_partition, tasks) if executor else map(scan_partition, tasks)
            scanned = 0
            for chunk in chunks:
                scanned += len(chunk)
                yield from chunk
            logger.info(f"Length {length}: {scanned} words scanned")
    finally:
        if executor:
            executor.shutdown(cancel_futures=True)


def run_search(max_len, options, jobs=1, writer=None):
    summary = SearchSummary(max_len=max_len, symmetry=options.symmetry)
    for record in iter_records(max_len, options, jobs):
        summary.add(record)
        if writer is not None:
            writer.write(record.to_json())
    logger.info(
        f"Search up to length {max_len}: {summary.configs_found} configurations, "
        f"{summary.theorem2_failures} Theorem 2 failures, {summary.counterexamples} counterexamples"
    )
    return summary
