"""
Decompositions W = B C^k I from overlaps of W with its own periodization.

Words here are positioned: W is a CyclicWord whose designated rotation is the
chosen copy on the reference axis, and U is the prefix of that copy.
"""
import logging
from dataclasses import dataclass

from words.periodicity import Periodicity, PeriodicityError, periodicity_decompose
from words.words import Word, WordError, is_initial_subword, is_terminal_subword

logger = logging.getLogger(__name__)


class DecompositionError(WordError):
    PRECONDITION = 'precondition'
    NOT_AN_OCCURRENCE = 'not-an-occurrence'
    DEGENERATE = 'degenerate'
    UNREALIZED = 'hypotheses-unrealized'
    FAILURE = 'failure'

    def __init__(self, outcome, message):
        self.outcome = outcome
        super().__init__(message)


@dataclass(frozen=True)
class Decomposition:
    B: Word
    C: Word
    k: int
    I: Word

    def expand(self):
        return Word(self.B.letters + self.C.letters * self.k + self.I.letters)

    def to_json(self):
        return {'B': self.B.letters, 'C': self.C.letters, 'k': self.k, 'I': self.I.letters}


@dataclass(frozen=True)
class ConjectureWitness:
    D: Word
    C: Word
    k: int
    r: int
    s: int
    rotation: int = 0

    def conjugate(self, power):
        return Word(self.C.letters * power + self.D.letters + self.C.letters * (self.k - power))

    def to_json(self):
        return {
            'D': self.D.letters, 'C': self.C.letters, 'k': self.k,
            'r': self.r, 's': self.s, 'rotation': self.rotation,
        }


@dataclass(frozen=True)
class OverlapResult:
    """Overlap of U with its copy at ``shift``; decomposition is None when inconclusive"""
    outcome: str
    shift: int
    periodicity: Periodicity
    union: Word
    decomposition: Decomposition = None

    CONTAINS = 'contains'
    EQUALS = 'equals'
    INCONCLUSIVE = 'inconclusive'

    def to_json(self):
        return {
            'outcome': self.outcome,
            'shift': self.shift,
            'periodicity': self.periodicity.to_json(),
            'union': self.union.letters,
            'decomposition': self.decomposition.to_json() if self.decomposition else None,
        }


def _prefix(W, u_len):
    if not 1 <= u_len <= len(W) - 1:
        raise DecompositionError(
            DecompositionError.PRECONDITION, f"u_len must be in [1, {len(W) - 1}], got {u_len}",
        )
    return W.core[:u_len]


def find_nonequivalent_occurrence(W, U):
    if not U:
        raise DecompositionError(DecompositionError.PRECONDITION, "U must be nonempty")
    if W.periodic(0, len(U)) != U:
        raise DecompositionError(
            DecompositionError.NOT_AN_OCCURRENCE, f"{U} does not start the periodization of {W}",
        )
    return [t for t in range(1, len(W)) if W.periodic(t, t + len(U)) == U]


def extend_period(W, u_len, shift):
    """
    Spread the period ``shift`` of W~[0, u_len + shift) over the whole copy;
    only valid when u_len + shift >= L(W).
    """
    letters = W.letters
    head = u_len % shift
    k = (len(letters) - head) // shift
    return Decomposition(
        B=Word(letters[:head]),
        C=Word(letters[head:head + shift]),
        k=k,
        I=Word(letters[head + k * shift:]),
    )


def overlap_decompose(W, u_len, shift):
    U = _prefix(W, u_len)
    if not 0 < shift < u_len:
        raise DecompositionError(
            DecompositionError.PRECONDITION, f"Shift {shift} must start inside U (0 < shift < {u_len})",
        )
    if W.periodic(shift, shift + u_len) != U:
        raise DecompositionError(
            DecompositionError.NOT_AN_OCCURRENCE, f"{U} does not occur at shift {shift} in the periodization of {W}",
        )
    try:
        periodicity = periodicity_decompose(U, shift)
    except PeriodicityError as e:
        raise DecompositionError(DecompositionError.NOT_AN_OCCURRENCE, str(e))

    reach = u_len + shift
    if reach < len(W):
        return OverlapResult(OverlapResult.INCONCLUSIVE, shift, periodicity, periodicity.union())
    outcome = OverlapResult.EQUALS if reach == len(W) else OverlapResult.CONTAINS
    return OverlapResult(outcome, shift, periodicity, periodicity.union(), extend_period(W, u_len, shift))


def theorem2_decompose(W, u_len):
    U = _prefix(W, u_len)
    if 2 * u_len == len(W) and W.letters == U.letters * 2:
        raise DecompositionError(
            DecompositionError.DEGENERATE, f"{W} = ({U})^2: both translates coincide with the reference axis",
        )

    shifts = [t for t in find_nonequivalent_occurrence(W, U) if t < u_len]
    if not shifts:
        raise DecompositionError(
            DecompositionError.UNREALIZED, f"Theorem 2 hypotheses unrealized: no copy of {U} begins inside it in {W}",
        )

    for shift in shifts:
        result = overlap_decompose(W, u_len, shift)
        if result.decomposition is None:
            continue
        if not verify_decomposition(W, result.decomposition):
            logger.error(f"Period {shift} of {U} does not extend across {W}: {result.decomposition.to_json()}")
            raise DecompositionError(
                DecompositionError.FAILURE, f"Invalid decomposition of {W}: {result.decomposition.to_json()}",
            )
        return result.decomposition

    logger.debug(f"Every copy of {U} in {W} leaves W partly uncovered (shifts {shifts})")
    raise DecompositionError(
        DecompositionError.FAILURE, f"No shift among {shifts} extends the period of {U} across {W}",
    )


def separated_decompose(W, u_len):
    """
    W = C^k I from a later copy of U at t with t + L(U) >= L(W): U at 0 and
    at t give W~[0, t + L(U)) the period t, and that window spans the copy.
    """
    U = _prefix(W, u_len)
    n = len(W)
    for shift in find_nonequivalent_occurrence(W, U):
        if shift + u_len < n:
            continue
        k = n // shift
        d = Decomposition(B=Word(), C=Word(W.letters[:shift]), k=k, I=Word(W.letters[k * shift:]))
        if not verify_decomposition(W, d):
            raise DecompositionError(DecompositionError.FAILURE, f"Invalid decomposition of {W}: {d.to_json()}")
        return d
    raise DecompositionError(
        DecompositionError.UNREALIZED, f"No copy of {U} in {W} reaches the end of the copy",
    )


def verify_decomposition(W, d):
    return (
        d.k > 0
        and bool(d.C)
        and d.expand().letters == W.letters
        and is_terminal_subword(d.B, d.C)
        and is_initial_subword(d.I, d.C)
    )


def tail_pair(W, d):
    """(T, B) where C = I T"""
    if not is_initial_subword(d.I, d.C):
        raise DecompositionError(DecompositionError.PRECONDITION, f"{d.I} is not an initial subword of {d.C}")
    return Word(d.C.letters[len(d.I):]), d.B


def power_splits(word):
    """Every word = D C^k with C nonempty and k > 1, by (L(C), k)"""
    letters = word.letters
    splits = []
    for c_len in range(1, len(letters) // 2 + 1):
        C = letters[-c_len:]
        k = 1
        while (k + 1) * c_len <= len(letters) and letters.endswith(C * (k + 1)):
            k += 1
            splits.append((Word(letters[:len(letters) - k * c_len]), Word(C), k))
    return splits


def conjugate_readings(W, interval, shift):
    """
    The translate read along its own axis over every window of L(W) letters
    that contains its whole overlap with the copy
    """
    lo, hi = interval
    n = len(W)
    return {W.periodic(start + shift, start + shift + n).letters for start in range(hi - n, lo + 1)}


def _require_cover(config):
    if not (config.covers and config.uv_meet.edge_disjoint):
        raise DecompositionError(
            DecompositionError.PRECONDITION, "Configuration must cover W with edge-disjoint overlaps",
        )


def _family_match(W, config, rotations):
    readings_u = conjugate_readings(W, config.u_interval, config.shift_u)
    readings_v = conjugate_readings(W, config.v_interval, config.shift_v)
    candidates = []
    for rotation in rotations:
        for D, C, k in power_splits(W.rotate(rotation).core):
            shape = ConjectureWitness(D, C, k, 0, 0, rotation)
            r_values = [p for p in range(k + 1) if shape.conjugate(p).letters in readings_u]
            s_values = [p for p in range(k + 1) if shape.conjugate(p).letters in readings_v]
            candidates.extend(
                ConjectureWitness(D, C, k, r, s, rotation) for r in r_values for s in s_values if r != s
            )
    if not candidates:
        return None
    return min(candidates, key=lambda c: (len(c.C), c.r, c.s, c.rotation, c.k))


def conjecture_form_check(W, config):
    """
    W is the chosen copy. Look for W = D C^k, k > 1, such that the two
    translates read C^r D C^(k-r) and C^s D C^(k-s), r != s, each over some
    window of L(W) letters containing its overlap.
    """
    _require_cover(config)
    if config.shift_u is None or config.shift_v is None:
        return None
    return _family_match(W, config, [0])


def conjecture_near_miss(W, config):
    """The same family match with D C^k read from another rotation of the copy"""
    _require_cover(config)
    if config.shift_u is None or config.shift_v is None:
        return None
    return _family_match(W, config, range(1, len(W)))
