"""
Tripod configurations: a reference axis for W and two of its translates.

Coordinates are edge positions along the reference axis, shifted so that the
chosen copy of W occupies [0, L(W)) and starts where the first overlap starts.
An interval (lo, hi) covers the edges lo .. hi - 1; lo == hi is a single vertex.
"""
import logging
from dataclasses import dataclass

from trees.axes import IntersectionResult, axis_intersection, axis_of, translate_axis
from words.words import EMPTY, CyclicWord, Word, WordError, parse_word

logger = logging.getLogger(__name__)


class TripodError(WordError):
    def __init__(self, which, message):
        self.which = which
        super().__init__(f"{which}: {message}")


@dataclass(frozen=True)
class Meet:
    kind: str
    label: Word = None

    DISJOINT = 'disjoint'
    POINT = 'point'
    SEGMENT = 'segment'

    @property
    def edge_disjoint(self):
        return self.kind != self.SEGMENT

    def to_json(self):
        if self.kind == self.SEGMENT:
            return {'kind': self.kind, 'label': self.label.letters}
        return {'kind': self.kind}


def meet_of(word, first, second):
    """How two edge intervals along the periodization of ``word`` meet"""
    lo, hi = max(first[0], second[0]), min(first[1], second[1])
    if hi > lo:
        return Meet(Meet.SEGMENT, word.periodic(lo, hi))
    if hi == lo:
        return Meet(Meet.POINT)
    return Meet(Meet.DISJOINT)


def cover_of(length, first, second):
    """(covers, union) for two edge intervals; union is None when a gap separates them"""
    if max(first[0], second[0]) > min(first[1], second[1]):
        return False, None
    union = (min(first[0], second[0]), max(first[1], second[1]))
    return union[0] <= 0 and union[1] >= length, union


def core_rotation(core, rotated):
    for offset in range(len(core)):
        if core.rotate(offset) == rotated:
            return offset
    return None


def alignment_shift(reference, translate, result):
    """
    The shift t such that, along the overlap, the translate reads the reference
    periodization moved by t. None for single vertices and opposite orientations.
    """
    if result.kind != IntersectionResult.SEGMENT:
        return None
    start = translate.position(reference.vertex(result.lo))
    if translate.position(reference.vertex(result.lo + 1)) != start + 1:
        return None
    rotation = core_rotation(reference.core, translate.core)
    if rotation is None:
        return None
    return (start + rotation - result.lo) % len(reference.core)


@dataclass(frozen=True)
class TripodReport:
    W: CyclicWord
    g1: Word
    g2: Word
    W1: CyclicWord
    W2: CyclicWord
    U: Word
    V: Word
    u_interval: tuple
    v_interval: tuple
    uv_meet: Meet
    covers: bool
    union_label: Word
    excess: int
    shift_u: int = None
    shift_v: int = None

    @property
    def union_length(self):
        if self.union_label is not None:
            return len(self.union_label)
        return len(self.U) + len(self.V)

    @property
    def longer_than_w(self):
        return self.union_length >= len(self.W)

    def to_json(self):
        return {
            'W': self.W.letters,
            'g1': self.g1.letters,
            'g2': self.g2.letters,
            'W1': self.W1.letters,
            'W2': self.W2.letters,
            'U': self.U.letters,
            'V': self.V.letters,
            'u_interval': list(self.u_interval),
            'v_interval': list(self.v_interval),
            'uv_meet': self.uv_meet.to_json(),
            'covers': self.covers,
            'union_label': self.union_label.letters if self.union_label is not None else None,
            'excess': self.excess,
            'longer_than_w': self.longer_than_w,
            'shift_u': self.shift_u,
            'shift_v': self.shift_v,
        }


def tripod_from_axes(reference, first, second, g1=EMPTY, g2=EMPTY):
    results = {}
    for which, translate in (('g1', first), ('g2', second)):
        result = axis_intersection(reference, translate)
        if result.kind == IntersectionResult.LINE:
            raise TripodError(which, "translate coincides with the reference axis")
        if result.kind == IntersectionResult.EMPTY_KIND:
            raise TripodError(which, "translate does not meet the reference axis")
        results[which] = result

    u, v = results['g1'], results['g2']
    origin = u.lo
    word = reference.core.rotate(origin)
    u_interval = (0, u.hi - origin)
    v_interval = (v.lo - origin, v.hi - origin)
    covers, union = cover_of(len(word), u_interval, v_interval)
    union_label = word.periodic(*union) if union else None

    return TripodReport(
        W=word,
        g1=g1,
        g2=g2,
        W1=first.core,
        W2=second.core,
        U=u.label,
        V=v.label,
        u_interval=u_interval,
        v_interval=v_interval,
        uv_meet=meet_of(word, u_interval, v_interval),
        covers=covers,
        union_label=union_label,
        excess=max(0, len(union_label) - len(word)) if union_label is not None else 0,
        shift_u=alignment_shift(reference, first, u),
        shift_v=alignment_shift(reference, second, v),
    )


def tripod_config(W, g1, g2):
    reference = axis_of(W.core)
    report = tripod_from_axes(reference, translate_axis(g1, reference), translate_axis(g2, reference), g1, g2)
    logger.debug(f"Tripod {W}, {g1}, {g2}: U={report.U} V={report.V} meet={report.uv_meet.kind}")
    return report


@dataclass(frozen=True)
class WorkedExample:
    name: str
    word: str
    g1: str
    g2: str

    def report(self):
        return tripod_config(CyclicWord.parse(self.word), parse_word(self.g1), parse_word(self.g2))


# Conjugators are chosen so that each translate meets the reference axis
# exactly along the published overlap.
EXAMPLES = (
    WorkedExample('example-1', 'xyxyx', 'YX', 'xy'),
    WorkedExample('example-2', 'xyyxyyx', 'YYX', 'xyy'),
    WorkedExample('example-3', 'yxyyxyyx', 'YXY', 'yxyyxy'),
    WorkedExample('example-4', 'yxyxyyxyxyyx', 'YXYXY', 'yxyxyyxyxy'),
)


def example_suite():
    return [example.report() for example in EXAMPLES]
