"""
Axes of elements of F2 acting on its Cayley tree.

Vertices of the tree are reduced words (their address from the basepoint 1);
an element acts by left multiplication. The axis of g = a W a^-1 (W cyclically
reduced) is the line through the vertex a whose two ends are the eventually
periodic words a W W W ... and a W^-1 W^-1 ... . Along the axis, vertex
``p`` is a W~[0:p] for p >= 0 and a (W~[p:0])^-1 for p < 0, so the edge from
vertex p to vertex p + 1 is labeled W~[p].
"""
import logging
from dataclasses import dataclass

from words.periodicity import primitive_root
from words.words import (
    CyclicWord, Word, WordError, conjugate, cyclic_reduce, enumerate_reduced_up_to, free_reduce,
    invert,
)

logger = logging.getLogger(__name__)


class NoAxisError(WordError):
    pass


@dataclass(frozen=True)
class TreeVertex:
    address: Word

    def __str__(self):
        return self.address.letters

    def to_json(self):
        return self.address.letters


@dataclass(frozen=True)
class Ray:
    """An eventually periodic infinite reduced word: prefix followed by block repeated.

    Axis ends always use a primitive block right after the conjugator, so equal
    ends compare equal.
    """
    prefix: str
    block: str

    def letter(self, index):
        if index < len(self.prefix):
            return self.prefix[index]
        return self.block[(index - len(self.prefix)) % len(self.block)]

    def head(self, length):
        if length <= len(self.prefix):
            return self.prefix[:length]
        return self.prefix + ''.join(self.letter(i) for i in range(len(self.prefix), length))

    def common_prefix_length(self, other):
        """Length of the longest common prefix, or None when the rays are equal"""
        # past both prefixes the rays are periodic; agreeing on the sum of the
        # periods forces agreement everywhere
        bound = max(len(self.prefix), len(other.prefix)) + len(self.block) + len(other.block)
        for i in range(bound):
            if self.letter(i) != other.letter(i):
                return i
        return None


@dataclass(frozen=True)
class Axis:
    conjugator: Word
    core: CyclicWord

    def __post_init__(self):
        if not self.core.core:
            raise NoAxisError("identity has no axis")
        if not self.element.is_reduced:
            raise WordError(f"{self.conjugator}.{self.core}.{invert(self.conjugator)} is not reduced as written")

    @property
    def element(self):
        return Word(self.conjugator.letters + self.core.letters + invert(self.conjugator).letters)

    @property
    def attracting_end(self):
        return Ray(self.conjugator.letters, primitive_root(self.core.core)[0].letters)

    @property
    def repelling_end(self):
        return Ray(self.conjugator.letters, primitive_root(invert(self.core.core))[0].letters)

    @property
    def translation_length(self):
        return len(self.core)

    def vertex(self, position):
        end = self.attracting_end if position >= 0 else self.repelling_end
        return TreeVertex(Word(end.head(len(self.conjugator) + abs(position))))

    def position(self, vertex):
        """Signed position of a vertex along the axis, or None when it is off the axis"""
        address = vertex.address.letters
        base = len(self.conjugator)
        if len(address) < base or not address.startswith(self.conjugator.letters):
            return None
        steps = len(address) - base
        if address == self.attracting_end.head(base + steps):
            return steps
        if address == self.repelling_end.head(base + steps):
            return -steps
        return None

    def contains(self, vertex):
        return self.position(vertex) is not None

    def label(self, lo, hi):
        """Letters read along the attracting direction from vertex lo to vertex hi"""
        return self.core.periodic(lo, hi)

    def same_line(self, other):
        return {self.attracting_end, self.repelling_end} == {other.attracting_end, other.repelling_end}

    def to_json(self):
        return {'conjugator': self.conjugator.letters, 'core': self.core.letters}


@dataclass(frozen=True)
class TreeSegment:
    start: TreeVertex
    label: Word

    @property
    def length(self):
        return len(self.label)


@dataclass(frozen=True)
class IntersectionResult:
    """Intersection of two axes; lo/hi are positions along the first axis"""
    kind: str
    segment: TreeSegment = None
    lo: int = None
    hi: int = None

    EMPTY_KIND = 'empty'
    VERTEX = 'vertex'
    SEGMENT = 'segment'
    LINE = 'line'

    @property
    def start(self):
        return self.segment.start if self.segment else None

    @property
    def label(self):
        return self.segment.label if self.segment else None

    def to_json(self):
        payload = {'kind': self.kind}
        if self.segment is not None:
            payload['start'] = self.segment.start.to_json()
            payload['label'] = self.segment.label.letters
        return payload


def axis_of(g):
    reduced = free_reduce(g)
    if not reduced:
        raise NoAxisError("identity has no axis")
    decomposition = cyclic_reduce(reduced)
    return Axis(conjugator=decomposition.conjugator, core=decomposition.core)


def translation_length(g):
    return len(cyclic_reduce(free_reduce(g)).core)


def translate_axis(g, axis):
    return axis_of(conjugate(g, axis.element))


def axis_intersection(first, second):
    ends_first = (first.attracting_end, first.repelling_end)
    ends_second = (second.attracting_end, second.repelling_end)

    if first.same_line(second):
        return IntersectionResult(kind=IntersectionResult.LINE)

    floor = max(len(first.conjugator), len(second.conjugator))
    addresses = set()
    for end in ends_first:
        for other in ends_second:
            common = end.common_prefix_length(other)
            if common is None:
                # a shared end without a shared line cannot happen for axes in a free group
                raise WordError(f"Axes {first.to_json()} and {second.to_json()} share exactly one end")
            for length in range(floor, common + 1):
                addresses.add(end.head(length))

    if not addresses:
        return IntersectionResult(kind=IntersectionResult.EMPTY_KIND)

    positions = sorted(first.position(TreeVertex(Word(address))) for address in addresses)
    lo, hi = positions[0], positions[-1]
    if hi - lo + 1 != len(positions):
        raise WordError(f"Intersection of {first.to_json()} and {second.to_json()} is not connected")

    segment = TreeSegment(start=first.vertex(lo), label=first.label(lo, hi))
    kind = IntersectionResult.VERTEX if lo == hi else IntersectionResult.SEGMENT
    return IntersectionResult(kind=kind, segment=segment, lo=lo, hi=hi)


def axis_window(axis, radius):
    if radius < 1:
        raise WordError("radius must be at least 1")
    return {axis.vertex(position) for position in range(-radius, radius + 1)}


def tree_distance(u, v):
    return len(free_reduce(Word(invert(u).letters + v.letters)))


def displacement(g, vertex):
    """d_T(v, g v)"""
    moved = free_reduce(Word(g.letters + vertex.address.letters))
    return tree_distance(vertex.address, moved)


def min_displacement(g, radius):
    """Minimum of d_T(v, g v) over all vertices within ``radius`` of the basepoint"""
    return min(displacement(g, TreeVertex(v)) for v in enumerate_reduced_up_to(radius))


def window_intersection(first, second, radius):
    """Brute-force oracle: the intersection of two windows of the given radius"""
    return axis_window(first, radius) & axis_window(second, radius)
