"""
SL(2, R) matrices and the punctured torus representation of <x, y>.

Integer entries stay Python ints, so products of the default generators are
exact at any word length; float entries are allowed for user supplied
generators and checked to the configured tolerance.
"""
import logging
from dataclasses import dataclass

import numpy as np
from django.conf import settings

from words.words import WordError, free_reduce

logger = logging.getLogger(__name__)

DET_TOLERANCE = 1e-9


class GeometryError(WordError):
    pass


class NotHyperbolicError(GeometryError):
    def __init__(self, trace):
        self.trace = trace
        super().__init__(f"not hyperbolic: |trace| = {abs(trace)} <= 2")


@dataclass(frozen=True)
class Mat2:
    a: float
    b: float
    c: float
    d: float

    def __matmul__(self, other):
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def parse(cls, text):
        """'a,b,c,d' with integer or decimal entries"""
        parts = [part.strip() for part in text.split(',')]
        if len(parts) != 4:
            raise GeometryError(f"Expected four comma separated entries, got {text!r}")
        try:
            entries = [int(part) if part.lstrip('+-').isdigit() else float(part) for part in parts]
        except ValueError:
            raise GeometryError(f"Matrix entries must be numbers, got {text!r}")
        matrix = cls(*entries)
        if abs(matrix.det - 1) > DET_TOLERANCE:
            raise GeometryError(f"Determinant of {text!r} is {matrix.det}, not 1")
        return matrix

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def trace(self):
        return self.a + self.d

    @property
    def is_exact(self):
        return all(isinstance(entry, int) for entry in (self.a, self.b, self.c, self.d))

    def inverse(self):
        # det is 1
        return Mat2(self.d, -self.b, -self.c, self.a)

    def is_hyperbolic(self, tol=DET_TOLERANCE):
        return abs(self.trace) > 2 + tol

    def as_array(self):
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=float)

    def distance(self, other):
        """Max-norm distance between entries"""
        return float(np.max(np.abs(self.as_array() - other.as_array())))

    def to_json(self):
        return [[self.a, self.b], [self.c, self.d]]


@dataclass(frozen=True)
class PuncturedTorusRep:
    """Images of x and y; the commutator must be parabolic with trace -2"""
    gen_x: Mat2
    gen_y: Mat2

    def __post_init__(self):
        trace = self.commutator().trace
        if abs(trace + 2) > DET_TOLERANCE:
            raise GeometryError(f"Commutator trace is {trace}, expected -2 for a once-punctured torus")

    @classmethod
    def default(cls):
        return cls(Mat2(1, 1, 1, 2), Mat2(1, -1, -1, 2))

    @classmethod
    def from_settings(cls, gen_x=None, gen_y=None):
        return cls(
            Mat2.parse(gen_x or settings.AXISLAB_DEFAULT_GEN_X),
            Mat2.parse(gen_y or settings.AXISLAB_DEFAULT_GEN_Y),
        )

    def generator(self, letter):
        return {
            'x': self.gen_x,
            'y': self.gen_y,
            'X': self.gen_x.inverse(),
            'Y': self.gen_y.inverse(),
        }[letter]

    def commutator(self):
        return self.gen_x @ self.gen_y @ self.gen_x.inverse() @ self.gen_y.inverse()

    def to_json(self):
        return {'gen_x': self.gen_x.to_json(), 'gen_y': self.gen_y.to_json()}


def evaluate(rep, word):
    result = Mat2.identity()
    for letter in free_reduce(word):
        result = result @ rep.generator(letter)
    return result


def translation_length_h2(m):
    if not m.is_hyperbolic():
        raise NotHyperbolicError(m.trace)
    return float(2 * np.arccosh(abs(m.trace) / 2))


def gamma_length(rep, word):
    """Length of the closed geodesic freely homotopic to ``word``"""
    length = translation_length_h2(evaluate(rep, word))
    logger.debug(f"Closed geodesic {word} has length {length:.10f}")
    return length
