"""
Points, ideal points and complete geodesics of the upper half-plane.
"""
import math
from dataclasses import dataclass

import numpy as np

from .matrices import GeometryError, NotHyperbolicError

ENDPOINT_TOLERANCE = 1e-8


class Infinity:
    """The ideal point at infinity"""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (Infinity, ())

    def __repr__(self):
        return 'INFINITY'


INFINITY = Infinity()


def ideal_to_json(t):
    return 'inf' if t is INFINITY else t


def same_ideal_point(s, t, tol=ENDPOINT_TOLERANCE):
    if s is INFINITY or t is INFINITY:
        return s is t
    return bool(np.isclose(s, t, rtol=tol, atol=tol))


@dataclass(frozen=True)
class PointH2:
    re: float
    im: float

    def __post_init__(self):
        if not self.im > 0:
            raise GeometryError(f"Point ({self.re}, {self.im}) is not in the upper half-plane")

    @classmethod
    def from_complex(cls, z):
        return cls(float(z.real), float(z.imag))

    def as_complex(self):
        return complex(self.re, self.im)

    def to_json(self):
        return [self.re, self.im]


def mobius(m, t):
    """t -> (a t + b) / (c t + d) on an ideal point or on a PointH2"""
    if isinstance(t, PointH2):
        z = t.as_complex()
        return PointH2.from_complex((m.a * z + m.b) / (m.c * z + m.d))
    if t is INFINITY:
        return m.a / m.c if m.c != 0 else INFINITY
    denominator = m.c * t + m.d
    if denominator == 0:
        return INFINITY
    return (m.a * t + m.b) / denominator


@dataclass(frozen=True)
class GeodesicH2:
    """Endpoints sorted, or (finite, INFINITY) for a vertical line"""
    start: float
    end: object

    @classmethod
    def through(cls, s, t):
        if same_ideal_point(s, t):
            raise GeometryError(f"Geodesic endpoints {s} and {t} coincide")
        if s is INFINITY:
            return cls(float(t), INFINITY)
        if t is INFINITY:
            return cls(float(s), INFINITY)
        return cls(float(min(s, t)), float(max(s, t)))

    @property
    def is_vertical(self):
        return self.end is INFINITY

    @property
    def center(self):
        return (self.start + self.end) / 2

    @property
    def radius(self):
        return (self.end - self.start) / 2

    @property
    def endpoints(self):
        return (self.start, self.end)

    def image(self, m):
        return GeodesicH2.through(mobius(m, self.start), mobius(m, self.end))

    def same_as(self, other, tol=ENDPOINT_TOLERANCE):
        return same_ideal_point(self.start, other.start, tol) and same_ideal_point(self.end, other.end, tol)

    def contains(self, point, tol=1e-7):
        if self.is_vertical:
            return abs(point.re - self.start) < tol
        return abs(abs(point.as_complex() - self.center) - self.radius) < tol

    def sample_points(self, count):
        """``count`` points spread along the geodesic"""
        if self.is_vertical:
            heights = np.exp(np.linspace(-2, 2, count))
            return [PointH2(self.start, float(h)) for h in heights]
        angles = np.linspace(0, np.pi, count + 2)[1:-1]
        return [
            PointH2(float(self.center + self.radius * np.cos(theta)), float(self.radius * np.sin(theta)))
            for theta in angles
        ]

    def to_json(self):
        return [ideal_to_json(self.start), ideal_to_json(self.end)]


def axis_geodesic_h2(m):
    """The geodesic joining the two fixed points of a hyperbolic m"""
    if not m.is_hyperbolic():
        raise NotHyperbolicError(m.trace)
    if m.c == 0:
        return GeodesicH2.through(m.b / (m.d - m.a), INFINITY)
    root = math.sqrt(m.trace ** 2 - 4)
    return GeodesicH2.through((m.a - m.d + root) / (2 * m.c), (m.a - m.d - root) / (2 * m.c))


def _strictly_inside(t, geodesic):
    if t is INFINITY:
        return False
    upper = math.inf if geodesic.is_vertical else geodesic.end
    return geodesic.start < t < upper


def interleaved(first, second):
    """Endpoint pairs separate each other on the boundary circle"""
    for s in second.endpoints:
        for t in first.endpoints:
            if same_ideal_point(s, t):
                return False
    inside = [_strictly_inside(t, first) for t in second.endpoints]
    return inside.count(True) == 1


def geodesic_intersect_h2(first, second):
    """Crossing point of two geodesics, or None when they do not cross"""
    if first.same_as(second):
        raise GeometryError(f"Geodesics {first.to_json()} and {second.to_json()} coincide")
    if not interleaved(first, second):
        return None
    if first.is_vertical:
        first, second = second, first
    if second.is_vertical:
        re = second.start
    else:
        c1, r1, c2, r2 = first.center, first.radius, second.center, second.radius
        re = (c2 ** 2 - c1 ** 2 + r1 ** 2 - r2 ** 2) / (2 * (c2 - c1))
    height = first.radius ** 2 - (re - first.center) ** 2
    if height <= 0:
        return None
    return PointH2(float(re), math.sqrt(height))


def hyp_distance(p, q):
    ratio = ((p.re - q.re) ** 2 + (p.im - q.im) ** 2) / (2 * p.im * q.im)
    return float(np.arccosh(1 + ratio))
