"""
Triangles cut out by lifts of a closed geodesic, and the edge bound check.

Every lift of the closed geodesic for W is the axis of a conjugate g W g^-1.
Three lifts crossing pairwise bound a triangle; each edge is compared with
the length of the closed geodesic.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from words.words import CyclicWord, Word, conjugate, enumerate_reduced_up_to
from .geodesics import GeodesicH2, axis_geodesic_h2, geodesic_intersect_h2, hyp_distance
from .matrices import evaluate, translation_length_h2

logger = logging.getLogger(__name__)

DEGENERATE = 'degenerate'


@dataclass(frozen=True)
class Lift:
    conjugator: Word
    geodesic: GeodesicH2

    def to_json(self):
        return {'conjugator': self.conjugator.letters, 'endpoints': self.geodesic.to_json()}


@dataclass(frozen=True)
class TriangleReport:
    lifts: tuple
    vertices: tuple
    edge_lengths: tuple
    gamma_length: float

    @property
    def max_edge_ratio(self):
        return max(self.edge_lengths) / self.gamma_length

    def violates(self, tol):
        return any(edge >= self.gamma_length - tol for edge in self.edge_lengths)

    def to_json(self):
        return {
            'axes': [lift.to_json() for lift in self.lifts],
            'vertices': [vertex.to_json() for vertex in self.vertices],
            'edge_lengths': list(self.edge_lengths),
            'gamma_length': self.gamma_length,
            'max_edge_ratio': self.max_edge_ratio,
        }


@dataclass(frozen=True)
class Theorem1Scan:
    word: CyclicWord
    depth: int
    gamma_length: float
    lifts: tuple
    triangles: tuple
    degenerate: int
    tol: float

    @property
    def violations(self):
        return [report for report in self.triangles if report.violates(self.tol)]

    def to_json(self):
        return {
            'word': self.word.letters,
            'depth': self.depth,
            'gamma_length': self.gamma_length,
            'lifts': len(self.lifts),
            'triangles': [report.to_json() for report in self.triangles],
            'degenerate': self.degenerate,
            'violations': [report.to_json() for report in self.violations],
            'tol': self.tol,
        }


def _cyclic(word):
    return word if isinstance(word, CyclicWord) else CyclicWord(word)


def lifts_of(rep, word, depth, dedup_tol=1e-8):
    """Axes of g W g^-1 for reduced g with L(g) <= depth, one per distinct axis"""
    cyclic = _cyclic(word)
    translation_length_h2(evaluate(rep, cyclic.core))

    lifts = []
    for g in enumerate_reduced_up_to(depth):
        geodesic = axis_geodesic_h2(evaluate(rep, conjugate(g, cyclic.core)))
        if any(geodesic.same_as(lift.geodesic, dedup_tol) for lift in lifts):
            continue
        lifts.append(Lift(g, geodesic))
    return lifts


def triangle_of(lifts, gamma, separation=1e-7):
    """
    TriangleReport for three lifts, None when some pair does not cross, and
    DEGENERATE when the crossings are closer than ``separation``.
    """
    first, second, third = lifts
    p12 = geodesic_intersect_h2(first.geodesic, second.geodesic)
    p13 = geodesic_intersect_h2(first.geodesic, third.geodesic)
    p23 = geodesic_intersect_h2(second.geodesic, third.geodesic)
    if p12 is None or p13 is None or p23 is None:
        return None
    # edges lie on the first, second and third lift in turn
    edges = (hyp_distance(p12, p13), hyp_distance(p12, p23), hyp_distance(p13, p23))
    if min(edges) < separation:
        return DEGENERATE
    return TriangleReport(tuple(lifts), (p12, p13, p23), edges, gamma)


def _scan_from(task):
    lifts, start, gamma, separation = task
    reports, degenerate = [], 0
    for j, k in combinations(range(start + 1, len(lifts)), 2):
        result = triangle_of((lifts[start], lifts[j], lifts[k]), gamma, separation)
        if result == DEGENERATE:
            degenerate += 1
        elif result is not None:
            reports.append(result)
    return reports, degenerate


def theorem1_scan(rep, word, depth, tol=1e-9, separation=1e-7, dedup_tol=1e-8, jobs=1):
    cyclic = _cyclic(word)
    gamma = translation_length_h2(evaluate(rep, cyclic.core))
    lifts = lifts_of(rep, cyclic, depth, dedup_tol)

    # triples are partitioned by their first lift and merged in that order
    tasks = [(lifts, start, gamma, separation) for start in range(len(lifts))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            chunks = list(executor.map(_scan_from, tasks))
    else:
        chunks = [_scan_from(task) for task in tasks]

    triangles = tuple(report for reports, _ in chunks for report in reports)
    degenerate = sum(count for _, count in chunks)
    scan = Theorem1Scan(cyclic, depth, gamma, tuple(lifts), triangles, degenerate, tol)

    logger.info(
        f"{cyclic} at depth {depth}: {len(lifts)} lifts, {len(triangles)} triangles, {degenerate} degenerate"
    )
    for report in scan.violations:
        logger.warning(f"Edge bound violated for {cyclic}: {report.to_json()}")
    return scan
