from io import StringIO
import json
import math

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from hypothesis import assume, given, settings, strategies as st

from words.words import CyclicWord, Word, conjugate, free_reduce, parse_word
from .geodesics import (
    INFINITY, GeodesicH2, PointH2, axis_geodesic_h2, geodesic_intersect_h2, hyp_distance, mobius,
)
from .matrices import (
    GeometryError, Mat2, NotHyperbolicError, PuncturedTorusRep, evaluate, translation_length_h2,
)
from .triangles import DEGENERATE, Lift, lifts_of, theorem1_scan, triangle_of

REP = PuncturedTorusRep.default()

words = st.text(alphabet='xyXY', max_size=8).map(lambda text: free_reduce(Word(text)))
short_words = st.text(alphabet='xyXY', max_size=4).map(lambda text: free_reduce(Word(text)))
points = st.builds(
    PointH2,
    st.floats(min_value=-3, max_value=3, allow_nan=False),
    st.floats(min_value=0.2, max_value=3, allow_nan=False),
)


def w(text):
    return parse_word(text)


def lift(s, t):
    return Lift(w(''), GeodesicH2.through(s, t))


class MatrixTests(SimpleTestCase):
    def test_generators(self):
        self.assertEqual(evaluate(REP, w('')), Mat2.identity())
        self.assertEqual(evaluate(REP, w('x')), Mat2(1, 1, 1, 2))
        self.assertEqual(evaluate(REP, w('Y')), Mat2(2, 1, 1, 1))

    def test_commutator_is_parabolic(self):
        self.assertEqual(evaluate(REP, w('xyXY')).trace, -2)
        self.assertEqual(REP.commutator().trace, -2)

    def test_exact_determinant(self):
        for text in ['xy', 'xxyXYY', 'yxyyxyyx', 'xyxyxyxyxyxyxyxyxyxy']:
            m = evaluate(REP, w(text))
            self.assertTrue(m.is_exact)
            self.assertEqual(m.det, 1)

    @settings(max_examples=200, deadline=None)
    @given(words, words)
    def test_homomorphism(self, u, v):
        product = evaluate(REP, u) @ evaluate(REP, v)
        self.assertLess(evaluate(REP, u * v).distance(product), 1e-9)

    def test_translation_length(self):
        m = evaluate(REP, w('xy'))
        self.assertEqual(m.trace, 3)
        self.assertAlmostEqual(translation_length_h2(m), 1.9248473002, places=9)
        negated = Mat2(-m.a, -m.b, -m.c, -m.d)
        self.assertAlmostEqual(translation_length_h2(negated), translation_length_h2(m), places=12)

    def test_parabolic_rejected(self):
        with self.assertRaises(NotHyperbolicError) as caught:
            translation_length_h2(Mat2(1, 1, 0, 1))
        self.assertEqual(caught.exception.trace, 2)

    def test_parse(self):
        self.assertEqual(Mat2.parse('1, -1, -1, 2'), Mat2(1, -1, -1, 2))
        self.assertTrue(Mat2.parse('2.0,0,0,0.5').is_hyperbolic())
        with self.assertRaises(GeometryError):
            Mat2.parse('1,0,0,2')
        with self.assertRaises(GeometryError):
            Mat2.parse('1,1,1')

    def test_commutator_checked(self):
        with self.assertRaises(GeometryError):
            PuncturedTorusRep(Mat2(1, 1, 0, 1), Mat2(1, 0, 1, 1))

    def test_settings_generators(self):
        self.assertEqual(PuncturedTorusRep.from_settings(), REP)


class GeodesicTests(SimpleTestCase):
    def test_axis_endpoints(self):
        axis = axis_geodesic_h2(Mat2(1, 1, 1, 2))
        self.assertAlmostEqual(axis.start, (-1 - math.sqrt(5)) / 2, places=12)
        self.assertAlmostEqual(axis.end, (-1 + math.sqrt(5)) / 2, places=12)

    def test_vertical_axis(self):
        axis = axis_geodesic_h2(Mat2(2.0, 0.0, 0.0, 0.5))
        self.assertEqual(axis.start, 0)
        self.assertIs(axis.end, INFINITY)
        self.assertTrue(axis.is_vertical)

    def test_axis_is_invariant(self):
        for text in ['x', 'xy', 'xxY', 'yxyyxyyx']:
            m = evaluate(REP, w(text))
            axis = axis_geodesic_h2(m)
            self.assertTrue(axis.image(m).same_as(axis))

    def test_infinity_is_an_ideal_point(self):
        self.assertIs(mobius(Mat2(2.0, 0.0, 0.0, 0.5), INFINITY), INFINITY)
        self.assertEqual(mobius(Mat2(1, 1, 1, 2), INFINITY), 1)
        self.assertIs(mobius(Mat2(0, -1, 1, 0), 0), INFINITY)

    @settings(max_examples=100, deadline=None)
    @given(short_words, short_words)
    def test_equivariance(self, g, word):
        m = evaluate(REP, word)
        assume(m.is_hyperbolic())
        moved = axis_geodesic_h2(evaluate(REP, conjugate(g, word)))
        self.assertTrue(moved.same_as(axis_geodesic_h2(m).image(evaluate(REP, g))))

    def test_circle_meets_vertical_line(self):
        point = geodesic_intersect_h2(GeodesicH2.through(-1, 1), GeodesicH2.through(0, INFINITY))
        self.assertAlmostEqual(point.re, 0)
        self.assertAlmostEqual(point.im, 1)

    def test_two_circles(self):
        first, second = GeodesicH2.through(-1, 1), GeodesicH2.through(0, 2)
        point = geodesic_intersect_h2(first, second)
        self.assertAlmostEqual(point.re, 0.5)
        self.assertAlmostEqual(point.im, math.sqrt(0.75))
        self.assertTrue(first.contains(point, 1e-9) and second.contains(point, 1e-9))

    def test_no_crossing(self):
        self.assertIsNone(geodesic_intersect_h2(GeodesicH2.through(0, 1), GeodesicH2.through(2, 3)))
        self.assertIsNone(geodesic_intersect_h2(GeodesicH2.through(-2, 2), GeodesicH2.through(-1, 1)))
        self.assertIsNone(geodesic_intersect_h2(GeodesicH2.through(0, 1), GeodesicH2.through(1, 2)))

    def test_same_geodesic_rejected(self):
        with self.assertRaises(GeometryError):
            geodesic_intersect_h2(GeodesicH2.through(0, 1), GeodesicH2.through(1, 0))
        with self.assertRaises(GeometryError):
            GeodesicH2.through(INFINITY, INFINITY)


class DistanceTests(SimpleTestCase):
    def test_zero(self):
        p = PointH2(0.3, 1.2)
        self.assertEqual(hyp_distance(p, p), 0)

    def test_vertical(self):
        self.assertAlmostEqual(hyp_distance(PointH2(0, 1), PointH2(0, math.e)), 1, places=12)

    def test_points_stay_in_upper_half_plane(self):
        with self.assertRaises(GeometryError):
            PointH2(0, 0)

    @settings(max_examples=300, deadline=None)
    @given(short_words, points, points)
    def test_mobius_invariance(self, g, p, q):
        assume(hyp_distance(p, q) > 1e-3)
        m = evaluate(REP, g)
        self.assertAlmostEqual(hyp_distance(mobius(m, p), mobius(m, q)), hyp_distance(p, q), delta=1e-8)

    def test_on_axis_displacement(self):
        for text in ['x', 'xy', 'xxy', 'xyxyx', 'xxyy']:
            m = evaluate(REP, w(text))
            length = translation_length_h2(m)
            for p in axis_geodesic_h2(m).sample_points(5):
                self.assertAlmostEqual(hyp_distance(p, mobius(m, p)), length, delta=1e-6)
                off = PointH2(p.re, p.im * 1.5)
                self.assertGreater(hyp_distance(off, mobius(m, off)), length + 1e-6)


class LiftTests(SimpleTestCase):
    def test_depth_zero(self):
        lifts = lifts_of(REP, w('xy'), 0)
        self.assertEqual(len(lifts), 1)
        self.assertEqual(lifts[0].conjugator, w(''))

    def test_monotone_in_depth(self):
        counts = [len(lifts_of(REP, w('xxy'), depth)) for depth in range(4)]
        self.assertEqual(counts, sorted(counts))
        self.assertGreater(counts[-1], 1)

    def test_conjugating_by_w_is_deduplicated(self):
        conjugators = [lift.conjugator.letters for lift in lifts_of(REP, w('xy'), 2)]
        self.assertIn('', conjugators)
        self.assertNotIn('xy', conjugators)

    def test_lifts_are_distinct(self):
        lifts = lifts_of(REP, w('xxyy'), 2)
        for i, first in enumerate(lifts):
            for second in lifts[i + 1:]:
                self.assertFalse(first.geodesic.same_as(second.geodesic))

    def test_parabolic_word(self):
        with self.assertRaises(NotHyperbolicError):
            lifts_of(REP, w('xyXY'), 1)


class TriangleTests(SimpleTestCase):
    def test_triangle(self):
        lifts = (lift(-2, 1), lift(-1, 3), lift(0, INFINITY))
        report = triangle_of(lifts, 10.0)
        self.assertEqual(len(report.vertices), 3)
        self.assertTrue(all(edge > 0 for edge in report.edge_lengths))
        p12, p13, p23 = report.vertices
        self.assertTrue(lifts[0].geodesic.contains(p12) and lifts[1].geodesic.contains(p12))
        self.assertTrue(lifts[0].geodesic.contains(p13) and lifts[2].geodesic.contains(p13))
        self.assertTrue(lifts[1].geodesic.contains(p23) and lifts[2].geodesic.contains(p23))
        self.assertLess(report.max_edge_ratio, 1)
        self.assertFalse(report.violates(1e-9))

    def test_concurrent_lines_are_degenerate(self):
        self.assertEqual(triangle_of((lift(-2, 1), lift(-1, 2), lift(0, INFINITY)), 10.0), DEGENERATE)

    def test_missing_crossing(self):
        self.assertIsNone(triangle_of((lift(0, 1), lift(2, 3), lift(0.5, INFINITY)), 10.0))


class Theorem1ScanTests(SimpleTestCase):
    def test_single_lift_has_no_triangles(self):
        scan = theorem1_scan(REP, w('xy'), 0)
        self.assertEqual(len(scan.lifts), 1)
        self.assertEqual(scan.triangles, ())

    def test_edges_shorter_than_the_closed_geodesic(self):
        for text in ['xy', 'xxy', 'xyxyx', 'xxyy']:
            scan = theorem1_scan(REP, w(text), 2)
            self.assertEqual(scan.violations, [], text)
            for report in scan.triangles:
                self.assertLess(report.max_edge_ratio, 1)
                p12, p13, p23 = report.vertices
                first, second, third = (lift.geodesic for lift in report.lifts)
                self.assertTrue(first.contains(p12) and second.contains(p12))
                self.assertTrue(first.contains(p13) and third.contains(p13))
                self.assertTrue(second.contains(p23) and third.contains(p23))

    def test_self_crossing_curve_has_short_triangles(self):
        scan = theorem1_scan(REP, w('xxyxY'), 3)
        self.assertTrue(scan.triangles)
        self.assertEqual(scan.violations, [])
        for report in scan.triangles:
            self.assertLess(report.max_edge_ratio, 1)

    def test_simple_curves_have_no_triangles(self):
        for text in ['xy', 'xxy', 'xyxyx']:
            self.assertEqual(theorem1_scan(REP, w(text), 2).triangles, (), text)

    def test_parallel_scan_matches_serial(self):
        serial = theorem1_scan(REP, CyclicWord.parse('xxyy'), 2, jobs=1)
        parallel = theorem1_scan(REP, CyclicWord.parse('xxyy'), 2, jobs=2)
        self.assertEqual(serial.to_json(), parallel.to_json())


class H2VerifyCommandTests(SimpleTestCase):
    def test_report(self):
        out = StringIO()
        call_command('h2-verify', '--word', 'xxy', '--depth', '2', '--jobs', '1', stdout=out, stderr=StringIO())
        payload = json.loads(out.getvalue())
        self.assertEqual(payload['v'], 1)
        self.assertEqual(payload['violations'], [])
        self.assertEqual(payload['rep'], {'gen_x': [[1, 1], [1, 2]], 'gen_y': [[1, -1], [-1, 2]]})

    def test_bad_generators(self):
        with self.assertRaises(CommandError):
            call_command('h2-verify', '--word', 'xy', '--gen-x', '1,0,0,2', stdout=StringIO(), stderr=StringIO())

    def test_parabolic_word(self):
        with self.assertRaisesMessage(CommandError, 'not hyperbolic'):
            call_command('h2-verify', '--word', 'xyXY', stdout=StringIO(), stderr=StringIO())


class HyperbolicApiTests(SimpleTestCase):
    def test_geodesic_endpoint(self):
        response = self.client.get('/api/hyperbolic/geodesic/', {'word': 'x'})
        payload = response.json()
        self.assertEqual(payload['trace'], 3)
        self.assertEqual(payload['matrix'], [[1, 1], [1, 2]])
        self.assertAlmostEqual(payload['axis'][1], (math.sqrt(5) - 1) / 2)

    def test_parabolic_element(self):
        response = self.client.get('/api/hyperbolic/geodesic/', {'word': 'xyXY'})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()['trace'], -2)

    def test_verify_endpoint(self):
        response = self.client.get('/api/hyperbolic/verify/', {'word': 'xy', 'depth': 1})
        self.assertEqual(response.json()['scan']['violations'], [])

    def test_depth_is_bounded(self):
        response = self.client.get('/api/hyperbolic/verify/', {'word': 'xy', 'depth': 4})
        self.assertEqual(response.status_code, 400)
