from io import StringIO
import json
import random

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from trees.axes import axis_of, translate_axis
from words.words import CyclicWord, concat, enumerate_reduced, enumerate_reduced_up_to, parse_word
from .tripods import (
    EXAMPLES, Meet, TripodError, cover_of, example_suite, meet_of, tripod_config, tripod_from_axes,
)


def w(text):
    return parse_word(text)


def c(text):
    return CyclicWord.parse(text)


class WorkedExampleTests(SimpleTestCase):
    def setUp(self):
        self.reports = {example.name: example.report() for example in EXAMPLES}

    def test_example_1(self):
        report = self.reports['example-1']
        self.assertEqual((report.U, report.V), (w('xyx'), w('xyx')))
        self.assertEqual(report.uv_meet, Meet(Meet.SEGMENT, w('x')))
        self.assertTrue(report.covers)
        self.assertEqual(report.union_label, w('xyxyx'))
        self.assertEqual(report.union_length, 5)
        self.assertEqual(report.excess, 0)

    def test_example_2(self):
        report = self.reports['example-2']
        self.assertEqual((report.U, report.V), (w('xyyx'), w('xyyx')))
        self.assertEqual(report.uv_meet, Meet(Meet.SEGMENT, w('x')))
        self.assertTrue(report.covers)
        self.assertEqual(report.union_label, w('xyyxyyx'))

    def test_example_3(self):
        report = self.reports['example-3']
        self.assertEqual((report.U, report.V), (w('yxyyxy'), w('yxy')))
        self.assertEqual(report.uv_meet.kind, Meet.POINT)
        self.assertEqual((report.u_interval, report.v_interval), ((0, 6), (6, 9)))
        self.assertEqual(report.union_label, w('yxyyxyyx' + 'y'))
        self.assertEqual(report.excess, 1)
        self.assertEqual((report.shift_u, report.shift_v), (3, 2))

    def test_example_4(self):
        report = self.reports['example-4']
        self.assertEqual((report.U, report.V), (w('yxyxyyxyxy'), w('yxyxy')))
        self.assertEqual(report.uv_meet.kind, Meet.POINT)
        self.assertEqual(report.union_label, w('yxyxyyxyxyyx' + 'yxy'))
        self.assertEqual(report.excess, 3)
        self.assertTrue(report.longer_than_w)

    def test_suite_keeps_the_words(self):
        self.assertEqual([r.W.letters for r in example_suite()], [e.word for e in EXAMPLES])

    def test_conjugate_words_are_rotations(self):
        report = self.reports['example-1']
        self.assertEqual(report.W1, c('xyxxy'))
        self.assertEqual(report.W2, c('xyxyx'))


class TripodConfigTests(SimpleTestCase):
    def test_conjugating_by_a_letter(self):
        report = tripod_config(c('xyxyx'), w('X'), w('x'))
        self.assertEqual((report.U, report.V), (w('x'), w('x')))
        self.assertEqual(report.uv_meet.kind, Meet.POINT)
        self.assertEqual(report.W, c('xxyxy'))
        self.assertFalse(report.covers)

    def test_single_letter_conjugators_for_the_eight_letter_example(self):
        report = tripod_config(c('yxyyxyyx'), w('Y'), w('yyx'))
        self.assertEqual((report.U, report.V), (w(''), w('yxyyxy')))

    def test_coinciding_translate_names_the_conjugator(self):
        with self.assertRaises(TripodError) as caught:
            tripod_config(c('xyxyx'), w('YX'), w('xyxyx'))
        self.assertEqual(caught.exception.which, 'g2')

    def test_missing_translate(self):
        with self.assertRaises(TripodError) as caught:
            tripod_config(c('xy'), w('yy'), w('x'))
        self.assertEqual(caught.exception.which, 'g1')

    def test_vertex_intersection_gives_empty_label(self):
        report = tripod_config(c('xy'), w('X'), w('Y'))
        self.assertEqual(report.U, w(''))
        self.assertEqual(report.u_interval[0], report.u_interval[1])
        self.assertIsNone(report.shift_u)

    def test_labels_reread_from_intervals(self):
        for example in EXAMPLES:
            report = example.report()
            self.assertEqual(report.W.periodic(*report.u_interval), report.U)
            self.assertEqual(report.W.periodic(*report.v_interval), report.V)

    def test_shifts_align_the_overlaps(self):
        for report in example_suite():
            for interval, shift in ((report.u_interval, report.shift_u), (report.v_interval, report.shift_v)):
                self.assertEqual(report.W.periodic(*interval),
                                 report.W.periodic(interval[0] + shift, interval[1] + shift))

    def test_overlaps_stay_two_short_exhaustive(self):
        # U depends on g1 alone and V on g2 alone, so one report per conjugator covers every pair
        conjugators = list(enumerate_reduced_up_to(3))
        rng = random.Random(5)
        for length in range(2, 7):
            for word in enumerate_reduced(length):
                if not word.is_cyclically_reduced:
                    continue
                cyclic = CyclicWord(word)
                overlaps = {}
                for g in conjugators:
                    try:
                        report = tripod_config(cyclic, g, g)
                    except TripodError:
                        continue
                    self.assertLessEqual(len(report.U), length - 2, (word, g))
                    overlaps[g] = report.U
                if not overlaps:
                    continue
                self.assertLessEqual(2 * max(len(U) for U in overlaps.values()), 2 * length - 4)
                g1, g2 = rng.choice(list(overlaps)), rng.choice(list(overlaps))
                report = tripod_config(cyclic, g1, g2)
                self.assertEqual((report.U, report.V), (overlaps[g1], overlaps[g2]))

    def test_translation_invariance(self):
        rng = random.Random(7)
        pool = list(enumerate_reduced_up_to(4))
        for example in EXAMPLES:
            reference = axis_of(w(example.word))
            first = translate_axis(w(example.g1), reference)
            second = translate_axis(w(example.g2), reference)
            expected = example.report()
            for _ in range(25):
                h = rng.choice(pool)
                moved = tripod_from_axes(
                    translate_axis(h, reference), translate_axis(h, first), translate_axis(h, second),
                )
                self.assertEqual((moved.U, moved.V, moved.uv_meet), (expected.U, expected.V, expected.uv_meet))
                self.assertEqual((moved.covers, moved.union_label), (expected.covers, expected.union_label))

    def test_translating_conjugators_only(self):
        # g -> g W^n leaves each translate unchanged
        base = tripod_config(c('yxyyxyyx'), w('YXY'), w('yxyyxy'))
        shifted = tripod_config(c('yxyyxyyx'), concat(w('YXY'), w('yxyyxyyx')), w('yxyyxy'))
        self.assertEqual((base.U, base.V, base.union_label), (shifted.U, shifted.V, shifted.union_label))


class MeetAndCoverTests(SimpleTestCase):
    def test_meets(self):
        word = c('xyxyx')
        self.assertEqual(meet_of(word, (0, 3), (2, 5)), Meet(Meet.SEGMENT, w('x')))
        self.assertEqual(meet_of(word, (0, 3), (3, 5)), Meet(Meet.POINT))
        self.assertEqual(meet_of(word, (0, 2), (3, 5)), Meet(Meet.DISJOINT))

    def test_cover_with_gap(self):
        self.assertEqual(cover_of(5, (0, 2), (3, 5)), (False, None))

    def test_cover_with_excess(self):
        self.assertEqual(cover_of(8, (0, 6), (6, 9)), (True, (0, 9)))

    def test_short_cover(self):
        self.assertEqual(cover_of(8, (0, 3), (3, 7)), (False, (0, 7)))


class OverlapCommandTests(SimpleTestCase):
    def test_tripod_command(self):
        out = StringIO()
        call_command('tripod', '--word', 'xyxyx', '--g1', 'YX', '--g2', 'xy', stdout=out, stderr=StringIO())
        payload = json.loads(out.getvalue())
        self.assertEqual(payload['v'], 1)
        self.assertEqual((payload['U'], payload['V']), ('xyx', 'xyx'))
        self.assertEqual(payload['uv_meet'], {'kind': 'segment', 'label': 'x'})
        self.assertEqual(payload['union_label'], 'xyxyx')

    def test_tripod_command_reports_failing_axis(self):
        with self.assertRaisesMessage(CommandError, 'g1'):
            call_command('tripod', '--word', 'xyxyx', '--g1', 'xyxyx', '--g2', 'xy',
                         stdout=StringIO(), stderr=StringIO())

    def test_examples_command(self):
        out = StringIO()
        call_command('examples', stdout=out, stderr=StringIO())
        payload = json.loads(out.getvalue())
        unions = [report['union_label'] for report in payload['examples']]
        self.assertEqual(unions, ['xyxyx', 'xyyxyyx', 'yxyyxyyxy', 'yxyxyyxyxyyxyxy'])


class OverlapApiTests(SimpleTestCase):
    def test_tripod_endpoint(self):
        response = self.client.get('/api/overlaps/tripod/', {'word': 'yxyyxyyx', 'g1': 'YXY', 'g2': 'yxyyxy'})
        report = response.json()['report']
        self.assertEqual(report['uv_meet'], {'kind': 'point'})
        self.assertEqual(report['excess'], 1)

    def test_tripod_rejects_unreduced_word(self):
        response = self.client.get('/api/overlaps/tripod/', {'word': 'xyX', 'g1': 'x', 'g2': 'y'})
        self.assertEqual(response.status_code, 400)

    def test_examples_endpoint(self):
        response = self.client.get('/api/overlaps/examples/')
        self.assertEqual(len(response.json()['examples']), 4)
