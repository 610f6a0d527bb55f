from io import StringIO
import json
import random

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from words.words import (
    EMPTY, concat, conjugate, enumerate_reduced, enumerate_reduced_up_to, free_reduce,
    parse_word, rotations,
)
from .axes import (
    IntersectionResult, NoAxisError, TreeVertex, axis_intersection, axis_of, axis_window,
    min_displacement, translate_axis, translation_length, window_intersection,
)


def w(text):
    return parse_word(text)


def cyclically_reduced(min_length, max_length):
    for length in range(min_length, max_length + 1):
        for word in enumerate_reduced(length):
            if word.is_cyclically_reduced:
                yield word


def vertex_set(axis, result):
    if result.kind == IntersectionResult.EMPTY_KIND:
        return set()
    return {axis.vertex(p) for p in range(result.lo, result.hi + 1)}


class AxisOfTests(SimpleTestCase):
    def test_cyclically_reduced_element(self):
        axis = axis_of(w('xyxyx'))
        self.assertEqual((axis.conjugator, axis.core.letters), (EMPTY, 'xyxyx'))

    def test_conjugated_generator(self):
        axis = axis_of(w('xyX'))
        self.assertEqual((axis.conjugator, axis.core.letters), (w('x'), 'y'))

    def test_identity_has_no_axis(self):
        with self.assertRaisesMessage(NoAxisError, 'identity has no axis'):
            axis_of(EMPTY)

    def test_ends_share_exactly_the_conjugator(self):
        for element in enumerate_reduced_up_to(6):
            if not element:
                continue
            axis = axis_of(element)
            common = axis.attracting_end.common_prefix_length(axis.repelling_end)
            self.assertEqual(common, len(axis.conjugator))


class TranslationLengthTests(SimpleTestCase):
    def test_cyclically_reduced(self):
        self.assertEqual(translation_length(w('xyxyx')), 5)

    def test_conjugate_of_generator(self):
        self.assertEqual(translation_length(w('xyX')), 1)

    def test_conjugation_invariance(self):
        conjugated = free_reduce(w('X' + 'xyxyx' + 'x'))
        self.assertEqual(translation_length(conjugated), 5)
        self.assertEqual(min_displacement(conjugated, 4), 5)

    def test_identity(self):
        self.assertEqual(translation_length(EMPTY), 0)

    def test_matches_minimum_displacement(self):
        for element in enumerate_reduced_up_to(4):
            if element:
                self.assertEqual(min_displacement(element, 3), translation_length(element), element)


class AxisIntersectionTests(SimpleTestCase):
    def test_same_axis_is_a_line(self):
        axis = axis_of(w('xyxyx'))
        self.assertEqual(axis_intersection(axis, axis).kind, IntersectionResult.LINE)

    def test_powers_share_the_line(self):
        self.assertEqual(axis_intersection(axis_of(w('xy')), axis_of(w('xyxy'))).kind, IntersectionResult.LINE)

    def test_inverse_shares_the_line(self):
        self.assertEqual(axis_intersection(axis_of(w('xxy')), axis_of(w('YXX'))).kind, IntersectionResult.LINE)

    def test_generator_axes_meet_at_basepoint(self):
        result = axis_intersection(axis_of(w('x')), axis_of(w('y')))
        self.assertEqual(result.kind, IntersectionResult.VERTEX)
        self.assertEqual(result.start, TreeVertex(EMPTY))

    def test_overlap_of_translate(self):
        reference = axis_of(w('xyxyx'))
        translate = axis_of(conjugate(w('YX'), w('xyxyx')))
        result = axis_intersection(reference, translate)
        self.assertEqual(result.kind, IntersectionResult.SEGMENT)
        self.assertEqual(result.label, w('xyx'))
        self.assertEqual(result.start, TreeVertex(EMPTY))

    def test_conjugating_by_a_letter_overlaps_one_edge(self):
        reference = axis_of(w('xyxyx'))
        result = axis_intersection(reference, axis_of(conjugate(w('X'), w('xyxyx'))))
        self.assertEqual(result.kind, IntersectionResult.SEGMENT)
        self.assertEqual(result.label, w('x'))
        self.assertEqual(result.start, TreeVertex(w('X')))

    def test_disjoint_axes(self):
        result = axis_intersection(axis_of(w('x')), axis_of(w('yxY')))
        self.assertEqual(result.kind, IntersectionResult.EMPTY_KIND)

    def test_labels_read_in_first_orientation(self):
        reference = axis_of(w('xyxyx'))
        translate = translate_axis(w('YX'), reference)
        forward = axis_intersection(reference, translate)
        backward = axis_intersection(axis_of(w('XYXYX')), translate)
        self.assertEqual(forward.label, w('xyx'))
        self.assertEqual(backward.label, w('XYX'))

    def test_json_shape(self):
        result = axis_intersection(axis_of(w('xyxyx')), axis_of(conjugate(w('YX'), w('xyxyx'))))
        self.assertEqual(result.to_json(), {'kind': 'segment', 'start': '', 'label': 'xyx'})

    def test_agrees_with_window_oracle(self):
        rng = random.Random(11)
        cores = list(cyclically_reduced(1, 6))
        conjugators = list(enumerate_reduced_up_to(3))
        for _ in range(1500):
            first = translate_axis(rng.choice(conjugators), axis_of(rng.choice(cores)))
            second = translate_axis(rng.choice(conjugators), axis_of(rng.choice(cores)))
            radius = (len(first.conjugator) + len(second.conjugator)
                      + 2 * max(len(first.core), len(second.core)) + 2)
            result = axis_intersection(first, second)
            with self.subTest(first=first.to_json(), second=second.to_json()):
                if result.kind == IntersectionResult.LINE:
                    for position in range(-radius, radius + 1):
                        self.assertTrue(second.contains(first.vertex(position)))
                    continue
                expected = window_intersection(first, second, radius)
                self.assertEqual(vertex_set(first, result), expected)
                if len(expected) == 1:
                    self.assertEqual(result.kind, IntersectionResult.VERTEX)
                elif expected:
                    self.assertEqual(result.kind, IntersectionResult.SEGMENT)

    def test_distinct_conjugate_axes_overlap_at_most_two_short(self):
        conjugators = list(enumerate_reduced_up_to(3))
        for core in cyclically_reduced(2, 6):
            reference = axis_of(core)
            for g in conjugators:
                result = axis_intersection(reference, translate_axis(g, reference))
                if result.kind == IntersectionResult.SEGMENT:
                    self.assertLessEqual(len(result.label), len(core) - 2, (core, g))


class AxisWindowTests(SimpleTestCase):
    def test_generator_window(self):
        window = axis_window(axis_of(w('x')), 2)
        self.assertEqual({str(v) for v in window}, {'XX', 'X', '', 'x', 'xx'})

    def test_contains_prefixes(self):
        window = {str(v) for v in axis_window(axis_of(w('xy')), 2)}
        self.assertTrue({'', 'x', 'xy'} <= window)

    def test_grows_linearly(self):
        axis = axis_of(w('xxyX'))
        for radius in range(1, 8):
            self.assertLessEqual(len(axis_window(axis, radius + 1)) - len(axis_window(axis, radius)), 2)


class TranslateAxisTests(SimpleTestCase):
    def test_identity_action(self):
        axis = axis_of(w('xyxyx'))
        self.assertEqual(translate_axis(EMPTY, axis), axis)

    def test_core_is_a_rotation(self):
        translated = translate_axis(w('x'), axis_of(w('xyxyx')))
        self.assertIn(translated.core.letters, {r.letters for r in rotations(axis_of(w('xyxyx')).core)})

    def test_matches_vertex_set_image(self):
        rng = random.Random(5)
        pool = [word for word in enumerate_reduced_up_to(6) if word]
        for _ in range(300):
            g, h = rng.choice(pool), rng.choice(pool)
            axis = axis_of(h)
            translated = translate_axis(g, axis)
            self.assertEqual(translated, axis_of(conjugate(g, h)))
            for position in range(-6, 7):
                image = TreeVertex(concat(g, axis.vertex(position).address))
                self.assertTrue(translated.contains(image), (g, h, position))

    def test_equivariance(self):
        rng = random.Random(3)
        pool = list(enumerate_reduced_up_to(4))
        for _ in range(300):
            g, h = rng.choice(pool), rng.choice(pool)
            axis = axis_of(w('xxyXyy'))
            left = translate_axis(g, translate_axis(h, axis))
            right = translate_axis(concat(g, h), axis)
            self.assertTrue(left.same_line(right))

    def test_element_translates_by_core_length(self):
        for element in [w('xyxyx'), w('xyX'), w('yxYYxx'), w('xxyXX')]:
            axis = axis_of(element)
            for position in range(-8, 9):
                moved = TreeVertex(concat(element, axis.vertex(position).address))
                self.assertEqual(moved, axis.vertex(position + len(axis.core)))


class AxisCommandTests(SimpleTestCase):
    def test_axis_command(self):
        out = StringIO()
        call_command('axis', 'xyX', stdout=out)
        payload = json.loads(out.getvalue())
        self.assertEqual(payload['axis'], {'conjugator': 'x', 'core': 'y'})
        self.assertEqual(payload['translation_length'], 1)

    def test_identity_is_an_error(self):
        with self.assertRaises(CommandError):
            call_command('axis', '', stdout=StringIO())

    def test_intersect_command(self):
        out = StringIO()
        call_command('intersect', 'xyxyx', 'xyxxy', stdout=out, stderr=StringIO())
        payload = json.loads(out.getvalue())
        self.assertEqual(payload['intersection'], {'kind': 'segment', 'start': '', 'label': 'xyx'})


class TreesApiTests(SimpleTestCase):
    def test_axis_endpoint(self):
        response = self.client.get('/api/trees/axis/', {'element': 'xyxyx'})
        self.assertEqual(response.json()['axis'], {'conjugator': '', 'core': 'xyxyx'})

    def test_identity_rejected(self):
        response = self.client.get('/api/trees/axis/', {'element': ''})
        self.assertEqual(response.status_code, 400)

    def test_intersect_endpoint(self):
        response = self.client.get('/api/trees/intersect/', {'first': 'x', 'second': 'y'})
        self.assertEqual(response.json()['intersection'], {'kind': 'vertex', 'start': '', 'label': ''})
