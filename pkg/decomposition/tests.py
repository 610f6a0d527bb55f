from io import StringIO
from types import SimpleNamespace
import json

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from overlaps.tripods import EXAMPLES, Meet
from words.periodicity import periodic_union
from words.words import CyclicWord, enumerate_reduced, parse_word
from .theorem import (
    ConjectureWitness, Decomposition, DecompositionError, OverlapResult, conjecture_form_check,
    conjecture_near_miss, conjugate_readings, find_nonequivalent_occurrence, overlap_decompose,
    power_splits, separated_decompose, tail_pair, theorem2_decompose, verify_decomposition,
)


def w(text):
    return parse_word(text)


def c(text):
    return CyclicWord.parse(text)


def decomposition(B, C, k, I):
    return Decomposition(w(B), w(C), k, w(I))


class NonequivalentOccurrenceTests(SimpleTestCase):
    def test_overlapping_copy(self):
        self.assertEqual(find_nonequivalent_occurrence(c('xyxyx'), w('xyx')), [2])

    def test_long_prefix(self):
        self.assertEqual(find_nonequivalent_occurrence(c('yxyyxyyx'), w('yxyyxy')), [3])

    def test_single_letter_once_per_period(self):
        self.assertEqual(find_nonequivalent_occurrence(c('xy'), w('x')), [])

    def test_requires_prefix_position(self):
        with self.assertRaises(DecompositionError) as caught:
            find_nonequivalent_occurrence(c('xyxyx'), w('yx'))
        self.assertEqual(caught.exception.outcome, DecompositionError.NOT_AN_OCCURRENCE)


class Theorem2Tests(SimpleTestCase):
    def test_point_meeting_examples(self):
        self.assertEqual(theorem2_decompose(c('yxyyxyyx'), 6), decomposition('', 'yxy', 2, 'yx'))
        self.assertEqual(theorem2_decompose(c('yxyxyyxyxyyx'), 10), decomposition('', 'yxyxy', 2, 'yx'))

    def test_reach_equal_to_length(self):
        result = theorem2_decompose(c('xyxyx'), 3)
        self.assertEqual(result, decomposition('x', 'yx', 2, ''))

    def test_square_is_degenerate(self):
        with self.assertRaises(DecompositionError) as caught:
            theorem2_decompose(c('xyyxyy'), 3)
        self.assertEqual(caught.exception.outcome, DecompositionError.DEGENERATE)

    def test_no_copy_inside_prefix(self):
        with self.assertRaises(DecompositionError) as caught:
            theorem2_decompose(c('xxyy'), 2)
        self.assertEqual(caught.exception.outcome, DecompositionError.UNREALIZED)

    def test_prefix_length_checked(self):
        with self.assertRaises(DecompositionError) as caught:
            theorem2_decompose(c('xy'), 2)
        self.assertEqual(caught.exception.outcome, DecompositionError.PRECONDITION)

    def test_results_always_verify(self):
        for length in range(2, 9):
            for word in enumerate_reduced(length):
                if not word.is_cyclically_reduced:
                    continue
                cyclic = CyclicWord(word)
                for u_len in range(1, length):
                    try:
                        result = theorem2_decompose(cyclic, u_len)
                    except DecompositionError:
                        continue
                    self.assertTrue(verify_decomposition(cyclic, result), (word, u_len))


class SeparatedDecomposeTests(SimpleTestCase):
    def test_far_copy_gives_the_period(self):
        self.assertEqual(separated_decompose(c('xyxxyxyxyx'), 6), decomposition('', 'xyxxyxy', 1, 'xyx'))

    def test_overlapping_copy_also_reaches(self):
        self.assertEqual(separated_decompose(c('yxyyxyyx'), 6), decomposition('', 'yxy', 2, 'yx'))

    def test_no_copy_reaching_the_end(self):
        with self.assertRaises(DecompositionError) as caught:
            separated_decompose(c('xxyy'), 2)
        self.assertEqual(caught.exception.outcome, DecompositionError.UNREALIZED)

    def test_results_always_verify(self):
        for length in range(2, 9):
            for word in enumerate_reduced(length):
                if not word.is_cyclically_reduced:
                    continue
                cyclic = CyclicWord(word)
                for u_len in range(1, length):
                    try:
                        result = separated_decompose(cyclic, u_len)
                    except DecompositionError:
                        continue
                    self.assertTrue(verify_decomposition(cyclic, result), (word, u_len))


class OverlapDecomposeTests(SimpleTestCase):
    def test_contains(self):
        result = overlap_decompose(c('yxyyxyyx'), 6, 3)
        self.assertEqual(result.outcome, OverlapResult.CONTAINS)
        self.assertEqual(result.union, w('yxyyxyyxy'))

    def test_equals(self):
        result = overlap_decompose(c('xyxyx'), 3, 2)
        self.assertEqual(result.outcome, OverlapResult.EQUALS)
        self.assertEqual(result.decomposition.I, w(''))
        self.assertGreater(result.decomposition.k, 1)

    def test_inconclusive_is_returned(self):
        result = overlap_decompose(c('xyxyxx'), 3, 2)
        self.assertEqual(result.outcome, OverlapResult.INCONCLUSIVE)
        self.assertIsNone(result.decomposition)
        self.assertEqual(result.union, w('xyxyx'))

    def test_rejects_missing_copy(self):
        with self.assertRaises(DecompositionError) as caught:
            overlap_decompose(c('yxyyxyyx'), 6, 2)
        self.assertEqual(caught.exception.outcome, DecompositionError.NOT_AN_OCCURRENCE)

    def test_union_has_prefix_and_shifted_copy(self):
        for word in enumerate_reduced(7):
            if not word.is_cyclically_reduced:
                continue
            cyclic = CyclicWord(word)
            for u_len in range(2, 7):
                U = word[:u_len]
                for shift in find_nonequivalent_occurrence(cyclic, U):
                    if shift >= u_len:
                        continue
                    union = overlap_decompose(cyclic, u_len, shift).union
                    self.assertEqual(union, periodic_union(U, shift))
                    self.assertEqual(union.letters[:u_len], U.letters)
                    self.assertEqual(union.letters[shift:shift + u_len], U.letters)


class VerifyDecompositionTests(SimpleTestCase):
    def test_valid(self):
        self.assertTrue(verify_decomposition(c('yxyyxyyx'), decomposition('', 'yxy', 2, 'yx')))

    def test_perturbed(self):
        self.assertFalse(verify_decomposition(c('yxyyxyyx'), decomposition('', 'yxy', 2, 'xy')))

    def test_trivial_decomposition(self):
        for text in ['x', 'xy', 'xxyXY', 'yxyyxyyx']:
            self.assertTrue(verify_decomposition(c(text), decomposition('', text, 1, '')))

    def test_zero_power_rejected(self):
        self.assertFalse(verify_decomposition(c('xy'), decomposition('xy', 'x', 0, '')))


class TailPairTests(SimpleTestCase):
    def test_pair(self):
        T, B = tail_pair(c('yxyyxyyx'), decomposition('', 'yxy', 2, 'yx'))
        self.assertEqual((T, B), (w('y'), w('')))

    def test_requires_initial_I(self):
        with self.assertRaises(DecompositionError):
            tail_pair(c('yxyyxyyx'), decomposition('', 'yxy', 2, 'xy'))


class ConjectureFormTests(SimpleTestCase):
    def config(self, shift_u, shift_v, u_interval, v_interval, kind=Meet.POINT, covers=True):
        return SimpleNamespace(
            covers=covers, uv_meet=Meet(kind), shift_u=shift_u, shift_v=shift_v,
            u_interval=u_interval, v_interval=v_interval,
        )

    def test_power_splits(self):
        self.assertEqual(power_splits(w('yxyyxyyx')), [(w('yx'), w('yyx'), 2)])
        self.assertEqual(power_splits(w('xxxx')), [(w('xx'), w('x'), 2), (w('x'), w('x'), 3),
                                                  (w(''), w('x'), 4), (w(''), w('xx'), 2)])

    def test_no_split_for_square_free_words(self):
        self.assertEqual(power_splits(w('xy')), [])

    def test_readings_slide_over_the_overlap(self):
        self.assertEqual(
            conjugate_readings(c('yxyyxyyx'), (0, 6), 3),
            {'xyyxyyxy', 'yyxyyxyx', 'yxyyxyxy'},
        )

    def test_worked_example_is_a_witness(self):
        witness = conjecture_form_check(c('yxyyxyyx'), self.config(3, 2, (0, 6), (6, 9)))
        self.assertEqual(witness, ConjectureWitness(w('yx'), w('yyx'), 2, 2, 0, 0))
        self.assertEqual(witness.conjugate(2), w('yyxyyxyx'))
        # the other reading of the second translate
        self.assertEqual(witness.conjugate(1), w('yyxyxyyx'))

    def test_no_witness_without_a_power_ending(self):
        config = self.config(5, 4, (0, 5), (5, 8))
        self.assertIsNone(conjecture_form_check(c('xyxyxxy'), config))
        self.assertEqual(
            conjecture_near_miss(c('xyxyxxy'), config),
            ConjectureWitness(w('yxyxy'), w('x'), 2, 1, 0, 6),
        )

    def test_missing_shift_has_no_form(self):
        config = self.config(None, 2, (0, 6), (6, 9))
        self.assertIsNone(conjecture_form_check(c('yxyyxyyx'), config))
        self.assertIsNone(conjecture_near_miss(c('yxyyxyyx'), config))

    def test_segment_meet_rejected(self):
        report = EXAMPLES[0].report()
        with self.assertRaises(DecompositionError) as caught:
            conjecture_form_check(report.W, report)
        self.assertEqual(caught.exception.outcome, DecompositionError.PRECONDITION)


class DecomposeCommandTests(SimpleTestCase):
    def test_decompose(self):
        out = StringIO()
        call_command('decompose', '--word', 'yxyyxyyx', '--u-len', '6', stdout=out)
        self.assertEqual(json.loads(out.getvalue()), {'v': 1, 'B': '', 'C': 'yxy', 'k': 2, 'I': 'yx'})

    def test_single_shift(self):
        out = StringIO()
        call_command('decompose', '--word', 'xyxyxx', '--u-len', '3', '--shift', '2', stdout=out)
        self.assertEqual(json.loads(out.getvalue())['outcome'], 'inconclusive')

    def test_degenerate_is_an_error(self):
        with self.assertRaises(CommandError):
            call_command('decompose', '--word', 'xyyxyy', '--u-len', '3', stdout=StringIO())


class DecomposeApiTests(SimpleTestCase):
    def test_decompose_endpoint(self):
        response = self.client.get('/api/decomposition/decompose/', {'word': 'yxyxyyxyxyyx', 'u_len': 10})
        payload = response.json()
        self.assertEqual(payload['decomposition'], {'B': '', 'C': 'yxyxy', 'k': 2, 'I': 'yx'})
        self.assertEqual(payload['tail_pair'], {'T': 'xyx', 'B': ''})

    def test_outcome_on_failure(self):
        response = self.client.get('/api/decomposition/decompose/', {'word': 'xxyy', 'u_len': 2})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()['outcome'], 'hypotheses-unrealized')

    def test_u_len_bounded_by_word(self):
        response = self.client.get('/api/decomposition/decompose/', {'word': 'xy', 'u_len': 2})
        self.assertEqual(response.status_code, 400)
