from io import StringIO
import json

from django.core.management import call_command
from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from .periodicity import (
    PeriodicityError, periodic_union, periodicity_decompose, primitive_root, smallest_period,
)
from .words import (
    ALPHABET, EMPTY, CyclicWord, WordError, WordParseError, commutator, concat,
    conjugate, cyclic_reduce, enumerate_all, enumerate_reduced, enumerate_reduced_up_to,
    free_reduce, invert, is_initial_subword, is_terminal_subword, parse_word,
)

words_text = st.text(alphabet=ALPHABET, max_size=40)


def w(text):
    return parse_word(text)


class ParseWordTests(SimpleTestCase):
    def test_transliterates_letters(self):
        self.assertEqual(w('xyX').letters, 'xyX')

    def test_empty(self):
        self.assertEqual(w(''), EMPTY)
        self.assertEqual(len(w('')), 0)

    def test_reports_offending_index(self):
        with self.assertRaises(WordParseError) as caught:
            w('xz')
        self.assertEqual(caught.exception.index, 1)


class ReductionTests(SimpleTestCase):
    def test_inverse_pair_cancels(self):
        self.assertEqual(free_reduce(w('xX')), EMPTY)

    def test_single_cancellation(self):
        self.assertEqual(free_reduce(w('xyYx')), w('xx'))

    def test_conjugating_example_word(self):
        self.assertEqual(free_reduce(w('X' + 'xyxyx' + 'x')), w('yxyxx'))

    def test_cyclic_reduce_peels_one_layer(self):
        result = cyclic_reduce(w('xyX'))
        self.assertEqual(result.conjugator, w('x'))
        self.assertEqual(result.core.core, w('y'))

    def test_cyclic_reduce_keeps_cyclically_reduced_word(self):
        result = cyclic_reduce(w('xyxyx'))
        self.assertEqual(result.conjugator, EMPTY)
        self.assertEqual(result.core.letters, 'xyxyx')

    def test_cyclic_reduce_conjugate(self):
        reduced = free_reduce(w('x' + 'xyxyx' + 'X'))
        self.assertEqual(reduced, w('xxyxy'))
        result = cyclic_reduce(reduced)
        self.assertEqual((result.conjugator, result.core.letters), (EMPTY, 'xxyxy'))

    def test_cyclic_reduce_empty(self):
        result = cyclic_reduce(EMPTY)
        self.assertEqual((result.conjugator, result.core.letters), (EMPTY, ''))

    def test_cyclic_reduce_requires_reduced_input(self):
        with self.assertRaises(WordError):
            cyclic_reduce(w('xX'))

    def test_idempotent_exhaustive(self):
        for length in range(0, 10):
            for word in enumerate_all(length):
                once = free_reduce(word)
                self.assertTrue(once.is_reduced)
                self.assertEqual(free_reduce(once), once)

    def test_idempotent_on_one_cancelling_pair(self):
        for length in range(10, 13):
            for word in enumerate_all(length, alphabet='xXy'):
                once = free_reduce(word)
                self.assertTrue(once.is_reduced)
                self.assertEqual(free_reduce(once), once)

    def test_reduced_words_are_fixed(self):
        for word in enumerate_reduced_up_to(12):
            self.assertEqual(free_reduce(word), word)

    @given(words_text)
    def test_idempotent_random(self, text):
        once = free_reduce(w(text))
        self.assertEqual(free_reduce(once), once)

    def test_word_times_inverse_is_trivial(self):
        for word in enumerate_reduced_up_to(7):
            self.assertEqual(concat(word, invert(word)), EMPTY)

    def test_cyclic_reduce_round_trip(self):
        for word in enumerate_reduced_up_to(10):
            result = cyclic_reduce(word)
            expanded = result.expand()
            self.assertTrue(expanded.is_reduced, word)
            self.assertEqual(expanded, word)
            self.assertTrue(result.core.core.is_cyclically_reduced)


class GroupOperationTests(SimpleTestCase):
    def test_invert(self):
        self.assertEqual(invert(w('xy')), w('YX'))

    def test_conjugate_example_word(self):
        self.assertEqual(conjugate(w('YX'), w('xyyxyyx')), w('yxyyxxy'))

    def test_concat_cancels(self):
        self.assertEqual(concat(w('x'), w('X')), EMPTY)

    def test_operators(self):
        self.assertEqual(w('xy') * w('YX'), EMPTY)
        self.assertEqual(~w('xy'), w('YX'))
        self.assertEqual(w('xy') ** 2, w('xyxy'))
        self.assertEqual(w('xy') ** -1, w('YX'))

    def test_commutator_of_generators(self):
        self.assertEqual(commutator(w('x'), w('y')), w('xyXY'))

    @given(words_text, words_text, words_text)
    def test_associative(self, a, b, c):
        u, v, t = free_reduce(w(a)), free_reduce(w(b)), free_reduce(w(c))
        self.assertEqual(concat(concat(u, v), t), concat(u, concat(v, t)))


class SubwordTests(SimpleTestCase):
    def test_initial(self):
        self.assertTrue(is_initial_subword(w('xyx'), w('xyxyx')))

    def test_empty_is_initial_and_terminal(self):
        self.assertTrue(is_initial_subword(EMPTY, w('xy')))
        self.assertTrue(is_terminal_subword(EMPTY, w('xy')))

    def test_terminal_mismatch(self):
        self.assertFalse(is_terminal_subword(w('yx'), w('xy')))


class CyclicWordTests(SimpleTestCase):
    def test_rejects_non_cyclically_reduced(self):
        with self.assertRaises(WordError):
            CyclicWord(w('xyX'))

    def test_rotations_stay_cyclically_reduced(self):
        for length in range(1, 7):
            for word in enumerate_reduced(length):
                if not word.is_cyclically_reduced:
                    continue
                cyclic = CyclicWord(word)
                for offset in range(length):
                    rotated = cyclic.rotate(offset)
                    self.assertEqual(len(rotated), length)

    def test_periodic_reading(self):
        cyclic = CyclicWord(w('xyxyx'))
        self.assertEqual(cyclic.periodic(-2, 3), w('yxxyx'))
        self.assertEqual(cyclic.periodic(3, 3), EMPTY)

    def test_periodization_is_reduced(self):
        cyclic = CyclicWord(w('xxY'))
        self.assertTrue(cyclic.periodic(-6, 12).is_reduced)


def brute_force_periods(letters):
    n = len(letters)
    return [p for p in range(1, n + 1) if letters[p:] == letters[:n - p]]


class PeriodicityTests(SimpleTestCase):
    def test_odd_length_period(self):
        result = periodicity_decompose(w('xyxyx'), 2)
        self.assertEqual((result.B, result.C, result.k), (w('x'), w('yx'), 2))
        self.assertEqual(result.expand(), w('xyxyx'))

    def test_exact_power(self):
        result = periodicity_decompose(w('xyxyxy'), 2)
        self.assertEqual((result.B, result.C, result.k), (EMPTY, w('xy'), 3))

    def test_square(self):
        result = periodicity_decompose(w('yxyyxy'), 3)
        self.assertEqual((result.B, result.C, result.k), (EMPTY, w('yxy'), 2))

    def test_reports_first_mismatch(self):
        with self.assertRaises(PeriodicityError) as caught:
            periodicity_decompose(w('xyxY'), 2)
        self.assertEqual(caught.exception.index, 1)

    def test_shift_out_of_range(self):
        with self.assertRaises(PeriodicityError):
            periodicity_decompose(w('xy'), 2)

    def test_reconstruction_exhaustive(self):
        for word in enumerate_reduced_up_to(12):
            periods = brute_force_periods(word.letters)
            self.assertEqual(smallest_period(word), periods[0] if periods else 0)
            for shift in periods:
                if shift >= len(word):
                    continue
                result = periodicity_decompose(word, shift)
                self.assertEqual(result.expand(), word)
                self.assertTrue(is_terminal_subword(result.B, result.C))

    def test_union_contains_shifted_copy(self):
        for word in enumerate_reduced_up_to(8):
            for shift in brute_force_periods(word.letters):
                if shift >= len(word):
                    continue
                union = periodic_union(word, shift).letters
                self.assertTrue(union.startswith(word.letters))
                self.assertEqual(union[shift:shift + len(word)], word.letters)


class PrimitiveRootTests(SimpleTestCase):
    def test_square(self):
        self.assertEqual(primitive_root(w('xyxy')), (w('xy'), 2))

    def test_primitive(self):
        self.assertEqual(primitive_root(w('xy')), (w('xy'), 1))

    def test_cube(self):
        self.assertEqual(primitive_root(w('xxyxxyxxy'), cyclically_closed=True), (w('xxy'), 3))

    def test_empty_rejected(self):
        with self.assertRaises(WordError):
            primitive_root(EMPTY)

    def test_cyclic_flag_checks_precondition(self):
        with self.assertRaises(WordError):
            primitive_root(w('xyX'), cyclically_closed=True)

    def test_minimal_against_divisor_oracle(self):
        for length in range(1, 13):
            for word in enumerate_reduced(length):
                if not word.is_cyclically_reduced:
                    continue
                root, power = primitive_root(word, cyclically_closed=True)
                divisors = [d for d in range(1, length + 1)
                            if length % d == 0 and word.letters[:d] * (length // d) == word.letters]
                self.assertEqual(len(root), divisors[0])
                self.assertEqual(root.letters * power, word.letters)
                self.assertEqual(primitive_root(root)[1], 1)

    def test_commuting_words_share_root(self):
        pool = [word for word in enumerate_reduced_up_to(5) if word and word.is_cyclically_reduced]
        for u in pool:
            for v in pool:
                if concat(u, v) == concat(v, u):
                    self.assertEqual(primitive_root(u)[0], primitive_root(v)[0], (u, v))


class ReduceCommandTests(SimpleTestCase):
    def test_reduces_to_empty_string(self):
        out = StringIO()
        call_command('reduce', 'xX', stdout=out)
        self.assertEqual(json.loads(out.getvalue()), '')

    def test_cyclic_report_is_versioned(self):
        out = StringIO()
        call_command('reduce', 'xyX', '--cyclic', stdout=out)
        payload = json.loads(out.getvalue())
        self.assertEqual(payload, {'v': 1, 'reduced': 'xyX', 'cyclic': {'conjugator': 'x', 'core': 'y'}})


class ReduceApiTests(SimpleTestCase):
    def test_reduce_endpoint(self):
        response = self.client.get('/api/words/reduce/', {'word': 'xyYx'})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json()['reduced'], 'xx')

    def test_invalid_word(self):
        response = self.client.get('/api/words/reduce/', {'word': 'xz'})
        self.assertEqual(response.status_code, 400)
        self.assertFalse(response.json()['success'])
