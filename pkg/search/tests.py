from io import StringIO
from pathlib import Path
import json
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from decomposition.theorem import (
    ConjectureWitness, Decomposition, conjecture_form_check, conjecture_near_miss, conjugate_readings,
    verify_decomposition,
)
from words.words import CyclicWord, WordError, enumerate_reduced, parse_word
from .enumeration import canonical, enumerate_cyclically_reduced, orbit
from .harness import NO_FORM, WITNESS, SearchOptions, analyze_word, oracle_check, run_search, theorem2_for
from .models import SearchRun
from .runs import MatchRun, coinciding_shifts, configs_for, match_runs


def w(text):
    return parse_word(text)


def c(text):
    return CyclicWord.parse(text)


def cyclic_words(length):
    for word in enumerate_reduced(length):
        if word.is_cyclically_reduced:
            yield CyclicWord(word)


class CollectingWriter:
    def __init__(self):
        self.records = []

    def write(self, record):
        self.records.append(record)


class EnumerationTests(SimpleTestCase):
    def test_small_counts(self):
        counts = [len(list(enumerate_cyclically_reduced(n, False))) for n in (1, 2, 3)]
        self.assertEqual(counts, [4, 12, 28])

    def test_counts_match_closed_form(self):
        for n in range(1, 7):
            words = [cyclic.letters for cyclic in enumerate_cyclically_reduced(n, False)]
            self.assertEqual(len(words), 3 ** n + 2 + (-1) ** n)
            self.assertEqual(words, [cyclic.letters for cyclic in cyclic_words(n)])

    def test_orbit_representatives(self):
        self.assertEqual([cyclic.letters for cyclic in enumerate_cyclically_reduced(1, True)], ['x'])
        self.assertEqual([cyclic.letters for cyclic in enumerate_cyclically_reduced(2, True)], ['xx', 'xy'])
        self.assertEqual(canonical('YX'), 'xy')

    def test_orbits_cover_every_word(self):
        for n in range(1, 6):
            covered = set()
            for representative in enumerate_cyclically_reduced(n, True):
                covered.update(orbit(representative.letters))
            self.assertEqual(covered, {cyclic.letters for cyclic in cyclic_words(n)})

    def test_rejects_empty_length(self):
        with self.assertRaises(WordError):
            list(enumerate_cyclically_reduced(0, False))


class MatchRunTests(SimpleTestCase):
    def test_overlapping_run(self):
        self.assertIn(MatchRun(2, 0, 3, w('xyx')), match_runs(c('xyxyx')))

    def test_no_runs(self):
        self.assertEqual(match_runs(c('xy')), [])

    def test_worked_example_runs(self):
        runs = match_runs(c('yxyyxyyx'))
        self.assertIn(MatchRun(3, 0, 6, w('yxyyxy')), runs)
        self.assertIn(MatchRun(2, 6, 9, w('yxy')), runs)

    def test_runs_are_maximal(self):
        for n in range(2, 7):
            for cyclic in cyclic_words(n):
                for run in match_runs(cyclic):
                    for i in range(run.lo, run.hi):
                        self.assertEqual(cyclic.letter_at(i), cyclic.letter_at(i + run.shift))
                    self.assertNotEqual(cyclic.letter_at(run.lo - 1), cyclic.letter_at(run.lo - 1 + run.shift))
                    self.assertNotEqual(cyclic.letter_at(run.hi), cyclic.letter_at(run.hi + run.shift))
                    self.assertLessEqual(len(run), n - 2)

    def test_coinciding_shifts(self):
        self.assertEqual(coinciding_shifts(c('xyxy')), [2])
        self.assertEqual(coinciding_shifts(c('xyy')), [])


class ConfigTests(SimpleTestCase):
    def test_worked_example_config(self):
        configs = configs_for(c('yxyyxyyx'))
        config = next(config for config in configs if config.run_u == MatchRun(3, 0, 6, w('yxyyxy')))
        self.assertEqual(config.run_v, MatchRun(2, 6, 9, w('yxy')))
        self.assertEqual((config.u_interval, config.v_interval), ((0, 6), (6, 9)))
        self.assertEqual((config.shift_u, config.shift_v), (3, 2))

    def test_short_word_has_none(self):
        self.assertEqual(configs_for(c('xy')), [])

    def test_configs_cover_the_copy(self):
        for n in range(2, 8):
            for cyclic in enumerate_cyclically_reduced(n, True):
                for config in configs_for(cyclic):
                    self.assertGreaterEqual(len(config.run_u) + len(config.run_v), n)
                    self.assertEqual(config.run_v.lo, config.run_u.hi)
                    self.assertEqual(config.copy.periodic(*config.u_interval), config.run_u.label)
                    self.assertEqual(config.copy.periodic(*config.v_interval), config.run_v.label)

    def test_decompositions_verify(self):
        for n in range(2, 8):
            for cyclic in enumerate_cyclically_reduced(n, True):
                for config in configs_for(cyclic):
                    outcome = theorem2_for(config)
                    self.assertTrue(outcome.ok, config.to_json())
                    self.assertTrue(verify_decomposition(outcome.word, outcome.decomposition))

    def test_oracle_realizes_every_config(self):
        for n in range(2, 8):
            for cyclic in enumerate_cyclically_reduced(n, True):
                for config in configs_for(cyclic):
                    self.assertTrue(oracle_check(config), config.to_json())

    def test_worked_example_overhangs_by_one(self):
        config = next(config for config in configs_for(c('yxyyxyyx')) if config.run_u.interval == (0, 6))
        self.assertEqual(config.excess, 1)
        self.assertEqual(config.to_json()['excess'], 1)


class Theorem2DispatchTests(SimpleTestCase):
    def test_overhanging_cover_uses_a_separated_copy(self):
        config = next(config for config in configs_for(c('xxyxxyxyxy'))
                      if config.run_u == MatchRun(3, 8, 14, w('xyxxyx')))
        self.assertEqual(config.run_v, MatchRun(2, 14, 19, w('xyxyx')))
        self.assertEqual(config.excess, 1)

        outcome = theorem2_for(config)
        self.assertTrue(outcome.separated)
        self.assertEqual(outcome.rotation, 1)
        self.assertEqual(outcome.decomposition, Decomposition(w(''), w('xyxxyxy'), 1, w('xyx')))
        self.assertTrue(verify_decomposition(outcome.word, outcome.decomposition))
        self.assertTrue(outcome.to_json()['separated'])

    def test_overlapping_copy_preferred(self):
        config = next(config for config in configs_for(c('yxyyxyyx')) if config.run_u.interval == (0, 6))
        outcome = theorem2_for(config)
        self.assertFalse(outcome.separated)
        self.assertEqual((outcome.rotation, outcome.inverted), (0, False))

    def test_exact_covers_never_separate(self):
        for n in range(2, 10):
            for cyclic in enumerate_cyclically_reduced(n, True):
                for config in configs_for(cyclic):
                    outcome = theorem2_for(config)
                    self.assertTrue(outcome.ok, config.to_json())
                    if config.excess == 0:
                        self.assertFalse(outcome.separated, config.to_json())


class ConjectureReadingTests(SimpleTestCase):
    def test_witness_matches_both_translates(self):
        for n in range(3, 9):
            for cyclic in enumerate_cyclically_reduced(n, True):
                for config in configs_for(cyclic):
                    copy = config.copy
                    readings_u = conjugate_readings(copy, config.u_interval, config.shift_u)
                    readings_v = conjugate_readings(copy, config.v_interval, config.shift_v)
                    witness = conjecture_form_check(copy, config)
                    found = [witness] if witness else []
                    near_miss = conjecture_near_miss(copy, config)
                    if near_miss:
                        self.assertNotEqual(near_miss.rotation, 0)
                        found.append(near_miss)
                    for match in found:
                        family = copy.rotate(match.rotation)
                        self.assertEqual(match.D.letters + match.C.letters * match.k, family.letters)
                        self.assertIn(match.conjugate(match.r).letters, readings_u)
                        self.assertIn(match.conjugate(match.s).letters, readings_v)
                        self.assertNotEqual(match.r, match.s)

    def test_readings_contain_the_overlaps(self):
        for n in range(3, 8):
            for cyclic in enumerate_cyclically_reduced(n, True):
                for config in configs_for(cyclic):
                    for reading in conjugate_readings(config.copy, config.u_interval, config.shift_u):
                        self.assertIn(config.run_u.label.letters, reading)


class AnalyzeWordTests(SimpleTestCase):
    def test_worked_example_record(self):
        record = analyze_word(c('yxyyxyyx'), SearchOptions(oracle_sample_rate=1.0))
        config_record = next(r for r in record.configs if r.config.run_u.interval == (0, 6))
        self.assertEqual(config_record.theorem2.decomposition, Decomposition(w(''), w('yxy'), 2, w('yx')))
        self.assertEqual(config_record.conjecture, WITNESS)
        self.assertEqual(config_record.witness, ConjectureWitness(w('yx'), w('yyx'), 2, 2, 0, 0))
        self.assertIsNone(config_record.near_miss)
        self.assertIs(config_record.oracle, True)
        self.assertFalse(config_record.counterexample)

    def test_counterexample_keeps_its_near_miss(self):
        record = analyze_word(c('xxyxyxy'), SearchOptions(oracle_sample_rate=0.0))
        config_record = next(r for r in record.configs
                             if r.config.run_u.interval == (3, 8) and r.config.shift_v == 4)
        self.assertEqual(config_record.conjecture, NO_FORM)
        self.assertTrue(config_record.counterexample)
        self.assertEqual(config_record.near_miss, ConjectureWitness(w('yxyxy'), w('x'), 2, 1, 0, 6))
        # counterexamples are always re-checked in the tree
        self.assertIs(config_record.oracle, True)

        payload = config_record.to_json()
        self.assertTrue(payload['counterexample'])
        self.assertIsNone(payload['conjecture']['witness'])
        self.assertEqual(payload['conjecture']['near_miss']['rotation'], 6)
        self.assertTrue(record.counterexample)

    def test_record_json(self):
        payload = analyze_word(c('yxyyxyyx'), SearchOptions()).to_json()
        self.assertEqual(payload['W'], 'yxyyxyyx')
        self.assertEqual(payload['coinciding_shifts'], [])
        self.assertTrue(payload['configs'])
        first = payload['configs'][0]
        self.assertIn('decomposition', first['theorem2'])
        self.assertIn('tail_pair', first['theorem2'])

    def test_unsampled_words_skip_the_oracle(self):
        record = analyze_word(c('yxyyxyyx'), SearchOptions(oracle_sample_rate=0.0))
        self.assertTrue(all(r.oracle is None for r in record.configs if not r.counterexample))


class RunSearchTests(SimpleTestCase):
    def test_no_counterexamples_at_length_three(self):
        summary = run_search(3, SearchOptions(symmetry=False))
        self.assertEqual(summary.counterexamples, 0)
        self.assertEqual(summary.words_scanned, 4 + 12 + 28)

    def test_theorem2_total_to_length_five(self):
        summary = run_search(5, SearchOptions(symmetry=False))
        self.assertEqual(summary.theorem2_failures, 0)
        self.assertEqual(summary.theorem2_successes, summary.configs_found)

    def test_theorem2_total_to_length_ten(self):
        summary = run_search(10, SearchOptions(oracle_sample_rate=0.0))
        self.assertEqual(summary.theorem2_failures, 0)
        self.assertEqual(summary.theorem2_successes, summary.configs_found)
        self.assertEqual(summary.theorem2_separated, 2)
        self.assertEqual(summary.oracle_mismatches, 0)

    def test_summary_keys(self):
        summary = run_search(2, SearchOptions())
        self.assertEqual(set(summary.to_json()), {
            'words_scanned', 'configs_found', 'theorem2_successes', 'theorem2_separated',
            'theorem2_failures', 'conjecture_witnesses', 'near_misses', 'counterexamples',
            'oracle_checks', 'oracle_mismatches', 'max_len', 'symmetry',
        })

    def test_rejects_short_search(self):
        with self.assertRaises(WordError):
            run_search(1, SearchOptions())

    def test_parallel_output_matches_serial(self):
        options = SearchOptions(oracle_sample_rate=0.5, oracle_seed=3)
        serial, parallel = CollectingWriter(), CollectingWriter()
        first = run_search(6, options, jobs=1, writer=serial)
        second = run_search(6, options, jobs=2, writer=parallel)
        self.assertEqual(serial.records, parallel.records)
        self.assertEqual(first.to_json(), second.to_json())


class SearchCommandTests(TestCase):
    def test_summary_and_record(self):
        out = StringIO()
        call_command('search', '--max-len', '3', '--jobs', '1', '--record', stdout=out, stderr=StringIO())
        payload = json.loads(out.getvalue())
        self.assertEqual(payload['v'], 1)
        self.assertEqual(payload['counterexamples'], 0)

        run = SearchRun.objects.get()
        self.assertEqual(run.max_len, 3)
        self.assertEqual(run.words_scanned, payload['words_scanned'])
        self.assertTrue(run.is_clean())

    def test_json_lines_report(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'report.jsonl'
            out = StringIO()
            call_command('search', '--max-len', '3', '--no-symmetry', '--jobs', '1', '--out', str(path),
                         stdout=out, stderr=StringIO())
            lines = path.read_text(encoding='utf-8').splitlines()
        summary = json.loads(out.getvalue())
        self.assertEqual(len(lines), summary['words_scanned'])
        self.assertEqual(len(lines), 44)
        self.assertEqual(json.loads(lines[0])['W'], 'x')
        self.assertFalse(summary['symmetry'])

    def test_counterexamples_exit_with_status_two(self):
        out = StringIO()
        with self.assertRaises(CommandError) as caught:
            call_command('search', '--max-len', '7', '--jobs', '1', '--record', stdout=out, stderr=StringIO())
        self.assertEqual(caught.exception.returncode, 2)
        payload = json.loads(out.getvalue())
        self.assertGreater(payload['counterexamples'], 0)
        self.assertEqual(payload['theorem2_failures'], 0)
        self.assertFalse(SearchRun.objects.get().is_clean())
