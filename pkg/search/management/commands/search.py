import time

from django.core.management.base import BaseCommand, CommandError

from axislab.reporting import JsonLinesWriter, dump_report
from axislab.runconfig import RunConfig
from search.harness import SearchOptions, run_search
from search.models import SearchRun
from words.words import WordError


class Command(BaseCommand):
    help = 'Scan every cyclically reduced word up to --max-len for covering overlap configurations'

    def add_arguments(self, parser):
        parser.add_argument('--max-len', type=int, required=True, help="Longest word length to scan")
        parser.add_argument('--no-symmetry', dest='symmetry', action='store_const', const=False,
                            help="Scan every word instead of one per symmetry orbit")
        parser.add_argument('--jobs', type=int, help="Worker processes (default AXISLAB_JOBS)")
        parser.add_argument('--out', help="Write one JSON record per word to this file")
        parser.add_argument('--record', action='store_true', help="Store the summary as a SearchRun")

    def handle(self, *args, **options):
        run_config = RunConfig.from_settings(jobs=options['jobs'], symmetry=options['symmetry'], out=options['out'])
        search_options = SearchOptions(
            symmetry=run_config.symmetry,
            oracle_sample_rate=run_config.oracle_sample_rate,
            oracle_seed=run_config.oracle_seed,
        )

        started = time.monotonic()
        try:
            with JsonLinesWriter(run_config.out) as writer:
                summary = run_search(options['max_len'], search_options, jobs=run_config.jobs, writer=writer)
        except WordError as e:
            raise CommandError(str(e))
        duration = time.monotonic() - started

        dump_report(summary.to_json(), stdout=self.stdout)
        self.stderr.write(
            f"{summary.words_scanned} words, {summary.configs_found} configurations in {duration:.2f}s"
        )
        if options['record']:
            run = SearchRun.record(
                summary,
                jobs=run_config.jobs,
                oracle_seed=run_config.oracle_seed,
                report_path=run_config.out,
                duration_seconds=duration,
            )
            self.stderr.write(f"Recorded {run}")

        if summary.theorem2_failures:
            raise CommandError(f"{summary.theorem2_failures} configurations admit no Theorem 2 decomposition")
        if summary.counterexamples:
            raise CommandError(f"{summary.counterexamples} counterexample candidates found", returncode=2)
