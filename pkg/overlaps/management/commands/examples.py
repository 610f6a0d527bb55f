import time

from django.core.management.base import BaseCommand

from axislab.reporting import dump_report
from overlaps.tripods import EXAMPLES


class Command(BaseCommand):
    help = 'Recompute the four worked overlap examples'

    def add_arguments(self, parser):
        parser.add_argument('--out', help="Write the JSON report to this file instead of stdout")

    def handle(self, *args, **options):
        started = time.monotonic()
        reports = []
        for example in EXAMPLES:
            report = example.report()
            reports.append({'name': example.name, **report.to_json()})
            self.stderr.write(f"{example.name}: U={report.U} V={report.V} union={report.union_label}")

        dump_report({'examples': reports}, out=options['out'], stdout=self.stdout)
        self.stderr.write(f"{len(reports)} examples in {time.monotonic() - started:.3f}s")
