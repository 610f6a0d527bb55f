from django.core.management.base import BaseCommand, CommandError

from axislab.reporting import dump_report
from overlaps.tripods import tripod_config
from words.words import CyclicWord, WordError, parse_word


class Command(BaseCommand):
    help = 'Overlaps of the axis of W with the axes of two conjugates g1 W g1^-1 and g2 W g2^-1'

    def add_arguments(self, parser):
        parser.add_argument('--word', required=True, help="Cyclically reduced word W")
        parser.add_argument('--g1', required=True, help="First conjugator")
        parser.add_argument('--g2', required=True, help="Second conjugator")
        parser.add_argument('--out', help="Write the JSON report to this file instead of stdout")

    def handle(self, *args, **options):
        try:
            report = tripod_config(
                CyclicWord.parse(options['word']), parse_word(options['g1']), parse_word(options['g2']),
            )
        except WordError as e:
            raise CommandError(str(e))

        self.stderr.write(
            f"U={report.U} V={report.V} meet={report.uv_meet.kind} covers={report.covers} excess={report.excess}"
        )
        dump_report(report.to_json(), out=options['out'], stdout=self.stdout)
