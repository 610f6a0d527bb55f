from django.core.management.base import BaseCommand, CommandError

from axislab.reporting import dump_report
from trees.axes import axis_of, translation_length
from words.words import WordError, parse_word


class Command(BaseCommand):
    help = 'Print the axis (conjugator, cyclically reduced core) and translation length of an element'

    def add_arguments(self, parser):
        parser.add_argument('element', help="Nontrivial element in the alphabet x, y, X, Y")
        parser.add_argument('--out', help="Write the JSON report to this file instead of stdout")

    def handle(self, *args, **options):
        try:
            element = parse_word(options['element'])
            axis = axis_of(element)
        except WordError as e:
            raise CommandError(str(e))

        dump_report(
            {'axis': axis.to_json(), 'translation_length': translation_length(element)},
            out=options['out'],
            stdout=self.stdout,
        )
