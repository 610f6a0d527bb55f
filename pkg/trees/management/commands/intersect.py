from django.core.management.base import BaseCommand, CommandError

from axislab.reporting import dump_report
from trees.axes import axis_intersection, axis_of
from words.words import WordError, parse_word


class Command(BaseCommand):
    help = 'Intersect the axes of two elements; labels are read along the first axis'

    def add_arguments(self, parser):
        parser.add_argument('first', help="First element (reference axis)")
        parser.add_argument('second', help="Second element")
        parser.add_argument('--out', help="Write the JSON report to this file instead of stdout")

    def handle(self, *args, **options):
        try:
            first = axis_of(parse_word(options['first']))
            second = axis_of(parse_word(options['second']))
        except WordError as e:
            raise CommandError(str(e))

        result = axis_intersection(first, second)
        self.stderr.write(f"{result.kind}: {result.label.letters if result.label is not None else '-'}")
        dump_report(
            {'first': first.to_json(), 'second': second.to_json(), 'intersection': result.to_json()},
            out=options['out'],
            stdout=self.stdout,
        )
