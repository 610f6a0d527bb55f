from django.core.management.base import BaseCommand, CommandError

from axislab.reporting import dump_report
from words.words import WordError, cyclic_reduce, free_reduce, parse_word


class Command(BaseCommand):
    help = 'Freely reduce a word and print it as JSON (cyclic reduction with --cyclic)'

    def add_arguments(self, parser):
        parser.add_argument('word', nargs='?', default='', help="Word in the alphabet x, y, X, Y")
        parser.add_argument('--cyclic', action='store_true', help="Also report the cyclic decomposition")
        parser.add_argument('--out', help="Write the JSON report to this file instead of stdout")

    def handle(self, *args, **options):
        try:
            reduced = free_reduce(parse_word(options['word']))
        except WordError as e:
            raise CommandError(str(e))

        if options['cyclic']:
            payload = {'reduced': reduced.to_json(), 'cyclic': cyclic_reduce(reduced).to_json()}
            dump_report(payload, out=options['out'], stdout=self.stdout)
        elif options['out']:
            dump_report({'reduced': reduced.to_json()}, out=options['out'])
        else:
            self.stdout.write(f'"{reduced}"')
