from django.core.management.base import BaseCommand, CommandError

from axislab.reporting import dump_report
from decomposition.theorem import overlap_decompose, theorem2_decompose
from words.words import CyclicWord, WordError


class Command(BaseCommand):
    help = 'Decompose W = B C^k I from a prefix U of length --u-len that reoccurs inside itself'

    def add_arguments(self, parser):
        parser.add_argument('--word', required=True, help="Cyclically reduced word W, as the chosen copy")
        parser.add_argument('--u-len', type=int, required=True, help="Length of the prefix U")
        parser.add_argument('--shift', type=int, help="Report the single-overlap outcome for this shift instead")
        parser.add_argument('--out', help="Write the JSON report to this file instead of stdout")

    def handle(self, *args, **options):
        try:
            word = CyclicWord.parse(options['word'])
            if options['shift'] is not None:
                payload = overlap_decompose(word, options['u_len'], options['shift']).to_json()
            else:
                payload = theorem2_decompose(word, options['u_len']).to_json()
        except WordError as e:
            raise CommandError(str(e))

        dump_report(payload, out=options['out'], stdout=self.stdout)
