from django.core.management.base import BaseCommand, CommandError

from axislab.reporting import dump_report
from axislab.runconfig import RunConfig
from hyperbolic.matrices import PuncturedTorusRep
from hyperbolic.triangles import theorem1_scan
from words.words import CyclicWord, WordError


class Command(BaseCommand):
    help = 'Check that every triangle cut out by lifts of the closed geodesic W has edges shorter than W'

    def add_arguments(self, parser):
        parser.add_argument('--word', required=True, help="Cyclically reduced word W with hyperbolic image")
        parser.add_argument('--depth', type=int, default=2, help="Longest conjugator used for lifts")
        parser.add_argument('--tol', type=float, help="Edges within this of the length of W count as violations")
        parser.add_argument('--gen-x', help="Image of x as 'a,b,c,d'")
        parser.add_argument('--gen-y', help="Image of y as 'a,b,c,d'")
        parser.add_argument('--jobs', type=int, help="Worker processes (default AXISLAB_JOBS)")
        parser.add_argument('--out', help="Write the JSON report to this file instead of stdout")

    def handle(self, *args, **options):
        if options['depth'] < 0:
            raise CommandError("--depth must be at least 0")
        run_config = RunConfig.from_settings(jobs=options['jobs'], tol=options['tol'], out=options['out'])

        try:
            rep = PuncturedTorusRep.from_settings(options['gen_x'], options['gen_y'])
            scan = theorem1_scan(
                rep,
                CyclicWord.parse(options['word']),
                options['depth'],
                tol=run_config.tol,
                separation=run_config.triangle_separation,
                dedup_tol=run_config.dedup_tol,
                jobs=run_config.jobs,
            )
        except WordError as e:
            raise CommandError(str(e))

        dump_report({'rep': rep.to_json(), **scan.to_json()}, out=run_config.out, stdout=self.stdout)
        ratios = [report.max_edge_ratio for report in scan.triangles]
        self.stderr.write(
            f"{len(scan.lifts)} lifts, {len(scan.triangles)} triangles, {scan.degenerate} degenerate, "
            f"max edge ratio {max(ratios) if ratios else 0:.6f}"
        )
        if scan.violations:
            raise CommandError(f"{len(scan.violations)} triangles violate the edge bound", returncode=3)
