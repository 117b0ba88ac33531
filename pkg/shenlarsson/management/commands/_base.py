# shenlarsson/management/commands/_base.py

from django.core.management.base import BaseCommand, CommandError

from shenlarsson.exceptions import ConfigError, HamLieError, RepresentationError
from shenlarsson.runner import RunConfig, run


class VerificationCommand(BaseCommand):
    """One verification subcommand: validate the options, run, report, exit 0 iff the report passes."""

    command_name = None
    module_options = True

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, help='rank n of sp_2n')
        parser.add_argument('--samples', type=int, help='random samples per check')
        parser.add_argument('--seed', type=int, help='RNG seed')
        parser.add_argument('--output', default='', help='path of the JSON report')
        parser.add_argument('--threads', type=int, help='worker cap for parallel sweeps')
        if self.module_options:
            parser.add_argument('--rep', default='natural',
                                help='natural | trivial | fundamental:k | sym:k | exterior:k | file:path')
            parser.add_argument('--alpha', help='comma-separated rationals p/q, length 2n')
            parser.add_argument('--beta', help='comma-separated rationals p/q, length 2n')
            parser.add_argument('--box', type=int, help='box radius')
            parser.add_argument('--gens', type=int, help='generator radius')

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_options(self.command_name, **options)
            status, report = run(config, **self.run_options(options))
        except (ConfigError, RepresentationError) as exc:
            raise CommandError(str(exc), returncode=2)
        except HamLieError as exc:
            raise CommandError(str(exc), returncode=1)

        self.stdout.write(report.summary())
        for note in report.notes:
            self.stdout.write(f'  note: {note}')
        if config.output_path:
            self.stdout.write(f'  report: {config.output_path}')
        if status:
            raise CommandError(f'{report.failure_count} failing checks' if report.failure_count
                               else f'verdict {report.verdict}', returncode=status)
        self.stdout.write(self.style.SUCCESS('OK'))

    def run_options(self, options):
        return {}
