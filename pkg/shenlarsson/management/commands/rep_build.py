# shenlarsson/management/commands/rep_build.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Build a representation, check it, and round-trip its JSON file'
    command_name = 'rep_build'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--input', default='', help='read the representation from this file')
        parser.add_argument('--save', default='', help='write the representation to this file')

    def run_options(self, options):
        return {'save': options['save']}
