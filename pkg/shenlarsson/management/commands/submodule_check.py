# shenlarsson/management/commands/submodule_check.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Build an explicit submodule family and check that it is invariant'
    command_name = 'submodule_check'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--kind', required=True, choices=['trivial_line', 'delta1', 'deltak'])
