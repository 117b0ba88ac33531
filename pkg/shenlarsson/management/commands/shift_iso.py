# shenlarsson/management/commands/shift_iso.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Check the isomorphism F^{alpha,beta}(V) -> F^{alpha+gamma,beta+gamma}(V)'
    command_name = 'shift_iso'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--gamma', help='lattice shift, comma-separated; random by default')
