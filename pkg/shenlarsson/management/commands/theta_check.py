# shenlarsson/management/commands/theta_check.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Check that theta_k is equivariant with the expected kernel dimension and rank'
    command_name = 'theta_check'
    module_options = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--k', type=int, help='a single k; all 2 <= k <= n by default')
