# shenlarsson/management/commands/claim1_ineq.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Check C(2n,k) - C(2n,k-2) > C(2n-1,k-1) for all 2 <= k <= n <= n_max'
    command_name = 'claim1_ineq'
    module_options = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n-max', type=int, default=10)
