# shenlarsson/management/commands/claim2_witness.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Build explicit nonzero wedges in W_r^k ∩ Ker theta_k for random r, alpha and k'
    command_name = 'claim2_witness'
    module_options = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n-max', type=int, help='largest rank sampled')
