# shenlarsson/management/commands/dim_check.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Check dim V(delta_k) = C(2n,k) - C(2n,k-2) and irreducibility for every 0 <= k <= n'
    command_name = 'dim_check'
    module_options = False
