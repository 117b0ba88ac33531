# shenlarsson/management/commands/sp_check.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Check the sp_2n basis: bracket closure, symplectic condition, r r̄^t membership, pairing antisymmetry and root heights'
    command_name = 'sp_check'
    module_options = False
