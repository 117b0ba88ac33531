# shenlarsson/management/commands/ham_bracket.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Check [H_r, H_s] = (r̄, s) H_{r+s}, the d_i eigenvalues and the A_N compatibility on F^{alpha,beta}(V)'
    command_name = 'ham_bracket'
