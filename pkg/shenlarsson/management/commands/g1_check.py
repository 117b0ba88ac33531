# shenlarsson/management/commands/g1_check.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Check g1(s) against its basis expansion and against the action of H_s'
    command_name = 'g1_check'
