# shenlarsson/management/commands/g2_table.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Check the degree-4 coefficient table of g2(s)'
    command_name = 'g2_table'
