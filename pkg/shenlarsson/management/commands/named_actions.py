# shenlarsson/management/commands/named_actions.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Check the explicit actions of H_{e_i}, H_{e_{n+i}} and H_{e_i+e_{n+j}}'
    command_name = 'named_actions'
