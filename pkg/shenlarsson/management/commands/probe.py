# shenlarsson/management/commands/probe.py

from ._base import VerificationCommand


class Command(VerificationCommand):
    help = 'Probe F^{alpha,beta}(V) for proper submodules by saturating seed vectors on a box of grades'
    command_name = 'probe'
