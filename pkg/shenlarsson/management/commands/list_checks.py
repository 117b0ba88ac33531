# shenlarsson/management/commands/list_checks.py

from django.core.management.base import BaseCommand

from shenlarsson.runner import CHECKS


class Command(BaseCommand):
    help = 'List every verification subcommand with the claim it checks'

    def handle(self, *args, **kwargs):
        for name, claim in CHECKS.items():
            self.stdout.write(f'{name:16} {claim}')
