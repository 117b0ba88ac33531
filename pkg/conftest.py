import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "hamLie.settings")
django.setup()
