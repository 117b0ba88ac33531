# shenlarsson/conf.py

from django.conf import settings

DEFAULTS = {
    'BOX_RADIUS': 3,
    'GEN_RADIUS': 2,
    'RNG_SEED': 0xC0FFEE,
    'PROBE_RANDOM_SEEDS': 4,
    'SAMPLES': 100,
    'THREADS': 1,
    'GENERIC_DENOMINATORS': (2, 3, 5, 7),
    'REPORT_DIR': '',
}


def hamlie_setting(name):
    """Value of ``settings.HAMLIE[name]``, falling back to the built-in default."""
    overrides = getattr(settings, 'HAMLIE', {})
    if name in overrides:
        return overrides[name]
    return DEFAULTS[name]
