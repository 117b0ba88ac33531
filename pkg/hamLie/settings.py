# hamLie/hamLie/settings.py

"""
Django settings for hamLie project.

The project has no web surface: Django provides configuration, logging,
the cache framework and the management-command CLI of the shenlarsson app.
"""
import os
from pathlib import Path


# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'file': {
            'class': 'logging.FileHandler',
            'filename': BASE_DIR / 'debug.log',
            'formatter': 'verbose',
            'delay': True,
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console', 'file'],
            'level': 'WARNING',
            'propagate': False,
        },
        'shenlarsson': {
            'handlers': ['console', 'file'],
            'level': os.environ.get('HAMLIE_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
}

# Only satisfies Django's startup checks; nothing is signed.
SECRET_KEY = os.environ.get(
    'HAMLIE_SECRET_KEY',
    'django-insecure-hamlie-exact-arithmetic-no-requests-are-served',
)

DEBUG = os.environ.get('HAMLIE_DEBUG', '') == '1'

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'shenlarsson',
]

# No database: every computation is in memory, tests use SimpleTestCase.
DATABASES = {}

# Representation cache
CACHES = {
    'default': {
        'BACKEND': 'django.core.cache.backends.filebased.FileBasedCache',
        'LOCATION': os.environ.get('HAMLIE_CACHE_DIR', str(BASE_DIR / '.hamlie-cache')),
        'TIMEOUT': None,
    }
}

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value, 0) if value else default


# Artifact defaults, each overridable with HAMLIE_<NAME>
HAMLIE = {
    'BOX_RADIUS': _env_int('HAMLIE_BOX_RADIUS', 3),
    'GEN_RADIUS': _env_int('HAMLIE_GEN_RADIUS', 2),
    'RNG_SEED': _env_int('HAMLIE_RNG_SEED', 0xC0FFEE),
    'PROBE_RANDOM_SEEDS': _env_int('HAMLIE_PROBE_RANDOM_SEEDS', 4),
    'SAMPLES': _env_int('HAMLIE_SAMPLES', 100),
    'THREADS': _env_int('HAMLIE_THREADS', 1),
    'GENERIC_DENOMINATORS': (2, 3, 5, 7),
    'REPORT_DIR': os.environ.get('HAMLIE_REPORT_DIR', ''),
}
