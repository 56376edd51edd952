"""
Django settings for the idomdj project.

The project exists to run the idom management command, so there is no database, no URL
configuration and no middleware. Tunables come from the environment and are parsed with
literal_eval, so IDOM_BUDGET_SECS=None means no time limit.
"""

from ast import literal_eval
from os import getenv
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent

DEBUG = literal_eval(getenv('IDOM_DEBUG', 'False'))

INSTALLED_APPS = ['italiandom']

DATABASES: dict[str, dict[str, str]] = {}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True


# Solver and verification

# Wall-clock seconds per solve from the command line
IDOM_BUDGET_SECS: float | None = literal_eval(getenv('IDOM_BUDGET_SECS', '60'))
# Default seed for `idom verify`
IDOM_SEED: int = literal_eval(getenv('IDOM_SEED', '7'))
IDOM_LOG_LEVEL = getenv('IDOM_LOG_LEVEL', 'WARNING')


# Logging goes to stderr so that stdout stays a clean pipe

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {'plain': {'format': '{levelname} {name}: {message}', 'style': '{'}},
    'handlers': {'console': {'class': 'logging.StreamHandler', 'formatter': 'plain'}},
    'loggers': {'italiandom': {'handlers': ['console'], 'level': IDOM_LOG_LEVEL}},
}
