# kclab/settings.py

from pathlib import Path
import os

# =====================================
# BASE DIRECTORY
# =====================================
BASE_DIR = Path(__file__).resolve().parent.parent

# =====================================
# SECURITY SETTINGS
# =====================================
# Nothing is served; the key only satisfies Django's startup checks.
SECRET_KEY = os.environ.get('SECRET_KEY', 'kclab-local-only')
DEBUG = os.environ.get('DEBUG') == 'True'
ALLOWED_HOSTS = []

# =====================================
# INSTALLED APPS
# =====================================
INSTALLED_APPS = [
    # Third-party
    'rest_framework',

    # Local apps
    'core.apps.CoreConfig',
    'gridtiling.apps.GridTilingConfig',
    'reduction.apps.ReductionConfig',
    'kcenter.apps.KCenterConfig',
    'structure.apps.StructureConfig',
    'cli.apps.CliConfig',
]

MIDDLEWARE = []

# =====================================
# DATABASE
# =====================================
# The lab is stateless: every run reads and writes plain text files.
DATABASES = {}

# =====================================
# INTERNATIONALIZATION
# =====================================
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# =====================================
# REST FRAMEWORK
# =====================================
# Only serializers are used (option validation for the management commands).
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}

# =====================================
# K-CENTER LAB CONFIGURATION
# =====================================
KCLAB = {
    'THREADS': os.environ.get('KCLAB_THREADS', '1'),
    'EPAS_NET_CAP': os.environ.get('KCLAB_EPAS_NET_CAP', '64'),
    'EXACT_BALL_CAP': os.environ.get('KCLAB_EXACT_BALL_CAP', '200'),
    'HUB_C': os.environ.get('KCLAB_HUB_C', '4'),
}

# =====================================
# LOGGING
# =====================================
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': os.environ.get('KCLAB_LOG_LEVEL', 'WARNING'),
    },
}
