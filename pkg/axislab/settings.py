"""
Django settings for the axislab project.

Every tunable is read with python-decouple from the environment or a .env
file. The analyses themselves need no database; the search-run ledger and the
admin use the configured database (sqlite by default).
"""
import os
from pathlib import Path
from decouple import config, Csv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-axislab-development-key')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config('DEBUG', default=True, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost,127.0.0.1', cast=Csv())

# Application definition
INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',

    # Local apps
    'words',
    'trees',
    'overlaps',
    'decomposition',
    'search',
    'hyperbolic',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'whitenoise.middleware.WhiteNoiseMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'axislab.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'axislab.wsgi.application'

# Database configuration (search-run ledger)
DB_ENGINE = config('DB_ENGINE', default='sqlite')

if DB_ENGINE == 'postgresql':
    DATABASES = {
        'default': {
            'ENGINE': 'django.db.backends.postgresql',
            'NAME': config('DB_NAME', default='axislab'),
            'USER': config('DB_USER', default='axislab'),
            'PASSWORD': config('DB_PASSWORD', default=''),
            'HOST': config('DB_HOST', default='localhost'),
            'PORT': config('DB_PORT', default='5432'),
            'OPTIONS': {
                'client_encoding': 'UTF8',
            },
        }
    }
else:
    DATABASES = {
        'default': {
            'ENGINE': 'django.db.backends.sqlite3',
            'NAME': config('DB_NAME', default=str(BASE_DIR / 'axislab.sqlite3')),
        }
    }

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = True
USE_TZ = True

# Static files (admin only)
STATIC_URL = '/static/'
STATIC_ROOT = BASE_DIR / 'staticfiles'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Analysis defaults (RunConfig)
AXISLAB_JOBS = config('AXISLAB_JOBS', default=os.cpu_count() or 1, cast=int)
AXISLAB_H2_TOLERANCE = config('AXISLAB_H2_TOLERANCE', default=1e-9, cast=float)
AXISLAB_DEDUP_TOLERANCE = config('AXISLAB_DEDUP_TOLERANCE', default=1e-8, cast=float)
AXISLAB_TRIANGLE_SEPARATION = config('AXISLAB_TRIANGLE_SEPARATION', default=1e-7, cast=float)
AXISLAB_SEARCH_SYMMETRY = config('AXISLAB_SEARCH_SYMMETRY', default=True, cast=bool)
AXISLAB_ORACLE_SAMPLE_RATE = config('AXISLAB_ORACLE_SAMPLE_RATE', default=0.05, cast=float)
AXISLAB_ORACLE_SEED = config('AXISLAB_ORACLE_SEED', default=0, cast=int)
AXISLAB_DEFAULT_GEN_X = config('AXISLAB_DEFAULT_GEN_X', default='1,1,1,2')
AXISLAB_DEFAULT_GEN_Y = config('AXISLAB_DEFAULT_GEN_Y', default='1,-1,-1,2')

# Security settings for production
if not DEBUG:
    SECURE_BROWSER_XSS_FILTER = True
    SECURE_CONTENT_TYPE_NOSNIFF = True
    SECURE_HSTS_INCLUDE_SUBDOMAINS = True
    SECURE_HSTS_SECONDS = 31536000

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        name: {
            'handlers': ['console'],
            'level': config('AXISLAB_LOG_LEVEL', default='INFO'),
            'propagate': False,
        }
        for name in ('words', 'trees', 'overlaps', 'decomposition', 'search', 'hyperbolic', 'axislab')
    },
}
