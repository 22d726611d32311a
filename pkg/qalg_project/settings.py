from pathlib import Path

from decouple import config
from django.core.exceptions import ImproperlyConfigured

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config(
    'DJANGO_SECRET_KEY',
    default='django-insecure-qalg-solo-para-desarrollo',
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config('DJANGO_DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition
INSTALLED_APPS = [
    'arith',
    'localsym',
    'quadfield',
    'quatalg',
    'cli',
]

# Sin tablas: los tipos del dominio son dataclasses inmutables.
DATABASES = {}


# Internationalization
LANGUAGE_CODE = 'es-es'

TIME_ZONE = 'America/Santiago'

USE_I18N = True

USE_TZ = True


# Calculo
def integer_setting(value):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ImproperlyConfigured(f"Se esperaba un entero en QALG_*, no {value!r}.")


# Tope de hilos para el barrido de verificacion (cross_validate).
QALG_THREADS = config('QALG_THREADS', default=4, cast=integer_setting)

# Cota de division por tentativa de arith.factorize (rueda de 32 bits).
QALG_FACTOR_BOUND = config('QALG_FACTOR_BOUND', default=2**32, cast=integer_setting)

QALG_LOG_LEVEL = config('QALG_LOG_LEVEL', default='WARNING')


# Logging
# La salida estandar del CLI queda reservada para JSON/CSV; los logs van a stderr.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': QALG_LOG_LEVEL,
            'propagate': False,
        }
        for app in ('arith', 'localsym', 'quadfield', 'quatalg', 'cli')
    },
}
