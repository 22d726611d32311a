#!/usr/bin/env python
"""
Punto de entrada del proyecto: `python manage.py qalg ...` para las consultas
y `python manage.py test` para la bateria de pruebas.
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'qalg_project.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "No se pudo importar Django. Instale las dependencias con "
            "`pip install -r requirements.txt`."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
