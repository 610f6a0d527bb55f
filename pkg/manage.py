#!/usr/bin/env python
"""Command-line entry point: every analysis is a management command."""
import os
import sys


def main(argv=None):
    """Run administrative tasks and analyses."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'axislab.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    execute_from_command_line(argv or sys.argv)


if __name__ == '__main__':
    main()
