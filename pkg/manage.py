#!/usr/bin/env python
"""Django's command-line utility; `./manage.py idom --help` lists the toolkit subcommands"""

import sys

from django.core.management import execute_from_command_line

from default import settings_module  # noqa: F401

if __name__ == '__main__':
    execute_from_command_line(sys.argv)
