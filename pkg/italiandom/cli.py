"""Console entry point: `idom ARGS` runs `manage.py idom ARGS`"""

import sys
from collections.abc import Sequence

import django

from default import settings_module  # noqa: F401


def main(argv: Sequence[str] | None = None) -> int:
    """Run the idom command and return its exit status instead of exiting."""
    django.setup()
    from italiandom.management.commands.idom import Command  # noqa: PLC0415

    arguments = sys.argv[1:] if argv is None else list(argv)
    try:
        Command().run_from_argv(['idom', 'idom', *arguments])
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
