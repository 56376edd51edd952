"""Customize pytest configuration"""

from pytest import Config, Parser


def pytest_addoption(parser: Parser) -> None:  # noqa: D103
    parser.addoption(
        '--debug-solver',
        action='store_true',
        default=False,
        help='Log branch-and-bound progress and verification rows at DEBUG',
    )


def pytest_configure(config: Config) -> None:  # noqa: D103
    if config.getoption('--debug-solver'):
        from logging import DEBUG, getLogger

        getLogger('italiandom').setLevel(DEBUG)
