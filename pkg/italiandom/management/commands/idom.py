import sys
from collections import Counter
from json import dumps
from pathlib import Path
from typing import Any, TextIO

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError, CommandParser

from italiandom.formats import read_graph, write_graph
from italiandom.graphs import Family, Graph, SizeLimitError, TwinRelation, generate
from italiandom.operators import add_twin, corona
from italiandom.solver import BudgetExceeded, Parameter, enumerate_minimum_idfs, solve
from italiandom.verify import Status, SuiteConfig, render_json, run_suite, theorem_ids
from italiandom.witnesses import realize_corona_k1

FAILED = 1
USAGE = 2
LIMIT = 3

FORMATS = ('graph6', 'edges')
K1 = 'K1'


def _add_input(parser: CommandParser, flag: str = '--in', dest: str = 'input') -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument(flag, dest=dest, metavar='FILE', help='Read the graph from FILE')
    source.add_argument(
        '--stdin', dest='from_stdin', action='store_true', help='Read stdin, the default'
    )


def _add_format(parser: CommandParser) -> None:
    parser.add_argument('--format', choices=FORMATS, default='graph6', help='Output graph format')


class Command(BaseCommand):
    help = """Generate graphs, apply the corona and twin operators, solve exactly and verify"""
    requires_system_checks = ()
    # call_command(..., stdin=StringIO(...)) replaces sys.stdin, as createsuperuser does
    stealth_options = ('stdin',)

    def add_arguments(self, parser: CommandParser) -> None:
        commands = parser.add_subparsers(dest='subcommand', required=True)

        gen = commands.add_parser('gen', help='Generate a member of a standard family')
        gen.add_argument('--family', required=True, choices=[family.value for family in Family])
        gen.add_argument('--n', type=int, help='Vertex count for path, cycle, complete, empty')
        gen.add_argument('--m', type=int, help='Leaf count for star')
        gen.add_argument('--p', type=int, help='First part size for complete_bipartite')
        gen.add_argument('--q', type=int, help='Second part size for complete_bipartite')
        _add_format(gen)

        solver = commands.add_parser('solve', help='Compute a domination parameter exactly')
        _add_input(solver)
        solver.add_argument(
            '--param', choices=[parameter.value for parameter in Parameter], default='italian'
        )
        solver.add_argument('--json', action='store_true', help='Emit JSON')

        operator = commands.add_parser('op', help='Apply a graph operator')
        operators = operator.add_subparsers(dest='operator', required=True)
        product = operators.add_parser('corona', help='G⊙H; G from stdin unless --g is given')
        _add_input(product, '--g', 'g')
        product.add_argument('--h', required=True, metavar='FILE', help=f'H from FILE, or {K1}')
        _add_format(product)
        twin = operators.add_parser('twin', help='Append a true or false twin of a vertex')
        _add_input(twin)
        twin.add_argument('--vertex', type=int, required=True)
        twin.add_argument('--kind', choices=('true', 'false'), required=True)
        _add_format(twin)

        realize = commands.add_parser('realize', help='G with γ_I(G⊙K_1) = a')
        realize.add_argument('--n', type=int, required=True)
        realize.add_argument('--a', type=int, required=True)
        _add_format(realize)

        enumerate_ = commands.add_parser('enumerate', help='Every minimum Italian labeling')
        _add_input(enumerate_)

        verify = commands.add_parser(
            'verify',
            help='Check the theorems and lemmas',
            description=(
                'Exit status is 0 when every check passes, 1 when any check fails, and 3 when '
                'none fails but some ran out of time.'
            ),
        )
        verify.add_argument(
            '--theorem', action='append', choices=theorem_ids(), help='Only this id; repeatable'
        )
        verify.add_argument('--seed', type=int, help='Random seed (default IDOM_SEED)')
        verify.add_argument('--max-n', type=int, help='Clamp every size limit')
        verify.add_argument('--json', action='store_true', help='Emit the JSON report')
        verify.add_argument('--list', action='store_true', help='List theorem ids and exit')

    def handle(self, *_args: Any, **options: Any) -> None:
        handler = getattr(self, f'_{options["subcommand"]}')
        try:
            handler(options)
        except (SizeLimitError, BudgetExceeded) as error:
            raise CommandError(str(error), returncode=LIMIT) from error
        except (ValueError, OSError) as error:
            raise CommandError(str(error), returncode=USAGE) from error

    def _read(self, options: dict[str, Any], dest: str = 'input') -> Graph:
        path = options.get(dest)
        if options.get('from_stdin') or path is None:
            stdin: TextIO = options.get('stdin') or sys.stdin
            return read_graph(stdin.read())
        return read_graph(Path(path).read_text())

    def _emit(self, graph: Graph, options: dict[str, Any]) -> None:
        self.stdout.write(write_graph(graph, options['format']))

    def _gen(self, options: dict[str, Any]) -> None:
        family = Family(options['family'])
        names = {Family.STAR: ('m',), Family.COMPLETE_BIPARTITE: ('p', 'q')}.get(family, ('n',))
        missing = [f'--{name}' for name in names if options[name] is None]
        if missing:
            raise CommandError(f'{family} needs {" and ".join(missing)}', returncode=USAGE)
        self._emit(generate(family, *(options[name] for name in names)), options)

    def _solve(self, options: dict[str, Any]) -> None:
        graph = self._read(options)
        try:
            result = solve(graph, options['param'], budget=settings.IDOM_BUDGET_SECS)
        except BudgetExceeded as exceeded:
            if exceeded.best is not None:
                self.stderr.write(f'Best labeling found: {exceeded.best.certificate}')
            raise
        if options['json']:
            self.stdout.write(
                dumps(
                    {
                        'parameter': result.parameter,
                        'value': result.value,
                        'certificate': str(result.certificate),
                        'vertices': sorted(result.vertex_set),
                        'optimal': result.optimal,
                    },
                    sort_keys=True,
                )
            )
            return
        self.stdout.write(str(result.value))
        self.stdout.write(str(result.certificate))

    def _op(self, options: dict[str, Any]) -> None:
        if options['operator'] == 'corona':
            g = self._read(options, 'g')
            h_path = options['h']
            h = generate(Family.EMPTY, 1) if h_path == K1 else read_graph(Path(h_path).read_text())
            self._emit(corona(g, h)[0], options)
            return
        relation = TwinRelation.TRUE if options['kind'] == 'true' else TwinRelation.FALSE
        self._emit(add_twin(self._read(options), options['vertex'], relation), options)

    def _realize(self, options: dict[str, Any]) -> None:
        self._emit(realize_corona_k1(options['n'], options['a']), options)

    def _enumerate(self, options: dict[str, Any]) -> None:
        graph = self._read(options)
        for labeling in enumerate_minimum_idfs(graph, budget=settings.IDOM_BUDGET_SECS):
            self.stdout.write(str(labeling))

    def _verify(self, options: dict[str, Any]) -> None:
        if options['list']:
            for theorem_id in theorem_ids():
                self.stdout.write(theorem_id)
            return
        seed = settings.IDOM_SEED if options['seed'] is None else options['seed']
        config = SuiteConfig(seed=seed, budget=settings.IDOM_BUDGET_SECS)
        if options['max_n'] is not None:
            config = config.with_max_n(options['max_n'])
        report = run_suite(config, options['theorem'])
        if options['json']:
            self.stdout.write(render_json(report))
        else:
            tallies: dict[str, Counter[Status]] = {}
            for row in report.results:
                tallies.setdefault(row.theorem, Counter())[row.status] += 1
                if row.status != Status.PASS:
                    self.stdout.write(
                        f'{row.status} {row.theorem} {row.instance}: '
                        f'expected {row.expected}, computed {row.computed}'
                    )
            for theorem_id, tally in tallies.items():
                self.stdout.write(
                    f'{theorem_id} pass={tally[Status.PASS]} fail={tally[Status.FAIL]} '
                    f'exceeded={tally[Status.EXCEEDED]}'
                )
            summary = report.summary
            self.stdout.write(
                f'total pass={summary["pass"]} fail={summary["fail"]} '
                f'exceeded={summary["exceeded"]}'
            )
        if not report.ok:
            raise CommandError(f'{report.summary["fail"]} check(s) failed', returncode=FAILED)
        if report.summary['exceeded']:
            raise CommandError(
                f'{report.summary["exceeded"]} check(s) ran out of time', returncode=LIMIT
            )
